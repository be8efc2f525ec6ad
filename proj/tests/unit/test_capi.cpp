// Exercises the shared library strictly through its C header.

#include <cstdlib>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "realrank/realrank.h"

using nlohmann::json;

namespace {

std::string take(char* s) {
  std::string out(s);
  rr_string_free(s);
  return out;
}

}  // namespace

TEST_SUITE("capi") {

TEST_CASE("tensor create, inspect and JSON round trip") {
  const size_t dims[3] = {2, 2, 2};
  const double entries[8] = {2, 0, 0, -2, 0, -2, -2, 0};
  rr_tensor* t = nullptr;
  REQUIRE(rr_tensor_create(dims, 3, entries, &t) == RR_OK);
  CHECK(rr_tensor_order(t) == 3);
  CHECK(rr_tensor_size(t) == 8);
  char* raw = nullptr;
  REQUIRE(rr_tensor_to_json(t, &raw) == RR_OK);
  const std::string text = take(raw);
  rr_tensor* back = nullptr;
  REQUIRE(rr_tensor_from_json(text.c_str(), &back) == RR_OK);
  double got[8];
  REQUIRE(rr_tensor_entries(back, got, 8) == RR_OK);
  for (int i = 0; i < 8; ++i) CHECK(got[i] == entries[i]);
  size_t small[1];
  CHECK(rr_tensor_dims(back, small, 1) != RR_OK);
  rr_tensor_free(back);

  rr_certificate* c = nullptr;
  REQUIRE(rr_certify(t, nullptr, &c) == RR_OK);
  CHECK(std::string(rr_certificate_verdict(c)) == "COMPLEX_RANK_TWO_REAL_RANK_HIGHER");
  CHECK(rr_certificate_within_real_border_rank_two(c) == 0);
  REQUIRE(rr_certificate_to_json(c, &raw) == RR_OK);
  const json cj = json::parse(take(raw));
  CHECK(cj["verdict"] == "COMPLEX_RANK_TWO_REAL_RANK_HIGHER");
  CHECK(cj["hyperdets"]["num_negative"] == 1);
  rr_certificate_free(c);

  rr_decomposition* d = nullptr;
  REQUIRE(rr_decompose(t, nullptr, 1, &d) == RR_OK);
  CHECK(std::string(rr_decomposition_kind(d)) == "CONJUGATE_PAIR");
  CHECK(rr_decomposition_residual(d) < 1e-12);
  rr_tensor* rec = nullptr;
  REQUIRE(rr_decomposition_reconstruct(d, &rec) == RR_OK);
  REQUIRE(rr_tensor_entries(rec, got, 8) == RR_OK);
  for (int i = 0; i < 8; ++i) CHECK(got[i] == doctest::Approx(entries[i]));
  rr_tensor_free(rec);
  rr_decomposition_free(d);
  rr_tensor_free(t);
}

TEST_CASE("errors carry codes and messages") {
  rr_tensor* t = nullptr;
  CHECK(rr_tensor_from_json("{not json", &t) == RR_ERR_PARSE);
  CHECK(std::string(rr_last_error_message()).size() > 0);
  CHECK(rr_tensor_from_json(R"({"shape":[2,2],"entries":[1,2,3]})", &t) == RR_ERR_SHAPE_MISMATCH);
  CHECK(t == nullptr);
  REQUIRE(rr_tensor_from_json(R"({"shape":[2,2],"entries":[1,2,3,4]})", &t) == RR_OK);
  rr_certificate* c = nullptr;
  CHECK(rr_certify(t, nullptr, &c) == RR_ERR_ARITY_TOO_SMALL);
  rr_tensor_free(t);
  rr_polylist* l = nullptr;
  CHECK(rr_quadrics(2, 3, &l) == RR_ERR_DEGREE_TOO_SMALL);
  CHECK(rr_certify(nullptr, nullptr, &c) == RR_ERR_INVALID_ARGUMENT);
  CHECK(std::string(rr_status_string(RR_ERR_NOT_RANK_TWO)) == "NotRankTwo");
  rr_curve* curve = nullptr;
  CHECK(rr_curve_from_json(R"({"d":4,"F":[[1,0,0,0,0],[1,0,0,0,0],[0,0,0,1,0],[0,0,0,0,1]]})", &curve) == RR_ERR_INVALID_CURVE);
}

TEST_CASE("rational inputs are read exactly") {
  rr_tensor* t = nullptr;
  REQUIRE(rr_tensor_from_json(R"({"shape":[2,2,2],"entries":["1/3",0,0,0,0,0,0,"-2/3"]})", &t) == RR_OK);
  double e[8];
  REQUIRE(rr_tensor_entries(t, e, 8) == RR_OK);
  CHECK(e[0] == 1.0 / 3.0);
  rr_tensor_free(t);
}

TEST_CASE("quadrics, ideal report and table") {
  rr_polylist* l = nullptr;
  REQUIRE(rr_quadrics(2, 4, &l) == RR_OK);
  REQUIRE(rr_polylist_size(l) == 1);
  CHECK(std::string(rr_polylist_label(l, 0)) == "f_1111_2222");
  CHECK(std::string(rr_polylist_poly(l, 0)) == "1*x0*x4 - 4*x1*x3 + 3*x2^2");
  CHECK(rr_polylist_label(l, 5) == nullptr);
  rr_polylist_free(l);
  REQUIRE(rr_ideal_report(5, &l) == RR_OK);
  char* raw = nullptr;
  REQUIRE(rr_polylist_to_json(l, &raw) == RR_OK);
  const json j = json::parse(take(raw));
  std::size_t tangential = 0;
  for (const auto& p : j) tangential += p["group"] == "tangential";
  CHECK(tangential == 3);
  rr_polylist_free(l);
  REQUIRE(rr_table1_json(&raw) == RR_OK);
  const json t1 = json::parse(take(raw));
  CHECK(t1["rows"][3]["counts"][6] == 425425);
}

TEST_CASE("binary forms") {
  const char* coords[] = {"1", "0", "0", "0", "-1"};
  char* raw = nullptr;
  REQUIRE(rr_binary_form_classify(coords, 5, 0, nullptr, &raw) == RR_OK);
  const json v = json::parse(take(raw));
  CHECK(v["verdict"] == "REAL_RANK_TWO");
  CHECK(v["strata"] == "+-0");
  const char* quintic[] = {"2", "0", "-20", "0", "10", "0"};
  int ok = 1;
  REQUIRE(rr_quintic_test(quintic, 6, 1, &ok, &raw) == RR_OK);
  rr_string_free(raw);
  CHECK(ok == 0);
  const char* bad[] = {"1", "x"};
  CHECK(rr_binary_form_classify(bad, 2, 0, nullptr, &raw) == RR_ERR_PARSE);
}

TEST_CASE("curve classification and scan through the C API") {
  rr_curve* c = nullptr;
  REQUIRE(rr_curve_from_json(R"({"d":4,"F":[[1,0,0,0,0],[0,1,0,0,0],[0,0,0,1,0],[0,0,0,0,1]]})", &c) == RR_OK);
  char* raw = nullptr;
  REQUIRE(rr_curve_to_json(c, &raw) == RR_OK);
  CHECK(json::parse(take(raw))["d"] == 4);
  REQUIRE(rr_curve_plucker_json(c, &raw) == RR_OK);
  const json pj = json::parse(take(raw));
  CHECK(pj["plucker"]["p03"] == "-2*a*b*c + 1*b^3");
  const char* u[] = {"1", "0", "0", "1"};
  REQUIRE(rr_curve_classify_json(c, u, 7, nullptr, &raw) == RR_OK);
  const json cj = json::parse(take(raw));
  CHECK(cj["secants"]["total"] == 3);
  const char* path = R"({"path":[[84,-74],[13,59],[62,-19],[-38,-10]],"samples":21})";
  REQUIRE(rr_curve_scan_json(c, path, 0, 7, nullptr, &raw) == RR_OK);
  const json sj = json::parse(take(raw));
  CHECK(sj["samples"].size() == 21);
  CHECK(sj["transitions"].size() == 2);
  rr_curve_free(c);
}

TEST_CASE("outputs are identical across runs and thread counts") {
  rr_curve* c = nullptr;
  REQUIRE(rr_curve_from_json(R"({"d":4,"F":[[1,0,0,0,0],[0,1,0,0,0],[0,0,0,1,0],[0,0,0,0,1]]})", &c) == RR_OK);
  const char* path = R"({"path":[[84,-74],[13,59],[62,-19],[-38,-10]],"samples":15})";
  std::vector<std::string> runs;
  for (unsigned threads : {1u, 3u, 0u}) {
    rr_set_max_threads(threads);
    char* raw = nullptr;
    REQUIRE(rr_curve_scan_json(c, path, 0, 11, nullptr, &raw) == RR_OK);
    runs.push_back(take(raw));
  }
  CHECK(runs[0] == runs[1]);
  CHECK(runs[0] == runs[2]);
  rr_curve_free(c);
}

}  // TEST_SUITE
