#include "realrank/realrank.h"

#include <cstring>
#include <string>

#include "realrank/io.hpp"
#include "realrank/parallel.hpp"

using namespace realrank;
using nlohmann::json;

struct rr_tensor {
  Tensor value;
};
struct rr_certificate {
  Certificate value;
};
struct rr_decomposition {
  Rank2Decomposition value;
};
struct rr_polylist {
  struct Item {
    std::string group, label, poly;
  };
  std::vector<Item> items;
};
struct rr_curve {
  CurveParam curve;
  PluckerMap pm;
};

namespace {

thread_local std::string g_last_error;

rr_status record(rr_status s, const std::string& msg) {
  g_last_error = msg;
  return s;
}

template <typename F>
rr_status guarded(F&& body) {
  try {
    g_last_error.clear();
    body();
    return RR_OK;
  } catch (const Error& e) {
    return record(static_cast<rr_status>(static_cast<int>(e.code()) + 1), e.what());
  } catch (const json::exception& e) {
    return record(RR_ERR_PARSE, e.what());
  } catch (const std::exception& e) {
    return record(RR_ERR_INTERNAL, e.what());
  } catch (...) {
    return record(RR_ERR_INTERNAL, "unknown failure");
  }
}

void require_arg(bool ok, const char* what) {
  if (!ok) fail(ErrorCode::InvalidArgument, what);
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(const json& j, char** out) {
  require_arg(out != nullptr, "output pointer is null");
  *out = dup_string(j.dump());
}

json parse(const char* text) {
  require_arg(text != nullptr, "JSON text is null");
  return json::parse(text);
}

Tolerances core_tol(const rr_tolerances* t) {
  Tolerances out;
  if (t) {
    out.rank = t->rank;
    out.hyperdet = t->hyperdet;
  }
  return out;
}

std::vector<Rational> rationals(const char* const* coords, size_t count) {
  require_arg(coords != nullptr || count == 0, "coordinate array is null");
  std::vector<Rational> x;
  for (size_t i = 0; i < count; ++i) {
    require_arg(coords[i] != nullptr, "coordinate string is null");
    x.push_back(Rational::parse(coords[i]));
  }
  return x;
}

BinaryForm make_form(const char* const* coords, size_t count, int plain) {
  auto x = rationals(coords, count);
  return plain ? BinaryForm::from_plain(x) : BinaryForm::from_rationals(std::move(x));
}

}  // namespace

extern "C" {

rr_tolerances rr_default_tolerances(void) { return rr_tolerances{1e-8, 1e-10, 1e-6, 1e-10}; }

const char* rr_status_string(rr_status status) {
  if (status == RR_OK) return "OK";
  const int code = static_cast<int>(status) - 1;
  if (code < 0 || code > static_cast<int>(ErrorCode::Internal)) return "UNKNOWN_STATUS";
  return error_code_name(static_cast<ErrorCode>(code));
}

const char* rr_last_error_message(void) { return g_last_error.c_str(); }
void rr_string_free(char* s) { std::free(s); }
const char* rr_version(void) { return "1.0.0"; }
void rr_set_max_threads(unsigned n) { set_max_threads(n); }

// Tensors ------------------------------------------------------------------

rr_status rr_tensor_create(const size_t* dims, size_t order, const double* entries, rr_tensor** out) {
  return guarded([&] {
    require_arg(out && dims && entries, "null argument");
    const Shape shape(std::vector<std::size_t>(dims, dims + order));
    *out = new rr_tensor{Tensor(shape, std::vector<double>(entries, entries + shape.num_entries()))};
  });
}

rr_status rr_tensor_from_json(const char* text, rr_tensor** out) {
  return guarded([&] {
    require_arg(out, "output pointer is null");
    *out = new rr_tensor{io::tensor_from_json(parse(text))};
  });
}

rr_status rr_tensor_from_symmetric_json(const char* text, rr_tensor** out) {
  return guarded([&] {
    require_arg(out, "output pointer is null");
    *out = new rr_tensor{sym_to_tensor(io::sym_from_json(parse(text)))};
  });
}

rr_status rr_tensor_to_json(const rr_tensor* t, char** out) {
  return guarded([&] {
    require_arg(t, "tensor is null");
    emit(io::tensor_to_json(t->value), out);
  });
}

size_t rr_tensor_order(const rr_tensor* t) { return t ? t->value.order() : 0; }
size_t rr_tensor_size(const rr_tensor* t) { return t ? t->value.size() : 0; }

rr_status rr_tensor_dims(const rr_tensor* t, size_t* dims, size_t capacity) {
  return guarded([&] {
    require_arg(t && dims, "null argument");
    if (capacity < t->value.order()) fail(ErrorCode::DimensionMismatch, "dims buffer too small");
    for (size_t i = 0; i < t->value.order(); ++i) dims[i] = t->value.shape()[i];
  });
}

rr_status rr_tensor_entries(const rr_tensor* t, double* entries, size_t capacity) {
  return guarded([&] {
    require_arg(t && entries, "null argument");
    if (capacity < t->value.size()) fail(ErrorCode::DimensionMismatch, "entries buffer too small");
    std::copy(t->value.entries().begin(), t->value.entries().end(), entries);
  });
}

void rr_tensor_free(rr_tensor* t) { delete t; }

// Certificates ---------------------------------------------------------------

rr_status rr_certify(const rr_tensor* t, const rr_tolerances* tol, rr_certificate** out) {
  return guarded([&] {
    require_arg(t && out, "null argument");
    *out = new rr_certificate{certify_border_rank2(t->value, core_tol(tol))};
  });
}

rr_status rr_certify_symmetric_json(const char* text, const rr_tolerances* tol, rr_certificate** out) {
  return guarded([&] {
    require_arg(out, "output pointer is null");
    *out = new rr_certificate{certify_symmetric(io::sym_from_json(parse(text)), core_tol(tol))};
  });
}

const char* rr_certificate_verdict(const rr_certificate* c) { return c ? verdict_name(c->value.verdict) : nullptr; }

int rr_certificate_within_real_border_rank_two(const rr_certificate* c) {
  return c && within_real_border_rank_two(c->value.verdict) ? 1 : 0;
}

rr_status rr_certificate_to_json(const rr_certificate* c, char** out) {
  return guarded([&] {
    require_arg(c, "certificate is null");
    emit(io::certificate_to_json(c->value), out);
  });
}

void rr_certificate_free(rr_certificate* c) { delete c; }

// Decompositions ---------------------------------------------------------------

rr_status rr_decompose(const rr_tensor* t, const rr_tolerances* tol, int check_certificate, rr_decomposition** out) {
  return guarded([&] {
    require_arg(t && out, "null argument");
    DecomposeOptions opts;
    opts.certify = core_tol(tol);
    if (tol) opts.tangential_gap = tol->tangential_gap;
    opts.check_certificate = check_certificate != 0;
    *out = new rr_decomposition{decompose_rank2(t->value, opts)};
  });
}

const char* rr_decomposition_kind(const rr_decomposition* d) { return d ? decomposition_kind_name(d->value.kind) : nullptr; }
double rr_decomposition_residual(const rr_decomposition* d) { return d ? d->value.residual : -1.0; }

rr_status rr_decomposition_reconstruct(const rr_decomposition* d, rr_tensor** out) {
  return guarded([&] {
    require_arg(d && out, "null argument");
    *out = new rr_tensor{d->value.reconstruct()};
  });
}

rr_status rr_decomposition_to_json(const rr_decomposition* d, char** out) {
  return guarded([&] {
    require_arg(d, "decomposition is null");
    emit(io::decomposition_to_json(d->value), out);
  });
}

void rr_decomposition_free(rr_decomposition* d) { delete d; }

rr_status rr_hyperdet_json(const rr_tensor* t, const rr_tolerances* tol, char** out) {
  return guarded([&] {
    require_arg(t, "tensor is null");
    const double rel = tol ? tol->hyperdet : 1e-10;
    const Tensor& x = t->value;
    json j;
    if (x.order() == 3 && x.shape()[0] == 2 && x.shape()[1] == 2 && x.shape()[2] == 2) j["hyperdet"] = hyperdet222(x);
    j["report"] = io::hyperdet_report_to_json(all_subhyperdets(x, hyperdet_zero_tolerance(x, rel)));
    emit(j, out);
  });
}

rr_status rr_best_rank_one_json(const rr_tensor* t, size_t max_iters, double tol, char** out) {
  return guarded([&] {
    require_arg(t, "tensor is null");
    emit(io::best_rank_one_to_json(best_rank_one(t->value, max_iters ? max_iters : 500, tol > 0 ? tol : 1e-13)), out);
  });
}

// Polynomial lists ---------------------------------------------------------------

rr_status rr_quadrics(unsigned n, unsigned d, rr_polylist** out) {
  return guarded([&] {
    require_arg(out, "output pointer is null");
    auto* l = new rr_polylist;
    try {
      for (const auto& q : quadric_basis(n, d)) l->items.push_back({"quadrics", q.tableau.label(), q.polynomial.to_string()});
    } catch (...) {
      delete l;
      throw;
    }
    *out = l;
  });
}

rr_status rr_ideal_report(unsigned d, rr_polylist** out) {
  return guarded([&] {
    require_arg(out, "output pointer is null");
    const IdealReport r = tau_sigma_ideal_report(d);
    auto* l = new rr_polylist;
    for (const auto& p : r.curve_ideal) l->items.push_back({"curve", p.label, p.poly.to_string()});
    for (const auto& p : r.secant_ideal) l->items.push_back({"secant", p.label, p.poly.to_string()});
    for (const auto& p : r.tangential_ideal) l->items.push_back({"tangential", p.label, p.poly.to_string()});
    *out = l;
  });
}

size_t rr_polylist_size(const rr_polylist* l) { return l ? l->items.size() : 0; }
const char* rr_polylist_label(const rr_polylist* l, size_t i) {
  return l && i < l->items.size() ? l->items[i].label.c_str() : nullptr;
}
const char* rr_polylist_poly(const rr_polylist* l, size_t i) {
  return l && i < l->items.size() ? l->items[i].poly.c_str() : nullptr;
}
const char* rr_polylist_group(const rr_polylist* l, size_t i) {
  return l && i < l->items.size() ? l->items[i].group.c_str() : nullptr;
}

rr_status rr_polylist_to_json(const rr_polylist* l, char** out) {
  return guarded([&] {
    require_arg(l, "list is null");
    json a = json::array();
    for (const auto& it : l->items) a.push_back({{"group", it.group}, {"label", it.label}, {"poly", it.poly}});
    emit(a, out);
  });
}

void rr_polylist_free(rr_polylist* l) { delete l; }

rr_status rr_table1_json(char** out) {
  return guarded([&] { emit(io::table1_to_json(), out); });
}

// Binary forms ---------------------------------------------------------------

rr_status rr_binary_form_classify(const char* const* coords, size_t count, int plain, const rr_tolerances* tol,
                                  char** out_json) {
  return guarded([&] { emit(io::binary_verdict_to_json(classify_binary_form(make_form(coords, count, plain), core_tol(tol))), out_json); });
}

rr_status rr_quintic_test(const char* const* coords, size_t count, int plain, int* result, char** out_json) {
  return guarded([&] {
    const BinaryForm f = make_form(coords, count, plain);
    const QuinticQuadrics q = quintic_quadrics(f);
    const bool ok = quintic_alternative_test(f);
    if (result) *result = ok ? 1 : 0;
    if (out_json)
      emit({{"passes", ok}, {"q0", q.q0}, {"q1", q.q1}, {"q2", q.q2}, {"q1^2-4*q0*q2", q.discriminant()}}, out_json);
  });
}

// Space curves ---------------------------------------------------------------

rr_status rr_curve_from_json(const char* text, rr_curve** out) {
  return guarded([&] {
    require_arg(out, "output pointer is null");
    CurveParam c = io::curve_from_json(parse(text));
    PluckerMap pm = plucker_map(c);
    *out = new rr_curve{std::move(c), std::move(pm)};
  });
}

rr_status rr_curve_to_json(const rr_curve* c, char** out) {
  return guarded([&] {
    require_arg(c, "curve is null");
    emit(io::curve_to_json(c->curve), out);
  });
}

rr_status rr_curve_plucker_json(const rr_curve* c, char** out) {
  return guarded([&] {
    require_arg(c, "curve is null");
    emit(io::plucker_to_json(c->pm), out);
  });
}

rr_status rr_curve_classify_json(const rr_curve* c, const char* const* u, uint64_t seed, const rr_tolerances* tol,
                                 char** out) {
  return guarded([&] {
    require_arg(c, "curve is null");
    const auto x = rationals(u, 4);
    SecantOptions opts;
    opts.seed = seed;
    if (tol) opts.discriminant_tol = tol->discriminant;
    emit(io::classification_to_json(classify_point(c->curve, c->pm, {x[0], x[1], x[2], x[3]}, opts)), out);
  });
}

rr_status rr_curve_scan_json(const rr_curve* c, const char* path_json, size_t samples, uint64_t seed,
                             const rr_tolerances* tol, char** out) {
  return guarded([&] {
    require_arg(c, "curve is null");
    const io::PathSpec spec = io::path_from_json(parse(path_json));
    ScanOptions opts;
    opts.samples = samples ? samples : spec.samples;
    opts.secant.seed = seed;
    if (tol) opts.secant.discriminant_tol = tol->discriminant;
    emit(io::path_report_to_json(scan_path(c->curve, spec.path, spec.fixtures, opts)), out);
  });
}

void rr_curve_free(rr_curve* c) { delete c; }

}  // extern "C"
