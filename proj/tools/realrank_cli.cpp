// Command-line front end; talks to the library only through realrank.h.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "realrank/realrank.h"

using nlohmann::json;

namespace {

constexpr std::uint64_t kDefaultSeed = 20260101;

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(rr_status s, const std::string& context) {
  if (s != RR_OK) throw Failure(context + ": " + rr_status_string(s) + ": " + rr_last_error_message());
}

json take_json(char* raw) {
  std::unique_ptr<char, decltype(&rr_string_free)> guard(raw, rr_string_free);
  return json::parse(raw);
}

template <typename T, void (*Free)(T*)>
struct Handle {
  T* p = nullptr;
  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  ~Handle() { Free(p); }
};
using TensorH = Handle<rr_tensor, rr_tensor_free>;
using CertH = Handle<rr_certificate, rr_certificate_free>;
using DecompH = Handle<rr_decomposition, rr_decomposition_free>;
using ListH = Handle<rr_polylist, rr_polylist_free>;
using CurveH = Handle<rr_curve, rr_curve_free>;

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path);
  if (!in) throw Failure("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) {
    const auto b = part.find_first_not_of(" \t"), e = part.find_last_not_of(" \t");
    if (b == std::string::npos) throw Failure("empty entry in list \"" + s + "\"");
    out.push_back(part.substr(b, e - b + 1));
  }
  return out;
}

std::vector<const char*> c_strings(const std::vector<std::string>& v) {
  std::vector<const char*> out;
  for (const auto& s : v) out.push_back(s.c_str());
  return out;
}

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string num(const json& v) { return v.is_number() ? num(v.get<double>()) : v.dump(); }

std::string join(const json& arr, const char* sep = ",") {
  std::string s;
  for (std::size_t i = 0; i < arr.size(); ++i) s += (i ? sep : "") + (arr[i].is_string() ? arr[i].get<std::string>() : num(arr[i]));
  return s;
}

// Result of one command: JSON payload plus renderers for the other formats.
struct Outcome {
  json result;
  int exit_code = 0;
  std::function<void(std::ostream&)> text;
  std::function<void(std::ostream&)> csv;
};

struct Settings {
  std::string format = "text";
  std::uint64_t seed = kDefaultSeed;
  unsigned threads = 0;
  double rank_tol = 1e-8, hyperdet_tol = 1e-10, tangential_gap = 1e-6, disc_tol = 1e-10;
  json inputs = json::object();

  rr_tolerances tol() const { return {rank_tol, hyperdet_tol, tangential_gap, disc_tol}; }
};

// Commands ---------------------------------------------------------------------

bool is_symmetric_input(const json& j) { return j.is_object() && j.contains("n") && j.contains("d"); }

Outcome cmd_certify(const Settings& s, const std::string& file, bool check_flag) {
  const std::string text = read_input(file);
  const json parsed = json::parse(text);
  const rr_tolerances tol = s.tol();
  CertH cert;
  if (is_symmetric_input(parsed)) {
    check(rr_certify_symmetric_json(text.c_str(), &tol, &cert.p), "certify");
  } else {
    TensorH t;
    check(rr_tensor_from_json(text.c_str(), &t.p), "reading tensor");
    check(rr_certify(t.p, &tol, &cert.p), "certify");
  }
  char* raw = nullptr;
  check(rr_certificate_to_json(cert.p, &raw), "certificate");
  Outcome o;
  o.result = take_json(raw);
  if (check_flag && !rr_certificate_within_real_border_rank_two(cert.p)) o.exit_code = 2;
  o.text = [r = o.result](std::ostream& out) {
    out << "verdict: " << r["verdict"].get<std::string>() << "\n";
    out << "method: " << r["method"].get<std::string>() << "\n";
    out << "shape: " << join(r["shape"], "x") << "\n";
    out << "flattening ranks:";
    for (const auto& f : r["flattening_ranks"]) out << " {" << join(f["row_modes"]) << "}=" << f["rank"].get<int>();
    out << "\n";
    if (r.contains("hyperdets")) {
      const auto& h = r["hyperdets"];
      out << "hyperdets: " << h["count"] << " total, " << h["num_positive"] << " positive, " << h["num_zero"] << " zero, "
          << h["num_negative"] << " negative";
      if (h.contains("min_value")) out << "; min " << num(h["min_value"]) << " at " << h["argmin"]["label"].get<std::string>() << ", max " << num(h["max_value"]);
      out << "\n";
    }
    out << "zero probe: " << r["zero_probe"].get<std::string>() << "\n";
  };
  return o;
}

Outcome cmd_decompose(const Settings& s, const std::string& file, bool no_check) {
  const std::string text = read_input(file);
  const json parsed = json::parse(text);
  TensorH t;
  if (is_symmetric_input(parsed)) check(rr_tensor_from_symmetric_json(text.c_str(), &t.p), "reading form");
  else check(rr_tensor_from_json(text.c_str(), &t.p), "reading tensor");
  const rr_tolerances tol = s.tol();
  DecompH d;
  check(rr_decompose(t.p, &tol, no_check ? 0 : 1, &d.p), "decompose");
  char* raw = nullptr;
  check(rr_decomposition_to_json(d.p, &raw), "decomposition");
  Outcome o;
  o.result = take_json(raw);
  o.text = [r = o.result](std::ostream& out) {
    out << "kind: " << r["kind"].get<std::string>() << "\n";
    out << "residual: " << num(r["residual"]) << "\n";
    out << "pencil gap: " << num(r["pencil_gap"]) << "\n";
    if (r.contains("terms")) {
      for (std::size_t i = 0; i < r["terms"].size(); ++i) {
        const auto& term = r["terms"][i];
        out << "term " << i + 1 << ": weight ";
        if (term["weight"].is_object()) out << num(term["weight"]["re"]) << " + " << num(term["weight"]["im"]) << "i";
        else out << num(term["weight"]);
        out << "\n";
        for (const auto& f : term["factors"]) {
          if (f.is_object()) out << "  re [" << join(f["re"]) << "] im [" << join(f["im"]) << "]\n";
          else out << "  [" << join(f) << "]\n";
        }
      }
      if (r.contains("note")) out << r["note"].get<std::string>() << "\n";
    } else {
      for (std::size_t k = 0; k < r["x"].size(); ++k)
        out << "mode " << k + 1 << ": x [" << join(r["x"][k]) << "] y [" << join(r["y"][k]) << "]\n";
    }
  };
  return o;
}

Outcome cmd_hyperdet(const Settings& s, const std::string& file) {
  TensorH t;
  check(rr_tensor_from_json(read_input(file).c_str(), &t.p), "reading tensor");
  const rr_tolerances tol = s.tol();
  char* raw = nullptr;
  check(rr_hyperdet_json(t.p, &tol, &raw), "hyperdet");
  Outcome o;
  o.result = take_json(raw);
  o.text = [r = o.result](std::ostream& out) {
    if (r.contains("hyperdet")) out << "hyperdet: " << num(r["hyperdet"]) << "\n";
    for (const auto& v : r["report"]["values"]) out << v["selector"].get<std::string>() << " " << num(v["value"]) << "\n";
    const auto& h = r["report"];
    out << "summary: " << h["num_positive"] << " positive, " << h["num_zero"] << " zero, " << h["num_negative"] << " negative\n";
  };
  o.csv = [r = o.result](std::ostream& out) {
    out << "selector,value\n";
    for (const auto& v : r["report"]["values"]) out << "\"" << v["selector"].get<std::string>() << "\"," << num(v["value"]) << "\n";
  };
  return o;
}

Outcome cmd_best_rank_one(const std::string& file, std::size_t iters) {
  TensorH t;
  check(rr_tensor_from_json(read_input(file).c_str(), &t.p), "reading tensor");
  char* raw = nullptr;
  check(rr_best_rank_one_json(t.p, iters, 0.0, &raw), "best rank one");
  Outcome o;
  o.result = take_json(raw);
  o.text = [r = o.result](std::ostream& out) {
    out << "distance: " << num(r["distance"]) << "\n";
    out << "weight: " << num(r["weight"]) << "\n";
    for (const auto& f : r["factors"]) out << "  [" << join(f) << "]\n";
    out << "iterations: " << r["iterations"] << ", stationarity " << num(r["stationarity"]) << "\n";
  };
  return o;
}

Outcome polylist_outcome(rr_polylist* l) {
  char* raw = nullptr;
  check(rr_polylist_to_json(l, &raw), "polynomial list");
  Outcome o;
  o.result = take_json(raw);
  o.text = [r = o.result](std::ostream& out) {
    for (const auto& p : r) out << p["label"].get<std::string>() << " = " << p["poly"].get<std::string>() << "\n";
  };
  o.csv = [r = o.result](std::ostream& out) {
    out << "group,label,poly\n";
    for (const auto& p : r) out << p["group"].get<std::string>() << "," << p["label"].get<std::string>() << ",\"" << p["poly"].get<std::string>() << "\"\n";
  };
  return o;
}

Outcome cmd_quadrics(unsigned n, unsigned d) {
  ListH l;
  check(rr_quadrics(n, d, &l.p), "quadrics");
  return polylist_outcome(l.p);
}

Outcome cmd_ideal(unsigned d) {
  ListH l;
  check(rr_ideal_report(d, &l.p), "ideal");
  Outcome o = polylist_outcome(l.p);
  o.text = [r = o.result](std::ostream& out) {
    std::string group;
    for (const auto& p : r) {
      if (p["group"] != group) {
        group = p["group"].get<std::string>();
        out << "# " << group << "\n";
      }
      out << p["label"].get<std::string>() << " = " << p["poly"].get<std::string>() << "\n";
    }
  };
  return o;
}

Outcome cmd_table1() {
  char* raw = nullptr;
  check(rr_table1_json(&raw), "table1");
  Outcome o;
  o.result = take_json(raw);
  o.text = [r = o.result](std::ostream& out) {
    out << "n\\d";
    for (const auto& d : r["d"]) out << "\t" << d;
    out << "\n";
    for (const auto& row : r["rows"]) out << row["n"] << "\t" << join(row["counts"], "\t") << "\n";
  };
  o.csv = [r = o.result](std::ostream& out) {
    out << "n," << join(r["d"]) << "\n";
    for (const auto& row : r["rows"]) out << row["n"] << "," << join(row["counts"]) << "\n";
  };
  return o;
}

Outcome cmd_binary_form(const Settings& s, unsigned d, const std::string& coords, bool plain, bool check_flag, bool quintic) {
  const auto parts = split_list(coords);
  if (parts.size() != d + 1) throw Failure("--coords needs d+1 = " + std::to_string(d + 1) + " entries, got " + std::to_string(parts.size()));
  const auto cs = c_strings(parts);
  Outcome o;
  if (quintic) {
    int ok = 0;
    char* raw = nullptr;
    check(rr_quintic_test(cs.data(), cs.size(), plain ? 1 : 0, &ok, &raw), "quintic test");
    o.result = take_json(raw);
    o.exit_code = ok ? 0 : 2;
    o.text = [r = o.result](std::ostream& out) {
      out << "quintic test: " << (r["passes"].get<bool>() ? "PASS" : "FAIL") << "\n";
      out << "Q0 " << num(r["q0"]) << ", Q1 " << num(r["q1"]) << ", Q2 " << num(r["q2"]) << ", Q1^2-4Q0Q2 " << num(r["q1^2-4*q0*q2"]) << "\n";
    };
    return o;
  }
  const rr_tolerances tol = s.tol();
  char* raw = nullptr;
  check(rr_binary_form_classify(cs.data(), cs.size(), plain ? 1 : 0, &tol, &raw), "binary form");
  o.result = take_json(raw);
  const std::string v = o.result["verdict"].get<std::string>();
  if (check_flag && v != "RANK_AT_MOST_ONE" && v != "REAL_RANK_TWO" && v != "REAL_BORDER_RANK_TWO_BOUNDARY") o.exit_code = 2;
  o.text = [r = o.result](std::ostream& out) {
    out << "verdict: " << r["verdict"].get<std::string>() << "\n";
    out << "hankel rank: " << r["hankel_rank"] << " (catalecticant " << r["catalecticant_rank"] << ")\n";
    out << "D values: " << (r.contains("d_values_exact") ? join(r["d_values_exact"], " ") : join(r["d_values"], " ")) << "\n";
    if (!r["strata"].is_null()) out << "strata: " << r["strata"].get<std::string>() << "\n";
  };
  return o;
}

std::string builtin_curve(const std::string& name) {
  if (name == "monomial-quartic") return R"({"d":4,"F":[[1,0,0,0,0],[0,1,0,0,0],[0,0,0,1,0],[0,0,0,0,1]]})";
  if (name == "twisted-cubic") return R"({"d":3,"F":[[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]]})";
  throw Failure("unknown built-in curve \"" + name + "\" (monomial-quartic, twisted-cubic)");
}

void load_curve(CurveH& c, const std::string& file, const std::string& builtin) {
  const std::string text = file.empty() ? builtin_curve(builtin) : read_input(file);
  check(rr_curve_from_json(text.c_str(), &c.p), "reading curve");
}

Outcome cmd_curve_plucker(const std::string& file, const std::string& builtin) {
  CurveH c;
  load_curve(c, file, builtin);
  char* raw = nullptr;
  check(rr_curve_plucker_json(c.p, &raw), "plucker");
  Outcome o;
  o.result = take_json(raw);
  o.text = [r = o.result](std::ostream& out) {
    for (const char* k : {"p01", "p02", "p03", "p12", "p13", "p23"}) out << k << " = " << r["plucker"][k].get<std::string>() << "\n";
    out << "plucker relation vanishes: " << (r["relation_vanishes"].get<bool>() ? "yes" : "no") << "\n";
  };
  return o;
}

Outcome cmd_curve_classify(const Settings& s, const std::string& file, const std::string& builtin, const std::string& point) {
  CurveH c;
  load_curve(c, file, builtin);
  const auto parts = split_list(point);
  if (parts.size() != 4) throw Failure("--point needs four coordinates w,x,y,z");
  const auto cs = c_strings(parts);
  const rr_tolerances tol = s.tol();
  char* raw = nullptr;
  check(rr_curve_classify_json(c.p, cs.data(), s.seed, &tol, &raw), "classify");
  Outcome o;
  o.result = take_json(raw);
  o.text = [r = o.result](std::ostream& out) {
    out << "class: " << r["class"].get<std::string>() << "\n";
    out << "secants: " << r["secants"]["total"] << " complex, " << r["real_lines"] << " real, " << r["real_meeting"]
        << " meeting the curve in two real points\n";
    for (const auto& sol : r["secants"]["real"])
      out << "  (a:b:c) = (" << join(sol["abc"], ":") << ") b^2-4ac " << num(sol["discriminant"]) << " " << sol["contact"].get<std::string>() << "\n";
  };
  return o;
}

Outcome cmd_curve_scan(const Settings& s, const std::string& file, const std::string& builtin, const std::string& path_file, std::size_t samples) {
  CurveH c;
  load_curve(c, file, builtin);
  const std::string path = read_input(path_file);
  const rr_tolerances tol = s.tol();
  char* raw = nullptr;
  check(rr_curve_scan_json(c.p, path.c_str(), samples, s.seed, &tol, &raw), "scan");
  Outcome o;
  o.result = take_json(raw);
  o.text = [r = o.result](std::ostream& out) {
    out << "transitions:\n";
    for (const auto& t : r["transitions"]) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.20f", t["t"].get<double>());
      out << "  t = " << buf << " " << t["kind"].get<std::string>() << " rank " << t["rank_before"] << " -> " << t["rank_after"];
      if (!t["surface"].get<std::string>().empty()) out << " (" << t["surface"].get<std::string>() << " surface)";
      out << "\n";
    }
    out << "segments:\n";
    for (const auto& g : r["segments"])
      out << "  [" << num(g["interval"][0]) << ", " << num(g["interval"][1]) << "] " << g["class"].get<std::string>() << ": "
          << g["real_lines"] << " real lines, " << g["real_meeting"] << " meeting the curve in two real points\n";
  };
  o.csv = [r = o.result](std::ostream& out) {
    out << "t,class,real_lines,real_meeting,min_discriminant,max_discriminant\n";
    for (const auto& p : r["samples"])
      out << num(p["t"]) << "," << p["class"].get<std::string>() << "," << p["real_lines"] << "," << p["real_meeting"] << ","
          << num(p["min_discriminant"]) << "," << num(p["max_discriminant"]) << "\n";
  };
  return o;
}

void render(const Settings& s, const std::string& command, const Outcome& o) {
  json config = {{"command", command},
                 {"format", s.format},
                 {"seed", s.seed},
                 {"threads", s.threads},
                 {"tolerances", {{"rank", s.rank_tol}, {"hyperdet", s.hyperdet_tol}, {"tangential_gap", s.tangential_gap}, {"discriminant", s.disc_tol}}},
                 {"inputs", s.inputs}};
  if (s.format == "json") {
    std::cout << json({{"config", config}, {"result", o.result}}).dump(2) << "\n";
    return;
  }
  if (s.format == "csv" && !o.csv) throw Failure("csv output is not available for " + command);
  std::cerr << "# config " << config.dump() << "\n";
  if (s.format == "text") {
    o.text(std::cout);
  } else {
    o.csv(std::cout);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Real rank two certification for tensors, binary and ternary forms, and space curves"};
  app.require_subcommand(1);
  Settings s;
  app.add_option("--format", s.format, "Output format")->check(CLI::IsMember({"json", "text", "csv"}));
  app.add_option("--seed", s.seed, "Random seed; 0 draws one from the system");
  app.add_option("--threads", s.threads, "Worker threads; 0 uses all cores");
  app.add_option("--rank-tol", s.rank_tol, "Relative singular value cutoff")->check(CLI::PositiveNumber);
  app.add_option("--hyperdet-tol", s.hyperdet_tol, "Relative zero band for hyperdeterminants")->check(CLI::NonNegativeNumber);
  app.add_option("--tangential-gap", s.tangential_gap, "Pencil root gap treated as a double root")->check(CLI::NonNegativeNumber);
  app.add_option("--disc-tol", s.disc_tol, "Dead zone for secant discriminants")->check(CLI::NonNegativeNumber);

  std::function<Outcome()> run;
  std::string command;

  std::string file = "-";
  bool check_flag = false;
  auto* certify = app.add_subcommand("certify", "Certify real border rank two of a tensor or symmetric form");
  certify->add_option("--file,-f", file, "Tensor or symmetric-form JSON ('-' for stdin)");
  certify->add_flag("--check", check_flag, "Exit with status 2 unless the verdict lies in the real border rank two locus");
  certify->callback([&] {
    command = "certify";
    s.inputs = {{"file", file}, {"check", check_flag}};
    run = [&] { return cmd_certify(s, file, check_flag); };
  });

  bool no_check = false;
  auto* decompose = app.add_subcommand("decompose", "Explicit rank-two decomposition");
  decompose->add_option("--file,-f", file, "Tensor or symmetric-form JSON ('-' for stdin)");
  decompose->add_flag("--no-certificate-check", no_check, "Skip the certificate gate");
  decompose->callback([&] {
    command = "decompose";
    s.inputs = {{"file", file}, {"certificate_check", !no_check}};
    run = [&] { return cmd_decompose(s, file, no_check); };
  });

  auto* hyperdet = app.add_subcommand("hyperdet", "All 2x2x2 sub-hyperdeterminants");
  hyperdet->add_option("--file,-f", file, "Tensor JSON ('-' for stdin)");
  hyperdet->callback([&] {
    command = "hyperdet";
    s.inputs = {{"file", file}};
    run = [&] { return cmd_hyperdet(s, file); };
  });

  std::size_t iters = 500;
  auto* bro = app.add_subcommand("best-rank-one", "Best rank-one approximation by power iteration");
  bro->add_option("--file,-f", file, "Tensor JSON ('-' for stdin)");
  bro->add_option("--max-iters", iters, "Sweep limit")->check(CLI::PositiveNumber);
  bro->callback([&] {
    command = "best-rank-one";
    s.inputs = {{"file", file}, {"max_iters", iters}};
    run = [&] { return cmd_best_rank_one(file, iters); };
  });

  unsigned qn = 0, qd = 0;
  auto* quadrics = app.add_subcommand("quadrics", "Quadrics vanishing on the tangential variety of a Veronese variety");
  quadrics->add_option("n", qn, "Number of variables")->required();
  quadrics->add_option("d", qd, "Degree")->required();
  quadrics->callback([&] {
    command = "quadrics";
    s.inputs = {{"n", qn}, {"d", qd}};
    run = [&] { return cmd_quadrics(qn, qd); };
  });

  auto* table1 = app.add_subcommand("table1", "Number of quadrics for n = 2..5, d = 4..10");
  table1->callback([&] {
    command = "table1";
    run = [&] { return cmd_table1(); };
  });

  unsigned bd = 0;
  std::string coords;
  bool plain = false, quintic = false;
  auto* binary = app.add_subcommand("binary-form", "Classify a binary form");
  binary->add_option("--d", bd, "Degree")->required();
  binary->add_option("--coords", coords, "x_0,...,x_d (decimals or num/den)")->required();
  binary->add_flag("--plain-coeffs", plain, "Inputs are monomial coefficients c_i = C(d,i) x_i");
  binary->add_flag("--check", check_flag, "Exit with status 2 unless the form lies in the real border rank two locus");
  binary->add_flag("--quintic-test", quintic, "Run the single-inequality test for quintics (exit 2 when it fails)");
  binary->callback([&] {
    command = "binary-form";
    s.inputs = {{"d", bd}, {"coords", coords}, {"plain_coeffs", plain}, {"check", check_flag}, {"quintic_test", quintic}};
    run = [&] { return cmd_binary_form(s, bd, coords, plain, check_flag, quintic); };
  });

  unsigned id = 0;
  auto* ideal = app.add_subcommand("ideal", "Generators for the curve, secant and tangential ideals of binary forms");
  ideal->add_option("--d", id, "Degree")->required();
  ideal->callback([&] {
    command = "ideal";
    s.inputs = {{"d", id}};
    run = [&] { return cmd_ideal(id); };
  });

  std::string curve_file, builtin = "monomial-quartic", point, path_file;
  std::size_t samples = 0;
  auto add_curve_opts = [&](CLI::App* sub) {
    sub->add_option("--curve", curve_file, "Curve JSON; defaults to a built-in curve");
    sub->add_option("--builtin", builtin, "Built-in curve: monomial-quartic or twisted-cubic");
  };
  auto setup_classify = [&](CLI::App* sub, const std::string& name) {
    add_curve_opts(sub);
    sub->add_option("--point", point, "Query point w,x,y,z")->required();
    sub->callback([&, name] {
      command = name;
      s.inputs = {{"curve", curve_file.empty() ? builtin : curve_file}, {"point", point}};
      run = [&] { return cmd_curve_classify(s, curve_file, builtin, point); };
    });
  };
  auto setup_scan = [&](CLI::App* sub, const std::string& name) {
    add_curve_opts(sub);
    sub->add_option("--path", path_file, "Path JSON file")->required();
    sub->add_option("--samples", samples, "Sample count (overrides the path file)");
    sub->callback([&, name] {
      command = name;
      s.inputs = {{"curve", curve_file.empty() ? builtin : curve_file}, {"path", path_file}, {"samples", samples}};
      run = [&] { return cmd_curve_scan(s, curve_file, builtin, path_file, samples); };
    });
  };
  auto* curve = app.add_subcommand("curve", "Secant lines of rational space curves");
  curve->require_subcommand(1);
  setup_classify(curve->add_subcommand("classify", "Real rank of a point with respect to the curve"), "curve classify");
  setup_scan(curve->add_subcommand("scan", "Rank transitions along a line segment"), "curve scan");
  auto* plucker = curve->add_subcommand("plucker", "Plücker coordinates of the secant lines in a, b, c");
  add_curve_opts(plucker);
  plucker->callback([&] {
    command = "curve plucker";
    s.inputs = {{"curve", curve_file.empty() ? builtin : curve_file}};
    run = [&] { return cmd_curve_plucker(curve_file, builtin); };
  });
  setup_classify(app.add_subcommand("curve-classify", "Alias of 'curve classify'"), "curve-classify");
  setup_scan(app.add_subcommand("curve-scan", "Alias of 'curve scan'"), "curve-scan");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }
  try {
    if (s.seed == 0) s.seed = std::random_device{}() | (static_cast<std::uint64_t>(std::random_device{}()) << 32);
    rr_set_max_threads(s.threads);
    const Outcome o = run();
    render(s, command, o);
    return o.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
