#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qaw/qjacobi.hpp"
#include "qaw/suites.hpp"

namespace {

constexpr int kExitConfig = 2;

struct VerifyArgs {
  std::string suite = "all";
  std::vector<std::int64_t> seeds;
  int points = 0;
  int n_max = 10;
  std::string out;
  bool perturb_sol1 = false;
};

struct PolyArgs {
  std::string family = "little";
  int n = 0;
  std::string a = "1/3", b = "1/5", c = "1";
  std::string t = "1/2", u = "3/2";
  std::string out;
};

void emit(const nlohmann::ordered_json& doc, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << doc.dump(2) << '\n';
    return;
  }
  std::ofstream file(path);
  if (!file) throw std::runtime_error("cannot open " + path + " for writing");
  file << doc.dump(2) << '\n';
}

int cmd_verify(const VerifyArgs& args) {
  qaw::Suite suite;
  try {
    suite = qaw::parse_suite(args.suite);
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << '\n';
    return kExitConfig;
  }
  if (args.n_max < 0) {
    std::cerr << "--n-max must be nonnegative\n";
    return kExitConfig;
  }
  std::vector<std::int64_t> seeds = args.seeds;
  if (seeds.empty()) {
    const int count = args.points > 0 ? args.points : 3;
    for (int i = 1; i <= count; ++i) seeds.push_back(i);
  }

  qaw::Reports reports;
  try {
    reports = qaw::run_suite(suite, seeds, {.n_max = args.n_max, .perturb_sol1 = args.perturb_sol1});
  } catch (const std::runtime_error& e) {
    std::cerr << e.what() << '\n';
    return kExitConfig;
  }

  nlohmann::ordered_json invocation;
  invocation["command"] = "verify";
  invocation["suite"] = args.suite;
  invocation["seeds"] = seeds;
  invocation["n_max"] = args.n_max;
  invocation["perturb_sol1"] = args.perturb_sol1;
  emit(qaw::report_document(invocation, reports), args.out);

  const bool ok = qaw::all_passed(reports);
  if (!ok) {
    for (const auto& r : reports)
      if (!r.passed()) std::cerr << "FAIL " << r.check_name << " seed=" << r.seed << ": " << r.residual_summary << '\n';
  }
  return ok ? 0 : 1;
}

int cmd_poly(const PolyArgs& args) {
  using qaw::Rational;
  Rational t, u, a, b, c;
  try {
    t = qaw::parse_rational(args.t);
    u = qaw::parse_rational(args.u);
    a = qaw::parse_rational(args.a);
    b = qaw::parse_rational(args.b);
    c = qaw::parse_rational(args.c);
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << '\n';
    return kExitConfig;
  }
  if (args.n < 0 || t == 0 || t == 1 || t == -1 || u == 0 || a == 0 || b == 0) {
    std::cerr << "degenerate parameters\n";
    return kExitConfig;
  }

  qaw::ParamPoint base;
  base.t = t;
  base.u = u;
  base.w.cbar0 = 1;
  base.w.eps1 = 1;

  nlohmann::ordered_json doc;
  doc["family"] = args.family;
  doc["n"] = args.n;
  doc["t"] = qaw::to_string(t);
  doc["u"] = qaw::to_string(u);
  try {
    qaw::LaurentPoly poly;
    Rational ab;
    qaw::ParamPoint p;
    if (args.family == "little") {
      p = qaw::with_little_parameters(base, a, b);
      poly = qaw::little_poly(args.n, {a, b}, p);
      ab = a * b;
      doc["params"] = {{"a", qaw::to_string(a)}, {"b", qaw::to_string(b)}};
    } else {
      if (c == 0) throw qaw::DegenerateError("c = 0");
      p = qaw::with_big_parameters(base, a, b, c, true);
      poly = qaw::big_poly_rescaled(args.n, {a, b, c}, p);
      ab = a * b;
      doc["params"] = {{"a", qaw::to_string(a)}, {"b", qaw::to_string(b)}, {"c", qaw::to_string(c)}};
    }
    doc["coefficients"] = qaw::to_json(poly);
    doc["eigenvalue"] = qaw::to_string(qaw::jacobi_eigenvalue(args.n, ab, p));
    doc["qdiff_eigenvalue"] = qaw::to_string(qaw::qdiff_eigenvalue(args.n, ab, p.q()));
  } catch (const qaw::DegenerateError& e) {
    std::cerr << "degenerate parameters: " << e.what() << '\n';
    return kExitConfig;
  }
  emit(doc, args.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of the Askey-Wilson algebra realized by q-difference operators"};
  app.set_config("--config", "", "key-value file mirroring the command-line flags");
  app.require_subcommand(1);

  VerifyArgs verify;
  auto* sub_verify = app.add_subcommand("verify", "run identity checks and write a JSON report");
  sub_verify->add_option("--suite", verify.suite, "all, uqsl2, aw, equitable, little, big or tridiag")
      ->capture_default_str();
  sub_verify->add_option("--seeds", verify.seeds, "comma-separated seeds")->delimiter(',');
  sub_verify->add_option("--points", verify.points, "use seeds 1..N")->excludes("--seeds");
  sub_verify->add_option("--n-max", verify.n_max, "highest polynomial degree")->capture_default_str();
  sub_verify->add_option("--out", verify.out, "report path (stdout if omitted)");
  sub_verify->add_flag("--perturb-sol1", verify.perturb_sol1, "corrupt one tridiagonalization coefficient");

  PolyArgs poly;
  auto* sub_poly = app.add_subcommand("poly", "print polynomial coefficients and eigenvalue");
  sub_poly->add_option("--family", poly.family, "little or big_rescaled")
      ->check(CLI::IsMember({"little", "big_rescaled"}))
      ->capture_default_str();
  sub_poly->add_option("--n", poly.n, "degree")->required();
  sub_poly->add_option("--a", poly.a, "jacobi a")->capture_default_str();
  sub_poly->add_option("--b", poly.b, "jacobi b")->capture_default_str();
  sub_poly->add_option("--c", poly.c, "jacobi c (big_rescaled)")->capture_default_str();
  sub_poly->add_option("--t", poly.t, "q^{1/2}")->capture_default_str();
  sub_poly->add_option("--u", poly.u, "q^nu")->capture_default_str();
  sub_poly->add_option("--out", poly.out, "output path (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (sub_verify->parsed()) return cmd_verify(verify);
    return cmd_poly(poly);
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return kExitConfig;
  }
}
