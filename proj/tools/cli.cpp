#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>

#include "repst/bounds.hpp"
#include "repst/deligne.hpp"
#include "repst/groupalg.hpp"
#include "repst/limits.hpp"
#include "repst/schurweyl.hpp"
#include "repst/serialize.hpp"
#include "repst/snoracle.hpp"
#include "repst/sweeps.hpp"

namespace repst::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0 || q.get_den() == 0) {
    throw UsageError("--t-eval expects an integer or fraction a/b, got '" + text + "'");
  }
  q.canonicalize();
  return q;
}

std::vector<Integer> parse_integers(const std::string& text) {
  std::vector<Integer> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    Integer v;
    if (item.empty() || v.set_str(item, 10) != 0) throw UsageError("malformed coefficient list '" + text + "'");
    out.push_back(v);
  }
  return out;
}

struct Options {
  std::string lambda;
  std::string rho;
  std::optional<std::string> t_eval;
  bool json = false;
  std::optional<int> max_size;
  std::optional<int> max_n;
  std::optional<int> max_m;
  std::optional<int> deg;
  int dim_v = 0;
  int t_max = 0;
  std::string h;
  std::string suite = "all";
  std::string convention = "col-minus-row";
  std::string c = "1";
  int k = 0;
};

// Prints a polynomial result in both bases, optionally evaluated.
void emit_polynomial(std::ostream& out, const Options& opt, const std::string& label, const Json& keys,
                     const Polynomial& p) {
  const BinomialPolynomial b = to_binomial_basis(p);
  std::optional<Rational> value;
  if (opt.t_eval) value = p(parse_rational(*opt.t_eval));
  if (opt.json) {
    Json j = keys;
    j["monomial"] = to_json(p);
    j["binomial"] = to_json(b);
    if (value) j["tEval"] = {{"t", rational_to_json(parse_rational(*opt.t_eval))}, {"value", rational_to_json(*value)}};
    out << j.dump() << "\n";
    return;
  }
  out << label << " = " << p.to_string() << "\n";
  out << "  binomial basis: " << b.to_string() << "\n";
  if (value) out << "  at t = " << *opt.t_eval << ": " << value->get_str() << "\n";
}

std::string paren(const std::string& s) { return "(" + s + ")"; }

int cmd_dim(std::ostream& out, const Options& opt) {
  const Partition lambda = Partition::parse(opt.lambda);
  emit_polynomial(out, opt, "dim X_" + paren(lambda.to_string()), {{"lambda", lambda.to_string()}}, dim_x(lambda));
  return kExitOk;
}

int cmd_pieri(std::ostream& out, const Options& opt) {
  const Partition lambda = Partition::parse(opt.lambda);
  const Decomposition d = pieri_h0(lambda);
  if (opt.json) {
    out << to_json(d).dump() << "\n";
    return kExitOk;
  }
  out << "h0 (x) X_" << paren(lambda.to_string()) << " =";
  bool first = true;
  for (const auto& [mu, mult] : d.terms()) {
    out << (first ? " " : " + ");
    if (mult != 1) out << mult << "*";
    out << "X_" << paren(mu.to_string());
    first = false;
  }
  out << "\n";
  return kExitOk;
}

int cmd_omega(std::ostream& out, const Options& opt) {
  const Partition lambda = Partition::parse(opt.lambda);
  emit_polynomial(out, opt, "Omega on X_" + paren(lambda.to_string()), {{"lambda", lambda.to_string()}},
                  jm_eigenvalue(lambda));
  return kExitOk;
}

int cmd_omega_m(std::ostream& out, const Options& opt) {
  const Partition lambda = Partition::parse(opt.lambda);
  const CycleType rho = CycleType::parse(opt.rho);
  emit_polynomial(out, opt, "Omega_" + paren(rho.to_string()) + " on X_" + paren(lambda.to_string()),
                  {{"lambda", lambda.to_string()}, {"rho", rho.to_string()}}, omega_eigenvalue(rho, lambda));
  return kExitOk;
}

int cmd_class_size(std::ostream& out, const Options& opt) {
  const CycleType rho = CycleType::parse(opt.rho);
  emit_polynomial(out, opt, "|C_" + paren(rho.to_string()) + "|", {{"rho", rho.to_string()}}, class_size_poly(rho));
  return kExitOk;
}

int cmd_character(std::ostream& out, const Options& opt) {
  const Partition lambda = Partition::parse(opt.lambda);
  const CycleType rho = CycleType::parse(opt.rho);
  emit_polynomial(out, opt, "c_" + paren(lambda.to_string()) + "," + paren(rho.to_string()),
                  {{"lambda", lambda.to_string()}, {"rho", rho.to_string()}}, frob_coefficient(lambda, rho));
  return kExitOk;
}

int cmd_hilbert(std::ostream& out, const Options& opt) {
  const int degree = opt.deg.value_or(6);
  const TruncatedSeries series = tensor_power_hilbert(UnitalHilbert(parse_integers(opt.h)), degree);
  if (opt.json) {
    out << to_json(series).dump() << "\n";
    return kExitOk;
  }
  for (int k = 0; k <= degree; ++k) {
    const Polynomial c = series.coefficient({k});
    out << "[x^" << k << "] " << c.to_string() << "   (" << to_binomial_basis(c).to_string() << ")\n";
  }
  return kExitOk;
}

int cmd_verma(std::ostream& out, const Options& opt) {
  const VermaWeightSpec spec{Partition::parse(opt.lambda), opt.dim_v};
  const auto candidates = verma_reducibility_candidates(spec, opt.t_max);
  const auto ranks = verma_candidate_ranks(spec, opt.t_max);
  if (opt.json) {
    Json list = Json::array();
    for (const auto& c : candidates) list.push_back(to_json(c));
    out << Json{{"lambda", spec.lambda.to_string()},
                {"N", spec.dim_v},
                {"tMax", opt.t_max},
                {"necessaryConditionOnly", true},
                {"t", ranks},
                {"candidates", list}}
               .dump()
        << "\n";
    return kExitOk;
  }
  out << "reducibility candidates (necessary condition only) for lambda=(" << spec.lambda.to_string()
      << "), N=" << spec.dim_v << ": {";
  bool first = true;
  for (int t : ranks) {
    out << (first ? "" : ",") << t;
    first = false;
  }
  out << "}\n";
  return kExitOk;
}

int cmd_branch(std::ostream& out, const Options& opt) {
  const Partition lambda = Partition::parse(opt.lambda);
  const int bound = opt.max_size.value_or(lambda.size() + 3);
  const auto mus = interlace_branch(lambda, opt.dim_v, bound);
  if (opt.json) {
    Json list = Json::array();
    for (const auto& mu : mus) list.push_back(mu.to_string());
    out << Json{{"lambda", lambda.to_string()}, {"N", opt.dim_v}, {"bound", bound}, {"mu", list}}.dump() << "\n";
    return kExitOk;
  }
  for (const auto& mu : mus) out << "(" << mu.to_string() << ")\n";
  return kExitOk;
}

int cmd_stirling(std::ostream& out, const Options& opt) {
  const HilbertCoefficientTable table = hilbert_coefficient_table(opt.max_m.value_or(3));
  if (opt.json) {
    out << to_json(table).dump() << "\n";
    return kExitOk;
  }
  for (const auto& [m, p] : table) out << "[x^" << m << "] " << p.to_string() << "\n";
  return kExitOk;
}

int cmd_bounds(std::ostream& out, const Options& opt) {
  const int n = opt.max_n.value_or(18);
  const BoundSweepReport report = bound_sweep(n);
  if (opt.json) {
    out << to_json(report).dump() << "\n";
  } else {
    out << "n=" << n << ": " << (report.pass ? "pass" : "FAIL") << " over " << report.partitions
        << " partitions, minimum slack " << report.min_slack.get_str() << " at (" << report.argmin.to_string()
        << ")\n";
  }
  return report.pass ? kExitOk : kExitVerifyFailed;
}

int cmd_lemma(std::ostream& out, const Options& opt) {
  const Rational c = parse_rational(opt.c);
  if (c <= 0) throw UsageError("--c must be positive");
  const int n_max = opt.max_n.value_or(15);
  const auto threshold = find_threshold(c, opt.k, n_max);
  Json per_n = Json::object();
  for (int n = 1; n <= n_max; ++n) {
    Json list = Json::array();
    for (const auto& mu : lemma_scan(c, opt.k, n)) list.push_back(mu.to_string());
    per_n[std::to_string(n)] = list;
  }
  if (opt.json) {
    out << Json{{"C", rational_to_json(c)},
                {"k", opt.k},
                {"nMax", n_max},
                {"threshold", threshold ? Json(*threshold) : Json(nullptr)},
                {"violations", per_n}}
               .dump()
        << "\n";
    return kExitOk;
  }
  out << "threshold for C=" << c.get_str() << ", k=" << opt.k << ": "
      << (threshold ? std::to_string(*threshold) : "none up to " + std::to_string(n_max)) << "\n";
  return kExitOk;
}

int cmd_verify(std::ostream& out, const Options& opt) {
  ContentConvention convention = ContentConvention::ColMinusRow;
  if (opt.convention == "row-minus-col") {
    convention = ContentConvention::RowMinusCol;
  } else if (opt.convention != "col-minus-row") {
    throw UsageError("--content-convention must be col-minus-row or row-minus-col");
  }
  const auto cap = [](int value) {
    if (value > limits().sweep_n) throw UsageError("limit " + std::to_string(value) + " exceeds the sweep cap");
    return value;
  };
  const std::string& s = opt.suite;
  const bool all = s == "all";
  if (!all && s != "oracle" && s != "pieri" && s != "stirling" && s != "bounds" && s != "graded") {
    throw UsageError("unknown suite '" + s + "'");
  }

  std::vector<SuiteReport> reports;
  if (all || s == "oracle") {
    const int size = cap(opt.max_size.value_or(4));
    const int n = cap(opt.max_n.value_or(10));
    const int m = cap(opt.max_m.value_or(5));
    SuiteReport r{"oracle", 0, {}};
    r.merge(dimension_oracle_sweep(size, n));
    r.merge(central_oracle_sweep(size, m, n, convention));
    r.merge(jm_agreement_sweep(size));
    r.merge(variable_stability_sweep(std::min(size, 4), std::min(m, 4)));
    r.merge(integer_valued_sweep(size, size, m));
    reports.push_back(std::move(r));
  }
  if (all || s == "pieri") reports.push_back(pieri_sweep(cap(opt.max_size.value_or(8))));
  if (all || s == "stirling") {
    const int m = opt.max_m.value_or(6);
    if (m > limits().stirling_m) throw UsageError("--max-m exceeds the Stirling cap");
    reports.push_back(stirling_sweep(m, cap(opt.max_n.value_or(13)), std::min(cap(opt.max_n.value_or(13)), 9)));
  }
  if (all || s == "bounds") reports.push_back(bounds_sweep(cap(opt.max_n.value_or(18))));
  if (all || s == "graded") {
    const int degree = opt.deg.value_or(6);
    if (degree > limits().series_degree) throw UsageError("--deg exceeds the series cap");
    reports.push_back(graded_sweep(3, degree));
  }

  bool pass = true;
  Json list = Json::array();
  for (const auto& r : reports) {
    pass = pass && r.pass();
    list.push_back(r.to_json());
  }
  if (opt.json || !pass) {
    out << Json{{"pass", pass}, {"suites", list}}.dump() << "\n";
  } else {
    for (const auto& r : reports) out << "suite " << r.suite << ": pass (" << r.checks << " checks)\n";
  }
  return pass ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact interpolation of symmetric group data to complex rank t"};
  app.require_subcommand(1);
  app.footer("Note on stirling: " + order_remark_note() +
             "\nEnvironment: REPST_LIMITS=\"partitions=N,sweep=N,stirling=N,degree=N\" raises enumeration caps.");
  Options opt;

  auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", opt.json, "Emit JSON instead of text"); };
  auto add_lambda = [&](CLI::App* sub) { sub->add_option("--lambda", opt.lambda, "Partition, e.g. \"2,1\"; \"\" is empty"); };
  auto add_rho = [&](CLI::App* sub) {
    sub->add_option("--rho", opt.rho, "Cycle type m1,m2,... (counts of 2-cycles, 3-cycles, ...)")->required();
  };
  auto add_eval = [&](CLI::App* sub) { sub->add_option("--t-eval", opt.t_eval, "Evaluate at a rational t"); };

  auto* dim = app.add_subcommand("dim", "Dimension polynomial of X_lambda");
  add_lambda(dim);
  add_eval(dim);
  add_json(dim);

  auto* pieri = app.add_subcommand("pieri", "Decomposition of h0 (x) X_lambda");
  add_lambda(pieri);
  add_json(pieri);

  auto* omega = app.add_subcommand("omega", "Jucys-Murphy eigenvalue on X_lambda");
  add_lambda(omega);
  add_eval(omega);
  add_json(omega);

  auto* omega_m = app.add_subcommand("omega-m", "Eigenvalue of the class sum Omega_rho on X_lambda");
  add_rho(omega_m);
  add_lambda(omega_m);
  add_eval(omega_m);
  add_json(omega_m);

  auto* class_size = app.add_subcommand("class-size", "Interpolated conjugacy class size");
  add_rho(class_size);
  add_eval(class_size);
  add_json(class_size);

  auto* character = app.add_subcommand("character", "Interpolated character coefficient c_{lambda,rho}(t)");
  add_lambda(character);
  add_rho(character);
  add_eval(character);
  add_json(character);

  auto* hilbert = app.add_subcommand("hilbert", "Coefficients of h(x)^t");
  hilbert->set_help_flag("--help", "Print this help message and exit");
  hilbert->add_option("--h", opt.h, "Coefficients of h, constant term first, e.g. \"1,2\"")->required();
  hilbert->add_option("--deg", opt.deg, "Truncation degree");
  add_json(hilbert);

  auto* verma = app.add_subcommand("verma", "Integer ranks where M(t-|lambda|, lambda) may be reducible");
  add_lambda(verma);
  verma->add_option("--N", opt.dim_v, "dim V")->required();
  verma->add_option("--t-max", opt.t_max, "Largest rank to list")->required();
  add_json(verma);

  auto* branch = app.add_subcommand("branch", "Interlacing partitions mu for lambda");
  add_lambda(branch);
  branch->add_option("--N", opt.dim_v, "dim V")->required();
  branch->add_option("--max-size", opt.max_size, "Bound on |mu|");
  add_json(branch);

  auto* stirling = app.add_subcommand("stirling", "Hilbert series coefficients of gr C[S_t]");
  stirling->add_option("--max-m", opt.max_m, "Largest degree");
  stirling->footer(order_remark_note());
  add_json(stirling);

  auto* bounds = app.add_subcommand("bounds", "Check dim pi_mu >= binom(n,d)(d/n)^d over all mu of n");
  bounds->add_option("--max-n", opt.max_n, "n");
  add_json(bounds);

  auto* lemma = app.add_subcommand("lemma", "Scan for small representations without a long row or column");
  lemma->add_option("--c", opt.c, "Constant C (rational)");
  lemma->add_option("--k", opt.k, "Exponent k")->required();
  lemma->add_option("--max-n", opt.max_n, "Largest n scanned");
  add_json(lemma);

  auto* verify = app.add_subcommand("verify", "Run verification suites; exit 1 on any failure");
  verify->add_option("--suite", opt.suite, "oracle|pieri|stirling|bounds|graded|all");
  verify->add_option("--max-size", opt.max_size, "Largest |lambda|");
  verify->add_option("--max-n", opt.max_n, "Largest n");
  verify->add_option("--max-m", opt.max_m, "Largest cycle support / Stirling degree");
  verify->add_option("--deg", opt.deg, "Hilbert series degree");
  verify->add_option("--content-convention", opt.convention, "col-minus-row (default) or row-minus-col");
  add_json(verify);

  std::vector<std::string> reversed(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(reversed.begin(), reversed.end());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (dim->parsed()) return cmd_dim(out, opt);
    if (pieri->parsed()) return cmd_pieri(out, opt);
    if (omega->parsed()) return cmd_omega(out, opt);
    if (omega_m->parsed()) return cmd_omega_m(out, opt);
    if (class_size->parsed()) return cmd_class_size(out, opt);
    if (character->parsed()) return cmd_character(out, opt);
    if (hilbert->parsed()) return cmd_hilbert(out, opt);
    if (verma->parsed()) return cmd_verma(out, opt);
    if (branch->parsed()) return cmd_branch(out, opt);
    if (stirling->parsed()) return cmd_stirling(out, opt);
    if (bounds->parsed()) return cmd_bounds(out, opt);
    if (lemma->parsed()) return cmd_lemma(out, opt);
    if (verify->parsed()) return cmd_verify(out, opt);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    switch (e.kind()) {
      case ErrorKind::NonDivisible:
      case ErrorKind::InternalMismatch:
      case ErrorKind::NotIntegerValued:
        err << "error: " << e.what() << "\n";
        return kExitVerifyFailed;
      default:
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }
  }
  return kExitUsage;
}

}  // namespace repst::cli
