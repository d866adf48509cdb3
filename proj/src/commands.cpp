#include "pellian/commands.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <random>
#include <regex>
#include <sstream>

#include "pellian/approx.hpp"
#include "pellian/errors.hpp"
#include "pellian/pell.hpp"
#include "pellian/quadratic.hpp"
#include "pellian/report.hpp"
#include "pellian/system.hpp"

namespace pellian {

namespace {

constexpr long max_bits = 1L << 20;

mpz_class parse_integer(const std::string& text, const std::string& what) {
  static const std::regex integer(R"([+-]?\d+)");
  if (!std::regex_match(text, integer)) {
    throw InvalidInput("bad_integer", what + " is not an integer: " + text);
  }
  return mpz_class(text[0] == '+' ? text.substr(1) : text, 10);
}

long parse_long(const std::string& text, const std::string& what) {
  const mpz_class v = parse_integer(text, what);
  if (!v.fits_slong_p()) throw InvalidInput("bad_config", what + " out of range");
  return v.get_si();
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

void set_key(RunConfig& config, const std::string& key, const std::string& value) {
  if (key == "precision_start") {
    config.precision_start = parse_long(value, key);
  } else if (key == "precision_ceiling") {
    config.precision_ceiling = parse_long(value, key);
  } else if (key == "y_cap") {
    config.y_cap = parse_integer(value, key);
  } else if (key == "q_max") {
    config.q_max = parse_integer(value, key);
  } else if (key == "output_format") {
    config.output_format = value;
  } else if (key == "seed") {
    const mpz_class s = parse_integer(value, key);
    if (s < 0 || !s.fits_ulong_p()) throw InvalidInput("bad_config", "seed out of range");
    config.seed = s.get_ui();
  } else if (key == "timing") {
    if (value != "true" && value != "false") {
      throw InvalidInput("bad_config", "timing must be true or false");
    }
    config.timing = value == "true";
  } else {
    throw InvalidInput("bad_config", "unknown configuration key " + key);
  }
}

}  // namespace

void check_config(const RunConfig& config) {
  if (config.precision_start < 32 || config.precision_start > config.precision_ceiling ||
      config.precision_ceiling > max_bits) {
    throw InvalidInput("bad_config", "need 32 <= precision_start <= precision_ceiling <= 2^20");
  }
  if (config.y_cap < 1 || config.q_max < 1) {
    throw InvalidInput("bad_config", "caps must be at least 1");
  }
  if (config.output_format != "json" && config.output_format != "csv" &&
      config.output_format != "text") {
    throw InvalidInput("bad_config", "output_format must be json, csv or text");
  }
}

void apply_config_text(RunConfig& config, const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw InvalidInput("bad_config", "expected key = value: " + line);
    set_key(config, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
}

void apply_config_file(RunConfig& config, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("bad_config", "cannot read " + path);
  std::ostringstream text;
  text << in.rdbuf();
  apply_config_text(config, text.str());
}

void apply_environment(RunConfig& config) {
  if (const char* value = std::getenv("PELLIAN_PRECISION_CEILING")) {
    config.precision_ceiling = parse_long(trim(value), "PELLIAN_PRECISION_CEILING");
  }
}

namespace {

struct Outcome {
  Json args = Json::object();
  Json outputs = Json::object();
  Json derived = Json::object();
  std::string csv;
};

mpfr_prec_t bits_of(const RunConfig& config) { return config.precision_start; }

PrecisionPolicy policy_of(const RunConfig& config) {
  return {config.precision_start, config.precision_ceiling};
}

Json named(const std::vector<NamedConstant>& constants) {
  Json out = Json::object();
  for (const NamedConstant& c : constants) out[c.name] = encode(c.value);
  return out;
}

Outcome cmd_unit(const mpz_class& D, const RunConfig& config) {
  const mpfr_prec_t bits = bits_of(config);
  const Unit tp = totally_positive_unit(D, bits);
  const Unit fu = fundamental_unit(D, bits);
  check_unit(tp);

  Json bound = Json::object();
  const long residue = mpz_class(D % 4).get_si();
  if (!is_squarefree(D)) {
    bound = {{"checked", false}, {"upper", nullptr}, {"reason", "not_squarefree"}};
  } else if (residue == 1) {
    bound = {{"checked", false}, {"upper", nullptr}, {"reason", "non_maximal_order"}};
  } else {
    regulator_check(D, bits);
    bound = {{"checked", true}, {"upper", encode(regulator_upper_bound(D, bits))}, {"reason", nullptr}};
  }

  Outcome o;
  o.args = {{"D", encode(D)}};
  o.outputs = {{"D", encode(D)},
               {"unit", encode(tp)},
               {"fundamental_unit", encode(fu)},
               {"regulator", encode(fu.regulator)},
               {"regulator_bound", bound}};
  o.derived = {{"regulator", encode(fu.regulator)}, {"log_unit", encode(tp.regulator)}};
  o.csv = csv_row({"D", "x", "y", "norm", "log_unit", "regulator", "regulator_bound_checked"}) +
          csv_row({D.get_str(), tp.element.x().get_str(), tp.element.y().get_str(),
                   std::to_string(tp.norm), approx_string(tp.regulator),
                   approx_string(fu.regulator), bound["checked"].get<bool>() ? "true" : "false"});
  return o;
}

Outcome cmd_pell(const mpz_class& D, const mpz_class& N, const mpz_class& cap,
                 const RunConfig& config) {
  if (N == 0) throw InvalidInput("n_zero", "N must be nonzero");
  if (cap < 1) throw InvalidInput("cap_too_small", "cap must be at least 1");
  const Unit unit = totally_positive_unit(D, bits_of(config));
  const auto reps = class_representatives(D, N, unit);
  const auto solutions = solve_pell_capped(D, N, cap);

  Outcome o;
  o.args = {{"D", encode(D)}, {"N", encode(N)}, {"cap", encode(cap)}};
  Json rep_list = Json::array();
  for (const PellClassRep& r : reps) rep_list.push_back(encode(r));
  Json sol_list = Json::array();
  o.csv = csv_row({"x", "y", "class_index", "power"});
  for (const GeneratedSolution& s : solutions) {
    sol_list.push_back(encode(s));
    o.csv += csv_row({s.x.get_str(), s.y.get_str(), std::to_string(s.class_index),
                      std::to_string(s.power)});
  }
  o.outputs = {{"D", encode(D)},      {"N", encode(N)},
               {"y_cap", encode(cap)}, {"unit", encode(unit)},
               {"representatives", rep_list}, {"solutions", sol_list}};
  o.derived = {{"log_unit", encode(unit.regulator)}};
  return o;
}

Outcome cmd_system(const mpz_class& a, const mpz_class& b, const mpz_class& u,
                   const mpz_class& v, const mpz_class& cap, BoundRoute route,
                   const RunConfig& config) {
  const mpfr_prec_t bits = bits_of(config);
  const SystemContext ctx = setup_system(a, b, u, v, bits);
  check_context(ctx);
  const SolutionSet set = solve_system(ctx, cap);
  const EffectiveBoundReport bound = effective_bound(ctx, route, bits);

  Outcome o;
  o.args = {{"a", encode(a)}, {"b", encode(b)}, {"u", encode(u)}, {"v", encode(v)},
            {"cap", encode(cap)}, {"route", to_string(route)}};
  Json exps = Json::array();
  o.csv = csv_row({"x", "y", "z", "alpha_index", "m", "beta_index", "n"});
  for (const SystemSolution& s : set.solutions) {
    const SolutionExponents e = solution_exponents(ctx, s);
    exps.push_back({{"solution", encode(s)},
                    {"alpha_index", e.alpha_index},
                    {"m", e.m},
                    {"beta_index", e.beta_index},
                    {"n", e.n}});
    o.csv += csv_row({s.x.get_str(), s.y.get_str(), s.z.get_str(), std::to_string(e.alpha_index),
                      std::to_string(e.m), std::to_string(e.beta_index), std::to_string(e.n)});
  }
  o.outputs = {{"context", encode(ctx)},
               {"solution_set", encode(set)},
               {"certified_complete", set.certified_complete},
               {"log10_bound", encode(set.log10_bound)},
               {"effective_bound", encode(bound)},
               {"exponents", exps}};
  o.derived = named(bound.constants);
  return o;
}

Outcome cmd_exponent(const mpz_class& a, const mpz_class& b, BoundRoute route) {
  const ExponentReport r = exponent_report(a, b, route);
  Outcome o;
  o.args = {{"a", encode(a)}, {"b", encode(b)}, {"route", to_string(route)}};
  o.outputs = encode(r);
  o.derived = {{"tau", encode(r.tau)}, {"mu_eff_upper", encode(r.mu_eff_upper)}};
  o.csv = csv_row({"a", "b", "route", "tau", "mu_eff_upper_hi", "denominator",
                   "has_log_star_factor", "sqrt_ab_constant"}) +
          csv_row({a.get_str(), b.get_str(), to_string(route), approx_string(r.tau),
                   r.mu_eff_upper.hi().to_string(), approx_string(r.denominator),
                   r.has_log_star_factor ? "true" : "false",
                   r.sqrt_form ? approx_string(r.sqrt_form->sqrt_ab_constant) : ""});
  return o;
}

std::string records_csv(const std::vector<ApproxRecord>& records) {
  std::string out = csv_row({"q", "dist_a", "dist_b", "max_dist", "local_exponent"});
  for (const ApproxRecord& r : records) {
    out += csv_row({r.q.get_str(), approx_string(r.dist_a.interval(64)),
                    approx_string(r.dist_b.interval(64)), approx_string(r.max_dist),
                    r.local_exponent ? approx_string(*r.local_exponent) : ""});
  }
  return out;
}

Outcome cmd_verify(const mpz_class& a, const mpz_class& b, const std::string& c_text,
                   const std::string& mu_text, const mpz_class& q_max) {
  const mpq_class c = parse_decimal(c_text);
  const mpq_class mu = parse_decimal(mu_text);
  const VerifyResult r = verify_inequality(a, b, c, mu, q_max);
  Outcome o;
  o.args = {{"a", encode(a)}, {"b", encode(b)}, {"c", c_text}, {"mu", mu_text},
            {"q_max", encode(q_max)}};
  o.outputs = {{"a", encode(a)}, {"b", encode(b)}, {"c", encode(c)}, {"mu", encode(mu)},
               {"result", encode(r)}};
  o.derived = {{"min_ratio", encode(r.min_ratio)}, {"min_ratio_q", encode(r.min_ratio_q)}};
  o.csv = records_csv(r.worst);
  return o;
}

Outcome cmd_records(const mpz_class& a, const mpz_class& b, const mpz_class& q_max) {
  const auto records = best_records(a, b, q_max);
  Outcome o;
  o.args = {{"a", encode(a)}, {"b", encode(b)}, {"q_max", encode(q_max)}};
  Json list = Json::array();
  for (const ApproxRecord& r : records) list.push_back(encode(r));
  o.outputs = {{"a", encode(a)}, {"b", encode(b)}, {"records", list}};
  o.csv = records_csv(records);
  return o;
}

std::pair<mpz_class, mpz_class> parse_range(const std::string& text, const std::string& what) {
  static const std::regex range(R"((\d+)(?:\.\.(\d+))?)");
  std::smatch m;
  if (!std::regex_match(text, m, range)) {
    throw InvalidInput("bad_range", what + " must look like 2..10: " + text);
  }
  const mpz_class lo(m[1].str(), 10);
  const mpz_class hi = m[2].matched ? mpz_class(m[2].str(), 10) : lo;
  if (lo > hi) throw InvalidInput("bad_range", what + " is empty: " + text);
  if (hi - lo > 10000) throw InvalidInput("bad_range", what + " is too long: " + text);
  return {lo, hi};
}

Outcome cmd_sweep(const std::string& a_text, const std::string& b_text, const mpz_class& q_max,
                  BoundRoute route, const std::string& c_text, const std::string& mu_text) {
  const auto [a_lo, a_hi] = parse_range(a_text, "--a");
  const auto [b_lo, b_hi] = parse_range(b_text, "--b");
  const mpq_class c = parse_decimal(c_text);
  const mpq_class mu = parse_decimal(mu_text);

  Outcome o;
  o.args = {{"a", a_text}, {"b", b_text}, {"q_max", encode(q_max)}, {"route", to_string(route)},
            {"c", c_text}, {"mu", mu_text}};
  o.csv = csv_row({"a", "b", "status", "reason", "tau", "mu_eff_upper_hi", "has_log_star_factor",
                   "verify_pass", "violations", "exact_fallbacks", "min_ratio", "min_ratio_q"});
  Json rows = Json::array();
  for (mpz_class a = a_lo; a <= a_hi; ++a) {
    for (mpz_class b = b_lo; b <= b_hi; ++b) {
      Json row = {{"a", encode(a)}, {"b", encode(b)}};
      try {
        require_pair(a, b);
      } catch (const InvalidInput& e) {
        row["status"] = "skipped";
        row["reason"] = e.reason();
        rows.push_back(row);
        o.csv += csv_row({a.get_str(), b.get_str(), "skipped", e.reason(), "", "", "", "", "", "",
                          "", ""});
        continue;
      }
      const ExponentReport r = exponent_report(a, b, route);
      const VerifyResult v = verify_inequality(a, b, c, mu, q_max);
      row["status"] = "ok";
      row["reason"] = nullptr;
      row["exponent"] = encode(r);
      row["verify"] = encode(v);
      rows.push_back(row);
      o.csv += csv_row({a.get_str(), b.get_str(), "ok", "", approx_string(r.tau),
                        r.mu_eff_upper.hi().to_string(), r.has_log_star_factor ? "true" : "false",
                        v.pass ? "true" : "false", std::to_string(v.violations),
                        std::to_string(v.exact_fallbacks), approx_string(v.min_ratio),
                        v.min_ratio_q.get_str()});
    }
  }
  o.outputs = {{"rows", rows}};
  return o;
}

Outcome cmd_probe(const mpz_class& a, const mpz_class& b, const mpz_class& u, const mpz_class& v,
                  unsigned long count, unsigned long max_exponent, const RunConfig& config) {
  const SystemContext ctx = setup_system(a, b, u, v, bits_of(config));
  if (ctx.alpha_reps.empty() || ctx.beta_reps.empty()) {
    throw InvalidInput("no_representatives", "one of the Pell equations has no solutions");
  }
  std::mt19937_64 rng(config.seed);
  unsigned long overlapping = 0, excludes_zero = 0, degenerate = 0, on_solution = 0;
  Json samples = Json::array();
  for (unsigned long i = 0; i < count; ++i) {
    const std::size_t ai = rng() % ctx.alpha_reps.size();
    const std::size_t bi = rng() % ctx.beta_reps.size();
    const unsigned long m = rng() % (max_exponent + 1);
    const unsigned long n = rng() % (max_exponent + 1);
    try {
      const LinearFormValue lf = lambda_value(ctx, ai, bi, m, n, policy_of(config));
      if (overlaps(lf.direct, lf.conjugate)) ++overlapping;
      if (lf.lambda.excludes_zero()) ++excludes_zero;
      if (lf.on_solution) ++on_solution;
      if (samples.size() < 5) samples.push_back(encode(lf));
    } catch (const InvariantViolation& e) {
      if (e.reason() != "degenerate_linear_form") throw;
      ++degenerate;
    }
  }
  Outcome o;
  o.args = {{"a", encode(a)}, {"b", encode(b)}, {"u", encode(u)}, {"v", encode(v)},
            {"count", count}, {"max_exponent", max_exponent}};
  o.outputs = {{"probes", count},           {"overlapping", overlapping},
               {"excludes_zero", excludes_zero}, {"degenerate", degenerate},
               {"on_solution", on_solution}, {"samples", samples}};
  o.csv = csv_row({"probes", "overlapping", "excludes_zero", "degenerate", "on_solution"}) +
          csv_row({std::to_string(count), std::to_string(overlapping),
                   std::to_string(excludes_zero), std::to_string(degenerate),
                   std::to_string(on_solution)});
  return o;
}

Outcome cmd_lambda(const mpz_class& a, const mpz_class& b, const mpz_class& u, const mpz_class& v,
                   std::size_t alpha_index, std::size_t beta_index, unsigned long m,
                   unsigned long n, const RunConfig& config) {
  const SystemContext ctx = setup_system(a, b, u, v, bits_of(config));
  const LinearFormValue lf = lambda_value(ctx, alpha_index, beta_index, m, n, policy_of(config));
  const InequalityReport chain = inequality_chain_check(ctx, lf, policy_of(config));
  Outcome o;
  o.args = {{"a", encode(a)}, {"b", encode(b)}, {"u", encode(u)}, {"v", encode(v)},
            {"alpha", alpha_index}, {"beta", beta_index}, {"m", m}, {"n", n}};
  o.outputs = {{"linear_form", encode(lf)}, {"inequalities", encode(chain)}};
  o.derived = {{"log_U0", encode(ctx.log_U0)}};
  o.csv = csv_row({"alpha", "beta", "m", "n", "lambda", "on_solution", "lambda_upper",
                   "exponent_balance", "large_exponent", "lambda_decay"}) +
          csv_row({std::to_string(alpha_index), std::to_string(beta_index), std::to_string(m),
                   std::to_string(n), approx_string(lf.lambda), lf.on_solution ? "true" : "false",
                   chain.lambda_upper ? "true" : "false", chain.exponent_balance ? "true" : "false",
                   chain.large_exponent ? "true" : "false", chain.lambda_decay ? "true" : "false"});
  return o;
}

const char* csv_help = R"(CSV columns:
  unit      D,x,y,norm,log_unit,regulator,regulator_bound_checked
  pell      x,y,class_index,power
  system    x,y,z,alpha_index,m,beta_index,n
  exponent  a,b,route,tau,mu_eff_upper_hi,denominator,has_log_star_factor,sqrt_ab_constant
  verify    q,dist_a,dist_b,max_dist,local_exponent   (the worst q found)
  records   q,dist_a,dist_b,max_dist,local_exponent   (every new best q)
  sweep     a,b,status,reason,tau,mu_eff_upper_hi,has_log_star_factor,verify_pass,
            violations,exact_fallbacks,min_ratio,min_ratio_q
  lambda    alpha,beta,m,n,lambda,on_solution,lambda_upper,exponent_balance,
            large_exponent,lambda_decay
  probe     probes,overlapping,excludes_zero,degenerate,on_solution
Real values in CSV are lower interval endpoints to 17 significant digits;
JSON carries full {lo, hi, bits} intervals.

Exit codes: 0 ok, 2 invalid input, 3 precision ceiling reached, 4 internal
invariant violation. Errors print {"error": {kind, reason, message}} on stderr.

Configuration: --config FILE with key = value lines (precision_start,
precision_ceiling, y_cap, q_max, output_format, seed, timing).
PELLIAN_PRECISION_CEILING overrides the file; flags override both.)";

std::string error_json(const std::string& kind, const std::string& reason,
                       const std::string& message) {
  return Json{{"error", {{"kind", kind}, {"reason", reason}, {"message", message}}}}.dump() + "\n";
}

const char* kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_input: return "invalid_input";
    case ErrorKind::precision_exhausted: return "precision_exhausted";
    case ErrorKind::invariant_violation: return "invariant_violation";
  }
  return "unknown";
}

}  // namespace

CommandOutput run_command(const std::vector<std::string>& args) {
  CLI::App app{"Exact real-quadratic arithmetic, simultaneous Pell equations and effective "
               "approximation exponents.",
               "pellian"};
  app.footer(csv_help);
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path, format, seed_text, start_text, ceiling_text;
  bool timing = false;
  app.add_option("--config", config_path, "key = value configuration file");
  app.add_option("--format", format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--seed", seed_text, "seed for randomized probes");
  app.add_option("--precision-start", start_text, "starting precision in bits");
  app.add_option("--precision-ceiling", ceiling_text, "precision ceiling in bits");
  app.add_flag("--timing", timing, "report wall-clock seconds");

  std::string p1, p2, p3, p4, cap_text, qmax_text, route_text = "linear-forms";
  std::string c_text = "1e-7", mu_text = "1.913", a_range, b_range;
  unsigned long count = 100, max_exponent = 30, m = 0, n = 0;
  std::size_t alpha_index = 0, beta_index = 0;

  auto* unit = app.add_subcommand("unit", "totally positive unit and regulator of Z[sqrt D]");
  unit->add_option("D", p1)->required();

  auto* pell = app.add_subcommand("pell", "solutions of x^2 - D y^2 = N with y <= cap");
  pell->add_option("D", p1)->required();
  pell->add_option("N", p2)->required();
  pell->add_option("--cap", cap_text, "largest y (default y_cap)");

  auto* system = app.add_subcommand("system", "x^2 - a y^2 = u, z^2 - b y^2 = v");
  system->add_option("a", p1)->required();
  system->add_option("b", p2)->required();
  system->add_option("u", p3)->required();
  system->add_option("v", p4)->required();
  system->add_option("--cap", cap_text, "largest y (default y_cap)");
  system->add_option("--route", route_text, "linear-forms or bombieri");

  auto* exponent = app.add_subcommand("exponent", "effective exponent for (sqrt a, sqrt b)");
  exponent->add_option("a", p1)->required();
  exponent->add_option("b", p2)->required();
  exponent->add_option("--route", route_text, "linear-forms or bombieri");

  auto* verify = app.add_subcommand("verify", "check max ||q sqrt a||, ||q sqrt b|| > c q^(1-mu)");
  verify->add_option("a", p1)->required();
  verify->add_option("b", p2)->required();
  verify->add_option("--c", c_text, "decimal or fraction (default 1e-7)");
  verify->add_option("--mu", mu_text, "decimal or fraction > 1 (default 1.913)");
  verify->add_option("--qmax", qmax_text, "largest q (default q_max)");

  auto* records = app.add_subcommand("records", "every q that lowers max ||q sqrt a||, ||q sqrt b||");
  records->add_option("a", p1)->required();
  records->add_option("b", p2)->required();
  records->add_option("--qmax", qmax_text, "largest q (default q_max)");

  auto* sweep = app.add_subcommand("sweep", "exponent and verify over a rectangle of pairs");
  sweep->add_option("--a", a_range, "range lo..hi")->required();
  sweep->add_option("--b", b_range, "range lo..hi")->required();
  sweep->add_option("--qmax", qmax_text, "largest q (default q_max)");
  sweep->add_option("--route", route_text, "linear-forms or bombieri");
  sweep->add_option("--c", c_text, "decimal or fraction (default 1e-7)");
  sweep->add_option("--mu", mu_text, "decimal or fraction > 1 (default 1.913)");

  auto* lambda = app.add_subcommand("lambda", "one value of the linear form and its inequalities");
  lambda->add_option("a", p1)->required();
  lambda->add_option("b", p2)->required();
  lambda->add_option("u", p3)->required();
  lambda->add_option("v", p4)->required();
  lambda->add_option("--alpha", alpha_index, "class representative index for a");
  lambda->add_option("--beta", beta_index, "class representative index for b");
  lambda->add_option("--m", m, "power of eps");
  lambda->add_option("--n", n, "power of eta");

  auto* probe = app.add_subcommand("probe", "randomized evaluations of the linear form");
  probe->add_option("a", p1)->required();
  probe->add_option("b", p2)->required();
  probe->add_option("u", p3)->required();
  probe->add_option("v", p4)->required();
  probe->add_option("--count", count, "number of probes");
  probe->add_option("--max-exponent", max_exponent, "largest m and n");

  CommandOutput result;
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    std::ostringstream out, err;
    result.exit_code = app.exit(e, out, err);
    result.out = out.str();
    result.err = err.str();
    return result;
  } catch (const CLI::ParseError& e) {
    result.exit_code = static_cast<int>(ErrorKind::invalid_input);
    result.err = error_json("invalid_input", "bad_arguments", e.what());
    return result;
  }

  try {
    RunConfig config;
    bool format_explicit = false;
    if (!config_path.empty()) {
      RunConfig probe_format;
      apply_config_file(config, config_path);
      format_explicit = config.output_format != probe_format.output_format;
    }
    apply_environment(config);
    if (!format.empty()) {
      config.output_format = format;
      format_explicit = true;
    }
    if (!seed_text.empty()) set_key(config, "seed", seed_text);
    if (!start_text.empty()) config.precision_start = parse_long(start_text, "--precision-start");
    if (!ceiling_text.empty()) {
      config.precision_ceiling = parse_long(ceiling_text, "--precision-ceiling");
    }
    if (timing) config.timing = true;
    check_config(config);

    const mpz_class cap = cap_text.empty() ? config.y_cap : parse_integer(cap_text, "--cap");
    const mpz_class qmax = qmax_text.empty() ? config.q_max : parse_integer(qmax_text, "--qmax");
    const BoundRoute route = parse_route(route_text);

    std::string command;
    std::function<Outcome()> run;
    if (unit->parsed()) {
      command = "unit";
      run = [&] { return cmd_unit(parse_integer(p1, "D"), config); };
    } else if (pell->parsed()) {
      command = "pell";
      run = [&] { return cmd_pell(parse_integer(p1, "D"), parse_integer(p2, "N"), cap, config); };
    } else if (system->parsed()) {
      command = "system";
      run = [&] {
        return cmd_system(parse_integer(p1, "a"), parse_integer(p2, "b"), parse_integer(p3, "u"),
                          parse_integer(p4, "v"), cap, route, config);
      };
    } else if (exponent->parsed()) {
      command = "exponent";
      run = [&] { return cmd_exponent(parse_integer(p1, "a"), parse_integer(p2, "b"), route); };
    } else if (verify->parsed()) {
      command = "verify";
      run = [&] {
        return cmd_verify(parse_integer(p1, "a"), parse_integer(p2, "b"), c_text, mu_text, qmax);
      };
    } else if (records->parsed()) {
      command = "records";
      run = [&] { return cmd_records(parse_integer(p1, "a"), parse_integer(p2, "b"), qmax); };
    } else if (sweep->parsed()) {
      command = "sweep";
      if (!format_explicit) config.output_format = "csv";
      run = [&] { return cmd_sweep(a_range, b_range, qmax, route, c_text, mu_text); };
    } else if (lambda->parsed()) {
      command = "lambda";
      run = [&] {
        return cmd_lambda(parse_integer(p1, "a"), parse_integer(p2, "b"), parse_integer(p3, "u"),
                          parse_integer(p4, "v"), alpha_index, beta_index, m, n, config);
      };
    } else {
      command = "probe";
      run = [&] {
        return cmd_probe(parse_integer(p1, "a"), parse_integer(p2, "b"), parse_integer(p3, "u"),
                         parse_integer(p4, "v"), count, max_exponent, config);
      };
    }

    const auto started = std::chrono::steady_clock::now();
    Outcome o = run();
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - started;

    if (config.output_format == "csv") {
      result.out = o.csv;
      return result;
    }
    Envelope env;
    env.command = command;
    env.inputs = {{"args", o.args},
                  {"config",
                   {{"precision_start", config.precision_start},
                    {"precision_ceiling", config.precision_ceiling},
                    {"seed", std::to_string(config.seed)}}}};
    env.outputs = std::move(o.outputs);
    env.derived_constants = std::move(o.derived);
    if (config.timing) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.3f", elapsed.count());
      env.timing = {{"seconds", buf}};
    }
    result.out = config.output_format == "json" ? dump(encode(env)) : to_text(encode(env));
  } catch (const Error& e) {
    result.exit_code = e.exit_code();
    result.err = error_json(kind_name(e.kind()), e.reason(), e.what());
  }
  return result;
}

}  // namespace pellian
