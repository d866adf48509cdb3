#include "pellian/report.hpp"

#include <sstream>

#include "pellian/errors.hpp"

namespace pellian {

namespace {

template <class T>
Json encode_list(const std::vector<T>& items) {
  Json out = Json::array();
  for (const T& item : items) out.push_back(encode(item));
  return out;
}

template <class T>
std::vector<T> decode_list(const Json& j) {
  std::vector<T> out;
  for (const Json& item : j) out.push_back(decode<T>(item));
  return out;
}

template <class T>
Json encode_optional(const std::optional<T>& value) {
  return value ? encode(*value) : Json(nullptr);
}

template <class T>
std::optional<T> decode_optional(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return decode<T>(j);
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw InvalidInput("bad_report", std::string("missing field ") + key);
  }
  return j.at(key);
}

}  // namespace

Json encode(const mpz_class& value) { return value.get_str(); }

Json encode(const mpq_class& value) { return value.get_str(); }

Json encode(const IntervalReal& value) {
  return Json{{"lo", value.lo().to_string()},
              {"hi", value.hi().to_string()},
              {"bits", value.bits()}};
}

Json encode(const QuadElement& value) {
  return Json{{"x", encode(value.x())},
              {"y", encode(value.y())},
              {"D", encode(value.radicand())},
              {"display", value.to_string()}};
}

Json encode(const Unit& value) {
  return Json{{"element", encode(value.element)},
              {"norm", value.norm},
              {"log_unit", encode(value.regulator)},
              {"totally_positive", value.totally_positive}};
}

Json encode(const PellClassRep& value) {
  return Json{{"index", value.index}, {"alpha", encode(value.alpha)}, {"N", encode(value.N)}};
}

Json encode(const GeneratedSolution& value) {
  return Json{{"x", encode(value.x)},
              {"y", encode(value.y)},
              {"class_index", value.class_index},
              {"power", value.power}};
}

Json encode(const SystemContext& value) {
  return Json{{"a", encode(value.a)},
              {"b", encode(value.b)},
              {"u", encode(value.u)},
              {"v", encode(value.v)},
              {"eps", encode(value.eps)},
              {"eta", encode(value.eta)},
              {"U", encode(value.U)},
              {"U0_exact", encode(value.U0_exact)},
              {"U0_source", value.U0_source},
              {"U0", encode(value.U0)},
              {"log_U0", encode(value.log_U0)},
              {"alpha_reps", encode_list(value.alpha_reps)},
              {"beta_reps", encode_list(value.beta_reps)}};
}

Json encode(const SystemSolution& value) {
  return Json{{"x", encode(value.x)}, {"y", encode(value.y)}, {"z", encode(value.z)}};
}

Json encode(const SolutionSet& value) {
  return Json{{"solutions", encode_list(value.solutions)},
              {"y_cap", encode(value.y_cap)},
              {"complete_under_cap", value.complete_under_cap},
              {"certified_complete", value.certified_complete},
              {"bound_route", to_string(value.bound_route)},
              {"log10_bound", encode(value.log10_bound)}};
}

Json encode(const LinearFormValue& value) {
  return Json{{"lambda", encode(value.lambda)},
              {"m", value.m},
              {"n", value.n},
              {"alpha_index", value.alpha_index},
              {"beta_index", value.beta_index},
              {"form_used", value.form_used},
              {"direct", encode(value.direct)},
              {"conjugate", encode(value.conjugate)},
              {"on_solution", value.on_solution}};
}

Json encode(const InequalityReport& value) {
  return Json{{"log_lambda", encode(value.log_lambda)},
              {"max_term", encode(value.max_term)},
              {"large_exponent", value.large_exponent},
              {"lambda_upper", value.lambda_upper},
              {"exponent_balance", value.exponent_balance},
              {"lambda_decay_asserted", value.lambda_decay_asserted},
              {"lambda_decay", value.lambda_decay}};
}

Json encode(const NamedConstant& value) {
  return Json{{"name", value.name}, {"value", encode(value.value)}};
}

Json encode(const EffectiveBoundReport& value) {
  return Json{{"route", to_string(value.route)},
              {"bound_on_max_mn", encode(value.bound_on_max_mn)},
              {"X_log_bound", encode(value.X_log_bound)},
              {"direct_log_bound", encode(value.direct_log_bound)},
              {"exponent", encode(value.exponent)},
              {"log_C", encode(value.log_C)},
              {"absolute_constant", encode(value.absolute_constant)},
              {"has_log_star_factor", value.has_log_star_factor},
              {"log_star_factor", encode_optional(value.log_star_factor)},
              {"constants", encode_list(value.constants)},
              {"note", value.note}};
}

Json encode(const Distance& value) {
  return Json{{"q", encode(value.q)},
              {"a", encode(value.a)},
              {"f", encode(value.f)},
              {"above", value.above},
              {"value", encode(value.value())}};
}

Json encode(const ApproxRecord& value) {
  return Json{{"q", encode(value.q)},
              {"dist_a", encode(value.dist_a)},
              {"dist_b", encode(value.dist_b)},
              {"max_dist", encode(value.max_dist)},
              {"local_exponent", encode_optional(value.local_exponent)}};
}

Json encode(const VerifyResult& value) {
  return Json{{"pass", value.pass},
              {"q_max", encode(value.q_max)},
              {"checked", value.checked},
              {"violations", value.violations},
              {"exact_fallbacks", value.exact_fallbacks},
              {"witness", encode_optional(value.witness)},
              {"worst", encode_list(value.worst)},
              {"min_ratio", encode(value.min_ratio)},
              {"min_ratio_q", encode(value.min_ratio_q)}};
}

Json encode(const SqrtForm& value) {
  return Json{{"denominator_bound", encode(value.denominator_bound)},
              {"sqrt_ab_constant", encode(value.sqrt_ab_constant)}};
}

Json encode(const ExponentReport& value) {
  return Json{{"a", encode(value.a)},
              {"b", encode(value.b)},
              {"route", to_string(value.route)},
              {"tau", encode(value.tau)},
              {"mu_eff_upper", encode(value.mu_eff_upper)},
              {"distance_exponent", encode(value.distance_exponent)},
              {"regulator_product", encode(value.regulator_product)},
              {"denominator", encode(value.denominator)},
              {"absolute_constant", encode(value.absolute_constant)},
              {"has_log_star_factor", value.has_log_star_factor},
              {"log_star_factor", encode_optional(value.log_star_factor)},
              {"sqrt_form", encode_optional(value.sqrt_form)}};
}

Json encode(const Envelope& value) {
  return Json{{"command", value.command},
              {"inputs", value.inputs},
              {"outputs", value.outputs},
              {"derived_constants", value.derived_constants},
              {"timing", value.timing},
              {"version", value.version}};
}

template <>
mpz_class decode<mpz_class>(const Json& j) {
  mpz_class out;
  if (!j.is_string() || out.set_str(j.get<std::string>(), 10) != 0) {
    throw InvalidInput("bad_report", "expected a decimal integer string");
  }
  return out;
}

template <>
mpq_class decode<mpq_class>(const Json& j) {
  mpq_class out;
  if (!j.is_string() || out.set_str(j.get<std::string>(), 10) != 0) {
    throw InvalidInput("bad_report", "expected a rational string");
  }
  out.canonicalize();
  return out;
}

template <>
IntervalReal decode<IntervalReal>(const Json& j) {
  return IntervalReal::parse(field(j, "lo").get<std::string>(), field(j, "hi").get<std::string>(),
                             field(j, "bits").get<mpfr_prec_t>());
}

template <>
QuadElement decode<QuadElement>(const Json& j) {
  return QuadElement(decode<mpz_class>(field(j, "x")), decode<mpz_class>(field(j, "y")),
                     decode<mpz_class>(field(j, "D")));
}

template <>
Unit decode<Unit>(const Json& j) {
  return Unit{decode<QuadElement>(field(j, "element")), field(j, "norm").get<int>(),
              decode<IntervalReal>(field(j, "log_unit")),
              field(j, "totally_positive").get<bool>()};
}

template <>
GeneratedSolution decode<GeneratedSolution>(const Json& j) {
  return GeneratedSolution{decode<mpz_class>(field(j, "x")), decode<mpz_class>(field(j, "y")),
                           field(j, "class_index").get<std::size_t>(),
                           field(j, "power").get<unsigned long>()};
}

namespace {

std::vector<PellClassRep> decode_reps(const Json& j, const mpz_class& D, const Unit& unit) {
  std::vector<PellClassRep> out;
  for (const Json& item : j) {
    out.push_back(PellClassRep{decode<QuadElement>(field(item, "alpha")), D,
                               decode<mpz_class>(field(item, "N")), unit,
                               field(item, "index").get<std::size_t>()});
  }
  return out;
}

}  // namespace

template <>
SystemContext decode<SystemContext>(const Json& j) {
  const mpz_class a = decode<mpz_class>(field(j, "a"));
  const mpz_class b = decode<mpz_class>(field(j, "b"));
  Unit eps = decode<Unit>(field(j, "eps"));
  Unit eta = decode<Unit>(field(j, "eta"));
  auto alpha_reps = decode_reps(field(j, "alpha_reps"), a, eps);
  auto beta_reps = decode_reps(field(j, "beta_reps"), b, eta);
  return SystemContext{a,
                       b,
                       decode<mpz_class>(field(j, "u")),
                       decode<mpz_class>(field(j, "v")),
                       std::move(eps),
                       std::move(eta),
                       decode<mpz_class>(field(j, "U")),
                       decode<QuadElement>(field(j, "U0_exact")),
                       field(j, "U0_source").get<std::string>(),
                       decode<IntervalReal>(field(j, "U0")),
                       decode<IntervalReal>(field(j, "log_U0")),
                       std::move(alpha_reps),
                       std::move(beta_reps)};
}

template <>
SystemSolution decode<SystemSolution>(const Json& j) {
  return SystemSolution{decode<mpz_class>(field(j, "x")), decode<mpz_class>(field(j, "y")),
                        decode<mpz_class>(field(j, "z"))};
}

template <>
SolutionSet decode<SolutionSet>(const Json& j) {
  SolutionSet out;
  out.solutions = decode_list<SystemSolution>(field(j, "solutions"));
  out.y_cap = decode<mpz_class>(field(j, "y_cap"));
  out.complete_under_cap = field(j, "complete_under_cap").get<bool>();
  out.certified_complete = field(j, "certified_complete").get<bool>();
  out.bound_route = parse_route(field(j, "bound_route").get<std::string>());
  out.log10_bound = decode<IntervalReal>(field(j, "log10_bound"));
  return out;
}

template <>
LinearFormValue decode<LinearFormValue>(const Json& j) {
  LinearFormValue out;
  out.lambda = decode<IntervalReal>(field(j, "lambda"));
  out.m = field(j, "m").get<unsigned long>();
  out.n = field(j, "n").get<unsigned long>();
  out.alpha_index = field(j, "alpha_index").get<std::size_t>();
  out.beta_index = field(j, "beta_index").get<std::size_t>();
  out.form_used = field(j, "form_used").get<std::string>();
  out.direct = decode<IntervalReal>(field(j, "direct"));
  out.conjugate = decode<IntervalReal>(field(j, "conjugate"));
  out.on_solution = field(j, "on_solution").get<bool>();
  return out;
}

template <>
InequalityReport decode<InequalityReport>(const Json& j) {
  InequalityReport out;
  out.log_lambda = decode<IntervalReal>(field(j, "log_lambda"));
  out.max_term = decode<IntervalReal>(field(j, "max_term"));
  out.large_exponent = field(j, "large_exponent").get<bool>();
  out.lambda_upper = field(j, "lambda_upper").get<bool>();
  out.exponent_balance = field(j, "exponent_balance").get<bool>();
  out.lambda_decay_asserted = field(j, "lambda_decay_asserted").get<bool>();
  out.lambda_decay = field(j, "lambda_decay").get<bool>();
  return out;
}

template <>
NamedConstant decode<NamedConstant>(const Json& j) {
  return NamedConstant{field(j, "name").get<std::string>(), decode<IntervalReal>(field(j, "value"))};
}

template <>
EffectiveBoundReport decode<EffectiveBoundReport>(const Json& j) {
  EffectiveBoundReport out;
  out.route = parse_route(field(j, "route").get<std::string>());
  out.bound_on_max_mn = decode<IntervalReal>(field(j, "bound_on_max_mn"));
  out.X_log_bound = decode<IntervalReal>(field(j, "X_log_bound"));
  out.direct_log_bound = decode<IntervalReal>(field(j, "direct_log_bound"));
  out.exponent = decode<IntervalReal>(field(j, "exponent"));
  out.log_C = decode<IntervalReal>(field(j, "log_C"));
  out.absolute_constant = decode<IntervalReal>(field(j, "absolute_constant"));
  out.has_log_star_factor = field(j, "has_log_star_factor").get<bool>();
  out.log_star_factor = decode_optional<IntervalReal>(field(j, "log_star_factor"));
  out.constants = decode_list<NamedConstant>(field(j, "constants"));
  out.note = field(j, "note").get<std::string>();
  return out;
}

template <>
Distance decode<Distance>(const Json& j) {
  return Distance{decode<mpz_class>(field(j, "q")), decode<mpz_class>(field(j, "a")),
                  decode<mpz_class>(field(j, "f")), field(j, "above").get<bool>()};
}

template <>
ApproxRecord decode<ApproxRecord>(const Json& j) {
  return ApproxRecord{decode<mpz_class>(field(j, "q")), decode<Distance>(field(j, "dist_a")),
                      decode<Distance>(field(j, "dist_b")),
                      decode<IntervalReal>(field(j, "max_dist")),
                      decode_optional<IntervalReal>(field(j, "local_exponent"))};
}

template <>
VerifyResult decode<VerifyResult>(const Json& j) {
  VerifyResult out;
  out.pass = field(j, "pass").get<bool>();
  out.q_max = decode<mpz_class>(field(j, "q_max"));
  out.checked = field(j, "checked").get<unsigned long>();
  out.violations = field(j, "violations").get<unsigned long>();
  out.exact_fallbacks = field(j, "exact_fallbacks").get<unsigned long>();
  out.witness = decode_optional<mpz_class>(field(j, "witness"));
  out.worst = decode_list<ApproxRecord>(field(j, "worst"));
  out.min_ratio = decode<IntervalReal>(field(j, "min_ratio"));
  out.min_ratio_q = decode<mpz_class>(field(j, "min_ratio_q"));
  return out;
}

template <>
SqrtForm decode<SqrtForm>(const Json& j) {
  return SqrtForm{decode<IntervalReal>(field(j, "denominator_bound")),
                  decode<IntervalReal>(field(j, "sqrt_ab_constant"))};
}

template <>
ExponentReport decode<ExponentReport>(const Json& j) {
  ExponentReport out;
  out.a = decode<mpz_class>(field(j, "a"));
  out.b = decode<mpz_class>(field(j, "b"));
  out.route = parse_route(field(j, "route").get<std::string>());
  out.tau = decode<IntervalReal>(field(j, "tau"));
  out.mu_eff_upper = decode<IntervalReal>(field(j, "mu_eff_upper"));
  out.distance_exponent = decode<IntervalReal>(field(j, "distance_exponent"));
  out.regulator_product = decode<IntervalReal>(field(j, "regulator_product"));
  out.denominator = decode<IntervalReal>(field(j, "denominator"));
  out.absolute_constant = decode<IntervalReal>(field(j, "absolute_constant"));
  out.has_log_star_factor = field(j, "has_log_star_factor").get<bool>();
  out.log_star_factor = decode_optional<IntervalReal>(field(j, "log_star_factor"));
  out.sqrt_form = decode_optional<SqrtForm>(field(j, "sqrt_form"));
  return out;
}

template <>
Envelope decode<Envelope>(const Json& j) {
  return Envelope{field(j, "command").get<std::string>(), field(j, "inputs"),
                  field(j, "outputs"), field(j, "derived_constants"), field(j, "timing"),
                  field(j, "version").get<std::string>()};
}

bool identical(const IntervalReal& x, const IntervalReal& y) {
  return x.bits() == y.bits() && mpfr_equal_p(x.lo().get(), y.lo().get()) &&
         mpfr_equal_p(x.hi().get(), y.hi().get());
}

std::string approx_string(const IntervalReal& value) {
  return value.lo().to_string(17, MPFR_RNDN);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

namespace {

void flatten(const Json& j, const std::string& path, std::ostringstream& out) {
  if (j.is_object()) {
    if (j.contains("lo") && j.contains("hi") && j.contains("bits") && j.size() == 3) {
      out << path << " = [" << j["lo"].get<std::string>() << ", "
          << j["hi"].get<std::string>() << "]\n";
      return;
    }
    if (j.contains("display")) {
      out << path << " = " << j["display"].get<std::string>() << "\n";
      return;
    }
    for (const auto& [key, item] : j.items()) {
      flatten(item, path.empty() ? key : path + "." + key, out);
    }
  } else if (j.is_array()) {
    if (j.empty()) out << path << " = []\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      flatten(j[i], path + "[" + std::to_string(i) + "]", out);
    }
  } else if (j.is_string()) {
    out << path << " = " << j.get<std::string>() << "\n";
  } else {
    out << path << " = " << j.dump() << "\n";
  }
}

}  // namespace

std::string to_text(const Json& j) {
  std::ostringstream out;
  flatten(j, "", out);
  return out.str();
}

std::string csv_row(const std::vector<std::string>& cells) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) out += ',';
    const std::string& cell = cells[i];
    if (cell.find_first_of(",\"\n") == std::string::npos) {
      out += cell;
      continue;
    }
    out += '"';
    for (char c : cell) {
      if (c == '"') out += '"';
      out += c;
    }
    out += '"';
  }
  return out + "\n";
}

}  // namespace pellian
