#pragma once

#include <gmpxx.h>
#include <json.hpp>

#include <string>
#include <vector>

#include "pellian/approx.hpp"
#include "pellian/interval.hpp"
#include "pellian/pell.hpp"
#include "pellian/quadratic.hpp"
#include "pellian/system.hpp"

namespace pellian {

// Key order is insertion order, so dumps are byte-stable.
using Json = nlohmann::ordered_json;

inline constexpr const char* version = "1.0.0";

// Integers are decimal strings, intervals {lo, hi, bits}, elements
// {x, y, D, display}. Every decode<T>(encode(v)) reproduces v exactly.
Json encode(const mpz_class& value);
Json encode(const mpq_class& value);
Json encode(const IntervalReal& value);
Json encode(const QuadElement& value);
Json encode(const Unit& value);
Json encode(const PellClassRep& value);
Json encode(const GeneratedSolution& value);
Json encode(const SystemContext& value);
Json encode(const SystemSolution& value);
Json encode(const SolutionSet& value);
Json encode(const LinearFormValue& value);
Json encode(const InequalityReport& value);
Json encode(const EffectiveBoundReport& value);
Json encode(const Distance& value);
Json encode(const ApproxRecord& value);
Json encode(const VerifyResult& value);
Json encode(const ExponentReport& value);

template <class T>
T decode(const Json& j);

template <> mpz_class decode<mpz_class>(const Json& j);
template <> mpq_class decode<mpq_class>(const Json& j);
template <> IntervalReal decode<IntervalReal>(const Json& j);
template <> QuadElement decode<QuadElement>(const Json& j);
template <> Unit decode<Unit>(const Json& j);
template <> GeneratedSolution decode<GeneratedSolution>(const Json& j);
template <> SystemContext decode<SystemContext>(const Json& j);
template <> SystemSolution decode<SystemSolution>(const Json& j);
template <> SolutionSet decode<SolutionSet>(const Json& j);
template <> LinearFormValue decode<LinearFormValue>(const Json& j);
template <> InequalityReport decode<InequalityReport>(const Json& j);
template <> EffectiveBoundReport decode<EffectiveBoundReport>(const Json& j);
template <> Distance decode<Distance>(const Json& j);
template <> ApproxRecord decode<ApproxRecord>(const Json& j);
template <> VerifyResult decode<VerifyResult>(const Json& j);
template <> ExponentReport decode<ExponentReport>(const Json& j);

// Same endpoints and precision.
bool identical(const IntervalReal& x, const IntervalReal& y);

// Short human-readable value: the lower endpoint to 17 significant digits.
std::string approx_string(const IntervalReal& value);

struct Envelope {
  std::string command;
  Json inputs;
  Json outputs;
  Json derived_constants;
  Json timing;  // null unless requested
  std::string version = pellian::version;
};

Json encode(const Envelope& value);
template <> Envelope decode<Envelope>(const Json& j);

// Pretty JSON with a trailing newline.
std::string dump(const Json& j);

// "path.to.key = value" lines, arrays indexed as path[i].
std::string to_text(const Json& j);

// RFC 4180 quoting when needed.
std::string csv_row(const std::vector<std::string>& cells);

}  // namespace pellian
