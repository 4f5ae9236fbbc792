#include "semilen/cyclic.hpp"

#include <cmath>
#include <numeric>

#include <boost/multiprecision/cpp_int.hpp>

#include "semilen/error.hpp"

namespace semilen {

namespace {

constexpr std::int64_t kPiMinusENumerator = 1952176613704431514;  // round((pi - e) * 2^62)
constexpr std::int64_t kPiMinusEDenominator = std::int64_t{1} << 62;
constexpr std::int64_t kExactDenominatorLimit = 1000;

}  // namespace

Rational pi_minus_e() { return Rational(kPiMinusENumerator, kPiMinusEDenominator); }

Length ceil_power(std::size_t i, const Rational& alpha) {
  if (i == 0) throw InputError("ceil_power needs i >= 1");
  if (alpha <= Rational(0)) throw InputError("exponent must be positive");
  const auto p = alpha.numerator();
  const auto q = alpha.denominator();
  const long double approx = std::pow(static_cast<long double>(i), static_cast<long double>(p) / q);
  if (q <= kExactDenominatorLimit && p <= 64 * kExactDenominatorLimit) {
    // smallest k with k^q >= i^p
    using boost::multiprecision::cpp_int;
    using boost::multiprecision::pow;
    const cpp_int target = pow(cpp_int(i), static_cast<unsigned>(p));
    auto k = static_cast<Length>(std::ceil(approx));
    k = std::max<Length>(k, 1);
    while (pow(cpp_int(k), static_cast<unsigned>(q)) < target) ++k;
    while (k > 1 && pow(cpp_int(k - 1), static_cast<unsigned>(q)) >= target) --k;
    return k;
  }
  const long double nearest = std::round(approx);
  if (std::fabs(approx - nearest) < 1e-9L && nearest != 1.0L) {
    throw InputError("i^alpha too close to an integer to round reliably at i = " + std::to_string(i));
  }
  return static_cast<Length>(std::ceil(approx));
}

Length CyclicFormula::evaluate(std::size_t i) const {
  switch (kind) {
    case Kind::Power:
      return ceil_power(i, parameter);
    case Kind::Linear:
      return ceil_mul(i, parameter);
    case Kind::Log2: {
      Length k = 0;
      while ((std::uint64_t{1} << k) < i + 1) ++k;
      return k;
    }
  }
  return 0;
}

CyclicFormula parse_formula(std::string_view text) {
  if (text == "log2") return {CyclicFormula::Kind::Log2, Rational(1), std::string(text)};
  auto colon = text.find(':');
  if (colon == std::string_view::npos) throw InputError("unknown formula '" + std::string(text) + "'");
  auto head = text.substr(0, colon);
  auto arg = text.substr(colon + 1);
  if (head == "pow") {
    Rational alpha = arg == "pi-e" ? pi_minus_e() : parse_rational(arg);
    if (alpha <= Rational(0) || alpha > Rational(1)) {
      throw InputError("pow exponent must lie in (0, 1], got " + std::string(arg));
    }
    return {CyclicFormula::Kind::Power, alpha, std::string(text)};
  }
  if (head == "lin") {
    Rational beta = parse_rational(arg);
    if (beta <= Rational(0)) throw InputError("lin slope must be positive, got " + std::string(arg));
    return {CyclicFormula::Kind::Linear, beta, std::string(text)};
  }
  throw InputError("unknown formula '" + std::string(text) + "'");
}

C1Violation::C1Violation(std::size_t i, std::size_t j)
    : std::runtime_error("sequence is not subadditive: l(" + std::to_string(i + j) + ") > l(" + std::to_string(i) +
                         ") + l(" + std::to_string(j) + ")"),
      i_(i),
      j_(j) {}

NonPositiveValue::NonPositiveValue(std::size_t i)
    : std::runtime_error("l(" + std::to_string(i) + ") must be positive"), i_(i) {}

CyclicInstance make_cyclic(std::vector<Length> values, std::string source) {
  if (values.empty()) throw InputError("i_max must be at least 1");
  for (std::size_t i = 1; i <= values.size(); ++i) {
    if (values[i - 1] == 0) throw NonPositiveValue(i);
  }
  const std::size_t n = values.size();
  for (std::size_t i = 1; 2 * i <= n; ++i) {
    for (std::size_t j = i; i + j <= n; ++j) {
      if (values[i + j - 1] > values[i - 1] + values[j - 1]) throw C1Violation(i, j);
    }
  }
  auto growth = d2_growth(values);
  return CyclicInstance{n, std::move(values), std::move(source), growth};
}

CyclicInstance make_cyclic(const CyclicFormula& formula, std::size_t i_max) {
  if (i_max == 0) throw InputError("i_max must be at least 1");
  std::vector<Length> values(i_max);
  for (std::size_t i = 1; i <= i_max; ++i) values[i - 1] = formula.evaluate(i);
  auto source = formula.label;
  if (formula.kind == CyclicFormula::Kind::Power) source += " (alpha = " + to_string(formula.parameter) + ")";
  return make_cyclic(std::move(values), std::move(source));
}

Assignment assign_cyclic(const CyclicInstance& inst, AssignmentMode mode, std::optional<Rational> d) {
  if (mode == AssignmentMode::Exact) return assign_exact(inst.values);
  return assign_equiv(inst.values, m_code_for(inst.values), std::move(d));
}

std::vector<Length> cyclic_length_table(const CyclicInstance& inst, const Assignment& asg) {
  if (asg.size() != inst.i_max) throw InputError("assignment does not cover 1..i_max");
  std::vector<Length> cost(inst.i_max + 1, 0);
  for (std::size_t i = 1; i <= inst.i_max; ++i) {
    Length best = asg.codeword(static_cast<Element>(i - 1)).length();
    for (std::size_t j = 1; j < i; ++j) best = std::min(best, cost[j] + cost[i - j]);
    cost[i] = best;
  }
  cost.erase(cost.begin());
  return cost;
}

DistortionReport distortion_report(const CyclicInstance& inst, std::span<const Length> cost) {
  if (cost.size() != inst.i_max) throw InputError("cost table does not cover 1..i_max");
  DistortionReport report;
  std::vector<Length> intrinsic(inst.i_max);
  std::iota(intrinsic.begin(), intrinsic.end(), Length{1});
  for (std::size_t i = 1; i <= inst.i_max; ++i) {
    report.rows.push_back({i, inst.l(i), cost[i - 1], i,
                           Rational(static_cast<std::int64_t>(i), static_cast<std::int64_t>(cost[i - 1]))});
  }
  report.cost_vs_l = equivalence_constants(inst.values, cost);
  report.cost_vs_intrinsic = equivalence_constants(intrinsic, cost);
  const std::size_t half = std::max<std::size_t>(inst.i_max / 2, 1);
  report.cost_vs_intrinsic_half =
      equivalence_constants(std::span<const Length>(intrinsic).first(half), cost.first(half));
  report.distorted = report.cost_vs_intrinsic.lower < report.cost_vs_intrinsic_half.lower;
  return report;
}

}  // namespace semilen
