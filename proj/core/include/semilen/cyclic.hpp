#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "semilen/embedding.hpp"
#include "semilen/rational.hpp"
#include "semilen/semigroup.hpp"

namespace semilen {

/// Built-in sequences l(i) for i >= 1.
struct CyclicFormula {
  enum class Kind {
    Power,   // ceil(i^alpha), 0 < alpha <= 1
    Linear,  // ceil(beta * i), beta > 0
    Log2,    // ceil(log2(i + 1))
  };
  Kind kind;
  Rational parameter{1};
  /// The text the formula was parsed from, e.g. "pow:pi-e".
  std::string label;

  Length evaluate(std::size_t i) const;
};

/// The exponent used for "pow:pi-e": round((pi - e) * 2^62) / 2^62.
Rational pi_minus_e();

/// Parses "pow:<rational>", "pow:pi-e", "lin:<rational>" or "log2".
CyclicFormula parse_formula(std::string_view text);

/// ceil(i^(p/q)); exact for q <= 1000, long double otherwise.
Length ceil_power(std::size_t i, const Rational& alpha);

class C1Violation : public std::runtime_error {
 public:
  C1Violation(std::size_t i, std::size_t j);
  std::size_t i() const { return i_; }
  std::size_t j() const { return j_; }

 private:
  std::size_t i_, j_;
};

class NonPositiveValue : public std::runtime_error {
 public:
  explicit NonPositiveValue(std::size_t i);
  std::size_t i() const { return i_; }

 private:
  std::size_t i_;
};

/// l(1..i_max) for the monogenic semigroup {g^i}, truncated at i_max.
struct CyclicInstance {
  std::size_t i_max;
  /// values[i - 1] = l(i)
  std::vector<Length> values;
  std::string source;
  D2Growth growth;

  Length l(std::size_t i) const { return values.at(i - 1); }
};

/// Throws C1Violation for the first (i, j), i <= j, i + j <= i_max with
/// l(i + j) > l(i) + l(j), and NonPositiveValue for zero entries.
CyclicInstance make_cyclic(const CyclicFormula& formula, std::size_t i_max);
CyclicInstance make_cyclic(std::vector<Length> values, std::string source);

/// Assignment of X_1..X_{i_max}; exact uses the guarded code, equivalent
/// uses M with the given (or searched) d.
Assignment assign_cyclic(const CyclicInstance& inst, AssignmentMode mode, std::optional<Rational> d = std::nullopt);

/// cost(i) = min(||X_i||, min_{1 <= j < i} cost(j) + cost(i - j)). The
/// factorizations of g^i are exactly the compositions of i.
std::vector<Length> cyclic_length_table(const CyclicInstance& inst, const Assignment& asg);

struct DistortionRow {
  std::size_t i;
  Length l;
  Length cost;
  /// intrinsic length of g^i in the monogenic subsemigroup
  std::size_t intrinsic;
  Rational ratio;  // intrinsic / cost
};

struct DistortionReport {
  std::vector<DistortionRow> rows;
  EquivalenceConstants cost_vs_l;
  EquivalenceConstants cost_vs_intrinsic;
  EquivalenceConstants cost_vs_intrinsic_half;
  /// The lower constant min cost(i)/i shrinks between i_max/2 and i_max.
  bool distorted = false;
};

DistortionReport distortion_report(const CyclicInstance& inst, std::span<const Length> cost);

}  // namespace semilen
