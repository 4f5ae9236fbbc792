#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "semilen/rational.hpp"

namespace semilen {

using Element = std::uint32_t;
using Length = std::uint64_t;
using CayleyTable = std::vector<std::vector<Element>>;

struct AssociativityViolation {
  Element x, y, z;
  friend bool operator==(const AssociativityViolation&, const AssociativityViolation&) = default;
};

/// First triple (x, y, z) in lexicographic order with (xy)z != x(yz), or
/// std::nullopt for an associative table. Throws InputError when the table
/// is empty, ragged or has entries out of range.
std::optional<AssociativityViolation> validate_semigroup(const CayleyTable& table);

/// A finite semigroup on the dense elements 0..order()-1. Always associative.
class FiniteSemigroup {
 public:
  /// Throws InputError for malformed or non-associative tables.
  static FiniteSemigroup from_table(const CayleyTable& table, std::vector<std::string> names = {});

  static FiniteSemigroup cyclic_group(std::size_t n);
  /// x*y = x
  static FiniteSemigroup left_zero(std::size_t n);
  /// x*y = y
  static FiniteSemigroup right_zero(std::size_t n);
  /// All four maps {0,1} -> {0,1} under composition (apply left factor first).
  static FiniteSemigroup full_transformation_monoid_2();

  std::size_t order() const { return order_; }
  Element product(Element x, Element y) const { return table_[x * order_ + y]; }
  /// Left-to-right product of a nonempty sequence.
  Element product(std::span<const Element> factors) const;

  const std::string& name(Element e) const { return names_.at(e); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<Element> find(std::string_view name) const;
  CayleyTable table() const;

 private:
  FiniteSemigroup(std::size_t order, std::vector<Element> table, std::vector<std::string> names);

  std::size_t order_;
  std::vector<Element> table_;
  std::vector<std::string> names_;
};

/// Positive integer values l(g) indexed by element.
class LengthFunction {
 public:
  /// Throws InputError if a value is zero.
  explicit LengthFunction(std::vector<Length> values);

  std::size_t size() const { return values_.size(); }
  Length operator[](std::size_t i) const { return values_[i]; }
  std::span<const Length> values() const { return values_; }
  Length max() const;

 private:
  std::vector<Length> values_;
};

struct ElementPair {
  Element left, right;
  friend bool operator==(const ElementPair&, const ElementPair&) = default;
};

/// Pairs (g, h) with l(gh) > l(g) + l(h), lexicographic.
std::vector<ElementPair> check_d1(const FiniteSemigroup& s, std::span<const Length> l);

/// Smallest integer a >= 1 with a^r >= count.
std::uint64_t smallest_base(std::uint64_t count, std::uint64_t r);

/// Smallest integer a >= 1 with card{g : l(g) <= r} <= a^r for every r in
/// 1..max(l).
std::uint64_t d2_witness(std::span<const Length> l);

/// Witness for a truncated sequence, compared with its first half. A larger
/// witness on the full range is evidence the untruncated function fails
/// the growth condition.
struct D2Growth {
  std::uint64_t witness;
  std::uint64_t half_witness;
  bool growing() const { return witness > half_witness; }
};
D2Growth d2_growth(std::span<const Length> l);

struct DWitness {
  std::vector<ElementPair> d1_violations;
  std::uint64_t d2_witness_a;
  bool holds() const { return d1_violations.empty(); }
};
DWitness check_d(const FiniteSemigroup& s, std::span<const Length> l);

/// |g| over `generators` for every element by breadth-first closure;
/// std::nullopt for unreachable elements.
std::vector<std::optional<Length>> word_lengths(const FiniteSemigroup& s, std::span<const Element> generators);
std::optional<Length> word_length(const FiniteSemigroup& s, std::span<const Element> generators, Element g);
bool is_generating_set(const FiniteSemigroup& s, std::span<const Element> generators);

/// Optimal c1, c2 with c1*l1 <= l2 <= c2*l1 elementwise.
struct EquivalenceConstants {
  Rational lower;
  Rational upper;
};
EquivalenceConstants equivalence_constants(std::span<const Length> l1, std::span<const Length> l2);

}  // namespace semilen
