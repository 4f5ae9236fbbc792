#include "semilen/semigroup.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "semilen/error.hpp"

namespace semilen {

std::optional<AssociativityViolation> validate_semigroup(const CayleyTable& table) {
  const std::size_t n = table.size();
  if (n == 0) throw InputError("semigroup table is empty");
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n) {
      throw InputError("table row " + std::to_string(i) + " has " + std::to_string(table[i].size()) +
                       " entries, expected " + std::to_string(n));
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (table[i][j] >= n) {
        throw InputError("table entry (" + std::to_string(i) + "," + std::to_string(j) + ") = " +
                         std::to_string(table[i][j]) + " is out of range");
      }
    }
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      const Element xy = table[x][y];
      for (Element z = 0; z < n; ++z) {
        if (table[xy][z] != table[x][table[y][z]]) return AssociativityViolation{x, y, z};
      }
    }
  }
  return std::nullopt;
}

FiniteSemigroup::FiniteSemigroup(std::size_t order, std::vector<Element> table, std::vector<std::string> names)
    : order_(order), table_(std::move(table)), names_(std::move(names)) {}

FiniteSemigroup FiniteSemigroup::from_table(const CayleyTable& table, std::vector<std::string> names) {
  if (auto bad = validate_semigroup(table)) {
    throw InputError("table is not associative at (" + std::to_string(bad->x) + "," + std::to_string(bad->y) +
                     "," + std::to_string(bad->z) + ")");
  }
  const std::size_t n = table.size();
  if (names.empty()) {
    for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
  }
  if (names.size() != n) {
    throw InputError("expected " + std::to_string(n) + " element names, got " + std::to_string(names.size()));
  }
  auto sorted = names;
  std::ranges::sort(sorted);
  if (std::ranges::adjacent_find(sorted) != sorted.end()) throw InputError("element names must be distinct");

  std::vector<Element> flat;
  flat.reserve(n * n);
  for (const auto& row : table) flat.insert(flat.end(), row.begin(), row.end());
  return FiniteSemigroup(n, std::move(flat), std::move(names));
}

FiniteSemigroup FiniteSemigroup::cyclic_group(std::size_t n) {
  CayleyTable t(n, std::vector<Element>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i][j] = static_cast<Element>((i + j) % n);
  return from_table(t);
}

FiniteSemigroup FiniteSemigroup::left_zero(std::size_t n) {
  CayleyTable t(n, std::vector<Element>(n));
  for (std::size_t i = 0; i < n; ++i) std::ranges::fill(t[i], static_cast<Element>(i));
  return from_table(t);
}

FiniteSemigroup FiniteSemigroup::right_zero(std::size_t n) {
  CayleyTable t(n, std::vector<Element>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i][j] = static_cast<Element>(j);
  return from_table(t);
}

FiniteSemigroup FiniteSemigroup::full_transformation_monoid_2() {
  // images (f(0), f(1)): id, const0, const1, swap
  const std::array<std::array<Element, 2>, 4> maps{{{0, 1}, {0, 0}, {1, 1}, {1, 0}}};
  CayleyTable t(4, std::vector<Element>(4));
  for (Element f = 0; f < 4; ++f) {
    for (Element g = 0; g < 4; ++g) {
      std::array<Element, 2> composed{maps[g][maps[f][0]], maps[g][maps[f][1]]};
      t[f][g] = static_cast<Element>(std::ranges::find(maps, composed) - maps.begin());
    }
  }
  return from_table(t, {"id", "c0", "c1", "swap"});
}

Element FiniteSemigroup::product(std::span<const Element> factors) const {
  if (factors.empty()) throw InputError("product of an empty sequence");
  Element acc = factors.front();
  for (auto f : factors.subspan(1)) acc = product(acc, f);
  return acc;
}

std::optional<Element> FiniteSemigroup::find(std::string_view name) const {
  auto it = std::ranges::find(names_, name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<Element>(it - names_.begin());
}

CayleyTable FiniteSemigroup::table() const {
  CayleyTable t(order_, std::vector<Element>(order_));
  for (std::size_t i = 0; i < order_; ++i)
    for (std::size_t j = 0; j < order_; ++j) t[i][j] = table_[i * order_ + j];
  return t;
}

LengthFunction::LengthFunction(std::vector<Length> values) : values_(std::move(values)) {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] == 0) throw InputError("length of element " + std::to_string(i) + " must be positive");
  }
}

Length LengthFunction::max() const { return values_.empty() ? 0 : *std::ranges::max_element(values_); }

std::vector<ElementPair> check_d1(const FiniteSemigroup& s, std::span<const Length> l) {
  if (l.size() != s.order()) throw InputError("length function does not cover the semigroup");
  if (std::ranges::find(l, Length{0}) != l.end()) throw InputError("length values must be positive");
  std::vector<ElementPair> out;
  for (Element g = 0; g < s.order(); ++g) {
    for (Element h = 0; h < s.order(); ++h) {
      if (l[s.product(g, h)] > l[g] + l[h]) out.push_back({g, h});
    }
  }
  return out;
}

std::uint64_t smallest_base(std::uint64_t count, std::uint64_t r) {
  if (count <= 1) return 1;
  if (r == 0) throw InputError("smallest_base needs r >= 1");
  // a^r >= count, saturating at count
  auto reaches = [count, r](std::uint64_t a) {
    unsigned __int128 acc = 1;
    for (std::uint64_t i = 0; i < r; ++i) {
      acc *= a;
      if (acc >= count) return true;
    }
    return false;
  };
  auto a = static_cast<std::uint64_t>(std::pow(static_cast<long double>(count), 1.0L / static_cast<long double>(r)));
  a = std::max<std::uint64_t>(a, 1);
  while (!reaches(a)) ++a;
  while (a > 1 && reaches(a - 1)) --a;
  return a;
}

std::uint64_t d2_witness(std::span<const Length> l) {
  std::vector<Length> sorted(l.begin(), l.end());
  std::ranges::sort(sorted);
  std::uint64_t a = 1;
  // count only changes at the values themselves; a^r >= count is hardest
  // at the smallest r with a given count
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i + 1 < sorted.size() && sorted[i + 1] == sorted[i]) continue;
    a = std::max(a, smallest_base(i + 1, sorted[i]));
  }
  return a;
}

D2Growth d2_growth(std::span<const Length> l) {
  auto full = d2_witness(l);
  auto half = l.size() >= 2 ? d2_witness(l.first(l.size() / 2)) : full;
  return {full, half};
}

DWitness check_d(const FiniteSemigroup& s, std::span<const Length> l) {
  return {check_d1(s, l), d2_witness(l)};
}

std::vector<std::optional<Length>> word_lengths(const FiniteSemigroup& s, std::span<const Element> generators) {
  std::vector<std::optional<Length>> dist(s.order());
  std::vector<Element> frontier;
  for (auto a : generators) {
    if (a >= s.order()) throw InputError("generator " + std::to_string(a) + " is out of range");
    if (!dist[a]) {
      dist[a] = 1;
      frontier.push_back(a);
    }
  }
  for (Length depth = 2; !frontier.empty(); ++depth) {
    std::vector<Element> next;
    for (auto x : frontier) {
      for (auto a : generators) {
        auto y = s.product(x, a);
        if (!dist[y]) {
          dist[y] = depth;
          next.push_back(y);
        }
      }
    }
    frontier = std::move(next);
  }
  return dist;
}

std::optional<Length> word_length(const FiniteSemigroup& s, std::span<const Element> generators, Element g) {
  return word_lengths(s, generators).at(g);
}

bool is_generating_set(const FiniteSemigroup& s, std::span<const Element> generators) {
  auto dist = word_lengths(s, generators);
  return std::ranges::all_of(dist, [](const auto& d) { return d.has_value(); });
}

EquivalenceConstants equivalence_constants(std::span<const Length> l1, std::span<const Length> l2) {
  if (l1.size() != l2.size() || l1.empty()) {
    throw InputError("equivalence constants need two nonempty functions on the same carrier");
  }
  std::optional<Rational> lo, hi;
  for (std::size_t i = 0; i < l1.size(); ++i) {
    if (l1[i] == 0 || l2[i] == 0) throw InputError("length functions must be positive");
    Rational ratio(static_cast<std::int64_t>(l2[i]), static_cast<std::int64_t>(l1[i]));
    if (!lo || ratio < *lo) lo = ratio;
    if (!hi || ratio > *hi) hi = ratio;
  }
  return {*lo, *hi};
}

}  // namespace semilen
