#pragma once

// Test-only reference implementations. Everything here is deliberately
// naive and shares no code path with the library routines it checks.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "semilen/semigroup.hpp"
#include "semilen/words.hpp"

namespace semilen::testing {

using Letters = std::vector<Letter>;

inline Letters letters_of(const Word& w) { return {w.letters().begin(), w.letters().end()}; }

/// Seed from SEMILEN_SEED, or `fallback`.
inline std::uint64_t test_seed(std::uint64_t fallback) {
  if (const char* env = std::getenv("SEMILEN_SEED")) return std::strtoull(env, nullptr, 10);
  return fallback;
}

/// Membership in M straight from the pattern b1^3 V b2^3, V = b2 V' b1,
/// V free of b1^3 and b2^3, written as a string match.
inline bool m_pattern(const Letters& w) {
  std::string s;
  for (auto l : w) s += l == 0 ? 'a' : 'b';
  if (s.size() < 8) return false;
  if (s.substr(0, 3) != "aaa" || s.substr(s.size() - 3) != "bbb") return false;
  std::string v = s.substr(3, s.size() - 6);
  if (v.front() != 'b' || v.back() != 'a') return false;
  return v.find("aaa") == std::string::npos && v.find("bbb") == std::string::npos;
}

/// Every binary word of length `len` in lexicographic order, filtered.
template <class Pred>
std::vector<Letters> brute_force_words(std::size_t len, Pred keep) {
  std::vector<Letters> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << len); ++bits) {
    Letters w(len);
    for (std::size_t i = 0; i < len; ++i) w[i] = static_cast<Letter>((bits >> (len - 1 - i)) & 1U);
    if (keep(w)) out.push_back(std::move(w));
  }
  return out;
}

inline bool naive_is_factor(const Letters& y, const Letters& z) {
  for (std::size_t pos = 0; pos + y.size() <= z.size(); ++pos) {
    if (std::equal(y.begin(), y.end(), z.begin() + static_cast<std::ptrdiff_t>(pos))) return true;
  }
  return false;
}

/// (e1) and (e2) for one ordered pair, straight from the definitions.
inline bool naive_pair_ok(const Letters& y, const Letters& z) {
  if (y.size() < z.size() && naive_is_factor(y, z)) return false;
  for (std::size_t u = 1; u <= std::min(y.size(), z.size()); ++u) {
    Letters prefix(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(u));
    Letters suffix(z.end() - static_cast<std::ptrdiff_t>(u), z.end());
    if (prefix == suffix && !(u == y.size() && u == z.size())) return false;
  }
  return true;
}

inline bool naive_overlap_ok(const std::vector<Letters>& words) {
  for (const auto& y : words)
    for (const auto& z : words)
      if (!naive_pair_ok(y, z)) return false;
  return true;
}

/// Every way of splitting `text` into members of `code` (exhaustive).
inline void all_factorizations(const Letters& text, std::size_t pos, const std::vector<Letters>& code,
                               std::vector<std::size_t>& current, std::vector<std::vector<std::size_t>>& out) {
  if (pos == text.size()) {
    out.push_back(current);
    return;
  }
  for (std::size_t i = 0; i < code.size(); ++i) {
    const auto& w = code[i];
    if (pos + w.size() <= text.size() &&
        std::equal(w.begin(), w.end(), text.begin() + static_cast<std::ptrdiff_t>(pos))) {
      current.push_back(i);
      all_factorizations(text, pos + w.size(), code, current, out);
      current.pop_back();
    }
  }
}

/// min over all compositions i = i_1 + ... + i_s of sum cost(i_j),
/// enumerated as the 2^(i-1) cut patterns. `cost` is indexed from 1.
inline std::uint64_t composition_minimum(std::size_t i, const std::vector<std::uint64_t>& cost) {
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  for (std::uint64_t cuts = 0; cuts < (std::uint64_t{1} << (i - 1)); ++cuts) {
    std::uint64_t total = 0;
    std::size_t part = 1;
    for (std::size_t k = 1; k < i; ++k) {
      if (cuts & (std::uint64_t{1} << (k - 1))) {
        total += cost[part];
        part = 1;
      } else {
        ++part;
      }
    }
    total += cost[part];
    best = std::min(best, total);
  }
  return best;
}

/// min over all sequences g_1..g_s (s <= max_factors) with product g of
/// sum cost(g_j), by enumerating sequences level by level.
inline std::vector<std::uint64_t> factorization_minimum(const FiniteSemigroup& s, const std::vector<std::uint64_t>& cost,
                                                        std::size_t max_factors) {
  const std::size_t n = s.order();
  std::vector<std::uint64_t> best(cost);
  // reach[e] = cheapest sequence of the current length with product e
  std::vector<std::uint64_t> reach(cost);
  for (std::size_t len = 2; len <= max_factors; ++len) {
    std::vector<std::uint64_t> next(n, std::numeric_limits<std::uint64_t>::max());
    for (Element a = 0; a < n; ++a) {
      if (reach[a] == std::numeric_limits<std::uint64_t>::max()) continue;
      for (Element b = 0; b < n; ++b) {
        auto p = s.product(a, b);
        next[p] = std::min(next[p], reach[a] + cost[b]);
      }
    }
    reach = next;
    for (Element e = 0; e < n; ++e) best[e] = std::min(best[e], reach[e]);
  }
  return best;
}

inline bool naive_associative(const CayleyTable& t) {
  const std::size_t n = t.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (t[t[x][y]][z] != t[x][t[y][z]]) return false;
  return true;
}

/// Uniform random table of the given order, retried until associative.
template <class Rng>
CayleyTable random_associative_table(std::size_t order, Rng& rng) {
  std::uniform_int_distribution<Element> pick(0, static_cast<Element>(order - 1));
  CayleyTable t(order, std::vector<Element>(order));
  for (;;) {
    for (auto& row : t)
      for (auto& v : row) v = pick(rng);
    if (naive_associative(t)) return t;
  }
}

inline bool naive_d1(const FiniteSemigroup& s, const std::vector<std::uint64_t>& l) {
  for (Element g = 0; g < s.order(); ++g)
    for (Element h = 0; h < s.order(); ++h)
      if (l[s.product(g, h)] > l[g] + l[h]) return false;
  return true;
}

/// Uniform values in [lo, hi], retried until (D1) holds.
template <class Rng>
std::vector<std::uint64_t> random_d1_lengths(const FiniteSemigroup& s, std::uint64_t lo, std::uint64_t hi, Rng& rng) {
  std::uniform_int_distribution<std::uint64_t> pick(lo, hi);
  std::vector<std::uint64_t> l(s.order());
  for (;;) {
    for (auto& v : l) v = pick(rng);
    if (naive_d1(s, l)) return l;
  }
}

}  // namespace semilen::testing
