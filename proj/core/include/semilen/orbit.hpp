#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "semilen/embedding.hpp"

namespace semilen {

struct OrbitCaps {
  std::size_t length_cap;
  std::size_t state_cap = 1'000'000;

  /// length_cap = 2 * max ||X_g||.
  static OrbitCaps defaults_for(const Assignment& asg);
};

/// Breadth-first closure of a word under the defining relations, applied
/// in both directions at every occurrence.
struct OrbitReport {
  Word start;
  /// Reached words (length <= length_cap) in BFS discovery order.
  std::vector<Word> words;
  /// Shortest reached word, ShortLex tie-break.
  Word min_word;
  OrbitCaps caps;
  /// Number of words first reached at each BFS depth.
  std::vector<std::size_t> depth_counts;
  /// Rewrites discarded because the result exceeded length_cap.
  std::size_t dropped_over_length = 0;
  bool state_cap_hit = false;
  /// The queue ran dry without hitting state_cap and length_cap is at least
  /// twice the longest relation side X_h, which admits every right-comb
  /// expansion X_h -> X_{g1} X_{g2...} -> ... of cost <= ||X_h||.
  bool saturated = false;
};

OrbitReport xi_orbit(const Presentation& p, const Word& start, const OrbitCaps& caps);

struct OracleLength {
  Length length;
  bool saturated;
};

/// ||min_word|| of the orbit of X_g. Only an upper bound when unsaturated.
OracleLength oracle_length(const Presentation& p, const Assignment& asg, Element g, const OrbitCaps& caps);

/// First orbit word that does not factor over `code`, if any.
std::optional<Word> verify_lemma_lw(const OrbitReport& report, const CodeSet& code);

struct GammaBreach {
  Element element;
  Word word;
  /// Product of the factor subscripts; absent when the word did not factor.
  std::optional<Element> product;
};

/// For each g, every word in the orbit of X_g factors over the assigned
/// codewords and the product of the factor subscripts is g.
std::optional<GammaBreach> verify_gamma_injective(const FiniteSemigroup& s, const Assignment& asg,
                                                  std::span<const OrbitReport> orbits);
std::optional<GammaBreach> verify_gamma_injective(const FiniteSemigroup& s, const Assignment& asg,
                                                  const Presentation& p, const OrbitCaps& caps);

/// Orbits of every X_g, in element order.
std::vector<OrbitReport> element_orbits(const Presentation& p, const Assignment& asg, const OrbitCaps& caps);

}  // namespace semilen
