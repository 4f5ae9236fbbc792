#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "semilen/rational.hpp"
#include "semilen/words.hpp"

namespace semilen {

// ---------------------------------------------------------------------------
// Overlap property
// ---------------------------------------------------------------------------

enum class OverlapKind {
  /// Y occurs as a proper factor of Z.
  ProperFactor,
  /// A nonempty proper prefix of Y equals a suffix of Z (or vice versa).
  PrefixSuffix,
};

struct OverlapViolation {
  OverlapKind kind;
  std::size_t y_index;  // into the checked sequence
  std::size_t z_index;
  Word y;
  Word z;
  /// ProperFactor: offset of Y inside Z. PrefixSuffix: |U|.
  std::size_t offset;

  /// The overlapping block U for PrefixSuffix violations, Y otherwise.
  Word overlap() const;
};

/// Checks conditions (e1) no member is a proper factor of another and
/// (e2) a nonempty U with Y = UV, Z = WU forces Y = U = Z, over all
/// ordered pairs including Y = Z. Returns the first violation in the order
/// (y_index, z_index), factor violations before prefix/suffix ones and
/// shorter overlaps first; std::nullopt means the set passes.
std::optional<OverlapViolation> check_overlap(std::span<const Word> words);

/// Same, after checking every letter lies in `alphabet`.
std::optional<OverlapViolation> check_overlap(std::span<const Word> words, const Alphabet& alphabet);

class OverlapError : public std::runtime_error {
 public:
  explicit OverlapError(OverlapViolation violation);
  const OverlapViolation& violation() const { return violation_; }

 private:
  OverlapViolation violation_;
};

// ---------------------------------------------------------------------------
// Code sets
// ---------------------------------------------------------------------------

/// card{X : ||X|| <= i} >= base^i for every i >= threshold.
struct ExponentialBound {
  std::size_t threshold;
  Rational base;
};

struct FactorizationResult {
  /// Indices into CodeSet::words(), in reading order.
  std::vector<std::size_t> factors;
  /// Set when no codeword is a prefix of the remaining suffix.
  std::optional<std::size_t> failed_at;

  bool ok() const { return !failed_at.has_value(); }
};

/// An immutable set of words certified to satisfy the overlap property,
/// stored in ShortLex order. Copies share the decoding trie.
class CodeSet {
 public:
  /// Sorts, rejects duplicates and letters outside the alphabet, and runs
  /// check_overlap. Throws InputError or OverlapError.
  static CodeSet certify(Alphabet alphabet, std::vector<Word> words,
                         std::optional<ExponentialBound> growth = std::nullopt);

  const Alphabet& alphabet() const { return alphabet_; }
  std::span<const Word> words() const { return words_; }
  const Word& word(std::size_t i) const { return words_.at(i); }
  std::size_t size() const { return words_.size(); }
  std::size_t max_length() const { return words_.back().length(); }
  const std::optional<ExponentialBound>& growth() const { return growth_; }

  std::optional<std::size_t> index_of(const Word& w) const;
  /// First index whose word has length >= len (size() if none).
  std::size_t lower_bound_length(std::size_t len) const;
  std::size_t count_with_length(std::size_t len) const;

  /// Exact check of the growth bound for threshold <= i <= max_length().
  /// False when no bound is attached.
  bool satisfies_growth() const;

  /// Greedy unique factorization; at most one codeword can be a prefix at
  /// any position, so the left-to-right scan is complete.
  FactorizationResult factorize(std::span<const Letter> text) const;
  FactorizationResult factorize(const Word& w) const { return factorize(w.letters()); }

 private:
  struct Trie;
  CodeSet(Alphabet alphabet, std::vector<Word> words, std::optional<ExponentialBound> growth);

  Alphabet alphabet_;
  std::vector<Word> words_;
  std::optional<ExponentialBound> growth_;
  std::shared_ptr<const Trie> trie_;
};

inline FactorizationResult factorize(const Word& w, const CodeSet& code) { return code.factorize(w); }

// ---------------------------------------------------------------------------
// The binary code M = { b1^3 V b2^3 : V = b2 V' b1 without b1^3 or b2^3 }
// ---------------------------------------------------------------------------

/// Membership in M. Throws InputError unless `alphabet` has two letters.
bool is_m_member(const Word& w, const Alphabet& alphabet = Alphabet::binary());

/// All members of M of length <= max_len in ShortLex order (empty below 8).
std::vector<Word> enumerate_m(std::size_t max_len);

/// The first `per_length` members of M (lexicographic) of every length in
/// [min_len, max_len], ShortLex ordered. Avoids materialising all of M when
/// only a few words per length are needed.
std::vector<Word> enumerate_m_prefix(std::size_t min_len, std::size_t max_len, std::size_t per_length);

/// Number of members of M of each length 0..max_len, without materialising them.
std::vector<std::uint64_t> count_m_by_length(std::size_t max_len);

/// enumerate_m(max_len) certified as a CodeSet with threshold 12, base 7/6.
CodeSet m_code(std::size_t max_len);

// ---------------------------------------------------------------------------
// Guarded exact-length codes
// ---------------------------------------------------------------------------

/// Required number of codewords per length.
using LengthDemand = std::map<std::size_t, std::size_t>;

/// Codewords of length k available from `sizes`: singletons at k = 1,
/// starts*ends*interiors^(k-2) for k >= 2 (saturating).
std::uint64_t guarded_supply(const GuardedSizes& sizes, std::size_t k);

/// Lexicographically least (singletons, starts, ends, interiors) meeting demand.
GuardedSizes size_guarded_code(const LengthDemand& demand);

/// Guarded code over a fresh alphabet with exactly demand[k] ShortLex-least
/// words of each demanded length k. Start letters occur only first, end
/// letters only last and singletons only alone.
CodeSet build_exact_code(const LengthDemand& demand);

}  // namespace semilen
