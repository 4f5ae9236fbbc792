#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace semilen {

using Letter = std::uint16_t;

/// Position constraint a letter carries inside a guarded code.
enum class LetterRole : std::uint8_t { Plain, Singleton, Start, Interior, End };

std::string_view role_name(LetterRole role);
LetterRole parse_role(std::string_view name);

/// Letter counts of a guarded alphabet. Letters are laid out in the order
/// singletons, starts, interiors, ends, which fixes the ShortLex order of
/// the emitted codewords.
struct GuardedSizes {
  std::size_t singletons = 0;
  std::size_t starts = 0;
  std::size_t interiors = 0;
  std::size_t ends = 0;

  std::size_t total() const { return singletons + starts + interiors + ends; }
  friend bool operator==(const GuardedSizes&, const GuardedSizes&) = default;
};

/// A finite alphabet whose letters are the indices 0..size()-1, each
/// tagged with a role. Plain letters render as b1, b2, ...; guarded
/// letters as d#, s#, i#, e# numbered within their role.
class Alphabet {
 public:
  /// The two-letter alphabet {b1, b2}.
  static Alphabet binary();
  static Alphabet plain(std::size_t size);
  static Alphabet guarded(const GuardedSizes& sizes);
  /// Roles must be all Plain, or a non-empty guarded layout in the
  /// canonical order singletons < starts < interiors < ends.
  static Alphabet from_roles(std::vector<LetterRole> roles);

  std::size_t size() const { return roles_.size(); }
  LetterRole role(Letter letter) const { return roles_.at(letter); }
  const std::vector<LetterRole>& roles() const { return roles_; }
  bool is_guarded() const;
  GuardedSizes guarded_sizes() const;

  std::string letter_name(Letter letter) const;
  /// Inverse of letter_name; throws InputError on unknown names.
  Letter parse_letter(std::string_view name) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  explicit Alphabet(std::vector<LetterRole> roles);

  std::vector<LetterRole> roles_;
};

/// A nonempty finite sequence of letters; the elements of a free
/// semigroup. Words compare in ShortLex order.
class Word {
 public:
  /// Throws InputError if `letters` is empty.
  explicit Word(std::vector<Letter> letters);
  Word(std::initializer_list<Letter> letters);
  explicit Word(std::span<const Letter> letters);

  std::size_t length() const { return letters_.size(); }
  std::span<const Letter> letters() const { return letters_; }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }
  Letter max_letter() const;

  /// Renders with the alphabet's letter names, e.g. "b1b1b1b2b1b2b2b2".
  std::string render(const Alphabet& alphabet) const;
  /// Parses a concatenation of letter names of `alphabet`.
  static Word parse(std::string_view text, const Alphabet& alphabet);

  friend Word operator+(const Word& lhs, const Word& rhs);
  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& lhs, const Word& rhs);

 private:
  std::vector<Letter> letters_;
};

/// ShortLex comparison on raw letter sequences (possibly empty).
std::strong_ordering shortlex_compare(std::span<const Letter> lhs, std::span<const Letter> rhs);

Word concat(std::span<const Word> words);

/// Replaces letters [pos, pos+len) of `word` by `replacement`.
Word splice(const Word& word, std::size_t pos, std::size_t len, const Word& replacement);

/// Starting offsets of every occurrence of `pattern` inside `text`.
std::vector<std::size_t> occurrences(std::span<const Letter> text, std::span<const Letter> pattern);

struct LetterSpanHash {
  std::size_t operator()(std::span<const Letter> s) const noexcept;
};
struct LetterSpanEqual {
  bool operator()(std::span<const Letter> a, std::span<const Letter> b) const noexcept;
};

}  // namespace semilen
