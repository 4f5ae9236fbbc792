#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "semilen/code.hpp"
#include "semilen/rational.hpp"
#include "semilen/semigroup.hpp"

namespace semilen {

enum class AssignmentMode { Exact, Equivalent };

std::string_view mode_name(AssignmentMode mode);

/// Injective map g -> X_g from elements to codewords of a certified code.
///
/// Exact mode: ||X_g|| = l(g). Equivalent mode: l(g) <= ||X_g|| < d*l(g).
class Assignment {
 public:
  Assignment(AssignmentMode mode, std::optional<Rational> d, CodeSet code, std::vector<std::size_t> word_index);

  AssignmentMode mode() const { return mode_; }
  /// Present in Equivalent mode.
  const std::optional<Rational>& d() const { return d_; }
  const CodeSet& code() const { return code_; }
  std::size_t size() const { return word_index_.size(); }
  const Word& codeword(Element g) const { return code_.word(word_index_.at(g)); }
  std::vector<Length> codeword_lengths() const;
  Length max_codeword_length() const;

  /// The assigned codewords alone; a subset of an overlap code is one.
  const CodeSet& image() const { return image_; }
  /// Element whose codeword is image().word(i).
  Element element_of_image(std::size_t i) const { return image_element_.at(i); }

 private:
  AssignmentMode mode_;
  std::optional<Rational> d_;
  CodeSet code_;
  std::vector<std::size_t> word_index_;
  CodeSet image_;
  std::vector<Element> image_element_;
};

class InfeasibleAssignment : public std::runtime_error {
 public:
  InfeasibleAssignment(Element g, Length lower, Rational upper);
  Element element() const { return element_; }
  /// The empty interval [lower, upper) of admissible codeword lengths.
  Length lower() const { return lower_; }
  const Rational& upper() const { return upper_; }

 private:
  Element element_;
  Length lower_;
  Rational upper_;
};

/// Greedy assignment over `code`: elements in (l(g), g) order each take the
/// ShortLex-least unused codeword with length in [l(g), d*l(g)). When `d`
/// is omitted the search starts at 16 and doubles until the pass succeeds.
/// Throws InfeasibleAssignment when a caller-fixed d admits no codeword, or
/// when doubling can no longer help because the code is exhausted.
Assignment assign_equiv(std::span<const Length> l, const CodeSet& code, std::optional<Rational> d = std::nullopt);

/// Same, after requiring (D1) on `s` (InputError otherwise).
Assignment assign_equiv(const FiniteSemigroup& s, std::span<const Length> l, const CodeSet& code,
                        std::optional<Rational> d = std::nullopt);

/// A prefix of M long enough that every element finds a codeword of length
/// at least max(l).
CodeSet m_code_for(std::span<const Length> l);

/// Exact-length assignment over the guarded code for the demand histogram of l.
Assignment assign_exact(std::span<const Length> l);
Assignment assign_exact(const FiniteSemigroup& s, std::span<const Length> l);

// ---------------------------------------------------------------------------

struct Relation {
  Element left;
  Element right;
  Element product;
  /// X_{product}
  Word lhs;
  /// X_{left} X_{right}
  Word rhs;
};

/// Defining relations of H: one per ordered pair (h', h''), in
/// lexicographic order of the pair.
struct Presentation {
  Alphabet alphabet;
  std::vector<Relation> relations;

  std::size_t max_lhs_length() const;
};

Presentation build_presentation(const FiniteSemigroup& s, const Assignment& asg);

// ---------------------------------------------------------------------------

/// cost(g) = min over factorizations g = g_1...g_s of sum ||X_{g_j}||, the
/// length of g in H.
struct LengthTable {
  std::vector<Length> cost;
  /// Relaxation sweeps until the fixpoint, including the final quiet one.
  std::size_t sweeps = 0;
};

LengthTable length_in_h(const FiniteSemigroup& s, const Assignment& asg);

/// Min-cost relaxation from arbitrary starting costs (exposed for tests).
LengthTable relax_lengths(const FiniteSemigroup& s, std::vector<Length> initial);

struct VerificationFailure {
  Element element;
  Length expected;
  Length got;
};

struct Theorem1Report {
  AssignmentMode mode;
  std::optional<Rational> d;
  /// Optimal c1, c2 with c1*l <= cost <= c2*l.
  EquivalenceConstants constants;
  std::optional<VerificationFailure> failure;

  bool passed() const { return !failure.has_value(); }
};

/// Exact: cost(g) = l(g). Equivalent: l(g) <= cost(g) <= d*l(g). The first
/// failing element is reported with the bound it broke (expected) and the
/// computed cost (got).
Theorem1Report verify_theorem1(std::span<const Length> l, const Assignment& asg, const LengthTable& table);

}  // namespace semilen
