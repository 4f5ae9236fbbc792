#include "semilen/embedding.hpp"

#include <algorithm>
#include <numeric>

#include "semilen/error.hpp"

namespace semilen {

std::string_view mode_name(AssignmentMode mode) {
  return mode == AssignmentMode::Exact ? "exact" : "equiv";
}

namespace {

CodeSet image_of(const CodeSet& code, std::span<const std::size_t> word_index) {
  std::vector<Word> words;
  words.reserve(word_index.size());
  for (auto i : word_index) words.push_back(code.word(i));
  return CodeSet::certify(code.alphabet(), std::move(words));
}

// Elements sorted by (l(g), g).
std::vector<Element> length_order(std::span<const Length> l) {
  std::vector<Element> order(l.size());
  std::iota(order.begin(), order.end(), Element{0});
  std::ranges::stable_sort(order, [&](Element a, Element b) { return l[a] < l[b]; });
  return order;
}

void require_d1(const FiniteSemigroup& s, std::span<const Length> l) {
  auto violations = check_d1(s, l);
  if (!violations.empty()) {
    auto [g, h] = violations.front();
    throw InputError("length function violates (D1) at (" + s.name(g) + ", " + s.name(h) + ")");
  }
}

}  // namespace

Assignment::Assignment(AssignmentMode mode, std::optional<Rational> d, CodeSet code,
                       std::vector<std::size_t> word_index)
    : mode_(mode),
      d_(std::move(d)),
      code_(std::move(code)),
      word_index_(std::move(word_index)),
      image_(image_of(code_, word_index_)) {
  if (mode_ == AssignmentMode::Equivalent && !d_) throw InputError("equivalent mode needs a constant d");
  image_element_.resize(word_index_.size());
  for (Element g = 0; g < word_index_.size(); ++g) {
    auto i = image_.index_of(codeword(g));
    image_element_[*i] = g;
  }
  // certify() rejects duplicates, so the map is injective here
}

std::vector<Length> Assignment::codeword_lengths() const {
  std::vector<Length> out;
  for (Element g = 0; g < size(); ++g) out.push_back(codeword(g).length());
  return out;
}

Length Assignment::max_codeword_length() const {
  Length best = 0;
  for (Element g = 0; g < size(); ++g) best = std::max<Length>(best, codeword(g).length());
  return best;
}

InfeasibleAssignment::InfeasibleAssignment(Element g, Length lower, Rational upper)
    : std::runtime_error("no unused codeword for element " + std::to_string(g) + " with length in [" +
                         std::to_string(lower) + ", " + to_string(upper) + ")"),
      element_(g),
      lower_(lower),
      upper_(upper) {}

namespace {

struct GreedyOutcome {
  std::vector<std::size_t> word_index;
  std::optional<Element> failed;
};

GreedyOutcome greedy_pass(std::span<const Length> l, const CodeSet& code, const Rational& d) {
  GreedyOutcome out;
  out.word_index.assign(l.size(), 0);
  std::vector<bool> used(code.size(), false);
  for (auto g : length_order(l)) {
    const Rational upper = d * Rational(static_cast<std::int64_t>(l[g]));
    bool placed = false;
    for (auto i = code.lower_bound_length(l[g]); i < code.size(); ++i) {
      if (!less_than(code.word(i).length(), upper)) break;
      if (used[i]) continue;
      used[i] = true;
      out.word_index[g] = i;
      placed = true;
      break;
    }
    if (!placed) {
      out.failed = g;
      return out;
    }
  }
  return out;
}

}  // namespace

Assignment assign_equiv(std::span<const Length> l, const CodeSet& code, std::optional<Rational> d) {
  if (l.empty()) throw InputError("nothing to assign");
  if (std::ranges::any_of(l, [](Length v) { return v == 0; })) throw InputError("lengths must be positive");
  if (d) {
    if (*d <= Rational(0)) throw InputError("d must be positive");
    auto outcome = greedy_pass(l, code, *d);
    if (outcome.failed) {
      auto g = *outcome.failed;
      throw InfeasibleAssignment(g, l[g], *d * Rational(static_cast<std::int64_t>(l[g])));
    }
    return Assignment(AssignmentMode::Equivalent, d, code, std::move(outcome.word_index));
  }
  for (Rational trial(16);; trial *= 2) {
    auto outcome = greedy_pass(l, code, trial);
    if (!outcome.failed) {
      return Assignment(AssignmentMode::Equivalent, trial, code, std::move(outcome.word_index));
    }
    auto g = *outcome.failed;
    Rational upper = trial * Rational(static_cast<std::int64_t>(l[g]));
    // the interval already reaches past the longest codeword
    if (less_than(code.max_length(), upper)) {
      throw InfeasibleAssignment(g, l[g], upper);
    }
  }
}

Assignment assign_equiv(const FiniteSemigroup& s, std::span<const Length> l, const CodeSet& code,
                        std::optional<Rational> d) {
  require_d1(s, l);
  return assign_equiv(l, code, std::move(d));
}

CodeSet m_code_for(std::span<const Length> l) {
  if (l.empty()) throw InputError("nothing to assign");
  const auto [lo_it, hi_it] = std::ranges::minmax_element(l);
  const std::size_t lmin = std::max<std::size_t>(*lo_it, 8);
  const std::size_t lmax = std::max<std::size_t>(*hi_it, 8);
  const std::size_t n = l.size();
  // least L with at least n members of length in [lmax, L]
  std::size_t len = lmax;
  for (;; ++len) {
    auto counts = count_m_by_length(len);
    std::uint64_t have = 0;
    for (std::size_t k = lmax; k <= len; ++k) have += counts[k];
    if (have >= n) break;
  }
  return CodeSet::certify(Alphabet::binary(), enumerate_m_prefix(lmin, len, n));
}

Assignment assign_exact(std::span<const Length> l) {
  if (l.empty()) throw InputError("nothing to assign");
  LengthDemand demand;
  for (auto v : l) {
    if (v == 0) throw InputError("lengths must be positive");
    ++demand[v];
  }
  auto code = build_exact_code(demand);
  std::vector<std::size_t> word_index(l.size());
  std::map<Length, std::size_t> taken;
  for (auto g : length_order(l)) word_index[g] = code.lower_bound_length(l[g]) + taken[l[g]]++;
  return Assignment(AssignmentMode::Exact, std::nullopt, std::move(code), std::move(word_index));
}

Assignment assign_exact(const FiniteSemigroup& s, std::span<const Length> l) {
  require_d1(s, l);
  return assign_exact(l);
}

// ---------------------------------------------------------------------------

std::size_t Presentation::max_lhs_length() const {
  std::size_t best = 0;
  for (const auto& r : relations) best = std::max(best, r.lhs.length());
  return best;
}

Presentation build_presentation(const FiniteSemigroup& s, const Assignment& asg) {
  if (asg.size() != s.order()) throw InputError("assignment does not cover the semigroup");
  Presentation p{asg.code().alphabet(), {}};
  p.relations.reserve(s.order() * s.order());
  for (Element a = 0; a < s.order(); ++a) {
    for (Element b = 0; b < s.order(); ++b) {
      auto ab = s.product(a, b);
      p.relations.push_back({a, b, ab, asg.codeword(ab), asg.codeword(a) + asg.codeword(b)});
    }
  }
  return p;
}

// ---------------------------------------------------------------------------

LengthTable relax_lengths(const FiniteSemigroup& s, std::vector<Length> initial) {
  if (initial.size() != s.order()) throw InputError("initial costs do not cover the semigroup");
  LengthTable t{std::move(initial), 0};
  bool changed = true;
  while (changed) {
    changed = false;
    ++t.sweeps;
    for (Element a = 0; a < s.order(); ++a) {
      for (Element b = 0; b < s.order(); ++b) {
        auto& target = t.cost[s.product(a, b)];
        auto via = t.cost[a] + t.cost[b];
        if (via < target) {
          target = via;
          changed = true;
        }
      }
    }
  }
  return t;
}

LengthTable length_in_h(const FiniteSemigroup& s, const Assignment& asg) {
  if (asg.size() != s.order()) throw InputError("assignment does not cover the semigroup");
  return relax_lengths(s, asg.codeword_lengths());
}

Theorem1Report verify_theorem1(std::span<const Length> l, const Assignment& asg, const LengthTable& table) {
  if (l.size() != table.cost.size() || l.size() != asg.size()) {
    throw InputError("length function, assignment and table disagree in size");
  }
  Theorem1Report report{asg.mode(), asg.d(), equivalence_constants(l, table.cost), std::nullopt};
  for (Element g = 0; g < l.size(); ++g) {
    const Length cost = table.cost[g];
    if (asg.mode() == AssignmentMode::Exact) {
      if (cost != l[g]) {
        report.failure = VerificationFailure{g, l[g], cost};
        break;
      }
      continue;
    }
    if (cost < l[g]) {
      report.failure = VerificationFailure{g, l[g], cost};
      break;
    }
    Rational upper = *asg.d() * Rational(static_cast<std::int64_t>(l[g]));
    if (Rational(static_cast<std::int64_t>(cost)) > upper) {
      report.failure = VerificationFailure{g, static_cast<Length>(boost::rational_cast<std::int64_t>(upper)), cost};
      break;
    }
  }
  return report;
}

}  // namespace semilen
