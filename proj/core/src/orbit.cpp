#include "semilen/orbit.hpp"

#include <algorithm>
#include <unordered_set>

#include "semilen/error.hpp"

namespace semilen {

namespace {

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept { return LetterSpanHash{}(w.letters()); }
};

struct Rewrite {
  Word from;
  Word to;
  friend auto operator<=>(const Rewrite&, const Rewrite&) = default;
  friend bool operator==(const Rewrite&, const Rewrite&) = default;
};

std::vector<Rewrite> rewrites_of(const Presentation& p) {
  std::vector<Rewrite> rules;
  for (const auto& r : p.relations) {
    rules.push_back({r.lhs, r.rhs});
    rules.push_back({r.rhs, r.lhs});
  }
  std::ranges::sort(rules);
  auto dup = std::ranges::unique(rules);
  rules.erase(dup.begin(), dup.end());
  return rules;
}

}  // namespace

OrbitCaps OrbitCaps::defaults_for(const Assignment& asg) {
  return OrbitCaps{2 * static_cast<std::size_t>(asg.max_codeword_length())};
}

OrbitReport xi_orbit(const Presentation& p, const Word& start, const OrbitCaps& caps) {
  if (caps.length_cap == 0 || caps.state_cap == 0) throw InputError("orbit caps must be positive");
  if (start.max_letter() >= p.alphabet.size()) throw InputError("start word is not over the presentation alphabet");

  const auto rules = rewrites_of(p);
  OrbitReport report{start, {start}, start, caps, {1}, 0, false, false};
  std::unordered_set<Word, WordHash> seen{start};

  std::vector<std::size_t> frontier{0};
  while (!frontier.empty()) {
    std::vector<std::size_t> next;
    for (auto idx : frontier) {
      const Word current = report.words[idx];
      for (const auto& rule : rules) {
        for (auto pos : occurrences(current.letters(), rule.from.letters())) {
          if (current.length() - rule.from.length() + rule.to.length() > caps.length_cap) {
            ++report.dropped_over_length;
            continue;
          }
          Word candidate = splice(current, pos, rule.from.length(), rule.to);
          if (seen.contains(candidate)) continue;
          if (seen.size() >= caps.state_cap) {
            report.state_cap_hit = true;
            continue;
          }
          seen.insert(candidate);
          report.words.push_back(std::move(candidate));
          next.push_back(report.words.size() - 1);
        }
      }
    }
    if (!next.empty()) report.depth_counts.push_back(next.size());
    frontier = std::move(next);
  }

  report.min_word = *std::ranges::min_element(report.words);
  report.saturated = !report.state_cap_hit && caps.length_cap >= 2 * p.max_lhs_length();
  return report;
}

OracleLength oracle_length(const Presentation& p, const Assignment& asg, Element g, const OrbitCaps& caps) {
  auto report = xi_orbit(p, asg.codeword(g), caps);
  return {report.min_word.length(), report.saturated};
}

std::optional<Word> verify_lemma_lw(const OrbitReport& report, const CodeSet& code) {
  for (const auto& w : report.words) {
    if (!code.factorize(w).ok()) return w;
  }
  return std::nullopt;
}

std::optional<GammaBreach> verify_gamma_injective(const FiniteSemigroup& s, const Assignment& asg,
                                                  std::span<const OrbitReport> orbits) {
  if (orbits.size() != s.order() || asg.size() != s.order()) {
    throw InputError("need one orbit per element");
  }
  for (Element g = 0; g < s.order(); ++g) {
    for (const auto& w : orbits[g].words) {
      auto f = asg.image().factorize(w);
      if (!f.ok()) return GammaBreach{g, w, std::nullopt};
      std::vector<Element> subscripts;
      for (auto i : f.factors) subscripts.push_back(asg.element_of_image(i));
      auto product = s.product(subscripts);
      if (product != g) return GammaBreach{g, w, product};
    }
  }
  return std::nullopt;
}

std::optional<GammaBreach> verify_gamma_injective(const FiniteSemigroup& s, const Assignment& asg,
                                                  const Presentation& p, const OrbitCaps& caps) {
  auto orbits = element_orbits(p, asg, caps);
  return verify_gamma_injective(s, asg, orbits);
}

std::vector<OrbitReport> element_orbits(const Presentation& p, const Assignment& asg, const OrbitCaps& caps) {
  std::vector<OrbitReport> out;
  out.reserve(asg.size());
  for (Element g = 0; g < asg.size(); ++g) out.push_back(xi_orbit(p, asg.codeword(g), caps));
  return out;
}

}  // namespace semilen
