#include "semilen/code.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>

#include <boost/multiprecision/cpp_int.hpp>

#include "semilen/error.hpp"

namespace semilen {

namespace {

using SpanIndex = std::unordered_map<std::span<const Letter>, std::size_t, LetterSpanHash, LetterSpanEqual>;

void keep_min(SpanIndex& index, std::span<const Letter> key, std::size_t value) {
  auto [it, inserted] = index.emplace(key, value);
  if (!inserted && value < it->second) it->second = value;
}

bool is_proper_factor(std::span<const Letter> y, std::span<const Letter> z, std::size_t& offset) {
  if (y.size() >= z.size()) return false;
  auto hit = std::search(z.begin(), z.end(), y.begin(), y.end());
  if (hit == z.end()) return false;
  offset = static_cast<std::size_t>(hit - z.begin());
  return true;
}

// First violation of the ordered pair (Y, Z), in canonical order.
std::optional<OverlapViolation> check_pair(const Word& y, std::size_t yi, const Word& z, std::size_t zi) {
  std::size_t offset = 0;
  if (is_proper_factor(y.letters(), z.letters(), offset)) {
    return OverlapViolation{OverlapKind::ProperFactor, yi, zi, y, z, offset};
  }
  auto ys = y.letters();
  auto zs = z.letters();
  std::size_t limit = std::min(ys.size(), zs.size());
  for (std::size_t u = 1; u <= limit; ++u) {
    if (!std::equal(ys.begin(), ys.begin() + static_cast<std::ptrdiff_t>(u),
                    zs.end() - static_cast<std::ptrdiff_t>(u))) {
      continue;
    }
    if (u == ys.size() && u == zs.size()) continue;  // Y = U = Z
    return OverlapViolation{OverlapKind::PrefixSuffix, yi, zi, y, z, u};
  }
  return std::nullopt;
}

std::string describe(const OverlapViolation& v) {
  std::string out = v.kind == OverlapKind::ProperFactor ? "proper factor" : "prefix/suffix overlap";
  out += " between words #" + std::to_string(v.y_index) + " and #" + std::to_string(v.z_index);
  return out;
}

}  // namespace

Word OverlapViolation::overlap() const {
  if (kind == OverlapKind::ProperFactor) return y;
  return Word(y.letters().first(offset));
}

OverlapError::OverlapError(OverlapViolation violation)
    : std::runtime_error("overlap property violated: " + describe(violation)),
      violation_(std::move(violation)) {}

std::optional<OverlapViolation> check_overlap(std::span<const Word> words) {
  if (words.empty()) throw InputError("check_overlap needs a nonempty set of words");

  SpanIndex whole;
  SpanIndex proper_prefix;
  std::vector<bool> has_length;
  for (std::size_t i = 0; i < words.size(); ++i) {
    auto w = words[i].letters();
    keep_min(whole, w, i);
    for (std::size_t u = 1; u < w.size(); ++u) keep_min(proper_prefix, w.first(u), i);
    if (has_length.size() <= w.size()) has_length.resize(w.size() + 1, false);
    has_length[w.size()] = true;
  }

  constexpr auto none = std::numeric_limits<std::size_t>::max();
  std::size_t best_y = none;
  std::size_t best_z = none;
  auto consider = [&](std::size_t y, std::size_t z) {
    if (y < best_y || (y == best_y && z < best_z)) {
      best_y = y;
      best_z = z;
    }
  };
  auto lookup = [](const SpanIndex& index, std::span<const Letter> key) {
    auto it = index.find(key);
    return it == index.end() ? none : it->second;
  };

  for (std::size_t zi = 0; zi < words.size(); ++zi) {
    auto z = words[zi].letters();
    // (e1): proper factors of Z that are members
    for (std::size_t len = 1; len < z.size() && len < has_length.size(); ++len) {
      if (!has_length[len]) continue;
      for (std::size_t pos = 0; pos + len <= z.size(); ++pos) {
        if (auto y = lookup(whole, z.subspan(pos, len)); y != none) consider(y, zi);
      }
    }
    // (e2): suffixes of Z that are prefixes of members
    for (std::size_t u = 1; u <= z.size(); ++u) {
      auto suffix = z.last(u);
      if (auto y = lookup(proper_prefix, suffix); y != none) consider(y, zi);
      if (u < z.size()) {
        if (auto y = lookup(whole, suffix); y != none) consider(y, zi);
      }
    }
  }

  if (best_y == none) return std::nullopt;
  auto found = check_pair(words[best_y], best_y, words[best_z], best_z);
  if (!found) throw std::logic_error("check_overlap: candidate pair failed to reproduce");
  return found;
}

std::optional<OverlapViolation> check_overlap(std::span<const Word> words, const Alphabet& alphabet) {
  for (const auto& w : words) {
    if (w.max_letter() >= alphabet.size()) {
      throw InputError("word uses letter " + std::to_string(w.max_letter()) +
                       " outside an alphabet of size " + std::to_string(alphabet.size()));
    }
  }
  return check_overlap(words);
}

// ---------------------------------------------------------------------------

struct CodeSet::Trie {
  struct Node {
    std::vector<std::pair<Letter, std::uint32_t>> next;
    std::int64_t terminal = -1;
  };
  std::vector<Node> nodes{Node{}};

  void insert(std::span<const Letter> w, std::size_t index) {
    std::uint32_t cur = 0;
    for (auto l : w) {
      auto child = find(cur, l);
      if (!child) {
        nodes.push_back(Node{});
        child = static_cast<std::uint32_t>(nodes.size() - 1);
        nodes[cur].next.emplace_back(l, *child);
      }
      cur = *child;
    }
    nodes[cur].terminal = static_cast<std::int64_t>(index);
  }

  std::optional<std::uint32_t> find(std::uint32_t node, Letter l) const {
    for (const auto& [letter, child] : nodes[node].next) {
      if (letter == l) return child;
    }
    return std::nullopt;
  }
};

CodeSet::CodeSet(Alphabet alphabet, std::vector<Word> words, std::optional<ExponentialBound> growth)
    : alphabet_(std::move(alphabet)), words_(std::move(words)), growth_(std::move(growth)) {
  auto trie = std::make_shared<Trie>();
  for (std::size_t i = 0; i < words_.size(); ++i) trie->insert(words_[i].letters(), i);
  trie_ = std::move(trie);
}

CodeSet CodeSet::certify(Alphabet alphabet, std::vector<Word> words, std::optional<ExponentialBound> growth) {
  if (words.empty()) throw InputError("a code set needs at least one word");
  std::ranges::sort(words);
  if (auto dup = std::ranges::adjacent_find(words); dup != words.end()) {
    throw InputError("duplicate codeword " + dup->render(alphabet));
  }
  if (auto violation = check_overlap(words, alphabet)) throw OverlapError(std::move(*violation));
  if (growth && growth->base <= Rational(1)) throw InputError("growth base must exceed 1");
  return CodeSet(std::move(alphabet), std::move(words), std::move(growth));
}

std::optional<std::size_t> CodeSet::index_of(const Word& w) const {
  auto it = std::ranges::lower_bound(words_, w);
  if (it == words_.end() || *it != w) return std::nullopt;
  return static_cast<std::size_t>(it - words_.begin());
}

std::size_t CodeSet::lower_bound_length(std::size_t len) const {
  auto it = std::ranges::partition_point(words_, [len](const Word& w) { return w.length() < len; });
  return static_cast<std::size_t>(it - words_.begin());
}

std::size_t CodeSet::count_with_length(std::size_t len) const {
  return lower_bound_length(len + 1) - lower_bound_length(len);
}

bool CodeSet::satisfies_growth() const {
  if (!growth_) return false;
  using boost::multiprecision::cpp_int;
  cpp_int num = growth_->base.numerator();
  cpp_int den = growth_->base.denominator();
  for (std::size_t i = growth_->threshold; i <= max_length(); ++i) {
    cpp_int cumulative = lower_bound_length(i + 1);
    // cumulative >= (num/den)^i
    if (cumulative * boost::multiprecision::pow(den, static_cast<unsigned>(i)) <
        boost::multiprecision::pow(num, static_cast<unsigned>(i))) {
      return false;
    }
  }
  return true;
}

FactorizationResult CodeSet::factorize(std::span<const Letter> text) const {
  FactorizationResult result;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::uint32_t node = 0;
    std::int64_t found = -1;
    std::size_t j = pos;
    while (j < text.size()) {
      auto child = trie_->find(node, text[j]);
      if (!child) break;
      node = *child;
      ++j;
      if (trie_->nodes[node].terminal >= 0) {
        found = trie_->nodes[node].terminal;
        break;
      }
    }
    if (found < 0) {
      result.failed_at = pos;
      return result;
    }
    result.factors.push_back(static_cast<std::size_t>(found));
    pos = j;
  }
  return result;
}

// ---------------------------------------------------------------------------

namespace {

constexpr Letter kB1 = 0;
constexpr Letter kB2 = 1;

// Appends every V of length `len` with V[0] = b2, V[last] = b1 and no run of
// three equal letters, in lexicographic order, as b1^3 V b2^3.
void emit_m_words(std::size_t len, std::vector<Letter>& v, std::vector<Word>& out, std::size_t& budget) {
  if (budget == 0) return;
  if (v.size() == len) {
    if (v.back() != kB1) return;
    --budget;
    std::vector<Letter> w{kB1, kB1, kB1};
    w.insert(w.end(), v.begin(), v.end());
    w.insert(w.end(), {kB2, kB2, kB2});
    out.emplace_back(std::move(w));
    return;
  }
  for (Letter l : {kB1, kB2}) {
    auto n = v.size();
    if (n >= 2 && v[n - 1] == l && v[n - 2] == l) continue;
    v.push_back(l);
    emit_m_words(len, v, out, budget);
    v.pop_back();
  }
}

}  // namespace

bool is_m_member(const Word& w, const Alphabet& alphabet) {
  if (alphabet.size() != 2) {
    throw InputError("M is defined over a two-letter alphabet, got size " + std::to_string(alphabet.size()));
  }
  if (w.max_letter() > kB2) throw InputError("word uses a letter outside {b1, b2}");
  auto s = w.letters();
  if (s.size() < 8) return false;
  for (std::size_t i = 0; i < 3; ++i) {
    if (s[i] != kB1 || s[s.size() - 1 - i] != kB2) return false;
  }
  auto v = s.subspan(3, s.size() - 6);
  if (v.front() != kB2 || v.back() != kB1) return false;
  for (std::size_t i = 2; i < v.size(); ++i) {
    if (v[i] == v[i - 1] && v[i] == v[i - 2]) return false;
  }
  return true;
}

std::vector<Word> enumerate_m(std::size_t max_len) {
  return enumerate_m_prefix(8, max_len, std::numeric_limits<std::size_t>::max());
}

std::vector<Word> enumerate_m_prefix(std::size_t min_len, std::size_t max_len, std::size_t per_length) {
  std::vector<Word> out;
  std::vector<Letter> v;
  for (std::size_t len = std::max<std::size_t>(min_len, 8); len <= max_len; ++len) {
    v.assign(1, kB2);
    std::size_t budget = per_length;
    emit_m_words(len - 6, v, out, budget);
  }
  return out;
}

std::vector<std::uint64_t> count_m_by_length(std::size_t max_len) {
  std::vector<std::uint64_t> counts(max_len + 1, 0);
  // ways[last letter][run length 1..2] over prefixes of V starting with b2
  std::uint64_t ways[2][3] = {};
  ways[kB2][1] = 1;
  for (std::size_t vlen = 1; vlen + 6 <= max_len; ++vlen) {
    if (vlen >= 2) counts[vlen + 6] = ways[kB1][1] + ways[kB1][2];
    std::uint64_t next[2][3] = {};
    for (int last = 0; last < 2; ++last) {
      for (int run = 1; run <= 2; ++run) {
        next[1 - last][1] += ways[last][run];
        if (run < 2) next[last][run + 1] += ways[last][run];
      }
    }
    std::copy(&next[0][0], &next[0][0] + 6, &ways[0][0]);
  }
  return counts;
}

CodeSet m_code(std::size_t max_len) {
  auto words = enumerate_m(max_len);
  if (words.empty()) throw InputError("M has no words shorter than 8");
  return CodeSet::certify(Alphabet::binary(), std::move(words), ExponentialBound{12, Rational(7, 6)});
}

// ---------------------------------------------------------------------------

namespace {

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > std::numeric_limits<std::uint64_t>::max() / b) return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

}  // namespace

std::uint64_t guarded_supply(const GuardedSizes& sizes, std::size_t k) {
  if (k == 0) return 0;
  if (k == 1) return sizes.singletons;
  std::uint64_t supply = saturating_mul(sizes.starts, sizes.ends);
  for (std::size_t i = 2; i < k && supply > 0; ++i) supply = saturating_mul(supply, sizes.interiors);
  return supply;
}

GuardedSizes size_guarded_code(const LengthDemand& demand) {
  GuardedSizes sizes;
  bool any_long = false;
  bool any_interior = false;
  for (auto [k, count] : demand) {
    if (k == 0 || count == 0) throw InputError("demand lengths and counts must be positive");
    if (k == 1) sizes.singletons = count;
    if (k >= 2) any_long = true;
    if (k >= 3) any_interior = true;
  }
  if (!any_long) return sizes;
  sizes.starts = 1;
  auto two = demand.find(2);
  sizes.ends = std::max<std::size_t>(1, two == demand.end() ? 0 : two->second);
  if (!any_interior) return sizes;
  sizes.interiors = 1;
  auto satisfied = [&] {
    for (auto [k, count] : demand) {
      if (k >= 3 && guarded_supply(sizes, k) < count) return false;
    }
    return true;
  };
  while (!satisfied()) ++sizes.interiors;
  return sizes;
}

CodeSet build_exact_code(const LengthDemand& demand) {
  if (demand.empty()) throw InputError("empty length demand");
  auto sizes = size_guarded_code(demand);
  auto alphabet = Alphabet::guarded(sizes);

  const auto first_start = static_cast<Letter>(sizes.singletons);
  const auto first_interior = static_cast<Letter>(first_start + sizes.starts);
  const auto first_end = static_cast<Letter>(first_interior + sizes.interiors);

  std::vector<Word> words;
  for (auto [k, count] : demand) {
    for (std::size_t t = 0; t < count; ++t) {
      if (k == 1) {
        words.push_back(Word{static_cast<Letter>(t)});
        continue;
      }
      // mixed radix, most significant first: start, interiors..., end
      std::vector<Letter> letters(k);
      std::size_t rest = t;
      letters[k - 1] = static_cast<Letter>(first_end + rest % sizes.ends);
      rest /= sizes.ends;
      for (std::size_t pos = k - 2; pos >= 1; --pos) {
        letters[pos] = static_cast<Letter>(first_interior + rest % sizes.interiors);
        rest /= sizes.interiors;
      }
      letters[0] = static_cast<Letter>(first_start + rest);
      words.emplace_back(std::move(letters));
    }
  }
  return CodeSet::certify(std::move(alphabet), std::move(words));
}

}  // namespace semilen
