#include "semilen/words.hpp"

#include <algorithm>
#include <cctype>

#include <boost/container_hash/hash.hpp>

#include "semilen/error.hpp"

namespace semilen {

namespace {

char role_prefix(LetterRole role) {
  switch (role) {
    case LetterRole::Plain: return 'b';
    case LetterRole::Singleton: return 'd';
    case LetterRole::Start: return 's';
    case LetterRole::Interior: return 'i';
    case LetterRole::End: return 'e';
  }
  return '?';
}

}  // namespace

std::string_view role_name(LetterRole role) {
  switch (role) {
    case LetterRole::Plain: return "plain";
    case LetterRole::Singleton: return "singleton";
    case LetterRole::Start: return "start";
    case LetterRole::Interior: return "interior";
    case LetterRole::End: return "end";
  }
  return "?";
}

LetterRole parse_role(std::string_view name) {
  for (auto role : {LetterRole::Plain, LetterRole::Singleton, LetterRole::Start,
                    LetterRole::Interior, LetterRole::End}) {
    if (role_name(role) == name) return role;
  }
  throw InputError("unknown letter role '" + std::string(name) + "'");
}

Alphabet::Alphabet(std::vector<LetterRole> roles) : roles_(std::move(roles)) {}

Alphabet Alphabet::binary() { return plain(2); }

Alphabet Alphabet::plain(std::size_t size) {
  if (size == 0) throw InputError("alphabet must have at least one letter");
  return Alphabet(std::vector<LetterRole>(size, LetterRole::Plain));
}

Alphabet Alphabet::guarded(const GuardedSizes& sizes) {
  std::vector<LetterRole> roles;
  roles.insert(roles.end(), sizes.singletons, LetterRole::Singleton);
  roles.insert(roles.end(), sizes.starts, LetterRole::Start);
  roles.insert(roles.end(), sizes.interiors, LetterRole::Interior);
  roles.insert(roles.end(), sizes.ends, LetterRole::End);
  if (roles.empty()) throw InputError("alphabet must have at least one letter");
  if ((sizes.starts == 0) != (sizes.ends == 0)) {
    throw InputError("guarded alphabet needs both start and end letters or neither");
  }
  if (sizes.interiors > 0 && sizes.starts == 0) {
    throw InputError("interior letters require start and end letters");
  }
  return Alphabet(std::move(roles));
}

Alphabet Alphabet::from_roles(std::vector<LetterRole> roles) {
  if (roles.empty()) throw InputError("alphabet must have at least one letter");
  if (roles.size() > 0xFFFF) throw InputError("alphabet too large");
  bool any_plain = std::ranges::any_of(roles, [](LetterRole r) { return r == LetterRole::Plain; });
  if (any_plain) {
    if (!std::ranges::all_of(roles, [](LetterRole r) { return r == LetterRole::Plain; })) {
      throw InputError("plain letters cannot be mixed with guarded roles");
    }
    return Alphabet(std::move(roles));
  }
  if (!std::ranges::is_sorted(roles)) {
    throw InputError("guarded roles must be ordered singleton, start, interior, end");
  }
  GuardedSizes sizes;
  for (auto r : roles) {
    switch (r) {
      case LetterRole::Singleton: ++sizes.singletons; break;
      case LetterRole::Start: ++sizes.starts; break;
      case LetterRole::Interior: ++sizes.interiors; break;
      case LetterRole::End: ++sizes.ends; break;
      case LetterRole::Plain: break;
    }
  }
  return guarded(sizes);
}

bool Alphabet::is_guarded() const { return roles_.front() != LetterRole::Plain; }

GuardedSizes Alphabet::guarded_sizes() const {
  GuardedSizes sizes;
  for (auto r : roles_) {
    switch (r) {
      case LetterRole::Singleton: ++sizes.singletons; break;
      case LetterRole::Start: ++sizes.starts; break;
      case LetterRole::Interior: ++sizes.interiors; break;
      case LetterRole::End: ++sizes.ends; break;
      case LetterRole::Plain: break;
    }
  }
  return sizes;
}

std::string Alphabet::letter_name(Letter letter) const {
  auto role = roles_.at(letter);
  // number within the role, 1-based
  auto first = std::ranges::find(roles_, role) - roles_.begin();
  return role_prefix(role) + std::to_string(letter - first + 1);
}

Letter Alphabet::parse_letter(std::string_view name) const {
  if (name.size() < 2) throw InputError("bad letter '" + std::string(name) + "'");
  std::size_t number = 0;
  for (char c : name.substr(1)) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw InputError("bad letter '" + std::string(name) + "'");
    }
    number = number * 10 + static_cast<std::size_t>(c - '0');
  }
  for (std::size_t i = 0; i < roles_.size(); ++i) {
    if (role_prefix(roles_[i]) == name.front()) {
      std::size_t count = static_cast<std::size_t>(std::count(roles_.begin(), roles_.end(), roles_[i]));
      if (number >= 1 && number <= count) return static_cast<Letter>(i + number - 1);
      break;
    }
  }
  throw InputError("letter '" + std::string(name) + "' is not in the alphabet");
}

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
  if (letters_.empty()) throw InputError("words must be nonempty");
}

Word::Word(std::initializer_list<Letter> letters) : Word(std::vector<Letter>(letters)) {}

Word::Word(std::span<const Letter> letters) : Word(std::vector<Letter>(letters.begin(), letters.end())) {}

Letter Word::max_letter() const { return *std::ranges::max_element(letters_); }

std::string Word::render(const Alphabet& alphabet) const {
  std::string out;
  for (auto l : letters_) out += alphabet.letter_name(l);
  return out;
}

Word Word::parse(std::string_view text, const Alphabet& alphabet) {
  std::vector<Letter> letters;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == '.' || text[i] == ',') {
      ++i;
      continue;
    }
    std::size_t j = i + 1;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    letters.push_back(alphabet.parse_letter(text.substr(i, j - i)));
    i = j;
  }
  if (letters.empty()) throw InputError("empty word '" + std::string(text) + "'");
  return Word(std::move(letters));
}

Word operator+(const Word& lhs, const Word& rhs) {
  std::vector<Letter> out;
  out.reserve(lhs.length() + rhs.length());
  out.insert(out.end(), lhs.letters_.begin(), lhs.letters_.end());
  out.insert(out.end(), rhs.letters_.begin(), rhs.letters_.end());
  return Word(std::move(out));
}

std::strong_ordering shortlex_compare(std::span<const Letter> lhs, std::span<const Letter> rhs) {
  if (auto c = lhs.size() <=> rhs.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(lhs.begin(), lhs.end(), rhs.begin(), rhs.end());
}

std::strong_ordering operator<=>(const Word& lhs, const Word& rhs) {
  return shortlex_compare(lhs.letters(), rhs.letters());
}

Word concat(std::span<const Word> words) {
  std::vector<Letter> out;
  for (const auto& w : words) out.insert(out.end(), w.letters().begin(), w.letters().end());
  return Word(std::move(out));
}

Word splice(const Word& word, std::size_t pos, std::size_t len, const Word& replacement) {
  auto src = word.letters();
  std::vector<Letter> out;
  out.reserve(src.size() - len + replacement.length());
  out.insert(out.end(), src.begin(), src.begin() + static_cast<std::ptrdiff_t>(pos));
  out.insert(out.end(), replacement.letters().begin(), replacement.letters().end());
  out.insert(out.end(), src.begin() + static_cast<std::ptrdiff_t>(pos + len), src.end());
  return Word(std::move(out));
}

std::vector<std::size_t> occurrences(std::span<const Letter> text, std::span<const Letter> pattern) {
  std::vector<std::size_t> out;
  if (pattern.empty() || pattern.size() > text.size()) return out;
  for (std::size_t i = 0; i + pattern.size() <= text.size(); ++i) {
    if (std::equal(pattern.begin(), pattern.end(), text.begin() + static_cast<std::ptrdiff_t>(i))) {
      out.push_back(i);
    }
  }
  return out;
}

std::size_t LetterSpanHash::operator()(std::span<const Letter> s) const noexcept {
  return boost::hash_range(s.begin(), s.end());
}

bool LetterSpanEqual::operator()(std::span<const Letter> a, std::span<const Letter> b) const noexcept {
  return std::ranges::equal(a, b);
}

}  // namespace semilen
