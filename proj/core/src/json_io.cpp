#include "semilen/json_io.hpp"

#include <fstream>

#include "semilen/error.hpp"

namespace semilen {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw InputError(where + ": " + what);
}

json rational_json(const Rational& r) { return to_string(r); }

json constants_json(const EquivalenceConstants& c) {
  return {{"c1", rational_json(c.lower)}, {"c2", rational_json(c.upper)}};
}

Element element_ref(const json& v, const std::vector<std::string>& names, std::size_t n, const std::string& where) {
  if (v.is_number_unsigned()) {
    auto e = v.get<std::uint64_t>();
    if (e >= n) fail(where, "element index " + std::to_string(e) + " out of range");
    return static_cast<Element>(e);
  }
  if (v.is_string()) {
    auto s = v.get<std::string>();
    auto it = std::ranges::find(names, s);
    if (it == names.end()) fail(where, "unknown element '" + s + "'");
    return static_cast<Element>(it - names.begin());
  }
  fail(where, "expected an element name or index");
}

}  // namespace

json load_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

json code_to_json(const CodeSet& code) {
  json roles = json::array();
  for (auto r : code.alphabet().roles()) roles.push_back(std::string(role_name(r)));
  json words = json::array();
  for (const auto& w : code.words()) words.push_back(std::vector<Letter>(w.letters().begin(), w.letters().end()));
  return {{"alphabet", {{"size", code.alphabet().size()}, {"roles", roles}}}, {"words", words}};
}

std::pair<Alphabet, std::vector<Word>> words_from_json(const json& doc) {
  if (!doc.is_object()) fail("document", "expected an object");
  if (!doc.contains("alphabet")) fail("alphabet", "missing");
  const auto& a = doc["alphabet"];
  if (!a.is_object() || !a.contains("size") || !a["size"].is_number_unsigned()) {
    fail("alphabet.size", "expected a positive integer");
  }
  const auto size = a["size"].get<std::size_t>();
  std::vector<LetterRole> roles;
  if (a.contains("roles")) {
    if (!a["roles"].is_array() || a["roles"].size() != size) fail("alphabet.roles", "expected one role per letter");
    for (std::size_t i = 0; i < size; ++i) {
      if (!a["roles"][i].is_string()) fail("alphabet.roles[" + std::to_string(i) + "]", "expected a string");
      roles.push_back(parse_role(a["roles"][i].get<std::string>()));
    }
  } else {
    roles.assign(size, LetterRole::Plain);
  }
  auto alphabet = Alphabet::from_roles(std::move(roles));

  if (!doc.contains("words") || !doc["words"].is_array()) fail("words", "expected an array of words");
  std::vector<Word> words;
  for (std::size_t i = 0; i < doc["words"].size(); ++i) {
    const auto& w = doc["words"][i];
    const auto where = "words[" + std::to_string(i) + "]";
    if (!w.is_array() || w.empty()) fail(where, "expected a nonempty array of letter indices");
    std::vector<Letter> letters;
    for (const auto& l : w) {
      if (!l.is_number_unsigned() || l.get<std::size_t>() >= size) fail(where, "letter index out of range");
      letters.push_back(static_cast<Letter>(l.get<std::size_t>()));
    }
    words.emplace_back(std::move(letters));
  }
  if (words.empty()) fail("words", "a code needs at least one word");
  return {std::move(alphabet), std::move(words)};
}

CodeSet code_from_json(const json& doc) {
  auto [alphabet, words] = words_from_json(doc);
  return CodeSet::certify(std::move(alphabet), std::move(words));
}

ParsedSemigroupFile parse_semigroup_file(const json& doc) {
  if (!doc.is_object()) fail("document", "expected an object");
  if (!doc.contains("table") || !doc["table"].is_array() || doc["table"].empty()) {
    fail("table", "expected a nonempty square array");
  }
  const auto& t = doc["table"];
  const std::size_t n = t.size();

  std::vector<std::string> names;
  if (doc.contains("elements")) {
    const auto& e = doc["elements"];
    if (!e.is_array() || e.size() != n) fail("elements", "expected " + std::to_string(n) + " names");
    for (std::size_t i = 0; i < n; ++i) {
      if (!e[i].is_string()) fail("elements[" + std::to_string(i) + "]", "expected a string");
      names.push_back(e[i].get<std::string>());
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
  }

  CayleyTable table(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto where = "table[" + std::to_string(i) + "]";
    if (!t[i].is_array() || t[i].size() != n) fail(where, "expected a row of " + std::to_string(n) + " entries");
    for (std::size_t j = 0; j < n; ++j) {
      table[i].push_back(element_ref(t[i][j], names, n, where + "[" + std::to_string(j) + "]"));
    }
  }

  ParsedSemigroupFile parsed;
  parsed.names = names;
  if (auto bad = validate_semigroup(table)) {
    parsed.violation = bad;
    return parsed;
  }
  SemigroupFile file{FiniteSemigroup::from_table(table, names), std::nullopt, std::nullopt};

  if (doc.contains("length")) {
    const auto& l = doc["length"];
    std::vector<Length> values(n, 0);
    if (l.is_array()) {
      if (l.size() != n) fail("length", "expected " + std::to_string(n) + " values");
      for (std::size_t i = 0; i < n; ++i) {
        if (!l[i].is_number_unsigned()) fail("length[" + std::to_string(i) + "]", "expected a positive integer");
        values[i] = l[i].get<Length>();
      }
    } else if (l.is_object()) {
      for (const auto& [key, value] : l.items()) {
        auto e = element_ref(json(key), names, n, "length." + key);
        if (!value.is_number_unsigned()) fail("length." + key, "expected a positive integer");
        values[e] = value.get<Length>();
      }
    } else {
      fail("length", "expected an object or array");
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (values[i] == 0) fail("length." + names[i], "missing or not positive");
    }
    file.length = LengthFunction(std::move(values));
  }

  if (doc.contains("generators")) {
    const auto& g = doc["generators"];
    if (!g.is_array() || g.empty()) fail("generators", "expected a nonempty array");
    std::vector<Element> gens;
    for (std::size_t i = 0; i < g.size(); ++i) {
      gens.push_back(element_ref(g[i], names, n, "generators[" + std::to_string(i) + "]"));
    }
    file.generators = std::move(gens);
  }
  parsed.file = std::move(file);
  return parsed;
}

json assignment_to_json(const FiniteSemigroup& s, const Assignment& asg) {
  json out;
  out["mode"] = std::string(mode_name(asg.mode()));
  if (asg.d()) out["d"] = rational_json(*asg.d());
  out["alphabet"] = code_to_json(asg.image())["alphabet"];
  json words = json::object();
  for (Element g = 0; g < s.order(); ++g) words[s.name(g)] = asg.codeword(g).render(asg.code().alphabet());
  out["codewords"] = words;
  return out;
}

json presentation_to_json(const FiniteSemigroup& s, const Presentation& p) {
  json rels = json::array();
  for (const auto& r : p.relations) {
    rels.push_back({{"pair", {s.name(r.left), s.name(r.right)}},
                    {"product", s.name(r.product)},
                    {"lhs", r.lhs.render(p.alphabet)},
                    {"rhs", r.rhs.render(p.alphabet)}});
  }
  return rels;
}

json length_table_to_json(const FiniteSemigroup& s, const LengthTable& table) {
  json cost = json::object();
  for (Element g = 0; g < s.order(); ++g) cost[s.name(g)] = table.cost[g];
  return cost;
}

json theorem1_to_json(const FiniteSemigroup& s, const Theorem1Report& report) {
  json out;
  out["passed"] = report.passed();
  out["claim"] = report.mode == AssignmentMode::Exact ? "cost = l" : "l <= cost <= d*l";
  if (report.d) out["d"] = rational_json(*report.d);
  out["constants"] = constants_json(report.constants);
  if (report.failure) {
    out["failure"] = {{"element", s.name(report.failure->element)},
                      {"expected", report.failure->expected},
                      {"got", report.failure->got}};
  }
  return out;
}

json orbit_to_json(const OrbitReport& report, const Alphabet& alphabet) {
  return {{"start", report.start.render(alphabet)},
          {"size", report.words.size()},
          {"min_word", report.min_word.render(alphabet)},
          {"min_length", report.min_word.length()},
          {"saturated", report.saturated},
          {"state_cap_hit", report.state_cap_hit},
          {"dropped_over_length", report.dropped_over_length},
          {"length_cap", report.caps.length_cap},
          {"state_cap", report.caps.state_cap},
          {"depth_counts", report.depth_counts}};
}

json distortion_to_json(const CyclicInstance& inst, const DistortionReport& report) {
  return {{"source", inst.source},
          {"i_max", inst.i_max},
          {"c2_witness", inst.growth.witness},
          {"c2_witness_half", inst.growth.half_witness},
          {"c2_growth_warning", inst.growth.growing()},
          {"cost_vs_l", constants_json(report.cost_vs_l)},
          {"cost_vs_intrinsic", constants_json(report.cost_vs_intrinsic)},
          {"cost_vs_intrinsic_half", constants_json(report.cost_vs_intrinsic_half)},
          {"distorted_at_truncation_scale", report.distorted},
          {"note", "truncated at i_max; behaviour beyond i_max is not certified"}};
}

}  // namespace semilen
