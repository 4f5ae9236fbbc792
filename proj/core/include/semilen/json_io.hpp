#pragma once

#include <filesystem>
#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "semilen/code.hpp"
#include "semilen/cyclic.hpp"
#include "semilen/embedding.hpp"
#include "semilen/orbit.hpp"
#include "semilen/semigroup.hpp"

namespace semilen {

using nlohmann::json;

/// Reads a JSON document; parse errors become InputError naming the file.
json load_json(const std::filesystem::path& path);

// Code sets: { "alphabet": {"size": n, "roles": [...]}, "words": [[...], ...] }
json code_to_json(const CodeSet& code);
/// Certifies the words; throws InputError or OverlapError.
CodeSet code_from_json(const json& doc);
/// The words of a code document without certifying them.
std::pair<Alphabet, std::vector<Word>> words_from_json(const json& doc);

/// { "elements": [...]?, "table": [[...]], "length": {...}?, "generators": [...]? }
struct SemigroupFile {
  FiniteSemigroup semigroup;
  std::optional<LengthFunction> length;
  std::optional<std::vector<Element>> generators;
};

/// Throws InputError naming the offending field or entry. A non-associative
/// table is reported through `violation` rather than thrown, so callers can
/// treat it as a finding.
struct ParsedSemigroupFile {
  std::optional<SemigroupFile> file;
  std::optional<AssociativityViolation> violation;
  std::vector<std::string> names;
};
ParsedSemigroupFile parse_semigroup_file(const json& doc);

json assignment_to_json(const FiniteSemigroup& s, const Assignment& asg);
json presentation_to_json(const FiniteSemigroup& s, const Presentation& p);
json length_table_to_json(const FiniteSemigroup& s, const LengthTable& table);
json theorem1_to_json(const FiniteSemigroup& s, const Theorem1Report& report);
json orbit_to_json(const OrbitReport& report, const Alphabet& alphabet);
json distortion_to_json(const CyclicInstance& inst, const DistortionReport& report);

}  // namespace semilen
