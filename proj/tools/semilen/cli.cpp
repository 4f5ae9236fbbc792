#include "semilen/cli.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "semilen/code.hpp"
#include "semilen/cyclic.hpp"
#include "semilen/embedding.hpp"
#include "semilen/error.hpp"
#include "semilen/json_io.hpp"
#include "semilen/orbit.hpp"
#include "semilen/semigroup.hpp"

namespace semilen::cli {

namespace {

enum class Format { Json, Csv, Text };

struct RunConfig {
  std::string subcommand;
  std::string input;
  std::string word;
  std::string mode = "exact";
  std::string d;
  std::optional<std::size_t> length_cap;
  std::size_t state_cap = 1'000'000;
  std::size_t imax = 0;
  std::string formula;
  std::string table;
  std::size_t max_len = 0;
  std::string demand;
  std::uint64_t seed = 0;
  Format format = Format::Json;
  bool verbose = false;
};

AssignmentMode parse_mode(const std::string& mode) {
  if (mode == "exact") return AssignmentMode::Exact;
  if (mode == "equiv") return AssignmentMode::Equivalent;
  throw InputError("--mode must be exact or equiv");
}

std::optional<Rational> parse_d(const RunConfig& cfg) {
  if (cfg.d.empty()) return std::nullopt;
  return parse_rational(cfg.d);
}

void require_format(const RunConfig& cfg, std::initializer_list<Format> allowed) {
  if (std::ranges::find(allowed, cfg.format) == allowed.end()) {
    throw InputError("--format not supported by " + cfg.subcommand);
  }
}

json with_seed(json report, const RunConfig& cfg) {
  report["command"] = cfg.subcommand;
  report["seed"] = cfg.seed;
  return report;
}

LengthDemand parse_demand(const std::string& text) {
  LengthDemand demand;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto colon = item.find(':');
    if (colon == std::string::npos) throw InputError("--demand entries look like length:count, got '" + item + "'");
    try {
      auto k = std::stoull(item.substr(0, colon));
      auto c = std::stoull(item.substr(colon + 1));
      demand[k] += c;
    } catch (const std::logic_error&) {
      throw InputError("--demand entries look like length:count, got '" + item + "'");
    }
  }
  if (demand.empty()) throw InputError("--demand is empty");
  return demand;
}

SemigroupFile load_semigroup(const std::string& path, std::ostream& err) {
  auto parsed = parse_semigroup_file(load_json(path));
  if (parsed.violation) {
    const auto& v = *parsed.violation;
    err << "not associative: (" << parsed.names[v.x] << parsed.names[v.y] << ")" << parsed.names[v.z] << " != "
        << parsed.names[v.x] << "(" << parsed.names[v.y] << parsed.names[v.z] << ")\n";
    throw InputError("table is not associative");
  }
  return std::move(*parsed.file);
}

std::vector<Length> require_length(const SemigroupFile& file) {
  if (!file.length) throw InputError("length: missing (required by this command)");
  auto v = file.length->values();
  return {v.begin(), v.end()};
}

// ---------------------------------------------------------------------------

int cmd_gen_words(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {Format::Json, Format::Text});
  if ((cfg.max_len == 0) == cfg.demand.empty()) throw InputError("give exactly one of --max-len or --demand");
  auto code = cfg.demand.empty() ? m_code(cfg.max_len) : build_exact_code(parse_demand(cfg.demand));
  if (cfg.format == Format::Text) {
    for (const auto& w : code.words()) out << w.render(code.alphabet()) << '\n';
    return kOk;
  }
  out << with_seed(code_to_json(code), cfg).dump(2) << '\n';
  return kOk;
}

int cmd_check_overlap(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {Format::Json, Format::Text});
  auto [alphabet, words] = words_from_json(load_json(cfg.input));
  auto violation = check_overlap(words, alphabet);
  if (cfg.format == Format::Text) {
    if (!violation) {
      out << "pass: " << words.size() << " words satisfy the overlap property\n";
    } else {
      out << "violation "
          << (violation->kind == OverlapKind::ProperFactor ? "E1" : "E2") << ": Y=" << violation->y.render(alphabet)
          << " Z=" << violation->z.render(alphabet) << " U=" << violation->overlap().render(alphabet) << '\n';
    }
    return violation ? kFinding : kOk;
  }
  json report{{"words", words.size()}, {"pass", !violation.has_value()}};
  if (violation) {
    report["violation"] = {{"kind", violation->kind == OverlapKind::ProperFactor ? "E1" : "E2"},
                           {"y", violation->y.render(alphabet)},
                           {"z", violation->z.render(alphabet)},
                           {"u", violation->overlap().render(alphabet)},
                           {"offset", violation->offset}};
  }
  out << with_seed(report, cfg).dump(2) << '\n';
  return violation ? kFinding : kOk;
}

int cmd_factorize(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {Format::Json, Format::Text});
  auto code = code_from_json(load_json(cfg.input));
  auto word = Word::parse(cfg.word, code.alphabet());
  auto result = code.factorize(word);
  if (cfg.format == Format::Text) {
    if (!result.ok()) {
      out << "not factorizable at position " << *result.failed_at << '\n';
    } else {
      for (auto i : result.factors) out << code.word(i).render(code.alphabet()) << '\n';
    }
    return result.ok() ? kOk : kFinding;
  }
  json report{{"word", word.render(code.alphabet())}, {"factorizable", result.ok()}};
  if (result.ok()) {
    json factors = json::array();
    for (auto i : result.factors) factors.push_back(code.word(i).render(code.alphabet()));
    report["factors"] = factors;
  } else {
    report["failed_at"] = *result.failed_at;
  }
  out << with_seed(report, cfg).dump(2) << '\n';
  return result.ok() ? kOk : kFinding;
}

int cmd_validate(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {Format::Json, Format::Text});
  auto parsed = parse_semigroup_file(load_json(cfg.input));
  json report;
  bool finding = false;
  if (parsed.violation) {
    const auto& v = *parsed.violation;
    report["associative"] = false;
    report["violation"] = {parsed.names[v.x], parsed.names[v.y], parsed.names[v.z]};
    finding = true;
  } else {
    const auto& file = *parsed.file;
    const auto& s = file.semigroup;
    report["associative"] = true;
    report["order"] = s.order();
    if (file.length) {
      auto witness = check_d(s, file.length->values());
      json d1 = json::array();
      for (auto [g, h] : witness.d1_violations) d1.push_back({s.name(g), s.name(h)});
      report["d1_violations"] = d1;
      report["d2_witness"] = witness.d2_witness_a;
      finding = finding || !witness.holds();
    }
    if (file.generators) {
      auto lengths = word_lengths(s, *file.generators);
      json wl = json::object();
      bool generates = true;
      for (Element g = 0; g < s.order(); ++g) {
        if (lengths[g]) {
          wl[s.name(g)] = *lengths[g];
        } else {
          wl[s.name(g)] = nullptr;
          generates = false;
        }
      }
      report["word_length"] = wl;
      report["generates"] = generates;
      finding = finding || !generates;
    }
  }
  report["verdict"] = finding ? "violation" : "ok";
  if (cfg.format == Format::Text) {
    out << "verdict: " << report["verdict"].get<std::string>() << '\n';
    if (report.contains("d1_violations")) {
      for (const auto& p : report["d1_violations"]) {
        out << "D1 violation: (" << p[0].get<std::string>() << ", " << p[1].get<std::string>() << ")\n";
      }
      out << "D2 witness a = " << report["d2_witness"] << '\n';
    }
  } else {
    out << with_seed(report, cfg).dump(2) << '\n';
  }
  return finding ? kFinding : kOk;
}

Assignment make_assignment(const FiniteSemigroup& s, std::span<const Length> l, const RunConfig& cfg) {
  if (parse_mode(cfg.mode) == AssignmentMode::Exact) return assign_exact(s, l);
  return assign_equiv(s, l, m_code_for(l), parse_d(cfg));
}

int cmd_embed(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  require_format(cfg, {Format::Json, Format::Csv, Format::Text});
  auto file = load_semigroup(cfg.input, err);
  const auto& s = file.semigroup;
  auto l = require_length(file);
  if (auto d1 = check_d1(s, l); !d1.empty()) {
    err << "length function violates (D1) at (" << s.name(d1.front().left) << ", " << s.name(d1.front().right)
        << ")\n";
    return kFinding;
  }
  auto asg = make_assignment(s, l, cfg);
  auto presentation = build_presentation(s, asg);
  auto table = length_in_h(s, asg);
  auto verdict = verify_theorem1(l, asg, table);

  if (cfg.format == Format::Csv) {
    out << "element,l,codeword_length,cost\n";
    for (Element g = 0; g < s.order(); ++g) {
      out << s.name(g) << ',' << l[g] << ',' << asg.codeword(g).length() << ',' << table.cost[g] << '\n';
    }
  } else if (cfg.format == Format::Text) {
    for (Element g = 0; g < s.order(); ++g) {
      out << s.name(g) << ": l=" << l[g] << " X=" << asg.codeword(g).render(asg.code().alphabet())
          << " cost=" << table.cost[g] << '\n';
    }
    out << (verdict.passed() ? (asg.mode() == AssignmentMode::Exact ? "pass: cost = l\n" : "pass: l <= cost <= d*l\n")
                             : "FAIL\n");
  } else {
    json report;
    report["assignment"] = assignment_to_json(s, asg);
    report["presentation"] = presentation_to_json(s, presentation);
    report["length_table"] = length_table_to_json(s, table);
    report["verification"] = theorem1_to_json(s, verdict);
    json constants{{"c1", to_string(verdict.constants.lower)}, {"c2", to_string(verdict.constants.upper)}};
    if (asg.d()) constants["d"] = to_string(*asg.d());
    report["constants"] = constants;
    report["verdict"] = verdict.passed() ? (asg.mode() == AssignmentMode::Exact ? "cost = l" : "l <= cost <= d*l")
                                         : "verification failure";
    out << with_seed(report, cfg).dump(2) << '\n';
  }
  return verdict.passed() ? kOk : kFinding;
}

int cmd_orbit(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  require_format(cfg, {Format::Json, Format::Text});
  auto file = load_semigroup(cfg.input, err);
  const auto& s = file.semigroup;
  auto l = require_length(file);
  auto asg = make_assignment(s, l, cfg);
  auto presentation = build_presentation(s, asg);
  auto table = length_in_h(s, asg);
  auto caps = OrbitCaps::defaults_for(asg);
  if (cfg.length_cap) caps.length_cap = *cfg.length_cap;
  caps.state_cap = cfg.state_cap;

  auto orbits = element_orbits(presentation, asg, caps);
  bool finding = false;
  bool all_saturated = true;
  json elements = json::object();
  for (Element g = 0; g < s.order(); ++g) {
    const auto& orbit = orbits[g];
    json e = orbit_to_json(orbit, asg.code().alphabet());
    e["cost"] = table.cost[g];
    bool agrees = orbit.min_word.length() == table.cost[g];
    e["oracle_agrees"] = agrees;
    auto lw = verify_lemma_lw(orbit, asg.image());
    e["lemma_lw"] = !lw.has_value();
    if (lw) e["lw_counterexample"] = lw->render(asg.code().alphabet());
    all_saturated = all_saturated && orbit.saturated;
    if (orbit.saturated && !agrees) finding = true;
    if (lw) finding = true;
    elements[s.name(g)] = e;
    if (cfg.verbose && cfg.format == Format::Text) {
      for (std::size_t depth = 0; depth < orbit.depth_counts.size(); ++depth) {
        out << s.name(g) << " depth " << depth << ": " << orbit.depth_counts[depth] << '\n';
      }
    }
  }
  auto breach = verify_gamma_injective(s, asg, orbits);
  if (breach) finding = true;

  if (cfg.format == Format::Text) {
    for (Element g = 0; g < s.order(); ++g) {
      const auto& e = elements[s.name(g)];
      out << s.name(g) << ": orbit " << e["size"] << " words, min " << e["min_length"] << ", cost " << e["cost"]
          << (e["saturated"].get<bool>() ? "" : " (unsaturated)") << '\n';
    }
    out << (finding ? "FAIL\n" : "pass\n");
  } else {
    json report;
    report["mode"] = std::string(mode_name(asg.mode()));
    report["elements"] = elements;
    report["all_saturated"] = all_saturated;
    report["gamma_injective"] = !breach.has_value();
    if (breach) {
      report["gamma_breach"] = {{"element", s.name(breach->element)},
                                {"word", breach->word.render(asg.code().alphabet())}};
    }
    report["verdict"] = finding ? "violation" : "ok";
    out << with_seed(report, cfg).dump(2) << '\n';
  }
  return finding ? kFinding : kOk;
}

std::vector<Length> load_table(const std::string& path) {
  auto doc = load_json(path);
  if (doc.is_object() && doc.contains("l")) doc = doc["l"];
  if (!doc.is_array() || doc.empty()) throw InputError(path + ": expected a nonempty array of lengths");
  std::vector<Length> values;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    if (!doc[i].is_number_integer()) {
      throw InputError(path + ": entry " + std::to_string(i + 1) + " is not an integer");
    }
    auto v = doc[i].get<std::int64_t>();
    if (v <= 0) throw NonPositiveValue(i + 1);
    values.push_back(static_cast<Length>(v));
  }
  return values;
}

int cmd_cyclic(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.formula.empty() == cfg.table.empty()) throw InputError("give exactly one of --formula or --table");
  CyclicInstance inst = [&] {
    try {
      if (!cfg.formula.empty()) {
        if (cfg.imax == 0) throw InputError("--imax is required with --formula");
        return make_cyclic(parse_formula(cfg.formula), cfg.imax);
      }
      auto values = load_table(cfg.table);
      if (cfg.imax > 0 && cfg.imax < values.size()) values.resize(cfg.imax);
      return make_cyclic(std::move(values), cfg.table);
    } catch (const NonPositiveValue& e) {
      throw InputError(e.what());
    }
  }();
  auto asg = assign_cyclic(inst, parse_mode(cfg.mode), parse_d(cfg));
  auto cost = cyclic_length_table(inst, asg);
  auto report = distortion_report(inst, cost);

  bool reproduces = true;
  for (std::size_t i = 1; i <= inst.i_max; ++i) {
    const auto c = cost[i - 1];
    if (asg.mode() == AssignmentMode::Exact) {
      reproduces = reproduces && c == inst.l(i);
    } else {
      reproduces = reproduces && c >= inst.l(i) &&
                   Rational(static_cast<std::int64_t>(c)) <= *asg.d() * Rational(static_cast<std::int64_t>(inst.l(i)));
    }
  }
  if (inst.growth.growing()) {
    err << "warning: (C2) witness grows from " << inst.growth.half_witness << " to " << inst.growth.witness
        << "; the untruncated sequence likely violates (C2)\n";
  }

  if (cfg.format == Format::Csv) {
    out << "i,l,cost,ratio\n";
    for (const auto& row : report.rows) {
      out << row.i << ',' << row.l << ',' << row.cost << ',' << to_string(row.ratio) << '\n';
    }
  } else if (cfg.format == Format::Text) {
    out << inst.source << ", i_max = " << inst.i_max << '\n';
    out << "cost vs l: c1 = " << to_string(report.cost_vs_l.lower) << ", c2 = " << to_string(report.cost_vs_l.upper)
        << '\n';
    out << (report.distorted ? "distorted at truncation scale\n" : "undistorted at truncation scale\n");
    out << (reproduces ? "pass\n" : "FAIL\n");
  } else {
    json summary = distortion_to_json(inst, report);
    summary["mode"] = std::string(mode_name(asg.mode()));
    if (asg.d()) summary["d"] = to_string(*asg.d());
    summary["reproduces_l"] = reproduces;
    json rows = json::array();
    for (const auto& row : report.rows) rows.push_back({row.i, row.l, row.cost, to_string(row.ratio)});
    summary["rows"] = rows;
    out << with_seed(summary, cfg).dump(2) << '\n';
  }
  return reproduces ? kOk : kFinding;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Length-function embeddings of finite semigroups", "semilen"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "json";
  app.add_option("--format", format, "json | csv | text")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--seed", cfg.seed, "Recorded in every report");
  app.add_flag("-v,--verbose", cfg.verbose, "Per-depth orbit counts");

  auto* gen = app.add_subcommand("gen-words", "Enumerate M or build a guarded exact-length code");
  gen->add_option("--max-len", cfg.max_len, "Enumerate M up to this length");
  gen->add_option("--demand", cfg.demand, "Guarded code demand, e.g. 8:1,9:1");

  auto* overlap = app.add_subcommand("check-overlap", "Check the overlap property of a code file");
  overlap->add_option("code", cfg.input, "Code JSON")->required();

  auto* fact = app.add_subcommand("factorize", "Factor a word over a code");
  fact->add_option("code", cfg.input, "Code JSON")->required();
  fact->add_option("word", cfg.word, "Word, e.g. b1b1b1b2b1b2b2b2")->required();

  auto* validate = app.add_subcommand("validate", "Check associativity and the (D) conditions");
  validate->add_option("semigroup", cfg.input, "Semigroup JSON")->required();

  auto add_embedding_flags = [&](CLI::App* sub) {
    sub->add_option("semigroup", cfg.input, "Semigroup JSON")->required();
    sub->add_option("--mode", cfg.mode, "exact | equiv")->check(CLI::IsMember({"exact", "equiv"}));
    sub->add_option("--d", cfg.d, "Fixed constant d for equiv mode");
  };
  auto* embed = app.add_subcommand("embed", "Assign codewords, build the presentation, verify lengths");
  add_embedding_flags(embed);

  auto* orbit = app.add_subcommand("orbit", "Explore relation orbits of every codeword");
  add_embedding_flags(orbit);
  orbit->add_option("--length-cap", cfg.length_cap, "Longest word kept (default 2*max ||X_g||)");
  orbit->add_option("--state-cap", cfg.state_cap, "Most words kept per orbit");

  auto* cyclic = app.add_subcommand("cyclic", "Realise a subadditive sequence as |g^i|");
  cyclic->add_option("--formula", cfg.formula, "pow:<a> | pow:pi-e | lin:<b> | log2");
  cyclic->add_option("--table", cfg.table, "JSON array of l(1..i_max)");
  cyclic->add_option("--imax", cfg.imax, "Truncation point");
  cyclic->add_option("--mode", cfg.mode, "exact | equiv")->check(CLI::IsMember({"exact", "equiv"}));
  cyclic->add_option("--d", cfg.d, "Fixed constant d for equiv mode");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  cfg.format = format == "csv" ? Format::Csv : format == "text" ? Format::Text : Format::Json;
  cfg.subcommand = app.get_subcommands().front()->get_name();

  try {
    if (cfg.subcommand == "gen-words") return cmd_gen_words(cfg, out);
    if (cfg.subcommand == "check-overlap") return cmd_check_overlap(cfg, out);
    if (cfg.subcommand == "factorize") return cmd_factorize(cfg, out);
    if (cfg.subcommand == "validate") return cmd_validate(cfg, out);
    if (cfg.subcommand == "embed") return cmd_embed(cfg, out, err);
    if (cfg.subcommand == "orbit") return cmd_orbit(cfg, out, err);
    if (cfg.subcommand == "cyclic") return cmd_cyclic(cfg, out, err);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const OverlapError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const C1Violation& e) {
    err << "violation: " << e.what() << '\n';
    return kFinding;
  } catch (const InfeasibleAssignment& e) {
    err << "infeasible: " << e.what() << '\n';
    return kFinding;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kFinding;
  }
  return kInputError;
}

}  // namespace semilen::cli
