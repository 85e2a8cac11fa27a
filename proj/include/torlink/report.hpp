#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "torlink/braid.hpp"
#include "torlink/constructions.hpp"
#include "torlink/families.hpp"
#include "torlink/linking.hpp"
#include "torlink/presentation.hpp"
#include "torlink/properties.hpp"
#include "torlink/tables.hpp"
#include "torlink/verdict.hpp"

// JSON serialization. Every document carries "schema": 1. Strand, block and
// component indices are 1-based in JSON and 0-based in memory.

namespace torlink {

using Json = nlohmann::json;

inline constexpr int kReportSchema = 1;

struct ReportInput {
  BraidWord braid_a{1};
  BraidWord braid_b{1};
  std::optional<FamilySpec> family;
  std::optional<long long> N;  // set when b = Delta^{2N}

  friend bool operator==(ReportInput const&, ReportInput const&) = default;
};

struct Report {
  std::string command;
  ReportInput input;
  std::optional<ComponentData> components;
  std::optional<LinkingMatrix> lk_a;
  std::optional<LinkingMatrix> lk_b;
  std::optional<InvariantReport> invariants;
  std::optional<Presentation> group;
  std::optional<AbelianVerdict> verdict;
  double elapsed_ms = 0;

  friend bool operator==(Report const&, Report const&) = default;
};

namespace detail {

inline std::vector<int> shifted(std::vector<int> v, int by) {
  for (int& x : v) {
    x += by;
  }
  return v;
}

inline std::vector<std::vector<int>> shifted(
    std::vector<std::vector<int>> const& v, int by) {
  std::vector<std::vector<int>> out;
  for (auto const& x : v) {
    out.push_back(shifted(x, by));
  }
  return out;
}

inline std::vector<std::vector<std::vector<int>>> shifted(
    std::vector<std::vector<std::vector<int>>> const& v, int by) {
  std::vector<std::vector<std::vector<int>>> out;
  for (auto const& x : v) {
    out.push_back(shifted(x, by));
  }
  return out;
}

inline void require_schema(Json const& j) {
  if (!j.contains("schema") || j.at("schema").get<int>() != kReportSchema) {
    throw InputError("unsupported report schema");
  }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Building blocks
// ---------------------------------------------------------------------------

inline void to_json(Json& j, BraidWord const& b) {
  j = Json{{"strands", b.strands()}, {"letters", b.letters()},
           {"word", to_string(b)}};
}

inline void from_json(Json const& j, BraidWord& b) {
  b = BraidWord(j.at("strands").get<int>(),
                j.at("letters").get<std::vector<int>>());
}

inline void to_json(Json& j, FamilySpec const& f) {
  j = Json{{"tag", tag_name(f.tag)},
           {"k", f.k},
           {"l", f.l},
           {"e", signs_to_string(f.e)},
           {"N", f.N},
           {"strands", f.strands},
           {"variant", variant_name(f.variant)},
           {"name", describe(f)}};
}

inline void from_json(Json const& j, FamilySpec& f) {
  f.tag = parse_tag(j.at("tag").get<std::string>());
  f.k = j.at("k").get<int>();
  f.l = j.at("l").get<int>();
  f.e = parse_signs(j.at("e").get<std::string>());
  f.N = j.at("N").get<long long>();
  f.strands = j.at("strands").get<int>();
  f.variant = parse_variant(j.at("variant").get<std::string>());
}

inline void to_json(Json& j, ComponentData const& cd) {
  j = Json{{"strands", cd.strands},
           {"n", cd.n()},
           {"degrees", cd.degrees},
           {"orbits", detail::shifted(cd.orbits, 1)},
           {"a_cycles", detail::shifted(cd.a_cycles, 1)},
           {"b_cycles", detail::shifted(cd.b_cycles, 1)}};
}

inline void from_json(Json const& j, ComponentData& cd) {
  cd.strands = j.at("strands").get<int>();
  cd.degrees = j.at("degrees").get<std::vector<int>>();
  cd.orbits =
      detail::shifted(j.at("orbits").get<std::vector<std::vector<int>>>(), -1);
  cd.a_cycles = detail::shifted(
      j.at("a_cycles").get<std::vector<std::vector<std::vector<int>>>>(), -1);
  cd.b_cycles = detail::shifted(
      j.at("b_cycles").get<std::vector<std::vector<std::vector<int>>>>(), -1);
  cd.block_of.assign(static_cast<std::size_t>(cd.strands), -1);
  for (std::size_t b = 0; b < cd.orbits.size(); ++b) {
    for (int s : cd.orbits[b]) {
      if (s < 0 || s >= cd.strands) {
        throw InputError("orbit strand out of range");
      }
      cd.block_of[static_cast<std::size_t>(s)] = static_cast<int>(b);
    }
  }
}

inline void to_json(Json& j, LinkingMatrix const& lk) {
  std::vector<std::vector<long long>> rows;
  for (int i = 0; i < lk.n(); ++i) {
    rows.emplace_back();
    for (int k = 0; k < lk.n(); ++k) {
      rows.back().push_back(lk(i, k));
    }
  }
  j = Json{{"direction", std::string(1, direction_name(lk.direction()))},
           {"entries", rows}};
}

inline void from_json(Json const& j, LinkingMatrix& lk) {
  auto rows = j.at("entries").get<std::vector<std::vector<long long>>>();
  Direction d = j.at("direction").get<std::string>() == "a" ? Direction::a
                                                             : Direction::b;
  lk = LinkingMatrix(static_cast<int>(rows.size()), d);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) {
      throw InputError("linking matrix is not square");
    }
    for (std::size_t k = 0; k < rows.size(); ++k) {
      lk(static_cast<int>(i), static_cast<int>(k)) = rows[i][k];
    }
  }
}

inline void to_json(Json& j, TlkTensor const& t) {
  j = Json::array();
  for (int i = 0; i < t.n(); ++i) {
    Json plane = Json::array();
    for (int k = 0; k < t.n(); ++k) {
      std::vector<long long> row;
      for (int l = 0; l < t.n(); ++l) {
        row.push_back(t(i, k, l));
      }
      plane.push_back(row);
    }
    j.push_back(plane);
  }
}

inline void from_json(Json const& j, TlkTensor& t) {
  int const n = static_cast<int>(j.size());
  t = TlkTensor(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      for (int l = 0; l < n; ++l) {
        t(i, k, l) = j.at(static_cast<std::size_t>(i))
                         .at(static_cast<std::size_t>(k))
                         .at(static_cast<std::size_t>(l))
                         .get<long long>();
      }
    }
  }
}

inline void to_json(Json& j, InvariantReport const& r) {
  j = Json{{"tlk", r.tlk},
           {"triple_point_lower_bound", r.triple_point_lower_bound},
           {"peripheral", r.peripheral}};
  if (r.full_twist_exponent) {
    j["full_twist_exponent"] = *r.full_twist_exponent;
  }
  if (r.dlk) {
    j["dlk"] = *r.dlk;
  }
}

inline void from_json(Json const& j, InvariantReport& r) {
  r.tlk = j.at("tlk").get<TlkTensor>();
  r.triple_point_lower_bound = j.at("triple_point_lower_bound").get<long long>();
  r.peripheral = j.at("peripheral").get<std::vector<PeripheralMatrix>>();
  r.full_twist_exponent.reset();
  r.dlk.reset();
  if (j.contains("full_twist_exponent")) {
    r.full_twist_exponent = j.at("full_twist_exponent").get<long long>();
  }
  if (j.contains("dlk")) {
    r.dlk = j.at("dlk").get<DlkMatrix>();
  }
}

inline void to_json(Json& j, Presentation const& p) {
  std::vector<std::string> relators;
  for (auto const& r : p.relators()) {
    relators.push_back(to_string(r));
  }
  j = Json{{"generators", p.generator_count()}, {"relators", relators}};
}

inline void from_json(Json const& j, Presentation& p) {
  int const m = j.at("generators").get<int>();
  p = Presentation(m);
  for (auto const& r : j.at("relators")) {
    p.add_relator(parse_free_word(r.get<std::string>(), m));
  }
}

inline void to_json(Json& j, CompletionStats const& s) {
  j = Json{{"rules", s.rules},
           {"rules_created", s.rules_created},
           {"passes", s.passes},
           {"critical_pairs", s.critical_pairs}};
}

inline void from_json(Json const& j, CompletionStats& s) {
  s.rules = j.at("rules").get<std::size_t>();
  s.rules_created = j.at("rules_created").get<std::size_t>();
  s.passes = j.at("passes").get<std::size_t>();
  s.critical_pairs = j.at("critical_pairs").get<std::size_t>();
}

inline std::string_view verdict_kind_name(AbelianVerdict::Kind k) {
  switch (k) {
    case AbelianVerdict::Kind::abelian: return "abelian";
    case AbelianVerdict::Kind::non_abelian: return "non_abelian";
    case AbelianVerdict::Kind::inconclusive: return "inconclusive";
  }
  return "?";
}

inline void to_json(Json& j, AbelianVerdict const& v) {
  j = Json{{"kind", verdict_kind_name(v.kind)},
           {"summary", to_string(v)},
           {"stats", v.stats}};
  switch (v.kind) {
    case AbelianVerdict::Kind::abelian:
      j["rank"] = v.rank;
      break;
    case AbelianVerdict::Kind::non_abelian:
      j["generators"] = v.witness->rank();
      j["witness"] = to_string(*v.witness);
      j["witness_normal_form"] = to_string(*v.witness_normal_form);
      break;
    case AbelianVerdict::Kind::inconclusive:
      j["cap"] = cap_name(v.cap);
      break;
  }
}

inline void from_json(Json const& j, AbelianVerdict& v) {
  v = AbelianVerdict{};
  std::string const kind = j.at("kind").get<std::string>();
  v.stats = j.at("stats").get<CompletionStats>();
  if (kind == "abelian") {
    v.kind = AbelianVerdict::Kind::abelian;
    v.rank = j.at("rank").get<std::size_t>();
  } else if (kind == "non_abelian") {
    v.kind = AbelianVerdict::Kind::non_abelian;
    int const m = j.at("generators").get<int>();
    v.witness = parse_free_word(j.at("witness").get<std::string>(), m);
    v.witness_normal_form =
        parse_free_word(j.at("witness_normal_form").get<std::string>(), m);
  } else if (kind == "inconclusive") {
    v.kind = AbelianVerdict::Kind::inconclusive;
    std::string const cap = j.at("cap").get<std::string>();
    for (CapHit c : {CapHit::none, CapHit::rules, CapHit::length,
                     CapHit::passes}) {
      if (cap_name(c) == cap) {
        v.cap = c;
      }
    }
  } else {
    throw InputError("unknown verdict kind '" + kind + "'");
  }
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

inline void to_json(Json& j, Report const& r) {
  Json input{{"braid_a", r.input.braid_a}, {"braid_b", r.input.braid_b}};
  if (r.input.family) {
    input["family"] = *r.input.family;
  }
  if (r.input.N) {
    input["N"] = *r.input.N;
  }
  j = Json{{"schema", kReportSchema},
           {"command", r.command},
           {"input", input},
           {"elapsed_ms", r.elapsed_ms}};
  if (r.components) j["components"] = *r.components;
  if (r.lk_a) j["lk_a"] = *r.lk_a;
  if (r.lk_b) j["lk_b"] = *r.lk_b;
  if (r.invariants) j["invariants"] = *r.invariants;
  if (r.group) j["group"] = *r.group;
  if (r.verdict) j["verdict"] = *r.verdict;
}

inline void from_json(Json const& j, Report& r) {
  detail::require_schema(j);
  r = Report{};
  r.command = j.at("command").get<std::string>();
  r.elapsed_ms = j.at("elapsed_ms").get<double>();
  Json const& in = j.at("input");
  r.input.braid_a = in.at("braid_a").get<BraidWord>();
  r.input.braid_b = in.at("braid_b").get<BraidWord>();
  if (in.contains("family")) r.input.family = in.at("family").get<FamilySpec>();
  if (in.contains("N")) r.input.N = in.at("N").get<long long>();
  if (j.contains("components")) r.components = j.at("components").get<ComponentData>();
  if (j.contains("lk_a")) r.lk_a = j.at("lk_a").get<LinkingMatrix>();
  if (j.contains("lk_b")) r.lk_b = j.at("lk_b").get<LinkingMatrix>();
  if (j.contains("invariants")) r.invariants = j.at("invariants").get<InvariantReport>();
  if (j.contains("group")) r.group = j.at("group").get<Presentation>();
  if (j.contains("verdict")) r.verdict = j.at("verdict").get<AbelianVerdict>();
}

inline std::string serialize(Report const& r, int indent = 2) {
  return Json(r).dump(indent);
}

inline Report parse_report(std::string const& text) {
  return Json::parse(text).get<Report>();
}

// ---------------------------------------------------------------------------
// Tables, constructions, feasibility, properties (output only, except the
// construction record, which round-trips)
// ---------------------------------------------------------------------------

inline void to_json(Json& j, TableCell const& c) {
  j = Json{{"row", c.row},           {"column", c.column},
           {"computed", c.computed}, {"expected", c.expected},
           {"match", c.match}};
  if (!c.label.empty()) {
    j["label"] = c.label;
  }
}

inline void to_json(Json& j, TableDiff const& d) {
  j = Json{{"schema", kReportSchema},
           {"table", d.id},
           {"cells", d.cells},
           {"mismatches", d.mismatches()}};
}

inline std::string_view step_kind_name(ConstructionStep::Kind k) {
  return k == ConstructionStep::Kind::component ? "component" : "commutator";
}

inline void to_json(Json& j, ConstructionStep const& s) {
  j = Json{{"kind", step_kind_name(s.kind)}, {"i", s.i},
           {"j", s.j},                       {"component", s.component},
           {"genus", s.genus},               {"text", s.describe()}};
}

inline void from_json(Json const& j, ConstructionStep& s) {
  s.kind = j.at("kind").get<std::string>() == "component"
               ? ConstructionStep::Kind::component
               : ConstructionStep::Kind::commutator;
  s.i = j.at("i").get<int>();
  s.j = j.at("j").get<int>();
  s.component = j.at("component").get<int>();
  s.genus = j.at("genus").get<long long>();
}

inline void to_json(Json& j, ConstructionRecord const& r) {
  j = Json{{"schema", kReportSchema},
           {"name", r.name},
           {"rank", r.rank()},
           {"total_genus", r.total_genus()},
           {"component_genera", r.component_genera},
           {"steps", r.steps},
           {"presentation", r.presentation}};
}

inline void from_json(Json const& j, ConstructionRecord& r) {
  detail::require_schema(j);
  r.name = j.at("name").get<std::string>();
  r.component_genera = j.at("component_genera").get<std::vector<long long>>();
  r.steps = j.at("steps").get<std::vector<ConstructionStep>>();
  r.presentation = j.at("presentation").get<Presentation>();
}

inline void to_json(Json& j, FeasibilityResult const& f) {
  j = Json{{"schema", kReportSchema},
           {"feasible", f.feasible},
           {"summary", f.explain()}};
  if (!f.feasible) {
    j["prefix"] = f.prefix;
    j["lhs"] = f.lhs;
    j["rhs"] = f.rhs;
  }
}

inline void to_json(Json& j, PropertyResult const& p) {
  j = Json{{"name", p.name},
           {"cases", p.cases},
           {"failures", p.failures},
           {"first_failure", p.first_failure}};
}

}  // namespace torlink
