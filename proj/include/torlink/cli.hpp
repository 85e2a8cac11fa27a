#pragma once

#include <chrono>
#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "torlink/constructions.hpp"
#include "torlink/properties.hpp"
#include "torlink/report.hpp"
#include "torlink/tables.hpp"
#include "torlink/verdict.hpp"

// The torlink command line. run_cli returns the exit status: 0 success,
// 1 computation error, 2 usage error.

namespace torlink {

namespace cli {

inline constexpr int kOk = 0;
inline constexpr int kComputationError = 1;
inline constexpr int kUsageError = 2;

// Bad flag values found after CLI11 parsing; exit status 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct GlobalOptions {
  bool json = false;
  std::size_t max_rules = CompletionCaps{}.max_rules;
  std::size_t max_len = CompletionCaps{}.max_len;
  std::size_t max_passes = CompletionCaps{}.max_passes;
  std::uint64_t seed = 20261017;
  std::string variant = "consecutive";

  CompletionCaps caps() const { return {max_rules, max_len, max_passes}; }
};

struct LinkOptions {
  // Unset is distinct from "", which is the identity braid.
  std::optional<std::string> braid_a;
  std::optional<std::string> braid_b;
  int strands = 0;
  std::optional<long long> N;
  std::string family;
  int k = 1;
  int l = 1;
  std::string e = "+,+,+";
};

struct LinkInput {
  ReportInput echo;
  BraidWord a{1};
  BraidWord b{1};
};

inline YVariant variant_of(GlobalOptions const& g) {
  try {
    return parse_variant(g.variant);
  } catch (Error const& e) {
    throw UsageError(std::string("--variant: ") + e.what());
  }
}

inline LinkInput resolve_link(LinkOptions const& o, GlobalOptions const& g) {
  bool const has_family = !o.family.empty();
  bool const has_a = o.braid_a.has_value();
  if (has_family == has_a) {
    throw UsageError("give exactly one of --braid-a or --family");
  }
  if (o.braid_b && o.N) {
    throw UsageError("give at most one of --braid-b or --N");
  }
  LinkInput in;
  if (has_family) {
    FamilySpec f;
    try {
      f.tag = parse_tag(o.family);
    } catch (Error const& e) {
      throw UsageError(std::string("--family: ") + e.what());
    }
    if (f.tag == FamilyTag::FullTwist || f.tag == FamilyTag::PartialFullTwist) {
      throw UsageError("--family: expected one of X, Y, Z, P, Q");
    }
    f.k = o.k;
    f.l = o.l;
    try {
      f.e = parse_signs(o.e);
    } catch (Error const& e) {
      throw UsageError(std::string("--e: ") + e.what());
    }
    f.variant = variant_of(g);
    try {
      in.a = make_family(f);
    } catch (Error const& e) {
      throw UsageError(std::string("--family: ") + e.what());
    }
    if (o.strands != 0 && o.strands != in.a.strands()) {
      throw UsageError("--strands: family " + describe(f) + " lives in B_"
                       + std::to_string(in.a.strands()));
    }
    in.echo.family = f;
  } else {
    if (o.strands < 1) {
      throw UsageError("--strands: required with --braid-a, must be >= 1");
    }
    try {
      in.a = parse_braid(*o.braid_a, o.strands);
    } catch (Error const& e) {
      throw UsageError(std::string("--braid-a: ") + e.what());
    }
  }
  int const m = in.a.strands();
  if (o.braid_b) {
    try {
      in.b = parse_braid(*o.braid_b, m);
    } catch (Error const& e) {
      throw UsageError(std::string("--braid-b: ") + e.what());
    }
  } else {
    long long const N = o.N.value_or(1);
    in.b = full_twist(m, N);
    in.echo.N = N;
  }
  in.echo.braid_a = in.a;
  in.echo.braid_b = in.b;
  return in;
}

// ---------------------------------------------------------------------------
// Text output
// ---------------------------------------------------------------------------

inline std::string join(std::vector<int> const& v, std::string const& sep,
                        int shift = 0) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out += (i ? sep : "") + std::to_string(v[i] + shift);
  }
  return out;
}

inline void print_components(std::ostream& out, ComponentData const& cd) {
  out << "components: " << cd.n() << "\n";
  out << "degrees: " << join(cd.degrees, " ") << "\n";
  auto cycles = [](std::vector<std::vector<int>> const& cs) {
    std::string s;
    for (auto const& c : cs) {
      s += "(" + join(c, " ", 1) + ")";
    }
    return s;
  };
  for (int i = 0; i < cd.n(); ++i) {
    out << "F" << i + 1 << ": strands {" << join(cd.orbits[i], ",", 1)
        << "}, a-cycles " << cycles(cd.a_cycles[i]) << ", b-cycles "
        << cycles(cd.b_cycles[i]) << "\n";
  }
}

inline void print_matrix(std::ostream& out, LinkingMatrix const& lk) {
  out << "lk^" << direction_name(lk.direction()) << ":\n";
  for (int i = 0; i < lk.n(); ++i) {
    for (int j = 0; j < lk.n(); ++j) {
      out << std::setw(5) << lk(i, j);
    }
    out << "\n";
  }
}

inline void print_dlk(std::ostream& out, DlkMatrix const& d) {
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      out << "Dlk_{" << i + 1 << "," << j + 1 << "} = " << d[i][j] << "\n";
    }
  }
}

// One line per 3-subset {i<j<k}: (Tlk_{i,j,k}, Tlk_{j,k,i}, Tlk_{k,i,j}).
inline void print_tlk(std::ostream& out, InvariantReport const& r) {
  TlkTensor const& t = r.tlk;
  for (int i = 0; i < t.n(); ++i) {
    for (int j = i + 1; j < t.n(); ++j) {
      for (int k = j + 1; k < t.n(); ++k) {
        out << "{" << i + 1 << "," << j + 1 << "," << k + 1 << "}: ("
            << t(i, j, k) << "," << t(j, k, i) << "," << t(k, i, j) << ")\n";
      }
    }
  }
  out << "triple point lower bound: " << r.triple_point_lower_bound << "\n";
}

inline std::string vec(std::vector<long long> const& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    s += (i ? "," : "") + std::to_string(v[i]);
  }
  return s + ")";
}

inline void print_peripheral(std::ostream& out, InvariantReport const& r) {
  for (std::size_t j = 0; j < r.peripheral.size(); ++j) {
    out << "F" << j + 1 << ": m -> " << vec(r.peripheral[j][0]) << ", l -> "
        << vec(r.peripheral[j][1]) << "\n";
  }
}

inline void print_table(std::ostream& out, TableDiff const& d) {
  for (auto const& c : d.cells) {
    if (d.id == 2 || !c.match) {
      out << (c.match ? "ok   " : "DIFF ") << c.row << " " << c.column
          << ": computed " << c.computed << ", printed " << c.expected;
      if (!c.label.empty()) {
        out << " [" << c.label << "]";
      }
      out << "\n";
    }
  }
  out << "table " << d.id << ": " << d.cells.size() << " cells, "
      << d.mismatches() << " mismatches\n";
}

inline void print_record(std::ostream& out, ConstructionRecord const& r) {
  out << r.name << ": rank " << r.rank() << ", total genus "
      << r.total_genus() << "\n";
  out << "component genera:";
  for (long long g : r.component_genera) {
    out << " " << g;
  }
  out << "\n";
  for (auto const& s : r.steps) {
    out << "  " << s.describe() << "\n";
  }
}

// ---------------------------------------------------------------------------
// Dispatcher
// ---------------------------------------------------------------------------

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int run(std::vector<std::string> args) {
    CLI::App app{"Invariants and link groups of torus-covering T^2-links",
                 "torlink"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--json", g_.json, "Print JSON instead of text");
    app.add_option("--max-rules", g_.max_rules, "Completion rule cap")
        ->check(CLI::PositiveNumber);
    app.add_option("--max-len", g_.max_len, "Completion word length cap")
        ->check(CLI::PositiveNumber);
    app.add_option("--max-passes", g_.max_passes, "Completion pass cap")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", g_.seed, "Seed for property sampling");
    app.add_option("--variant", g_.variant,
                   "Reading of the Y middle factor: consecutive|verbatim");

    for (char const* name :
         {"components", "lk", "dlk", "tlk", "peripheral", "group", "abelian"}) {
      add_link_command(app, name);
    }

    int table_id = 1;
    int kmax = 3;
    int lmax = 3;
    auto* tables = app.add_subcommand("tables", "Regenerate a table and diff it");
    tables->add_option("--id", table_id, "Table 1, 2 or 3")->required();
    tables->add_option("--kmax", kmax, "Largest k (1..6)");
    tables->add_option("--lmax", lmax, "Largest l (1..6)");
    tables->callback([&] { action_ = [&] { return cmd_tables(table_id, kmax, lmax); }; });

    std::string genera;
    auto* feasible = app.add_subcommand("feasible", "Genus-rank necessary condition");
    feasible->add_option("--genera", genera, "Comma-separated genera")->required();
    feasible->callback([&] { action_ = [&] { return cmd_feasible(genera); }; });

    std::optional<int> plus;
    std::optional<int> high;
    auto* construct = app.add_subcommand("construct", "Build a construction record");
    auto* plus_opt = construct->add_option("--plus", plus, "Rank of the tower");
    auto* high_opt = construct->add_option("--highgenus", high, "Rank n > 4");
    plus_opt->excludes(high_opt);
    construct->callback([&] { action_ = [&] { return cmd_construct(plus, high); }; });

    int cases = 200;
    auto* props = app.add_subcommand("properties", "Run the randomized property suites");
    props->add_option("--cases", cases, "Cases per suite")->check(CLI::PositiveNumber);
    props->callback([&] { action_ = [&] { return cmd_properties(cases); }; });

    std::reverse(args.begin(), args.end());
    try {
      app.parse(args);
    } catch (CLI::ParseError const& e) {
      int code = app.exit(e, out_, err_);
      return code == 0 ? kOk : kUsageError;
    }
    try {
      return action_();
    } catch (UsageError const& e) {
      err_ << "usage error: " << e.what() << "\n";
      return kUsageError;
    } catch (std::exception const& e) {
      err_ << "error: " << e.what() << "\n";
      return kComputationError;
    }
  }

 private:
  void add_link_command(CLI::App& app, std::string const& name) {
    auto* sub = app.add_subcommand(name, "Link command: " + name);
    sub->add_option("--braid-a", link_.braid_a, "Basis braid a");
    sub->add_option("--braid-b", link_.braid_b, "Basis braid b");
    sub->add_option("--strands", link_.strands, "Strand count m");
    sub->add_option("--N", link_.N, "b = Delta^{2N}");
    sub->add_option("--family", link_.family, "X, Y, Z, P or Q");
    sub->add_option("--k", link_.k, "Family parameter k");
    sub->add_option("--l", link_.l, "Family parameter l");
    sub->add_option("--e", link_.e, "Sign triple, e.g. +,-,+");
    sub->callback([this, name] { action_ = [this, name] { return cmd_link(name); }; });
  }

  int cmd_link(std::string const& name) {
    LinkInput const in = resolve_link(link_, g_);
    auto const start = std::chrono::steady_clock::now();
    Report r;
    r.command = name;
    r.input = in.echo;
    LinkAnalysis an = analyze(in.a, in.b);
    r.components = an.components;
    r.lk_a = an.lk_a;
    r.lk_b = an.lk_b;
    r.invariants = an.invariants;
    if (name == "dlk" && !an.invariants.dlk) {
      throw Error("Dlk is computed for b = Delta^{2N} only");
    }
    if (name == "group" || name == "abelian") {
      r.group = link_group(in.a, in.b);
    }
    if (name == "abelian") {
      r.verdict = abelian_verdict(*r.group, g_.caps());
    }
    r.elapsed_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    if (g_.json) {
      out_ << serialize(r) << "\n";
      return kOk;
    }
    if (name == "components") {
      print_components(out_, *r.components);
    } else if (name == "lk") {
      print_matrix(out_, *r.lk_a);
      print_matrix(out_, *r.lk_b);
    } else if (name == "dlk") {
      print_dlk(out_, *r.invariants->dlk);
    } else if (name == "tlk") {
      print_tlk(out_, *r.invariants);
    } else if (name == "peripheral") {
      print_peripheral(out_, *r.invariants);
    } else if (name == "group") {
      out_ << to_text(*r.group);
    } else {
      out_ << to_string(*r.verdict) << "\n";
    }
    return kOk;
  }

  int cmd_tables(int id, int kmax, int lmax) {
    if (id < 1 || id > 3) {
      throw UsageError("--id: expected 1, 2 or 3");
    }
    if (kmax < 1 || kmax > 6 || lmax < 1 || lmax > 6) {
      throw UsageError("--kmax/--lmax: expected 1..6");
    }
    TableDiff d = make_table(id, TableRanges{kmax, lmax, variant_of(g_)});
    if (g_.json) {
      out_ << Json(d).dump(2) << "\n";
    } else {
      print_table(out_, d);
    }
    return kOk;
  }

  int cmd_feasible(std::string const& text) {
    std::vector<long long> genera;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) {
      try {
        std::size_t used = 0;
        genera.push_back(std::stoll(item, &used));
        if (used != item.size()) {
          throw std::invalid_argument(item);
        }
      } catch (std::exception const&) {
        throw UsageError("--genera: '" + item + "' is not an integer");
      }
    }
    FeasibilityResult f;
    try {
      f = check_genus_rank(GenusProfile(genera));
    } catch (InputError const& e) {
      throw UsageError(std::string("--genera: ") + e.what());
    }
    if (g_.json) {
      out_ << Json(f).dump(2) << "\n";
    } else {
      out_ << f.explain() << "\n";
    }
    return kOk;
  }

  int cmd_construct(std::optional<int> plus, std::optional<int> high) {
    if (!plus && !high) {
      throw UsageError("construct needs --plus <n> or --highgenus <n>");
    }
    ConstructionRecord r;
    try {
      r = plus ? plus_tower(*plus) : highgenus(*high);
    } catch (InputError const& e) {
      throw UsageError(std::string(plus ? "--plus: " : "--highgenus: ")
                       + e.what());
    }
    AbelianVerdict v = abelian_verdict(r.presentation, g_.caps());
    if (g_.json) {
      Json j = r;
      j["verdict"] = v;
      out_ << j.dump(2) << "\n";
    } else {
      print_record(out_, r);
      out_ << "verdict: " << to_string(v) << "\n";
    }
    return kOk;
  }

  int cmd_properties(int cases) {
    auto results = run_all_properties(g_.seed, cases);
    bool ok = true;
    for (auto const& r : results) {
      ok = ok && r.ok();
    }
    if (g_.json) {
      out_ << Json{{"schema", kReportSchema}, {"seed", g_.seed},
                   {"suites", results}}
                  .dump(2)
           << "\n";
    } else {
      for (auto const& r : results) {
        out_ << (r.ok() ? "ok   " : "FAIL ") << r.name << ": " << r.cases
             << " cases, " << r.failures << " failures";
        if (!r.first_failure.empty()) {
          out_ << " (" << r.first_failure << ")";
        }
        out_ << "\n";
      }
    }
    return ok ? kOk : kComputationError;
  }

  std::ostream& out_;
  std::ostream& err_;
  GlobalOptions g_;
  LinkOptions link_;
  std::function<int()> action_;
};

}  // namespace cli

inline int run_cli(std::vector<std::string> args, std::ostream& out,
                   std::ostream& err) {
  return cli::Runner(out, err).run(std::move(args));
}

inline int run_cli(int argc, char const* const* argv, std::ostream& out,
                   std::ostream& err) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run_cli(std::move(args), out, err);
}

}  // namespace torlink
