// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance                 run criteria 1..8
//   acceptance --criterion N   run one criterion
//
// Exit status is 0 iff every criterion run passed.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "torlink/torlink.hpp"

using namespace torlink;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string row_family(std::string const& row) { return row.substr(0, 1); }

// "X 0/576, Y 72/576, Z 40/384" style breakdown of a diff.
std::string breakdown(TableDiff const& d) {
  std::map<std::string, std::pair<int, int>> by;
  for (auto const& c : d.cells) {
    auto& [bad, total] = by[row_family(c.row)];
    total += 1;
    bad += c.match ? 0 : 1;
  }
  std::string s;
  for (auto const& [fam, counts] : by) {
    s += (s.empty() ? "" : ", ") + fam + " " + std::to_string(counts.first)
         + "/" + std::to_string(counts.second);
  }
  return s + " cells mismatched";
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

std::string fmt_seconds(double s) {
  std::ostringstream o;
  o.precision(2);
  o << std::fixed << s << "s";
  return o.str();
}

Outcome criterion1() {
  auto t0 = std::chrono::steady_clock::now();
  TableDiff d = table1(TableRanges{3, 3, YVariant::consecutive});
  double elapsed = seconds_since(t0);
  TableDiff v = table1(TableRanges{3, 3, YVariant::verbatim});
  bool pass = d.all_match() && elapsed < 10.0;
  return {pass, "consecutive Y: " + breakdown(d) + "; verbatim Y: "
                    + std::to_string(v.mismatches()) + " mismatches; "
                    + fmt_seconds(elapsed)};
}

Outcome criterion2() {
  TableDiff d = table3(TableRanges{3, 3, YVariant::consecutive});
  return {d.all_match(), breakdown(d)};
}

Outcome criterion3() {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<std::pair<FamilySpec, std::size_t>> cases;
  for (auto const& f : table_rows(TableRanges{3, 3, YVariant::consecutive})) {
    cases.emplace_back(f, 4);
  }
  for (int k : {3, 5, 7}) {
    for (FamilyTag t : {FamilyTag::P, FamilyTag::Q}) {
      FamilySpec f;
      f.tag = t;
      f.k = k;
      cases.emplace_back(f, 3);
    }
  }
  int bad = 0;
  int inconclusive = 0;
  std::string first;
  for (auto const& [f, rank] : cases) {
    BraidWord a = make_family(f);
    AbelianVerdict v =
        abelian_verdict(link_group(a, full_twist(a.strands())));
    if (!v.is_abelian() || v.rank != rank) {
      ++bad;
      inconclusive += v.kind == AbelianVerdict::Kind::inconclusive ? 1 : 0;
      if (first.empty()) {
        first = "; first: " + describe(f) + " -> " + to_string(v);
      }
    }
  }
  double elapsed = seconds_since(t0);
  return {bad == 0 && elapsed < 60.0,
          std::to_string(cases.size() - static_cast<std::size_t>(bad)) + "/"
              + std::to_string(cases.size()) + " certified, "
              + std::to_string(inconclusive) + " inconclusive" + first + "; "
              + fmt_seconds(elapsed)};
}

Outcome criterion4() {
  bool pass = true;
  std::string detail;
  for (int k : {3, 5, 7}) {
    FamilySpec fp;
    fp.tag = FamilyTag::P;
    fp.k = k;
    FamilySpec fq = fp;
    fq.tag = FamilyTag::Q;
    BraidWord p = make_family(fp);
    BraidWord q = make_family(fq);
    LinkAnalysis ap = analyze(p, full_twist(p.strands()));
    LinkAnalysis aq = analyze(q, full_twist(q.strands()));
    auto triple = [](TlkTensor const& t) {
      return std::array<long long, 3>{t(0, 1, 2), t(1, 2, 0), t(2, 0, 1)};
    };
    auto pairs = [](DlkMatrix const& d) {
      return std::array<int, 3>{d[0][1], d[1][2], d[0][2]};
    };
    std::array<long long, 3> want_t{1 - k, k, -1};
    std::array<int, 3> want_d{1, 1, 0};
    bool ok = ap.components.n() == 3 && aq.components.n() == 3
              && triple(ap.invariants.tlk) == want_t
              && triple(aq.invariants.tlk) == want_t
              && pairs(*ap.invariants.dlk) == want_d
              && pairs(*aq.invariants.dlk) == want_d;
    auto lattice = [](LinkAnalysis const& a) {
      return peripheral_rows_without_self(a.invariants.peripheral[2], 2);
    };
    bool in_p = lattice_contains(lattice(ap), std::vector<long long>{0, 1});
    bool in_q = lattice_contains(lattice(aq), std::vector<long long>{0, 1});
    ok = ok && in_p && !in_q;
    pass = pass && ok;
    detail += (detail.empty() ? "" : "; ") + std::string("k=")
              + std::to_string(k) + (ok ? " ok" : " mismatch");
  }
  return {pass, detail};
}

Outcome criterion5() {
  TableDiff d = table2(YVariant::consecutive);
  bool pass = true;
  std::string detail;
  for (auto const& c : d.cells) {
    if (c.label == "equal") {
      pass = pass && c.match;
      if (!c.match) {
        detail += c.row + " computed " + std::to_string(c.computed)
                  + " vs " + std::to_string(c.expected) + "; ";
      }
    } else {
      detail += c.row + " bound " + std::to_string(c.computed)
                + " (lower-bound-only); ";
    }
  }
  return {pass, detail + std::to_string(d.cells.size()) + " rows"};
}

Outcome criterion6() {
  std::vector<std::string> fails;
  auto expect = [&](bool cond, std::string const& what) {
    if (!cond) {
      fails.push_back(what);
    }
  };
  expect(genus_rank_feasible(GenusProfile({1, 1, 1, 1})), "(1,1,1,1)");
  expect(!genus_rank_feasible(GenusProfile({1, 1, 1, 1, 1})), "(1,1,1,1,1)");
  expect(!genus_rank_feasible(GenusProfile({0, 0})), "(0,0)");
  expect(genus_rank_feasible(GenusProfile({0, 1})), "(0,1)");
  for (int n = 1; n <= 8; ++n) {
    ConstructionRecord r = plus_tower(n);
    expect(r.total_genus() == n * (n - 1) / 2,
           "plus_tower(" + std::to_string(n) + ") genus");
    AbelianVerdict v = abelian_verdict(r.presentation);
    expect(v.is_abelian() && v.rank == static_cast<std::size_t>(n),
           "plus_tower(" + std::to_string(n) + ") verdict");
  }
  for (int n = 5; n <= 9; ++n) {
    ConstructionRecord r = highgenus(n);
    std::string tag = "highgenus(" + std::to_string(n) + ")";
    expect(r.total_genus() == (n * n - 3 * n + 4) / 2, tag + " genus");
    expect(r.commutator_steps() - 1
               == static_cast<std::size_t>((n * n - 5 * n + 2) / 2),
           tag + " steps");
    AbelianVerdict v = abelian_verdict(r.presentation);
    expect(v.is_abelian() && v.rank == static_cast<std::size_t>(n),
           tag + " verdict");
  }
  std::string detail = fails.empty() ? "all checks hold" : "failed:";
  for (auto const& f : fails) {
    detail += " " + f;
  }
  return {fails.empty(), detail};
}

Outcome criterion7() {
  auto results = run_all_properties(20261017, 200);
  bool pass = true;
  std::string detail;
  int total = 0;
  for (auto const& r : results) {
    pass = pass && r.ok() && r.cases >= 200;
    total += r.cases;
    if (!r.ok()) {
      detail += r.name + ": " + r.first_failure + "; ";
    }
  }
  return {pass, detail + std::to_string(results.size()) + " suites, "
                    + std::to_string(total) + " cases"};
}

Outcome criterion8() {
  bool pass = true;
  for (int m = 3; m <= 7; ++m) {
    ArtinAutomorphism phi(partial_full_twist(m));
    FreeWord c = generator_product(m, 1, m - 1);
    for (int i = 1; i <= m; ++i) {
      FreeWord x = FreeWord::generator(m, i);
      FreeWord want = i < m ? x.conjugated_by(c) : x;
      pass = pass && phi.image(i) == want;
    }
  }
  return {pass, "m = 3..7"};
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::function<Outcome()>> criteria{
      criterion1, criterion2, criterion3, criterion4,
      criterion5, criterion6, criterion7, criterion8};
  std::vector<int> which;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) {
      int c = std::atoi(argv[++i]);
      if (c < 1 || c > 8) {
        std::cerr << "criterion must be 1..8\n";
        return 2;
      }
      which.push_back(c);
    } else {
      std::cerr << "usage: acceptance [--criterion N]\n";
      return 2;
    }
  }
  if (which.empty()) {
    for (int c = 1; c <= 8; ++c) {
      which.push_back(c);
    }
  }
  bool all = true;
  for (int c : which) {
    Outcome o;
    try {
      o = criteria[static_cast<std::size_t>(c - 1)]();
    } catch (std::exception const& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    all = all && o.pass;
    std::cout << "criterion " << c << ": " << (o.pass ? "PASS" : "FAIL")
              << " - " << o.detail << std::endl;
  }
  return all ? 0 : 1;
}
