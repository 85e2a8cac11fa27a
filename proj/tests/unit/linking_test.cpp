#include <gtest/gtest.h>

#include "torlink/torlink.hpp"

using namespace torlink;

namespace {

BraidWord family(FamilyTag tag, int k, int l = 1, SignTriple e = {1, 1, 1}) {
  FamilySpec f;
  f.tag = tag;
  f.k = k;
  f.l = l;
  f.e = e;
  return make_family(f);
}

LinkAnalysis with_twist(BraidWord const& a, long long N = 1) {
  return analyze(a, full_twist(a.strands(), N));
}

}  // namespace

TEST(Components, P3) {
  BraidWord p = family(FamilyTag::P, 3);
  ComponentData cd = components(p, full_twist(5));
  ASSERT_EQ(cd.n(), 3);
  EXPECT_EQ(cd.orbits[0], (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(cd.degrees, (std::vector<int>{3, 1, 1}));
}

TEST(Components, FullTwistPair) {
  ComponentData cd = components(full_twist(5), full_twist(5));
  EXPECT_EQ(cd.n(), 5);
  EXPECT_EQ(cd.degrees, std::vector<int>(5, 1));
}

TEST(Components, XIsFourSingletons) {
  ComponentData cd = components(family(FamilyTag::X, 1), full_twist(4));
  EXPECT_EQ(cd.n(), 4);
}

TEST(Components, InvariantsOnRandomPairs) {
  Rng rng(3);
  for (int c = 0; c < 100; ++c) {
    int m = random_int(rng, 1, 6);
    BraidWord w = random_braid(rng, m, 5);
    ComponentData cd = components(w.pow(2), w.pow(3));
    std::vector<int> seen(static_cast<std::size_t>(m), 0);
    int total = 0;
    int last_min = -1;
    for (int b = 0; b < cd.n(); ++b) {
      EXPECT_GT(cd.orbits[b].front(), last_min);
      last_min = cd.orbits[b].front();
      total += cd.degrees[b];
      for (int s : cd.orbits[b]) {
        ++seen[s];
      }
      for (auto const* dir : {&cd.a_cycles, &cd.b_cycles}) {
        EXPECT_EQ((*dir)[b].front().front(), cd.orbits[b].front());
        for (auto const& cyc : (*dir)[b]) {
          for (int s : cyc) {
            EXPECT_EQ(cd.block_of[s], b);
          }
        }
      }
    }
    EXPECT_EQ(total, m);
    EXPECT_EQ(seen, std::vector<int>(static_cast<std::size_t>(m), 1));
  }
}

TEST(Components, RejectsNonCommuting) {
  EXPECT_THROW(components(BraidWord(3, {1}), BraidWord(3, {2})),
               NotCommutingError);
}

TEST(Lk, Hopf) {
  BraidWord w(2, {1, 1});
  ComponentData cd = components(w, BraidWord(2));
  EXPECT_EQ(lk_matrix(w, cd, Direction::a)(0, 1), 1);
}

TEST(Lk, Q3ByHand) {
  // Crossings: strands 1,2 twice (+), strands 2,3 six times (+).
  BraidWord q = family(FamilyTag::Q, 3);
  ComponentData cd = components(q, BraidWord(3));
  LinkingMatrix lk = lk_matrix(q, cd, Direction::a);
  EXPECT_EQ(lk(0, 1), 1);
  EXPECT_EQ(lk(1, 2), 3);
  EXPECT_EQ(lk(0, 2), 0);
}

TEST(Lk, FullTwistDirectionIsNTimesDegree) {
  BraidWord p = family(FamilyTag::P, 5);
  for (long long N : {-2, 1, 3}) {
    ComponentData cd = components(p, full_twist(p.strands(), N));
    LinkingMatrix lk = lk_matrix(full_twist(p.strands(), N), cd, Direction::b);
    for (int i = 0; i < cd.n(); ++i) {
      for (int j = 0; j < cd.n(); ++j) {
        if (i != j) {
          EXPECT_EQ(lk(i, j), N * cd.degrees[j]);
        }
      }
    }
  }
}

TEST(Lk, WrongDirectionBraidRejected) {
  BraidWord p = family(FamilyTag::P, 3);
  ComponentData cd = components(p, full_twist(5));
  EXPECT_THROW(lk_matrix(p, cd, Direction::b), InputError);
}

TEST(Dlk, XClosedForm) {
  for (int k = 1; k <= 3; ++k) {
    for (int l = 1; l <= 3; ++l) {
      auto an = with_twist(family(FamilyTag::X, k, l));
      DlkMatrix const& d = *an.invariants.dlk;
      EXPECT_EQ(d[0][1], k % 2);
      EXPECT_EQ(d[1][2], (k + l + 1) % 2);
      EXPECT_EQ(d[0][3], 0);
    }
  }
}

TEST(Dlk, ZeroTwist) {
  auto an = with_twist(family(FamilyTag::X, 2, 1), 0);
  for (auto const& row : *an.invariants.dlk) {
    for (int v : row) {
      EXPECT_EQ(v, 0);
    }
  }
}

TEST(Dlk, P3) {
  auto an = with_twist(family(FamilyTag::P, 3));
  DlkMatrix const& d = *an.invariants.dlk;
  EXPECT_EQ(d[0][1], 1);
  EXPECT_EQ(d[1][2], 1);
  EXPECT_EQ(d[0][2], 0);
}

TEST(Dlk, SelfPower) {
  EXPECT_EQ(dlk_selfpower(2), 0);
  EXPECT_EQ(dlk_selfpower(3), 1);
  EXPECT_EQ(dlk_selfpower(0), 0);
  EXPECT_EQ(dlk_selfpower(-1), 1);
}

TEST(Dlk, LcmFormAgreesExhaustively) {
  for (long long lk = -6; lk <= 6; ++lk) {
    for (long long N = -3; N <= 3; ++N) {
      for (long long mi = 1; mi <= 9; ++mi) {
        for (long long mj = 1; mj <= 9; ++mj) {
          EXPECT_EQ(dlk_main_form(lk, N, mi, mj), dlk_lcm_form(lk, N, mi, mj));
        }
      }
    }
  }
}

TEST(Tlk, XOneOne) {
  auto an = with_twist(family(FamilyTag::X, 1, 1));
  TlkTensor const& t = an.invariants.tlk;
  EXPECT_EQ(t(0, 1, 2), 0);
  EXPECT_EQ(t(1, 2, 0), 1);
  EXPECT_EQ(t(2, 0, 1), -1);
  EXPECT_EQ(an.invariants.triple_point_lower_bound, 16);
}

TEST(Tlk, QFamily) {
  for (int k : {1, 2, 3, 5, 7}) {
    auto an = with_twist(family(FamilyTag::Q, k));
    TlkTensor const& t = an.invariants.tlk;
    EXPECT_EQ(t(0, 1, 2), 1 - k);
    EXPECT_EQ(t(1, 2, 0), k);
    EXPECT_EQ(t(2, 0, 1), -1);
  }
}

TEST(Tlk, FewComponentsGiveZero) {
  EXPECT_TRUE(with_twist(BraidWord(2, {1, 1})).invariants.tlk.is_zero());
  EXPECT_TRUE(with_twist(BraidWord(3, {1, 2})).invariants.tlk.is_zero());
}

TEST(Tlk, TriplePointBoundTable2Rows) {
  EXPECT_EQ(with_twist(family(FamilyTag::X, 1, 1, {1, 1, -1}))
                .invariants.triple_point_lower_bound, 20);
  EXPECT_EQ(with_twist(family(FamilyTag::X, 1, 1, {-1, 1, 1}))
                .invariants.triple_point_lower_bound, 20);
  EXPECT_EQ(with_twist(family(FamilyTag::X, 1, 1, {1, -1, 1}))
                .invariants.triple_point_lower_bound, 24);
  EXPECT_EQ(with_twist(family(FamilyTag::Y, 1, 1, {1, -1, 1}))
                .invariants.triple_point_lower_bound, 28);
  EXPECT_EQ(with_twist(family(FamilyTag::Y, 1, 1, {-1, 1, -1}))
                .invariants.triple_point_lower_bound, 28);
  EXPECT_EQ(triple_point_lower_bound(TlkTensor(4)), 0);
}

TEST(Peripheral, PAndQ) {
  for (int k : {3, 5, 7}) {
    auto p = with_twist(family(FamilyTag::P, k));
    auto q = with_twist(family(FamilyTag::Q, k));
    auto rp = peripheral_rows_without_self(p.invariants.peripheral[2], 2);
    auto rq = peripheral_rows_without_self(q.invariants.peripheral[2], 2);
    EXPECT_EQ(rp, (std::vector<std::vector<long long>>{{0, 1}, {k, 1}}));
    EXPECT_EQ(rq, (std::vector<std::vector<long long>>{{0, k}, {1, 1}}));
    EXPECT_TRUE(lattice_contains(rp, std::vector<long long>{0, 1}));
    EXPECT_FALSE(lattice_contains(rq, std::vector<long long>{0, 1}));
  }
}

TEST(Peripheral, SplitPairIsZero) {
  auto an = analyze(BraidWord(2), BraidWord(2));
  EXPECT_EQ(an.invariants.peripheral[0][0], (std::vector<long long>{0, 0}));
  EXPECT_EQ(an.invariants.peripheral[0][1], (std::vector<long long>{0, 0}));
  LinkingMatrix z(2, Direction::a);
  EXPECT_THROW(peripheral_matrix(2, z, z), InputError);
}

TEST(Lattice, Membership) {
  using Rows = std::vector<std::vector<long long>>;
  EXPECT_TRUE(lattice_contains(Rows{{0, 1}, {3, 1}}, {0, 1}));
  EXPECT_FALSE(lattice_contains(Rows{{0, 3}, {1, 1}}, {0, 1}));
  EXPECT_TRUE(lattice_contains(Rows{}, {0, 0}));
  EXPECT_FALSE(lattice_contains(Rows{}, {1, 0}));
  EXPECT_TRUE(lattice_contains(Rows{{2, 0}, {0, 2}, {1, 1}}, {1, -1}));
  EXPECT_FALSE(lattice_contains(Rows{{2, 0}, {0, 2}, {1, 1}}, {1, 0}));
}

TEST(Tables, XAndZBeyondOneMatch) {
  TableDiff d = table1(TableRanges{3, 3, YVariant::consecutive});
  for (auto const& c : d.cells) {
    bool z1 = c.row.rfind("Z_{1,", 0) == 0;
    if (c.row[0] == 'X' || (c.row[0] == 'Z' && !z1)) {
      EXPECT_TRUE(c.match) << c.row << " " << c.column;
    }
  }
}

TEST(Tables, Table3XRow) {
  TableDiff d = table3(TableRanges{1, 1, YVariant::consecutive});
  for (auto const& c : d.cells) {
    if (c.row == "X_{1,1,(+,+,+)}") {
      EXPECT_TRUE(c.match) << c.column;
      if (c.column == "Dlk_{1,2}" || c.column == "Dlk_{2,3}") {
        EXPECT_EQ(c.computed, 0);
      }
    }
  }
}

TEST(Tables, Table2ZRowIsBoundOnly) {
  TableDiff d = table2();
  int z = 0;
  for (auto const& c : d.cells) {
    if (c.row[0] == 'Z') {
      ++z;
      EXPECT_EQ(c.label, "lower-bound-only");
      EXPECT_LE(c.computed, c.expected);
    } else {
      EXPECT_EQ(c.label, "equal");
      EXPECT_TRUE(c.match) << c.row;
    }
  }
  EXPECT_EQ(z, 2);
}

TEST(Tables, RangesChecked) {
  EXPECT_THROW(make_table(1, TableRanges{7, 1}), InputError);
  EXPECT_THROW(make_table(4, TableRanges{}), InputError);
}
