#include <gtest/gtest.h>

#include <bit>
#include <set>

#include "torlink/torlink.hpp"

using namespace torlink;

TEST(Feasibility, Examples) {
  EXPECT_TRUE(genus_rank_feasible(GenusProfile(std::vector<long long>{1, 1, 1, 1})));
  FeasibilityResult f = check_genus_rank(GenusProfile(std::vector<long long>{1, 1, 1, 1, 1}));
  EXPECT_FALSE(f.feasible);
  EXPECT_EQ(f.prefix, 5u);
  EXPECT_EQ(f.explain(), "infeasible (prefix k=5: 20 < 20 fails)");
  EXPECT_FALSE(genus_rank_feasible(GenusProfile(std::vector<long long>{0, 0})));
  EXPECT_TRUE(genus_rank_feasible(GenusProfile(std::vector<long long>{0, 1})));
  EXPECT_TRUE(genus_rank_feasible(GenusProfile(std::vector<long long>{})));
  EXPECT_TRUE(genus_rank_feasible(GenusProfile(std::vector<long long>{0})));
  EXPECT_EQ(check_genus_rank(GenusProfile(std::vector<long long>{5})).explain(),
            "feasible (necessary condition only)");
  EXPECT_THROW(GenusProfile(std::vector<long long>{1, -1}), InputError);
}

TEST(Feasibility, OrderDoesNotMatter) {
  EXPECT_EQ(check_genus_rank(GenusProfile(std::vector<long long>{9, 0, 0, 9})).prefix, 2u);
  EXPECT_EQ(check_genus_rank(GenusProfile(std::vector<long long>{0, 9, 9, 0})).prefix, 2u);
}

// Brute force over all subsets against the sorted-prefix shortcut.
TEST(Feasibility, PrefixMatchesAllSubsets) {
  Rng rng(11);
  for (int c = 0; c < 300; ++c) {
    int n = random_int(rng, 0, 7);
    std::vector<long long> g;
    for (int i = 0; i < n; ++i) {
      g.push_back(random_int(rng, 0, 4));
    }
    bool brute = true;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      long long k = std::popcount(mask);
      long long G = 0;
      for (int i = 0; i < n; ++i) {
        G += (mask >> i) & 1u ? g[static_cast<std::size_t>(i)] : 0;
      }
      if (k >= 2 && !(k * (k - 1) < 4 * G)) {
        brute = false;
      }
    }
    EXPECT_EQ(genus_rank_feasible(GenusProfile(g)), brute);
  }
}

TEST(PlusTower, Shape) {
  for (int n = 1; n <= 8; ++n) {
    ConstructionRecord r = plus_tower(n);
    EXPECT_EQ(r.rank(), n);
    EXPECT_EQ(r.total_genus(), n * (n - 1) / 2);
    EXPECT_EQ(r.presentation.relators().size(),
              static_cast<std::size_t>(n * (n - 1) / 2));
    EXPECT_TRUE(genus_rank_feasible(r.profile()));
    for (int k = 1; k <= n; ++k) {
      EXPECT_EQ(r.component_genera[static_cast<std::size_t>(k - 1)], k - 1);
    }
  }
  EXPECT_THROW(plus_tower(0), InputError);
}

TEST(PlusTower, Abelian) {
  for (int n = 1; n <= 6; ++n) {
    AbelianVerdict v = abelian_verdict(plus_tower(n).presentation);
    EXPECT_TRUE(v.is_abelian());
    EXPECT_EQ(v.rank, static_cast<std::size_t>(n));
  }
}

TEST(HighGenus, Counts) {
  EXPECT_EQ(highgenus_handles(5), 1);
  EXPECT_EQ(highgenus_handles(6), 4);
  EXPECT_EQ(highgenus_genus(5), 7);
  EXPECT_EQ(highgenus_genus(6), 11);
  for (int n = 5; n <= 9; ++n) {
    ConstructionRecord r = highgenus(n);
    EXPECT_EQ(r.total_genus(), highgenus_genus(n));
    EXPECT_EQ(static_cast<long long>(r.commutator_steps()) - 1,
              highgenus_handles(n));
    EXPECT_TRUE(genus_rank_feasible(r.profile())) << n;
  }
  EXPECT_THROW(highgenus(4), InputError);
}

TEST(HighGenus, HandlesAreDistinctPairs) {
  ConstructionRecord r = highgenus(8);
  std::set<std::pair<int, int>> seen;
  for (auto const& s : r.steps) {
    if (s.kind == ConstructionStep::Kind::commutator) {
      auto key = std::minmax(s.i, s.j);
      EXPECT_TRUE(seen.insert(key).second) << s.describe();
      EXPECT_NE(std::abs(s.i - s.j), 1) << s.describe();
    }
  }
}

TEST(HighGenus, Abelian) {
  for (int n = 5; n <= 9; ++n) {
    AbelianVerdict v = abelian_verdict(highgenus(n).presentation);
    EXPECT_TRUE(v.is_abelian()) << n;
    EXPECT_EQ(v.rank, static_cast<std::size_t>(n));
  }
}

TEST(HighGenus, FiveNeedsItsLastHandle) {
  // Without the closing handles the group is not certified abelian.
  ConstructionRecord r = highgenus(5);
  Presentation p(5);
  FreeWord c = generator_product(5, 1, 5);
  for (int i = 1; i <= 5; ++i) {
    p.add_relator(commutator(p.generator(i), c));
  }
  for (int i = 1; i < 5; ++i) {
    p = add_commutator(p, i, i + 1);
  }
  EXPECT_FALSE(abelian_verdict(p).is_abelian());
  EXPECT_TRUE(abelian_verdict(r.presentation).is_abelian());
}

TEST(Steps, Describe) {
  ConstructionRecord r = plus_tower(2);
  EXPECT_EQ(r.steps[1].describe(), "add component 2 of genus 1");
  ConstructionRecord h = highgenus(5);
  EXPECT_EQ(h.steps.back().describe(), "add [x5, x2], handle on component 5");
}
