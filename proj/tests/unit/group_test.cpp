#include <gtest/gtest.h>

#include "torlink/torlink.hpp"

using namespace torlink;

namespace {

// Equal up to cyclic rotation and inversion.
bool same_relator(FreeWord const& r, FreeWord const& s) {
  for (FreeWord const& t : {s, s.inverse()}) {
    auto l = cyclically_reduce(t).letters();
    auto target = cyclically_reduce(r).letters();
    if (l.size() != target.size()) {
      continue;
    }
    for (std::size_t k = 0; k < l.size(); ++k) {
      std::rotate(l.begin(), l.begin() + 1, l.end());
      if (l == target) {
        return true;
      }
    }
  }
  return false;
}

AbelianVerdict verdict_for(FamilySpec const& f) {
  BraidWord a = make_family(f);
  return abelian_verdict(link_group(a, full_twist(a.strands())));
}

}  // namespace

TEST(LinkGroup, FullTwistInB2) {
  Presentation p = link_group(full_twist(2), full_twist(2));
  ASSERT_EQ(p.relators().size(), 2u);
  FreeWord c = commutator(FreeWord(2, {1}), FreeWord(2, {2}));
  for (auto const& r : p.relators()) {
    EXPECT_TRUE(same_relator(r, c)) << to_string(r);
  }
}

TEST(LinkGroup, TrivialBraidsGiveFreeGroup) {
  EXPECT_TRUE(link_group(BraidWord(3), BraidWord(3)).relators().empty());
}

TEST(LinkGroup, RejectsNonCommuting) {
  EXPECT_THROW(link_group(BraidWord(3, {1}), BraidWord(3, {2})),
               NotCommutingError);
}

TEST(LinkGroup, AbelianizationRank) {
  for (FamilyTag t : {FamilyTag::X, FamilyTag::Y, FamilyTag::Z, FamilyTag::P,
                      FamilyTag::Q}) {
    FamilySpec f;
    f.tag = t;
    f.k = 2;
    f.l = 2;
    BraidWord a = make_family(f);
    SmithForm s = abelianization(link_group(a, full_twist(a.strands())));
    EXPECT_EQ(s.free_rank(),
              static_cast<std::size_t>(components(a, full_twist(a.strands())).n()));
    EXPECT_TRUE(s.torsion().empty());
  }
}

TEST(Presentation, TextRoundTrip) {
  FamilySpec f;
  f.tag = FamilyTag::Q;
  f.k = 2;
  BraidWord a = make_family(f);
  Presentation p = link_group(a, full_twist(3));
  EXPECT_EQ(parse_presentation(to_text(p)), p);
  EXPECT_EQ(to_string(parse_free_word("x3 x1^-2 x2", 3)), "x3 x1^-1 x1^-1 x2");
  EXPECT_THROW(parse_free_word("x4", 3), ParseError);
  EXPECT_THROW(parse_presentation("x1 x2"), InputError);
}

TEST(Presentation, DropsTrivialAndDuplicates) {
  Presentation p(2);
  EXPECT_FALSE(p.add_relator(FreeWord(2, {1, -1})));
  EXPECT_TRUE(p.add_relator(FreeWord(2, {1, 2})));
  EXPECT_FALSE(p.add_relator(FreeWord(2, {1, 2})));
  EXPECT_THROW(p.add_relator(FreeWord(3, {1})), InputError);
}

TEST(AddCommutator, Examples) {
  Presentation p = add_commutator(Presentation(2), 1, 2);
  EXPECT_EQ(abelian_verdict(p).rank, 2u);
  EXPECT_TRUE(abelian_verdict(p).is_abelian());
  EXPECT_THROW(add_commutator(p, 1, 1), InputError);
  EXPECT_THROW(add_commutator(p, 1, 3), InputError);
  EXPECT_EQ(add_commutator(p, 1, 2), p);
}

TEST(Smith, Examples) {
  SmithForm id = smith_normal_form(identity_matrix(3));
  EXPECT_EQ(id.diagonal, (std::vector<Integer>{1, 1, 1}));
  SmithForm s = smith_normal_form(IntMatrix{{2, 4}, {2, 6}});
  EXPECT_EQ(s.diagonal, (std::vector<Integer>{2, 2}));
  SmithForm z = smith_normal_form(IntMatrix(2, std::vector<Integer>(3, 0)));
  EXPECT_EQ(z.diagonal, (std::vector<Integer>{0, 0}));
  EXPECT_EQ(z.free_rank(), 3u);
  EXPECT_EQ(smith_normal_form(IntMatrix{}, 2).free_rank(), 2u);
}

TEST(Smith, LargeEntriesStayExact) {
  Integer big = Integer(1) << 100;
  SmithForm s = smith_normal_form(IntMatrix{{big, 0}, {0, big * 3}});
  EXPECT_EQ(s.diagonal[0], big);
  EXPECT_EQ(s.diagonal[1], big * 3);
}

TEST(Abelianization, Examples) {
  Presentation cyclic(1);
  cyclic.add_relator(FreeWord(1, {1, 1, 1}));
  EXPECT_EQ(abelianization(cyclic).torsion(), std::vector<Integer>{3});
  EXPECT_EQ(abelianization(Presentation(2)).free_rank(), 2u);
}

TEST(KnuthBendix, FreeAbelianRankTwo) {
  Presentation p = add_commutator(Presentation(2), 1, 2);
  RewritingSystem rs = knuth_bendix(p);
  ASSERT_TRUE(rs.confluent());
  // Normal forms are x^a y^b.
  FreeWord w(2, {2, 1, -2, 1, 2});
  EXPECT_EQ(rs.normal_form(w), FreeWord(2, {1, 1, 2}));
}

TEST(KnuthBendix, FreeGroup) {
  RewritingSystem rs = knuth_bendix(Presentation(1));
  EXPECT_TRUE(rs.confluent());
  EXPECT_EQ(rs.rules().size(), 2u);
}

TEST(KnuthBendix, Q3Group) {
  FamilySpec f;
  f.tag = FamilyTag::Q;
  f.k = 3;
  Presentation p = link_group(make_family(f), full_twist(3));
  RewritingSystem rs = knuth_bendix(p);
  ASSERT_TRUE(rs.confluent());
  for (int i = 1; i <= 3; ++i) {
    for (int j = i + 1; j <= 3; ++j) {
      EXPECT_TRUE(rs.normal_form(commutator(p.generator(i), p.generator(j)))
                      .is_identity());
    }
  }
  for (auto const& r : p.relators()) {
    EXPECT_TRUE(rs.normal_form(r).is_identity());
  }
}

TEST(KnuthBendix, CapsAreReported) {
  Presentation p = add_commutator(Presentation(3), 1, 2);
  p.add_relator(FreeWord(3, {1, 3, 1, -3, -3}));
  RewritingSystem rs = knuth_bendix(p, CompletionCaps{5, 200, 50});
  EXPECT_FALSE(rs.confluent());
  EXPECT_EQ(rs.cap_hit(), CapHit::rules);
  EXPECT_THROW(knuth_bendix(p, CompletionCaps{0, 1, 1}), InputError);
}

TEST(Verdict, Examples) {
  FamilySpec y;
  y.tag = FamilyTag::Y;
  y.k = 2;
  y.l = 2;
  AbelianVerdict v = verdict_for(y);
  EXPECT_TRUE(v.is_abelian());
  EXPECT_EQ(v.rank, 4u);
  EXPECT_EQ(to_string(v), "Abelian, rank 4");

  FamilySpec p;
  p.tag = FamilyTag::P;
  p.k = 5;
  EXPECT_EQ(to_string(verdict_for(p)), "Abelian, rank 3");

  AbelianVerdict free2 = abelian_verdict(Presentation(2));
  EXPECT_EQ(free2.kind, AbelianVerdict::Kind::non_abelian);
  EXPECT_EQ(*free2.witness, commutator(FreeWord(2, {1}), FreeWord(2, {2})));
  EXPECT_FALSE(free2.witness_normal_form->is_identity());
}

TEST(Verdict, InconclusiveUnderTinyCaps) {
  FamilySpec x;
  x.k = 2;
  x.l = 2;
  BraidWord a = make_family(x);
  AbelianVerdict v = abelian_verdict(link_group(a, full_twist(a.strands())),
                                     CompletionCaps{3, 200, 50});
  EXPECT_EQ(v.kind, AbelianVerdict::Kind::inconclusive);
  EXPECT_EQ(v.cap, CapHit::rules);
}

TEST(Verdict, TorsionIsAnInconsistency) {
  Presentation p(1);
  p.add_relator(FreeWord(1, {1, 1}));
  EXPECT_THROW(abelian_verdict(p), ConsistencyError);
}

TEST(Tietze, PreservesAbelianization) {
  for (int k = 1; k <= 3; ++k) {
    FamilySpec f;
    f.tag = FamilyTag::Y;
    f.k = k;
    f.l = 2;
    BraidWord a = make_family(f);
    Presentation p = link_group(a, full_twist(a.strands()));
    SimplifiedPresentation s = simplify(p);
    EXPECT_EQ(abelianization(s.presentation).free_rank()
                  - (static_cast<std::size_t>(p.generator_count()) - s.kept.size()),
              4u);
    // Every original relator holds after substituting the images.
    RewritingSystem rs = knuth_bendix(s.presentation);
    ASSERT_TRUE(rs.confluent());
    for (auto const& r : p.relators()) {
      FreeWord image(p.generator_count());
      for (int g : r.letters()) {
        FreeWord x = s.images[static_cast<std::size_t>(std::abs(g) - 1)];
        image *= g > 0 ? x : x.inverse();
      }
      EXPECT_TRUE(rs.normal_form(image).is_identity());
    }
  }
}
