#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "torlink/artin.hpp"
#include "torlink/braid.hpp"
#include "torlink/knuth_bendix.hpp"
#include "torlink/linking.hpp"
#include "torlink/presentation.hpp"
#include "torlink/sampling.hpp"
#include "torlink/smith.hpp"

// Randomized property checks. Each suite runs `cases` independent cases
// from one seeded generator and reports the failures.

namespace torlink {

struct PropertyResult {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::string first_failure;

  bool ok() const { return failures == 0 && cases > 0; }
};

namespace detail {

// A case returns an empty optional on success, else a description.
using PropertyCase = std::function<std::optional<std::string>(Rng&)>;

inline PropertyResult run_property(std::string name, std::uint64_t seed,
                                   int cases, PropertyCase const& body) {
  Rng rng(seed);
  PropertyResult r{std::move(name), 0, 0, {}};
  for (int c = 0; c < cases; ++c) {
    std::optional<std::string> fail;
    try {
      fail = body(rng);
    } catch (std::exception const& e) {
      fail = std::string("exception: ") + e.what();
    }
    ++r.cases;
    if (fail) {
      if (r.failures++ == 0) {
        r.first_failure = "case " + std::to_string(c) + ": " + *fail;
      }
    }
  }
  return r;
}

inline std::vector<FreeWord> generator_images(BraidWord const& b) {
  return ArtinAutomorphism(b).images();
}

inline BraidWord letters(int strands, std::initializer_list<int> l) {
  return BraidWord(strands, std::vector<int>(l));
}

// Random braid with many squared letters so that closures keep several
// components.
inline BraidWord random_square_heavy_braid(Rng& rng, int strands, int length) {
  BraidWord w(strands);
  for (int i = 0; i < length; ++i) {
    int g = random_letter(rng, strands - 1);
    w.push_back(g);
    if (random_int(rng, 0, 3) != 0) {
      w.push_back(g);
    }
  }
  return w;
}

}  // namespace detail

inline PropertyResult property_artin_product(std::uint64_t seed, int cases) {
  return detail::run_property(
      "artin fixes x1...xm", seed, cases,
      [](Rng& rng) -> std::optional<std::string> {
        int m = random_int(rng, 2, 7);
        BraidWord a = random_braid(rng, m, random_int(rng, 0, 10));
        FreeWord prod = generator_product(m, 1, m);
        if (artin_apply(a, prod) != prod) {
          return "a = " + to_string(a);
        }
        return std::nullopt;
      });
}

// Both braid relations, wrapped in random context u ... v.
inline PropertyResult property_braid_relations(std::uint64_t seed, int cases) {
  return detail::run_property(
      "braid relations act equally", seed, cases,
      [](Rng& rng) -> std::optional<std::string> {
        int m = random_int(rng, 3, 7);
        BraidWord u = random_braid(rng, m, random_int(rng, 0, 4));
        BraidWord v = random_braid(rng, m, random_int(rng, 0, 4));
        int i = random_int(rng, 1, m - 2);
        BraidWord lhs = u * detail::letters(m, {i, i + 1, i}) * v;
        BraidWord rhs = u * detail::letters(m, {i + 1, i, i + 1}) * v;
        if (detail::generator_images(lhs) != detail::generator_images(rhs)) {
          return "braid relation at i=" + std::to_string(i) + " in B"
                 + std::to_string(m);
        }
        if (m >= 4) {
          int p = random_int(rng, 1, m - 3);
          int q = random_int(rng, p + 2, m - 1);
          BraidWord l2 = u * detail::letters(m, {p, q}) * v;
          BraidWord r2 = u * detail::letters(m, {q, p}) * v;
          if (detail::generator_images(l2) != detail::generator_images(r2)) {
            return "far commutation s" + std::to_string(p) + " s"
                   + std::to_string(q);
          }
        }
        return std::nullopt;
      });
}

inline PropertyResult property_braid_equal_insertion(std::uint64_t seed,
                                                     int cases) {
  return detail::run_property(
      "braid_equal ignores s s^-1 insertion", seed, cases,
      [](Rng& rng) -> std::optional<std::string> {
        int m = random_int(rng, 2, 6);
        BraidWord w = random_braid(rng, m, random_int(rng, 0, 8));
        BraidWord w1 = insert_trivial_pair(rng, w);
        BraidWord w2 = insert_trivial_pair(rng, w1);
        if (!braid_equal(w, w) || !braid_equal(w, w1) || !braid_equal(w1, w)
            || !braid_equal(w1, w2) || !braid_equal(w, w2)) {
          return "w = " + to_string(w) + ", w1 = " + to_string(w1);
        }
        // Odd exponent-sum difference: never equal.
        BraidWord odd = w * detail::letters(m, {random_letter(rng, m - 1)});
        if (braid_equal(w, odd)) {
          return "w equal to w s: " + to_string(w);
        }
        return std::nullopt;
      });
}

// Basis pairs (w^p, w^q) commute and split blocks into several cycles.
inline PropertyResult property_lk_cycle_choice(std::uint64_t seed, int cases) {
  return detail::run_property(
      "lk independent of cycle choice", seed, cases,
      [](Rng& rng) -> std::optional<std::string> {
        int m = random_int(rng, 2, 6);
        BraidWord w = random_braid(rng, m, random_int(rng, 1, 5));
        BraidWord a = w.pow(random_int(rng, 1, 3));
        BraidWord b = w.pow(random_int(rng, 1, 3));
        ComponentData cd = components(a, b);
        for (Direction d : {Direction::a, Direction::b}) {
          BraidWord const& x = d == Direction::a ? a : b;
          LinkingMatrix lk = lk_matrix(x, cd, d);
          for (int i = 0; i < cd.n(); ++i) {
            for (std::size_t c = 0; c < cd.cycles(d)[i].size(); ++c) {
              for (int j = 0; j < cd.n(); ++j) {
                if (lk_entry_for_cycle(x, cd, d, i, c, j) != lk(i, j)) {
                  return "w = " + to_string(w) + ", block "
                         + std::to_string(i + 1) + ", cycle "
                         + std::to_string(c);
                }
              }
            }
          }
        }
        return std::nullopt;
      });
}

inline PropertyResult property_lk_symmetry(std::uint64_t seed, int cases) {
  return detail::run_property(
      "lk^a symmetric for b = Delta^2N", seed, cases,
      [](Rng& rng) -> std::optional<std::string> {
        int m = random_int(rng, 2, 6);
        BraidWord a = detail::random_square_heavy_braid(rng, m,
                                                        random_int(rng, 0, 10));
        long long N = random_int(rng, -2, 2);
        BraidWord b = full_twist(m, N);
        ComponentData cd = components(a, b);
        LinkingMatrix lk_a = lk_matrix(a, cd, Direction::a);
        LinkingMatrix lk_b = lk_matrix(b, cd, Direction::b);
        if (!lk_a.is_symmetric()) {
          return "asymmetric lk^a for a = " + to_string(a);
        }
        for (int i = 0; i < cd.n(); ++i) {
          if (cd.a_cycles[i].size() != 1) {
            return "block with several a-cycles";
          }
          for (int j = 0; j < cd.n(); ++j) {
            if (i != j && lk_b(i, j) != N * cd.degrees[j]) {
              return "lk^b != N m_j for a = " + to_string(a);
            }
          }
        }
        return std::nullopt;
      });
}

inline PropertyResult property_dlk_forms(std::uint64_t seed, int cases) {
  return detail::run_property(
      "Dlk main form = lcm form", seed, cases,
      [](Rng& rng) -> std::optional<std::string> {
        long long lk = random_int(rng, -30, 30);
        long long N = random_int(rng, -5, 5);
        long long mi = random_int(rng, 1, 12);
        long long mj = random_int(rng, 1, 12);
        if (dlk_main_form(lk, N, mi, mj) != dlk_lcm_form(lk, N, mi, mj)) {
          return "lk=" + std::to_string(lk) + " N=" + std::to_string(N)
                 + " m=(" + std::to_string(mi) + "," + std::to_string(mj)
                 + ")";
        }
        // And on a real link: dlk_delta throws on disagreement.
        int m = random_int(rng, 2, 6);
        BraidWord a = random_braid(rng, m, random_int(rng, 0, 10));
        ComponentData cd = components(a, full_twist(m, N));
        dlk_delta(lk_matrix(a, cd, Direction::a), N, cd);
        return std::nullopt;
      });
}

inline PropertyResult property_tlk(std::uint64_t seed, int cases) {
  return detail::run_property(
      "Tlk antisymmetric, shortcut agrees", seed, cases,
      [](Rng& rng) -> std::optional<std::string> {
        int m = random_int(rng, 3, 7);
        BraidWord a = detail::random_square_heavy_braid(rng, m,
                                                        random_int(rng, 0, 12));
        long long N = random_int(rng, -2, 2);
        BraidWord b = full_twist(m, N);
        ComponentData cd = components(a, b);
        LinkingMatrix lk_a = lk_matrix(a, cd, Direction::a);
        LinkingMatrix lk_b = lk_matrix(b, cd, Direction::b);
        TlkTensor t = tlk(lk_a, lk_b);
        if (!t.is_antisymmetric()) {
          return "not antisymmetric for a = " + to_string(a);
        }
        if (t != tlk_full_twist_shortcut(lk_a, N, cd.degrees)) {
          return "shortcut disagrees for a = " + to_string(a);
        }
        // General basis pairs keep antisymmetry too.
        BraidWord w = random_braid(rng, m, random_int(rng, 1, 4));
        BraidWord p = w.pow(random_int(rng, 1, 3));
        BraidWord q = w.pow(random_int(rng, 1, 3));
        ComponentData cw = components(p, q);
        TlkTensor tw = tlk(lk_matrix(p, cw, Direction::a),
                           lk_matrix(q, cw, Direction::b));
        if (!tw.is_antisymmetric()) {
          return "not antisymmetric for w = " + to_string(w);
        }
        return std::nullopt;
      });
}

inline PropertyResult property_smith(std::uint64_t seed, int cases) {
  return detail::run_property(
      "Smith form divisibility and unimodularity", seed, cases,
      [](Rng& rng) -> std::optional<std::string> {
        std::size_t rows = static_cast<std::size_t>(random_int(rng, 1, 5));
        std::size_t cols = static_cast<std::size_t>(random_int(rng, 1, 5));
        IntMatrix m(rows, std::vector<Integer>(cols));
        for (auto& row : m) {
          for (auto& v : row) {
            v = random_int(rng, 0, 2) == 0 ? 0 : random_int(rng, -12, 12);
          }
        }
        SmithForm s = smith_normal_form(m, cols);
        IntMatrix d = multiply(multiply(s.left, m, rows), s.right, cols);
        for (std::size_t i = 0; i < rows; ++i) {
          for (std::size_t j = 0; j < cols; ++j) {
            Integer want = i == j ? s.diagonal[i] : Integer(0);
            if (d[i][j] != want) {
              return std::string("left * M * right is not the diagonal");
            }
          }
        }
        for (std::size_t t = 0; t < s.diagonal.size(); ++t) {
          if (s.diagonal[t] < 0) {
            return std::string("negative invariant factor");
          }
          if (t + 1 < s.diagonal.size()) {
            Integer const& a = s.diagonal[t];
            Integer const& b = s.diagonal[t + 1];
            bool divides = a == 0 ? b == 0 : b % a == 0;
            if (!divides) {
              return std::string("divisibility chain broken");
            }
          }
        }
        if (abs(determinant(s.left)) != 1 || abs(determinant(s.right)) != 1) {
          return std::string("transform not unimodular");
        }
        return std::nullopt;
      });
}

// Random small presentations; those that complete are checked for unique
// normal forms: relators and their conjugates vanish, and inserting a
// relator or a cancelling pair anywhere leaves the normal form unchanged.
// Presentations that hit the small caps are redrawn.
inline PropertyResult property_normal_forms(std::uint64_t seed, int cases) {
  return detail::run_property(
      "confluent normal forms are unique", seed, cases,
      [](Rng& rng) -> std::optional<std::string> {
        CompletionCaps caps{2000, 40, 30};
        for (int attempt = 0; attempt < 200; ++attempt) {
          int rank = random_int(rng, 1, 3);
          Presentation p(rank);
          int count = random_int(rng, 1, 3);
          for (int r = 0; r < count; ++r) {
            p.add_relator(random_free_word(rng, rank, random_int(rng, 1, 6)));
          }
          RewritingSystem rs = knuth_bendix(p, caps);
          if (!rs.confluent()) {
            continue;
          }
          for (auto const& r : p.relators()) {
            FreeWord u = random_free_word(rng, rank, random_int(rng, 0, 4));
            if (!rs.normal_form(r.conjugated_by(u)).is_identity()) {
              return "relator " + to_string(r) + " does not vanish";
            }
          }
          for (int t = 0; t < 5; ++t) {
            auto w = random_free_word(rng, rank, random_int(rng, 0, 10)).letters();
            FreeWord nf = rs.normal_form(FreeWord(rank, w));
            if (rs.normal_form(nf) != nf) {
              return "normal form not idempotent";
            }
            std::vector<int> ins;
            if (!p.relators().empty() && random_int(rng, 0, 1)) {
              auto const& r = p.relators()[static_cast<std::size_t>(
                  random_int(rng, 0, static_cast<int>(p.relators().size()) - 1))];
              ins = random_int(rng, 0, 1) ? r.letters() : r.inverse().letters();
            } else {
              int g = random_letter(rng, rank);
              ins = {g, -g};
            }
            auto at = w.begin() + random_int(rng, 0, static_cast<int>(w.size()));
            w.insert(at, ins.begin(), ins.end());
            if (rs.normal_form(FreeWord(rank, w)) != nf) {
              return "two normal forms for one element";
            }
          }
          return std::nullopt;
        }
        return std::string("no confluent presentation in 200 draws");
      });
}

inline std::vector<PropertyResult> run_all_properties(std::uint64_t seed,
                                                      int cases) {
  return {
      property_artin_product(seed, cases),
      property_braid_relations(seed + 1, cases),
      property_braid_equal_insertion(seed + 2, cases),
      property_lk_cycle_choice(seed + 3, cases),
      property_lk_symmetry(seed + 4, cases),
      property_dlk_forms(seed + 5, cases),
      property_tlk(seed + 6, cases),
      property_smith(seed + 7, cases),
      property_normal_forms(seed + 8, cases),
  };
}

}  // namespace torlink
