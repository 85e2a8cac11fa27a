#pragma once

#include <optional>
#include <string>
#include <vector>

#include "torlink/knuth_bendix.hpp"
#include "torlink/presentation.hpp"
#include "torlink/smith.hpp"
#include "torlink/tietze.hpp"

namespace torlink {

struct AbelianVerdict {
  enum class Kind { abelian, non_abelian, inconclusive };

  Kind kind = Kind::inconclusive;
  std::size_t rank = 0;  // abelian only
  // non_abelian only: a commutator [x_i, x_j] and its normal form.
  std::optional<FreeWord> witness;
  std::optional<FreeWord> witness_normal_form;
  CapHit cap = CapHit::none;  // inconclusive only
  CompletionStats stats;

  bool is_abelian() const { return kind == Kind::abelian; }

  friend bool operator==(AbelianVerdict const&, AbelianVerdict const&) = default;
};

inline std::string to_string(AbelianVerdict const& v) {
  switch (v.kind) {
    case AbelianVerdict::Kind::abelian:
      return "Abelian, rank " + std::to_string(v.rank);
    case AbelianVerdict::Kind::non_abelian:
      return "NonAbelian, witness " + to_string(*v.witness)
             + " has normal form " + to_string(*v.witness_normal_form);
    case AbelianVerdict::Kind::inconclusive:
      return "Inconclusive (" + std::string(cap_name(v.cap)) + " cap hit)";
  }
  return "?";
}

// Certifies abelianness through a confluent rewriting system: the group is
// abelian iff every commutator of generators has trivial normal form. The
// presentation is simplified first and the commutators [x_i, x_j] are
// rewritten through the images of the original generators.
inline AbelianVerdict abelian_verdict(Presentation const& p,
                                      CompletionCaps caps = {}) {
  SimplifiedPresentation const s = simplify(p);
  RewritingSystem const rs = knuth_bendix(s.presentation, caps);
  AbelianVerdict v;
  v.stats = rs.stats();
  if (!rs.confluent()) {
    v.kind = AbelianVerdict::Kind::inconclusive;
    v.cap = rs.cap_hit();
    return v;
  }
  int const m = p.generator_count();
  for (int i = 1; i <= m; ++i) {
    for (int j = i + 1; j <= m; ++j) {
      FreeWord c = commutator(p.generator(i), p.generator(j));
      FreeWord nf = rs.normal_form(
          commutator(s.images[static_cast<std::size_t>(i - 1)],
                     s.images[static_cast<std::size_t>(j - 1)]));
      if (!nf.is_identity()) {
        v.kind = AbelianVerdict::Kind::non_abelian;
        v.witness = std::move(c);
        v.witness_normal_form = std::move(nf);
        return v;
      }
    }
  }
  SmithForm const ab = abelianization(p);
  if (!ab.torsion().empty()) {
    throw ConsistencyError(
        "abelian verdict but the abelianization has torsion");
  }
  v.kind = AbelianVerdict::Kind::abelian;
  v.rank = ab.free_rank();
  return v;
}

}  // namespace torlink
