#pragma once

#include <cstdlib>
#include <optional>
#include <vector>

#include "torlink/braid.hpp"
#include "torlink/free_word.hpp"

namespace torlink {

// Artin action of B_m on the free group F_m, as a left action:
//
//   sigma_j      : x_j -> x_{j+1},            x_{j+1} -> x_{j+1}^-1 x_j x_{j+1}
//   sigma_j^{-1} : x_j -> x_j x_{j+1} x_j^-1, x_{j+1} -> x_j
//
// and A^{uv} = A^u o A^v. The images of the generators are built by
// reading the word left to right and substituting into the current images:
// if phi = A^{s_1} o ... o A^{s_k}, then phi o A^{s} only touches the two
// images indexed by s.
class ArtinAutomorphism {
 public:
  explicit ArtinAutomorphism(BraidWord const& b) {
    int const m = b.strands();
    images_.reserve(static_cast<std::size_t>(m));
    for (int i = 1; i <= m; ++i) {
      images_.push_back(FreeWord::generator(m, i));
    }
    for (int g : b.letters()) {
      std::size_t j = static_cast<std::size_t>(std::abs(g) - 1);
      FreeWord& lo = images_[j];
      FreeWord& hi = images_[j + 1];
      if (g > 0) {
        FreeWord next_hi = hi.inverse() * lo * hi;
        lo = hi;
        hi = std::move(next_hi);
      } else {
        FreeWord next_lo = lo * hi * lo.inverse();
        hi = lo;
        lo = std::move(next_lo);
      }
    }
  }

  int rank() const noexcept { return static_cast<int>(images_.size()); }

  // Image of x_i, 1-based.
  FreeWord const& image(int i) const {
    return images_.at(static_cast<std::size_t>(i - 1));
  }

  std::vector<FreeWord> const& images() const noexcept { return images_; }

  FreeWord operator()(FreeWord const& w) const {
    if (w.rank() != rank()) {
      throw InputError("rank mismatch: braid has "
                       + std::to_string(rank()) + " strands, word has rank "
                       + std::to_string(w.rank()));
    }
    FreeWord out(w.rank());
    for (int g : w.letters()) {
      FreeWord const& img = images_[static_cast<std::size_t>(std::abs(g) - 1)];
      out *= g > 0 ? img : img.inverse();
    }
    return out;
  }

 private:
  std::vector<FreeWord> images_;
};

inline FreeWord artin_apply(BraidWord const& b, FreeWord const& w) {
  return ArtinAutomorphism(b)(w);
}

// Equality in B_m, decided by comparing Artin images of every generator
// (the representation is faithful).
inline bool braid_equal(BraidWord const& a, BraidWord const& b) {
  a.require_same_strands(b);
  return ArtinAutomorphism(a).images() == ArtinAutomorphism(b).images();
}

inline bool braids_commute(BraidWord const& a, BraidWord const& b) {
  return braid_equal(a * b, b * a);
}

// N with b = Delta^{2N} in B_m, if there is one.
inline std::optional<long long> full_twist_exponent(BraidWord const& b) {
  int const m = b.strands();
  if (m == 1) {
    return 0;
  }
  long long const per_twist = static_cast<long long>(m) * (m - 1);
  long long const s = b.exponent_sum();
  if (s % per_twist != 0) {
    return std::nullopt;
  }
  long long const n = s / per_twist;
  if (!braid_equal(b, full_twist(m, n))) {
    return std::nullopt;
  }
  return n;
}

}  // namespace torlink
