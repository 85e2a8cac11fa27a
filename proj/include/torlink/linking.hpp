#pragma once

#include <algorithm>
#include <array>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "torlink/artin.hpp"
#include "torlink/braid.hpp"
#include "torlink/errors.hpp"

namespace torlink {

enum class Direction { a, b };

inline char direction_name(Direction d) { return d == Direction::a ? 'a' : 'b'; }

// Components of the torus-covering link S_m(a, b). Strands and component
// indices are 0-based here; reports print them 1-based.
struct ComponentData {
  int strands = 0;
  // Orbits of <perm(a), perm(b)>, each sorted, ordered by smallest strand.
  std::vector<std::vector<int>> orbits;
  std::vector<int> degrees;
  std::vector<int> block_of;
  // Per block: cycles of perm(a) resp. perm(b) inside it, ordered by
  // smallest strand. The first cycle always contains the block minimum.
  std::vector<std::vector<std::vector<int>>> a_cycles;
  std::vector<std::vector<std::vector<int>>> b_cycles;

  int n() const noexcept { return static_cast<int>(orbits.size()); }

  std::vector<std::vector<std::vector<int>>> const& cycles(Direction d) const {
    return d == Direction::a ? a_cycles : b_cycles;
  }

  friend bool operator==(ComponentData const&, ComponentData const&) = default;
};

namespace detail {

inline int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

inline std::vector<std::vector<std::vector<int>>> split_cycles(
    Permutation const& p, std::vector<int> const& block_of, int n) {
  std::vector<std::vector<std::vector<int>>> out(static_cast<std::size_t>(n));
  for (auto& cycle : p.cycles()) {
    std::sort(cycle.begin(), cycle.end());
    out[block_of[cycle.front()]].push_back(std::move(cycle));
  }
  return out;
}

}  // namespace detail

// Component structure from already-verified commuting basis braids.
inline ComponentData components_unchecked(BraidWord const& a,
                                          BraidWord const& b) {
  a.require_same_strands(b);
  int const m = a.strands();
  Permutation const pa = permutation_of(a);
  Permutation const pb = permutation_of(b);

  std::vector<int> parent(static_cast<std::size_t>(m));
  std::iota(parent.begin(), parent.end(), 0);
  for (int s = 0; s < m; ++s) {
    for (int t : {pa(s), pb(s)}) {
      int rs = detail::find_root(parent, s);
      int rt = detail::find_root(parent, t);
      if (rs != rt) {
        parent[std::max(rs, rt)] = std::min(rs, rt);
      }
    }
  }

  ComponentData cd;
  cd.strands = m;
  cd.block_of.assign(static_cast<std::size_t>(m), -1);
  std::vector<int> block_of_root(static_cast<std::size_t>(m), -1);
  for (int s = 0; s < m; ++s) {
    int r = detail::find_root(parent, s);
    if (block_of_root[r] < 0) {
      block_of_root[r] = cd.n();
      cd.orbits.emplace_back();
    }
    cd.block_of[s] = block_of_root[r];
    cd.orbits[block_of_root[r]].push_back(s);
  }
  for (auto const& orbit : cd.orbits) {
    cd.degrees.push_back(static_cast<int>(orbit.size()));
  }
  cd.a_cycles = detail::split_cycles(pa, cd.block_of, cd.n());
  cd.b_cycles = detail::split_cycles(pb, cd.block_of, cd.n());
  return cd;
}

inline ComponentData components(BraidWord const& a, BraidWord const& b) {
  a.require_same_strands(b);
  if (!braids_commute(a, b)) {
    throw NotCommutingError(
        "basis braids do not commute; not a torus-covering link");
  }
  return components_unchecked(a, b);
}

// ---------------------------------------------------------------------------
// Directional linking numbers
// ---------------------------------------------------------------------------

class LinkingMatrix {
 public:
  explicit LinkingMatrix(int n = 0, Direction direction = Direction::a)
      : n_(n),
        direction_(direction),
        entries_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0) {}

  int n() const noexcept { return n_; }
  Direction direction() const noexcept { return direction_; }

  long long operator()(int i, int j) const { return entries_.at(index(i, j)); }
  long long& operator()(int i, int j) { return entries_.at(index(i, j)); }

  bool is_symmetric() const {
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < i; ++j) {
        if ((*this)(i, j) != (*this)(j, i)) {
          return false;
        }
      }
    }
    return true;
  }

  friend bool operator==(LinkingMatrix const&, LinkingMatrix const&) = default;

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_)
           + static_cast<std::size_t>(j);
  }

  int n_;
  Direction direction_;
  std::vector<long long> entries_;
};

// Signed crossing counts between every pair of strands of a braid word,
// strands labelled by their starting position. Symmetric.
class CrossingTally {
 public:
  explicit CrossingTally(BraidWord const& w)
      : m_(w.strands()),
        sums_(static_cast<std::size_t>(m_) * static_cast<std::size_t>(m_), 0) {
    std::vector<int> strand_at(static_cast<std::size_t>(m_));
    std::iota(strand_at.begin(), strand_at.end(), 0);
    for (int g : w.letters()) {
      std::size_t p = static_cast<std::size_t>(std::abs(g) - 1);
      int s = strand_at[p];
      int t = strand_at[p + 1];
      int sign = g > 0 ? 1 : -1;
      sums_[idx(s, t)] += sign;
      sums_[idx(t, s)] += sign;
      std::swap(strand_at[p], strand_at[p + 1]);
    }
  }

  long long operator()(int s, int t) const { return sums_[idx(s, t)]; }

 private:
  std::size_t idx(int s, int t) const {
    return static_cast<std::size_t>(s) * static_cast<std::size_t>(m_)
           + static_cast<std::size_t>(t);
  }

  int m_;
  std::vector<long long> sums_;
};

namespace detail {

inline void require_cycles_match(BraidWord const& w, ComponentData const& cd,
                                 Direction d) {
  if (w.strands() != cd.strands) {
    throw InputError("braid and component data disagree on strand count");
  }
  std::vector<std::vector<int>> expected;
  for (auto const& per_block : cd.cycles(d)) {
    expected.insert(expected.end(), per_block.begin(), per_block.end());
  }
  std::vector<std::vector<int>> actual;
  for (auto cycle : permutation_of(w).cycles()) {
    std::sort(cycle.begin(), cycle.end());
    actual.push_back(std::move(cycle));
  }
  std::sort(expected.begin(), expected.end());
  std::sort(actual.begin(), actual.end());
  if (expected != actual) {
    throw InputError(std::string("braid is not the ")
                     + direction_name(d)
                     + "-direction braid of these component data");
  }
}

inline long long halve_linking_sum(long long sum) {
  if (sum % 2 != 0) {
    throw ConsistencyError("odd crossing sum between disjoint closed curves");
  }
  return sum / 2;
}

}  // namespace detail

// lk(C, tilde A_j) for one closure cycle C of block i, i != j.
inline long long lk_of_cycle(CrossingTally const& tally,
                             ComponentData const& cd,
                             std::vector<int> const& cycle, int j) {
  long long sum = 0;
  for (int s : cycle) {
    for (int t : cd.orbits.at(static_cast<std::size_t>(j))) {
      sum += tally(s, t);
    }
  }
  return detail::halve_linking_sum(sum);
}

// lk^d_{i,j} computed with the cycle_index-th closure cycle of block i.
inline long long lk_entry_for_cycle(BraidWord const& w, ComponentData const& cd,
                                    Direction d, int i, std::size_t cycle_index,
                                    int j) {
  detail::require_cycles_match(w, cd, d);
  if (i == j) {
    return 0;
  }
  CrossingTally const tally(w);
  return lk_of_cycle(tally, cd, cd.cycles(d).at(i).at(cycle_index), j);
}

inline LinkingMatrix lk_matrix(BraidWord const& w, ComponentData const& cd,
                               Direction d) {
  detail::require_cycles_match(w, cd, d);
  CrossingTally const tally(w);
  LinkingMatrix lk(cd.n(), d);
  for (int i = 0; i < cd.n(); ++i) {
    auto const& chosen = cd.cycles(d)[i].front();
    for (int j = 0; j < cd.n(); ++j) {
      if (i != j) {
        lk(i, j) = lk_of_cycle(tally, cd, chosen, j);
      }
    }
  }
  return lk;
}

// ---------------------------------------------------------------------------
// Double linking numbers
// ---------------------------------------------------------------------------

// Entries are 0 or 1; the diagonal is 0.
using DlkMatrix = std::vector<std::vector<int>>;

inline int mod2(long long v) { return static_cast<int>(((v % 2) + 2) % 2); }

// N (lk + m_i + m_j) mod 2.
inline int dlk_main_form(long long lk, long long N, long long mi,
                         long long mj) {
  return mod2(N * mod2(lk + mi + mj));
}

// N (lk + m_i m_j / lcm * (lcm - 1)) mod 2 with lcm = lcm(m_i, m_j).
inline int dlk_lcm_form(long long lk, long long N, long long mi, long long mj) {
  long long const l = std::lcm(mi, mj);
  return mod2(N * mod2(lk + (mi * mj / l) * (l - 1)));
}

// Dlk of S_m(a, Delta^{2N}) from the a-direction linking matrix.
inline DlkMatrix dlk_delta(LinkingMatrix const& lk_a, long long N,
                           ComponentData const& cd) {
  if (lk_a.n() != cd.n()) {
    throw InputError("linking matrix and component data disagree on n");
  }
  int const n = cd.n();
  DlkMatrix out(static_cast<std::size_t>(n),
                std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) {
        continue;
      }
      int main = dlk_main_form(lk_a(i, j), N, cd.degrees[i], cd.degrees[j]);
      int alt = dlk_lcm_form(lk_a(i, j), N, cd.degrees[i], cd.degrees[j]);
      if (main != alt) {
        throw ConsistencyError("Dlk main form and lcm form disagree at ("
                               + std::to_string(i + 1) + ","
                               + std::to_string(j + 1) + ")");
      }
      out[i][j] = main;
    }
  }
  return out;
}

// Dlk of S_m(a, a^N), the same for every pair of distinct components.
inline int dlk_selfpower(long long N) { return mod2(N); }

// ---------------------------------------------------------------------------
// Triple linking numbers
// ---------------------------------------------------------------------------

class TlkTensor {
 public:
  explicit TlkTensor(int n = 0)
      : n_(n),
        data_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n)
                  * static_cast<std::size_t>(n),
              0) {}

  int n() const noexcept { return n_; }
  long long operator()(int i, int j, int k) const {
    return data_.at(index(i, j, k));
  }
  long long& operator()(int i, int j, int k) { return data_.at(index(i, j, k)); }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(),
                       [](long long v) { return v == 0; });
  }

  // Tlk_{i,j,k} = -Tlk_{k,j,i} and Tlk_{i,j,i} = 0.
  bool is_antisymmetric() const {
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j) {
        for (int k = 0; k < n_; ++k) {
          if ((*this)(i, j, k) != -(*this)(k, j, i)) {
            return false;
          }
        }
      }
    }
    return true;
  }

  friend bool operator==(TlkTensor const&, TlkTensor const&) = default;

 private:
  std::size_t index(int i, int j, int k) const {
    auto n = static_cast<std::size_t>(n_);
    return (static_cast<std::size_t>(i) * n + static_cast<std::size_t>(j)) * n
           + static_cast<std::size_t>(k);
  }

  int n_;
  std::vector<long long> data_;
};

inline bool pairwise_distinct(int i, int j, int k) {
  return i != j && j != k && i != k;
}

// Tlk_{i,j,k} = lk^a_{j,i} lk^b_{j,k} - lk^a_{j,k} lk^b_{j,i}.
inline TlkTensor tlk(LinkingMatrix const& lk_a, LinkingMatrix const& lk_b) {
  if (lk_a.n() != lk_b.n()) {
    throw InputError("linking matrices have different sizes");
  }
  int const n = lk_a.n();
  TlkTensor out(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        if (pairwise_distinct(i, j, k)) {
          out(i, j, k) = lk_a(j, i) * lk_b(j, k) - lk_a(j, k) * lk_b(j, i);
        }
      }
    }
  }
  return out;
}

// Shortcut for b = Delta^{2N}: N (m_k lk^a_{j,i} - m_i lk^a_{j,k}).
inline TlkTensor tlk_full_twist_shortcut(LinkingMatrix const& lk_a,
                                         long long N,
                                         std::vector<int> const& degrees) {
  int const n = lk_a.n();
  if (static_cast<int>(degrees.size()) != n) {
    throw InputError("degree list and linking matrix disagree on n");
  }
  TlkTensor out(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        if (pairwise_distinct(i, j, k)) {
          out(i, j, k) = N * (degrees[k] * lk_a(j, i) - degrees[i] * lk_a(j, k));
        }
      }
    }
  }
  return out;
}

// Tlk for b = Delta^{2N}, computed both ways.
inline TlkTensor tlk_delta(LinkingMatrix const& lk_a, LinkingMatrix const& lk_b,
                           long long N, ComponentData const& cd) {
  TlkTensor general = tlk(lk_a, lk_b);
  if (general != tlk_full_twist_shortcut(lk_a, N, cd.degrees)) {
    throw ConsistencyError("Tlk disagrees with the full-twist shortcut");
  }
  return general;
}

// sum of |Tlk_{i,j,k}| over i != j, j != k.
inline long long triple_point_lower_bound(TlkTensor const& t) {
  if (!t.is_antisymmetric()) {
    throw ConsistencyError("Tlk tensor is not antisymmetric");
  }
  long long sum = 0;
  for (int i = 0; i < t.n(); ++i) {
    for (int j = 0; j < t.n(); ++j) {
      for (int k = 0; k < t.n(); ++k) {
        if (i != j && j != k) {
          sum += std::llabs(t(i, j, k));
        }
      }
    }
  }
  return sum;
}

// ---------------------------------------------------------------------------
// Peripheral data
// ---------------------------------------------------------------------------

// Row 0: coordinates of iota_*(m_j) in the meridian basis; row 1: of
// iota_*(l_j). Entry j is 0.
using PeripheralMatrix = std::array<std::vector<long long>, 2>;

inline PeripheralMatrix peripheral_matrix(int j, LinkingMatrix const& lk_a,
                                          LinkingMatrix const& lk_b) {
  if (lk_a.n() != lk_b.n()) {
    throw InputError("linking matrices have different sizes");
  }
  if (j < 0 || j >= lk_a.n()) {
    throw InputError("component index " + std::to_string(j + 1)
                     + " out of range 1.." + std::to_string(lk_a.n()));
  }
  PeripheralMatrix out;
  for (int i = 0; i < lk_a.n(); ++i) {
    out[0].push_back(i == j ? 0 : lk_a(j, i));
    out[1].push_back(i == j ? 0 : lk_b(j, i));
  }
  return out;
}

// Drops the coordinate of component j, leaving the meridians of the others.
inline std::vector<std::vector<long long>> peripheral_rows_without_self(
    PeripheralMatrix const& p, int j) {
  std::vector<std::vector<long long>> rows;
  for (auto const& row : p) {
    std::vector<long long> r;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (static_cast<int>(i) != j) {
        r.push_back(row[i]);
      }
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Everything at once
// ---------------------------------------------------------------------------

struct InvariantReport {
  // Present only when b = Delta^{2N}.
  std::optional<long long> full_twist_exponent;
  std::optional<DlkMatrix> dlk;
  TlkTensor tlk{0};
  long long triple_point_lower_bound = 0;
  std::vector<PeripheralMatrix> peripheral;

  friend bool operator==(InvariantReport const&, InvariantReport const&) = default;
};

struct LinkAnalysis {
  ComponentData components;
  LinkingMatrix lk_a{0, Direction::a};
  LinkingMatrix lk_b{0, Direction::b};
  InvariantReport invariants;
};

inline LinkAnalysis analyze(BraidWord const& a, BraidWord const& b) {
  LinkAnalysis out;
  out.components = components(a, b);
  ComponentData const& cd = out.components;
  out.lk_a = lk_matrix(a, cd, Direction::a);
  out.lk_b = lk_matrix(b, cd, Direction::b);

  InvariantReport& inv = out.invariants;
  inv.full_twist_exponent = full_twist_exponent(b);
  if (inv.full_twist_exponent) {
    long long const N = *inv.full_twist_exponent;
    inv.dlk = dlk_delta(out.lk_a, N, cd);
    inv.tlk = tlk_delta(out.lk_a, out.lk_b, N, cd);
  } else {
    inv.tlk = tlk(out.lk_a, out.lk_b);
  }
  inv.triple_point_lower_bound = triple_point_lower_bound(inv.tlk);
  for (int j = 0; j < cd.n(); ++j) {
    inv.peripheral.push_back(peripheral_matrix(j, out.lk_a, out.lk_b));
  }
  return out;
}

}  // namespace torlink
