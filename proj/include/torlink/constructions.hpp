#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "torlink/errors.hpp"
#include "torlink/free_word.hpp"
#include "torlink/presentation.hpp"

namespace torlink {

// ---------------------------------------------------------------------------
// Genus-rank feasibility
// ---------------------------------------------------------------------------

class GenusProfile {
 public:
  GenusProfile() = default;
  explicit GenusProfile(std::vector<long long> genera)
      : genera_(std::move(genera)) {
    for (long long g : genera_) {
      if (g < 0) {
        throw InputError("genus must be nonnegative, got " + std::to_string(g));
      }
    }
  }

  std::vector<long long> const& genera() const noexcept { return genera_; }
  std::size_t n() const noexcept { return genera_.size(); }
  long long total() const {
    return std::accumulate(genera_.begin(), genera_.end(), 0LL);
  }

  friend bool operator==(GenusProfile const&, GenusProfile const&) = default;

 private:
  std::vector<long long> genera_;
};

struct FeasibilityResult {
  bool feasible = true;
  // First failing prefix (sorted ascending), when infeasible.
  std::size_t prefix = 0;
  long long lhs = 0;  // k(k-1)
  long long rhs = 0;  // 4 G_k

  std::string explain() const {
    if (feasible) {
      return "feasible (necessary condition only)";
    }
    return "infeasible (prefix k=" + std::to_string(prefix) + ": "
           + std::to_string(lhs) + " < " + std::to_string(rhs) + " fails)";
  }
};

// Every sub-multiset of k components of an abelian surface link needs
// k(k-1) < 4 G. The k smallest genera give the smallest G, so checking the
// sorted prefixes suffices.
inline FeasibilityResult check_genus_rank(GenusProfile const& p) {
  std::vector<long long> g = p.genera();
  std::sort(g.begin(), g.end());
  FeasibilityResult out;
  long long prefix_genus = 0;
  for (std::size_t k = 1; k <= g.size(); ++k) {
    prefix_genus += g[k - 1];
    if (k < 2) {
      continue;
    }
    long long const lhs = static_cast<long long>(k * (k - 1));
    long long const rhs = 4 * prefix_genus;
    if (!(lhs < rhs)) {
      out = {false, k, lhs, rhs};
      return out;
    }
  }
  return out;
}

inline bool genus_rank_feasible(GenusProfile const& p) {
  return check_genus_rank(p).feasible;
}

// ---------------------------------------------------------------------------
// Constructions
// ---------------------------------------------------------------------------

struct ConstructionStep {
  enum class Kind { component, commutator };

  Kind kind = Kind::component;
  int i = 0;           // new generator, or first generator of the commutator
  int j = 0;           // second generator of the commutator
  int component = 0;   // component whose genus changes (1-based)
  long long genus = 0; // genus added to that component

  std::string describe() const {
    if (kind == Kind::component) {
      return "add component " + std::to_string(component) + " of genus "
             + std::to_string(genus);
    }
    return "add [x" + std::to_string(i) + ", x" + std::to_string(j)
           + "], handle on component " + std::to_string(component);
  }

  friend bool operator==(ConstructionStep const&,
                         ConstructionStep const&) = default;
};

struct ConstructionRecord {
  std::string name;
  Presentation presentation{0};
  std::vector<long long> component_genera;
  std::vector<ConstructionStep> steps;

  int rank() const { return presentation.generator_count(); }
  long long total_genus() const {
    return std::accumulate(component_genera.begin(), component_genera.end(),
                           0LL);
  }
  GenusProfile profile() const { return GenusProfile(component_genera); }
  std::size_t commutator_steps() const {
    return static_cast<std::size_t>(
        std::count_if(steps.begin(), steps.end(), [](auto const& s) {
          return s.kind == ConstructionStep::Kind::commutator;
        }));
  }

  friend bool operator==(ConstructionRecord const&,
                         ConstructionRecord const&) = default;
};

namespace detail {

// Relators live in a fixed rank, so a tower is rebuilt in rank n up front;
// unused generators are just free letters until their component appears.
inline void add_handle(ConstructionRecord& r, int i, int j) {
  r.presentation = add_commutator(std::move(r.presentation), i, j);
  r.component_genera[static_cast<std::size_t>(i - 1)] += 1;
  r.steps.push_back({ConstructionStep::Kind::commutator, i, j, i, 1});
}

// Handles added at stage n: [x_n, x_i] for i = 2..n-3, then [x_1, x_{n-1}],
// then the stage n-1 schedule; stage 5 is the single handle [x_5, x_2].
inline void highgenus_schedule(ConstructionRecord& r, int n) {
  if (n == 5) {
    add_handle(r, 5, 2);
    return;
  }
  for (int i = 2; i <= n - 3; ++i) {
    add_handle(r, n, i);
  }
  add_handle(r, 1, n - 1);
  highgenus_schedule(r, n - 1);
}

}  // namespace detail

// Rank n abelian surface link built by adding, one at a time, a component
// of genus equal to the current rank whose meridian commutes with all others.
inline ConstructionRecord plus_tower(int n) {
  if (n < 1) {
    throw InputError("plus_tower needs n >= 1");
  }
  ConstructionRecord r;
  r.name = "plus_tower(" + std::to_string(n) + ")";
  r.presentation = Presentation(n);
  for (int k = 1; k <= n; ++k) {
    long long const g = k - 1;
    for (int i = 1; i < k; ++i) {
      r.presentation = add_commutator(std::move(r.presentation), k, i);
    }
    r.component_genera.push_back(g);
    r.steps.push_back({ConstructionStep::Kind::component, k, 0, k, g});
  }
  return r;
}

// H(n) = (n^2 - 5n + 2) / 2 handles after the initial [x_1, x_n].
inline long long highgenus_handles(long long n) { return (n * n - 5 * n + 2) / 2; }

inline long long highgenus_genus(long long n) { return (n * n - 3 * n + 4) / 2; }

// Starts from n tori with group <x_i | x_i c = c x_i, [x_i, x_{i+1}]>,
// c = x_1...x_n, closes the chain with [x_1, x_n] and then follows the
// recursive handle schedule.
inline ConstructionRecord highgenus(int n) {
  if (n <= 4) {
    throw InputError("highgenus needs n > 4, got " + std::to_string(n));
  }
  ConstructionRecord r;
  r.name = "highgenus(" + std::to_string(n) + ")";
  r.presentation = Presentation(n);
  FreeWord const c = generator_product(n, 1, n);
  for (int i = 1; i <= n; ++i) {
    r.presentation.add_relator(commutator(r.presentation.generator(i), c));
  }
  for (int i = 1; i < n; ++i) {
    r.presentation =
        add_commutator(std::move(r.presentation), i, i + 1);
  }
  for (int i = 1; i <= n; ++i) {
    r.component_genera.push_back(1);
    r.steps.push_back({ConstructionStep::Kind::component, i, 0, i, 1});
  }
  detail::add_handle(r, 1, n);
  detail::highgenus_schedule(r, n);
  return r;
}

}  // namespace torlink
