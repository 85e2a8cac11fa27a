#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <queue>
#include <string>
#include <vector>

#include "torlink/free_word.hpp"
#include "torlink/presentation.hpp"

// Shortlex Knuth-Bendix completion for group presentations.
//
// The alphabet is x_1 < x_1^-1 < x_2 < x_2^-1 < ...; x_i is encoded as the
// letter 2(i-1) and its inverse as 2(i-1)+1, so inversion flips the low bit.

namespace torlink {

struct CompletionCaps {
  std::size_t max_rules = 20000;
  std::size_t max_len = 200;
  std::size_t max_passes = 50;
};

enum class CapHit { none, rules, length, passes };

inline std::string_view cap_name(CapHit c) {
  switch (c) {
    case CapHit::none: return "none";
    case CapHit::rules: return "max-rules";
    case CapHit::length: return "max-len";
    case CapHit::passes: return "max-passes";
  }
  return "?";
}

struct CompletionStats {
  std::size_t rules = 0;           // active rules at the end
  std::size_t rules_created = 0;   // including ones later removed
  std::size_t passes = 0;
  std::size_t critical_pairs = 0;

  friend bool operator==(CompletionStats const&, CompletionStats const&) = default;
};

class RewritingSystem {
 public:
  using Letter = std::uint16_t;
  using Word = std::vector<Letter>;

  struct Rule {
    Word lhs;
    Word rhs;
  };

  explicit RewritingSystem(int rank)
      : rank_(rank), alphabet_(static_cast<std::size_t>(2 * rank)) {
    new_node();
  }

  int rank() const noexcept { return rank_; }
  bool confluent() const noexcept { return confluent_; }
  CapHit cap_hit() const noexcept { return cap_hit_; }
  CompletionStats const& stats() const noexcept { return stats_; }

  std::vector<Rule> rules() const {
    std::vector<Rule> out;
    for (std::size_t i = 0; i < rules_.size(); ++i) {
      if (active_[i]) {
        out.push_back(rules_[i]);
      }
    }
    return out;
  }

  static Letter encode(int g) {
    return static_cast<Letter>(2 * (std::abs(g) - 1) + (g < 0 ? 1 : 0));
  }
  static int decode(Letter c) {
    int i = c / 2 + 1;
    return (c & 1) ? -i : i;
  }
  static Letter inverse_letter(Letter c) { return static_cast<Letter>(c ^ 1); }

  static Word inverse(Word const& w) {
    Word out(w.rbegin(), w.rend());
    for (auto& c : out) {
      c = inverse_letter(c);
    }
    return out;
  }

  static bool shortlex_less(Word const& u, Word const& v) {
    if (u.size() != v.size()) {
      return u.size() < v.size();
    }
    return u < v;
  }

  Word encode(FreeWord const& w) const {
    Word out;
    out.reserve(w.length());
    for (int g : w.letters()) {
      out.push_back(encode(g));
    }
    return out;
  }

  FreeWord decode(Word const& w) const {
    FreeWord out(rank_);
    for (Letter c : w) {
      out.append_letter(decode(c));
    }
    return out;
  }

  // Rewrites w to an irreducible word. The result is the unique normal form
  // when the system is confluent.
  Word rewrite(Word const& w) const {
    Word out;
    out.reserve(w.size());
    Word todo(w.rbegin(), w.rend());
    while (!todo.empty()) {
      out.push_back(todo.back());
      todo.pop_back();
      int r = match_suffix(out);
      if (r >= 0) {
        Rule const& rule = rules_[static_cast<std::size_t>(r)];
        out.resize(out.size() - rule.lhs.size());
        todo.insert(todo.end(), rule.rhs.rbegin(), rule.rhs.rend());
      }
    }
    return out;
  }

  FreeWord normal_form(FreeWord const& w) const {
    return decode(rewrite(encode(w)));
  }

 private:
  friend class Completion;

  // Trie over reversed left-hand sides, so that a suffix of the rewrite
  // buffer can be matched by walking it backwards.
  int new_node() {
    next_.insert(next_.end(), alphabet_, -1);
    rule_at_.push_back(-1);
    return static_cast<int>(rule_at_.size()) - 1;
  }

  void trie_insert(Word const& lhs, int rule) {
    int node = 0;
    for (auto it = lhs.rbegin(); it != lhs.rend(); ++it) {
      std::size_t slot = static_cast<std::size_t>(node) * alphabet_ + *it;
      if (next_[slot] < 0) {
        int child = new_node();
        next_[slot] = child;
      }
      node = next_[slot];
    }
    rule_at_[static_cast<std::size_t>(node)] = rule;
  }

  void trie_erase(Word const& lhs) {
    int node = 0;
    for (auto it = lhs.rbegin(); it != lhs.rend() && node >= 0; ++it) {
      node = next_[static_cast<std::size_t>(node) * alphabet_ + *it];
    }
    if (node >= 0) {
      rule_at_[static_cast<std::size_t>(node)] = -1;
    }
  }

  int match_suffix(Word const& buf) const {
    int node = 0;
    for (auto it = buf.rbegin(); it != buf.rend(); ++it) {
      node = next_[static_cast<std::size_t>(node) * alphabet_ + *it];
      if (node < 0) {
        return -1;
      }
      if (rule_at_[static_cast<std::size_t>(node)] >= 0) {
        return rule_at_[static_cast<std::size_t>(node)];
      }
    }
    return -1;
  }

  int rank_;
  std::size_t alphabet_;
  std::vector<Rule> rules_;
  std::vector<bool> active_;
  std::vector<int> next_;
  std::vector<int> rule_at_;
  bool confluent_ = false;
  CapHit cap_hit_ = CapHit::none;
  CompletionStats stats_;
};

class Completion {
  using Word = RewritingSystem::Word;

 public:
  Completion(RewritingSystem& rs, CompletionCaps caps)
      : rs_(rs), caps_(caps) {}

  void add_equation(Word u, Word v, std::size_t generation = 0) {
    pending_.push(Equation{std::move(u), std::move(v), generation});
  }

  // Equations u = 1 for every rotation of r and of r^-1, each split in the
  // middle.
  void add_symmetrized_relator(Word const& r) {
    for (Word const& w : {r, RewritingSystem::inverse(r)}) {
      for (std::size_t shift = 0; shift < w.size(); ++shift) {
        Word rot(w.begin() + static_cast<long>(shift), w.end());
        rot.insert(rot.end(), w.begin(), w.begin() + static_cast<long>(shift));
        std::size_t half = (rot.size() + 1) / 2;
        Word lhs(rot.begin(), rot.begin() + static_cast<long>(half));
        Word rest(rot.begin() + static_cast<long>(half), rot.end());
        add_equation(std::move(lhs), RewritingSystem::inverse(rest));
      }
    }
  }

  void run() {
    if (!drain()) {
      return finish(CapHit::rules);
    }
    // Given-rule loop: always process the unprocessed rule with the
    // shortest left-hand side next, so that short rules created along the
    // way simplify everything before long rules spawn overlaps.
    while (!unprocessed_.empty()) {
      auto [len, id] = unprocessed_.top();
      unprocessed_.pop();
      if (!rs_.active_[id] || processed_[id]) {
        continue;
      }
      if (generation_[id] > caps_.max_passes) {
        return finish(CapHit::passes);
      }
      rs_.stats_.passes = std::max(rs_.stats_.passes, generation_[id]);
      processed_[id] = true;
      processed_ids_.push_back(id);
      std::erase_if(processed_ids_,
                    [this](std::size_t j) { return !rs_.active_[j]; });
      for (std::size_t j : processed_ids_) {
        std::size_t gen = std::max(generation_[id], generation_[j]) + 1;
        overlaps(id, j, gen);
        if (j != id) {
          overlaps(j, id, gen);
        }
      }
      if (!drain()) {
        return finish(CapHit::rules);
      }
    }
    finish(length_hit_ ? CapHit::length : CapHit::none);
  }

 private:
  struct Equation {
    Word u;
    Word v;
    std::size_t generation = 0;
    std::size_t weight() const { return u.size() + v.size(); }
    bool operator>(Equation const& o) const { return weight() > o.weight(); }
  };

  void finish(CapHit hit) {
    rs_.cap_hit_ = hit;
    rs_.confluent_ = hit == CapHit::none;
    rs_.stats_.rules = active_;
  }

  // Returns false when the rule cap is exceeded.
  bool drain() {
    while (!pending_.empty()) {
      Equation eq = pending_.top();
      pending_.pop();
      Word u = rs_.rewrite(eq.u);
      Word v = rs_.rewrite(eq.v);
      if (u == v) {
        continue;
      }
      if (RewritingSystem::shortlex_less(u, v)) {
        std::swap(u, v);
      }
      if (u.size() > caps_.max_len) {
        length_hit_ = true;
        continue;
      }
      add_rule(std::move(u), std::move(v), eq.generation);
      if (active_ > caps_.max_rules) {
        return false;
      }
    }
    return true;
  }

  static bool contains(Word const& hay, Word const& needle) {
    return std::search(hay.begin(), hay.end(), needle.begin(), needle.end())
           != hay.end();
  }

  void add_rule(Word lhs, Word rhs, std::size_t generation) {
    std::size_t const id = rs_.rules_.size();
    rs_.rules_.push_back({std::move(lhs), std::move(rhs)});
    rs_.active_.push_back(true);
    processed_.push_back(false);
    generation_.push_back(generation);
    unprocessed_.push({rs_.rules_[id].lhs.size(), id});
    ++active_;
    ++rs_.stats_.rules_created;
    Word const& new_lhs = rs_.rules_[id].lhs;
    rs_.trie_insert(new_lhs, static_cast<int>(id));

    // Interreduce: rules whose lhs contains the new lhs go back to the
    // queue; right-hand sides are kept irreducible.
    for (std::size_t i = 0; i < id; ++i) {
      if (!rs_.active_[i]) {
        continue;
      }
      auto& rule = rs_.rules_[i];
      if (contains(rule.lhs, new_lhs)) {
        rs_.active_[i] = false;
        --active_;
        rs_.trie_erase(rule.lhs);
        pending_.push(Equation{rule.lhs, rule.rhs, generation_[i]});
      } else if (contains(rule.rhs, new_lhs)) {
        rule.rhs = rs_.rewrite(rule.rhs);
      }
    }
  }

  // Proper overlaps: a suffix of lhs_i equals a prefix of lhs_j.
  void overlaps(std::size_t i, std::size_t j, std::size_t generation) {
    Word const& li = rs_.rules_[i].lhs;
    Word const& lj = rs_.rules_[j].lhs;
    std::size_t const max_overlap = std::min(li.size(), lj.size()) - 1;
    for (std::size_t o = 1; o <= max_overlap; ++o) {
      if (!std::equal(li.end() - static_cast<long>(o), li.end(), lj.begin())) {
        continue;
      }
      ++rs_.stats_.critical_pairs;
      Word left = rs_.rules_[i].rhs;
      left.insert(left.end(), lj.begin() + static_cast<long>(o), lj.end());
      Word right(li.begin(), li.end() - static_cast<long>(o));
      right.insert(right.end(), rs_.rules_[j].rhs.begin(),
                   rs_.rules_[j].rhs.end());
      add_equation(std::move(left), std::move(right), generation);
    }
  }

  RewritingSystem& rs_;
  CompletionCaps caps_;
  std::priority_queue<Equation, std::vector<Equation>, std::greater<>>
      pending_;
  std::priority_queue<std::pair<std::size_t, std::size_t>,
                      std::vector<std::pair<std::size_t, std::size_t>>,
                      std::greater<>>
      unprocessed_;
  std::vector<bool> processed_;
  std::vector<std::size_t> processed_ids_;
  std::vector<std::size_t> generation_;
  std::size_t active_ = 0;
  bool length_hit_ = false;
};

// Completes the free-cancellation rules together with the symmetrized
// relators of p. Hitting a cap yields a system flagged non-confluent.
inline RewritingSystem knuth_bendix(Presentation const& p,
                                    CompletionCaps caps = {}) {
  if (caps.max_rules == 0 || caps.max_len == 0 || caps.max_passes == 0) {
    throw InputError("completion caps must be positive");
  }
  RewritingSystem rs(p.generator_count());
  Completion c(rs, caps);
  for (int i = 1; i <= p.generator_count(); ++i) {
    auto x = RewritingSystem::encode(i);
    auto X = RewritingSystem::inverse_letter(x);
    c.add_equation({x, X}, {});
    c.add_equation({X, x}, {});
  }
  for (auto const& r : p.relators()) {
    c.add_symmetrized_relator(rs.encode(cyclically_reduce(r)));
  }
  c.run();
  return rs;
}

}  // namespace torlink
