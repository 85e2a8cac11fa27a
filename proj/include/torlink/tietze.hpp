#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "torlink/free_word.hpp"
#include "torlink/presentation.hpp"

// Presentation simplification ahead of completion: relator shortening by
// substring replacement, length-reducing Nielsen moves on the generators,
// and elimination of generators that occur exactly once in some relator.
// The result presents the same group.

namespace torlink {

struct TietzeCaps {
  // An elimination may grow the total relator length by at most this much.
  std::size_t max_growth = 200;
  std::size_t max_rounds = 200;
};

struct SimplifiedPresentation {
  // Same rank as the input; eliminated generators do not occur. Generator i
  // of the result need not be the original x_i (Nielsen moves rename).
  Presentation presentation;
  std::vector<int> kept;  // generators still present, ascending
  // images[i - 1] is the original x_i as a word in the kept generators.
  std::vector<FreeWord> images;
};

namespace detail {

using Letters = std::vector<int>;

class TietzeSimplifier {
 public:
  TietzeSimplifier(Presentation const& p, TietzeCaps caps)
      : rank_(p.generator_count()),
        caps_(caps),
        eliminated_(static_cast<std::size_t>(rank_), false) {
    for (int i = 1; i <= rank_; ++i) {
      images_.push_back(FreeWord::generator(rank_, i));
    }
    for (auto const& r : p.relators()) {
      add(r);
    }
  }

  SimplifiedPresentation run() {
    for (std::size_t round = 0; round < caps_.max_rounds; ++round) {
      while (shorten_once() || nielsen_once()) {
      }
      if (!eliminate_once()) {
        break;
      }
    }
    SimplifiedPresentation out{Presentation(rank_), {}, images_};
    for (auto const& r : relators_) {
      out.presentation.add_relator(r);
    }
    for (int i = 1; i <= rank_; ++i) {
      if (!eliminated_[static_cast<std::size_t>(i - 1)]) {
        out.kept.push_back(i);
      }
    }
    return out;
  }

 private:
  void add(FreeWord const& r) {
    FreeWord c = cyclically_reduce(r);
    if (c.is_identity() || known(c)) {
      return;
    }
    relators_.push_back(std::move(c));
  }

  // Some cyclic conjugate of r or r^-1 is already a relator.
  bool known(FreeWord const& r) const {
    for (auto const& s : relators_) {
      if (s.length() == r.length()
          && (cyclic_match(s.letters(), r.letters())
              || cyclic_match(s.letters(), r.inverse().letters()))) {
        return true;
      }
    }
    return false;
  }

  static bool cyclic_match(Letters const& s, Letters const& r) {
    Letters doubled(s);
    doubled.insert(doubled.end(), s.begin(), s.end());
    return std::search(doubled.begin(), doubled.end(), r.begin(), r.end())
           != doubled.end();
  }

  static Letters rotate(Letters const& w, std::size_t k) {
    Letters out(w.begin() + static_cast<long>(k), w.end());
    out.insert(out.end(), w.begin(), w.begin() + static_cast<long>(k));
    return out;
  }

  static Letters invert(Letters const& w) {
    Letters out(w.rbegin(), w.rend());
    for (int& g : out) {
      g = -g;
    }
    return out;
  }

  // Finds u (more than half of some relator s) as a cyclic subword of
  // another relator r and replaces it by the shorter remainder of s.
  bool shorten_once() {
    for (std::size_t si = 0; si < relators_.size(); ++si) {
      Letters const s = relators_[si].letters();
      std::size_t const len = s.size();
      std::size_t const h = len / 2 + 1;
      for (Letters const& w : {s, invert(s)}) {
        for (std::size_t k = 0; k < len; ++k) {
          Letters const rot = rotate(w, k);
          Letters const u(rot.begin(), rot.begin() + static_cast<long>(h));
          Letters const v =
              invert(Letters(rot.begin() + static_cast<long>(h), rot.end()));
          for (std::size_t ri = 0; ri < relators_.size(); ++ri) {
            if (ri == si) {
              continue;
            }
            Letters const& r = relators_[ri].letters();
            if (r.size() < h) {
              continue;
            }
            Letters doubled(r);
            doubled.insert(doubled.end(), r.begin(), r.end());
            auto it = std::search(doubled.begin(), doubled.end(), u.begin(),
                                  u.end());
            if (it == doubled.end()) {
              continue;
            }
            auto pos = static_cast<std::size_t>(it - doubled.begin());
            if (pos >= r.size()) {
              continue;
            }
            Letters shorter(v);
            Letters tail = rotate(r, pos);
            shorter.insert(shorter.end(), tail.begin() + static_cast<long>(h),
                           tail.end());
            relators_.erase(relators_.begin() + static_cast<long>(ri));
            add(FreeWord(rank_, shorter));
            return true;
          }
        }
      }
    }
    return false;
  }

  // Picks the elimination with the smallest growth in total length.
  bool eliminate_once() {
    struct Choice {
      std::size_t relator;
      int generator;
      long long growth;
    };
    std::optional<Choice> best;
    for (std::size_t ri = 0; ri < relators_.size(); ++ri) {
      Letters const& r = relators_[ri].letters();
      for (int g = 1; g <= rank_; ++g) {
        auto count = std::count_if(r.begin(), r.end(),
                                   [g](int c) { return std::abs(c) == g; });
        if (count != 1) {
          continue;
        }
        long long occurrences = 0;
        for (std::size_t j = 0; j < relators_.size(); ++j) {
          if (j != ri) {
            occurrences += std::count_if(
                relators_[j].letters().begin(), relators_[j].letters().end(),
                [g](int c) { return std::abs(c) == g; });
          }
        }
        long long growth = occurrences * (static_cast<long long>(r.size()) - 2)
                           - static_cast<long long>(r.size());
        if (!best || growth < best->growth) {
          best = Choice{ri, g, growth};
        }
      }
    }
    if (!best || best->growth > static_cast<long long>(caps_.max_growth)) {
      return false;
    }
    // Rotate so that the generator leads: g^e w = 1, hence g = (w^-1)^e.
    Letters const& r = relators_[best->relator].letters();
    std::size_t at = 0;
    while (std::abs(r[at]) != best->generator) {
      ++at;
    }
    Letters rot = rotate(r, at);
    FreeWord rest(rank_, Letters(rot.begin() + 1, rot.end()));
    FreeWord value = rot.front() > 0 ? rest.inverse() : rest;
    relators_.erase(relators_.begin() + static_cast<long>(best->relator));
    substitute(best->generator, value);
    eliminated_[static_cast<std::size_t>(best->generator - 1)] = true;
    return true;
  }

  std::size_t total_length() const {
    std::size_t t = 0;
    for (auto const& r : relators_) {
      t += r.length();
    }
    return t;
  }

  static std::size_t cyclic_length(FreeWord const& w) {
    return cyclically_reduce(w).length();
  }

  // Applies the move x_g -> x_g x_h^e or x_h^e x_g that shortens the total
  // relator length most, if any does.
  bool nielsen_once() {
    std::size_t const before = total_length();
    std::size_t best_len = before;
    std::optional<FreeWord> best_value;
    int best_g = 0;
    for (int g = 1; g <= rank_; ++g) {
      if (eliminated_[static_cast<std::size_t>(g - 1)]) {
        continue;
      }
      for (int h = 1; h <= rank_; ++h) {
        if (h == g || eliminated_[static_cast<std::size_t>(h - 1)]) {
          continue;
        }
        for (int e : {h, -h}) {
          FreeWord const xg = FreeWord::generator(rank_, g);
          FreeWord const xh(rank_, {e});
          for (FreeWord const& value : {xg * xh, xh * xg}) {
            std::size_t len = 0;
            for (auto const& r : relators_) {
              len += cyclic_length(apply(r, g, value));
            }
            if (len < best_len) {
              best_len = len;
              best_value = value;
              best_g = g;
            }
          }
        }
      }
    }
    if (!best_value) {
      return false;
    }
    substitute(best_g, *best_value);
    return true;
  }

  static FreeWord apply(FreeWord const& w, int g, FreeWord const& value) {
    FreeWord out(w.rank());
    for (int c : w.letters()) {
      if (c == g) {
        out *= value;
      } else if (c == -g) {
        out *= value.inverse();
      } else {
        out *= FreeWord(w.rank(), {c});
      }
    }
    return out;
  }

  void substitute(int g, FreeWord const& value) {
    std::vector<FreeWord> old;
    old.swap(relators_);
    for (auto const& r : old) {
      add(apply(r, g, value));
    }
    for (auto& image : images_) {
      image = apply(image, g, value);
    }
  }

  int rank_;
  TietzeCaps caps_;
  std::vector<FreeWord> relators_;
  std::vector<bool> eliminated_;
  std::vector<FreeWord> images_;
};

}  // namespace detail

inline SimplifiedPresentation simplify(Presentation const& p,
                                       TietzeCaps caps = {}) {
  return detail::TietzeSimplifier(p, caps).run();
}

}  // namespace torlink
