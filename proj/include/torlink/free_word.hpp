#pragma once

#include <cstdlib>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "torlink/errors.hpp"

namespace torlink {

// Freely reduced word in the free group on x_1..x_rank. Letter +i is x_i,
// letter -i is its inverse.
class FreeWord {
 public:
  explicit FreeWord(int rank) : rank_(rank) {}

  // Reduces the given letters.
  FreeWord(int rank, std::span<int const> letters) : rank_(rank) {
    letters_.reserve(letters.size());
    for (int g : letters) {
      append_letter(g);
    }
  }

  FreeWord(int rank, std::initializer_list<int> letters)
      : FreeWord(rank, std::span<int const>(letters.begin(), letters.size())) {}

  static FreeWord generator(int rank, int i) { return FreeWord(rank, {i}); }

  int rank() const noexcept { return rank_; }
  std::vector<int> const& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool is_identity() const noexcept { return letters_.empty(); }

  void append_letter(int g) {
    if (g == 0 || std::abs(g) > rank_) {
      throw InputError("letter " + std::to_string(g)
                       + " out of range for free group of rank "
                       + std::to_string(rank_));
    }
    if (!letters_.empty() && letters_.back() == -g) {
      letters_.pop_back();
    } else {
      letters_.push_back(g);
    }
  }

  FreeWord& operator*=(FreeWord const& rhs) {
    require_same_rank(rhs);
    // Cancel across the seam first, then copy the rest.
    std::size_t i = 0;
    while (i < rhs.letters_.size() && !letters_.empty()
           && letters_.back() == -rhs.letters_[i]) {
      letters_.pop_back();
      ++i;
    }
    letters_.insert(letters_.end(), rhs.letters_.begin() + static_cast<long>(i),
                    rhs.letters_.end());
    return *this;
  }

  friend FreeWord operator*(FreeWord lhs, FreeWord const& rhs) {
    lhs *= rhs;
    return lhs;
  }

  FreeWord inverse() const {
    FreeWord out(rank_);
    out.letters_.assign(letters_.rbegin(), letters_.rend());
    for (int& g : out.letters_) {
      g = -g;
    }
    return out;
  }

  // u^{-1} w u
  FreeWord conjugated_by(FreeWord const& u) const {
    return u.inverse() * *this * u;
  }

  void require_same_rank(FreeWord const& other) const {
    if (other.rank_ != rank_) {
      throw InputError("free group ranks differ: " + std::to_string(rank_)
                       + " vs " + std::to_string(other.rank_));
    }
  }

  friend bool operator==(FreeWord const&, FreeWord const&) = default;
  friend auto operator<=>(FreeWord const&, FreeWord const&) = default;

 private:
  int rank_;
  std::vector<int> letters_;
};

inline FreeWord free_reduce(std::span<int const> letters, int rank) {
  return FreeWord(rank, letters);
}

// Commutator [a, b] = a b a^{-1} b^{-1}.
inline FreeWord commutator(FreeWord const& a, FreeWord const& b) {
  return a * b * a.inverse() * b.inverse();
}

// x_first x_{first+1} ... x_last
inline FreeWord generator_product(int rank, int first, int last) {
  FreeWord out(rank);
  for (int i = first; i <= last; ++i) {
    out.append_letter(i);
  }
  return out;
}

// Cyclically reduced conjugate.
inline FreeWord cyclically_reduce(FreeWord const& w) {
  auto const& l = w.letters();
  std::size_t lo = 0, hi = l.size();
  while (hi - lo >= 2 && l[lo] == -l[hi - 1]) {
    ++lo;
    --hi;
  }
  return FreeWord(w.rank(), std::span<int const>(l.data() + lo, hi - lo));
}

// Letter syntax: "x1 x2 x1^-1 x2^-1"; the identity prints as "1".
inline std::string to_string(FreeWord const& w) {
  if (w.is_identity()) {
    return "1";
  }
  std::string out;
  for (int g : w.letters()) {
    if (!out.empty()) {
      out += ' ';
    }
    out += 'x' + std::to_string(std::abs(g));
    if (g < 0) {
      out += "^-1";
    }
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, FreeWord const& w) {
  return os << to_string(w);
}

}  // namespace torlink
