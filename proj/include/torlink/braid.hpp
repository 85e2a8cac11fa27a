#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstddef>
#include <cstdlib>
#include <numeric>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "torlink/errors.hpp"

namespace torlink {

// A word in the standard generators of the braid group B_m. Letter g stands
// for sigma_{|g|} when g > 0 and for its inverse when g < 0.
class BraidWord {
 public:
  explicit BraidWord(int strands = 1) : strands_(strands) {
    if (strands < 1) {
      throw InputError("braid needs at least one strand, got "
                       + std::to_string(strands));
    }
  }

  BraidWord(int strands, std::vector<int> letters)
      : strands_(strands), letters_(std::move(letters)) {
    if (strands < 1) {
      throw InputError("braid needs at least one strand, got "
                       + std::to_string(strands));
    }
    for (int g : letters_) {
      check_letter(g);
    }
  }

  int strands() const noexcept { return strands_; }
  std::vector<int> const& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  void push_back(int g) {
    check_letter(g);
    letters_.push_back(g);
  }

  BraidWord& operator*=(BraidWord const& rhs) {
    require_same_strands(rhs);
    letters_.insert(letters_.end(), rhs.letters_.begin(), rhs.letters_.end());
    return *this;
  }

  friend BraidWord operator*(BraidWord lhs, BraidWord const& rhs) {
    lhs *= rhs;
    return lhs;
  }

  BraidWord inverse() const {
    std::vector<int> out(letters_.rbegin(), letters_.rend());
    for (int& g : out) {
      g = -g;
    }
    return BraidWord(strands_, std::move(out));
  }

  // Integer power; negative exponents repeat the inverse.
  BraidWord pow(long long exponent) const {
    BraidWord base = exponent < 0 ? inverse() : *this;
    BraidWord out(strands_);
    out.letters_.reserve(base.length()
                         * static_cast<std::size_t>(std::llabs(exponent)));
    for (long long i = 0; i < std::llabs(exponent); ++i) {
      out *= base;
    }
    return out;
  }

  long long exponent_sum() const {
    long long s = 0;
    for (int g : letters_) {
      s += g > 0 ? 1 : -1;
    }
    return s;
  }

  void require_same_strands(BraidWord const& other) const {
    if (other.strands_ != strands_) {
      throw InputError("strand counts differ: " + std::to_string(strands_)
                       + " vs " + std::to_string(other.strands_));
    }
  }

  // Syntactic equality. Use braid_equal for equality in the group.
  friend bool operator==(BraidWord const&, BraidWord const&) = default;

 private:
  void check_letter(int g) const {
    if (g == 0 || std::abs(g) > strands_ - 1) {
      throw InputError("generator index " + std::to_string(std::abs(g))
                       + " out of range for " + std::to_string(strands_)
                       + " strands");
    }
  }

  int strands_;
  std::vector<int> letters_;
};

inline std::string to_string(BraidWord const& b) {
  std::string out;
  for (int g : b.letters()) {
    if (!out.empty()) {
      out += ' ';
    }
    out += 's' + std::to_string(std::abs(g));
    if (g < 0) {
      out += "^-1";
    }
  }
  return out;
}

// Compact comma form, e.g. "1,1,-2".
inline std::string to_compact_string(BraidWord const& b) {
  std::string out;
  for (int g : b.letters()) {
    if (!out.empty()) {
      out += ',';
    }
    out += std::to_string(g);
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, BraidWord const& b) {
  return os << to_string(b);
}

// (sigma_first sigma_{first+1} ... sigma_last), empty when last < first.
inline BraidWord ascending_run(int strands, int first, int last) {
  BraidWord out(strands);
  for (int g = first; g <= last; ++g) {
    out.push_back(g);
  }
  return out;
}

// (sigma_first sigma_{first-1} ... sigma_last), empty when last > first.
inline BraidWord descending_run(int strands, int first, int last) {
  BraidWord out(strands);
  for (int g = first; g >= last; --g) {
    out.push_back(g);
  }
  return out;
}

// Delta^{2N} = (sigma_1 ... sigma_{m-1})^{mN}.
inline BraidWord full_twist(int strands, long long exponent = 1) {
  return ascending_run(strands, 1, strands - 1)
      .pow(static_cast<long long>(strands) * exponent);
}

// Full twist of the first m-1 strands: (sigma_1 ... sigma_{m-2})^{m-1}.
inline BraidWord partial_full_twist(int strands, long long exponent = 1) {
  if (strands < 2) {
    throw InputError("partial full twist needs at least 2 strands");
  }
  return ascending_run(strands, 1, strands - 2)
      .pow(static_cast<long long>(strands - 1) * exponent);
}

// ---------------------------------------------------------------------------
// Parsing
//
//   word  := token*
//   token := "s" INT ["^" SIGNED_INT] | "delta2" ["^" INT] | "delta'2"
//
// or the compact form of comma separated signed integers ("1,1,-2").
// ---------------------------------------------------------------------------

namespace detail {

class BraidParser {
 public:
  BraidParser(std::string_view text, int strands)
      : text_(text), out_(strands) {}

  BraidWord parse() {
    skip_space();
    if (looks_compact()) {
      parse_compact();
    } else {
      while (pos_ < text_.size()) {
        parse_token();
        skip_space();
      }
    }
    return std::move(out_);
  }

 private:
  bool looks_compact() const {
    return pos_ < text_.size()
           && (std::isdigit(static_cast<unsigned char>(text_[pos_]))
               || text_[pos_] == '-' || text_[pos_] == '+');
  }

  void parse_compact() {
    while (true) {
      skip_space();
      std::size_t at = pos_;
      long long g = parse_signed();
      if (g == 0) {
        throw ParseError("generator index 0 is not allowed", at);
      }
      append_letter(g, at);
      skip_space();
      if (pos_ == text_.size()) {
        return;
      }
      if (text_[pos_] != ',') {
        throw ParseError("expected ','", pos_);
      }
      ++pos_;
    }
  }

  void parse_token() {
    std::size_t at = pos_;
    if (text_.substr(pos_).starts_with("delta'2")) {
      pos_ += 7;
      require_boundary();
      append(partial_full_twist(out_.strands()));
    } else if (text_.substr(pos_).starts_with("delta2")) {
      pos_ += 6;
      long long n = 1;
      if (pos_ < text_.size() && text_[pos_] == '^') {
        ++pos_;
        n = parse_signed();
      }
      require_boundary();
      append(full_twist(out_.strands(), n));
    } else if (text_[pos_] == 's') {
      ++pos_;
      std::size_t index_at = pos_;
      long long index = parse_unsigned();
      long long power = 1;
      if (pos_ < text_.size() && text_[pos_] == '^') {
        ++pos_;
        power = parse_signed();
      }
      require_boundary();
      if (index < 1 || index > out_.strands() - 1) {
        throw ParseError("generator index " + std::to_string(index)
                             + " out of range for "
                             + std::to_string(out_.strands()) + " strands",
                         index_at);
      }
      long long g = power < 0 ? -index : index;
      for (long long i = 0; i < std::llabs(power); ++i) {
        out_.push_back(static_cast<int>(g));
      }
    } else {
      throw ParseError("unexpected character '" + std::string(1, text_[at])
                           + "'",
                       at);
    }
  }

  void append_letter(long long g, std::size_t at) {
    if (std::llabs(g) > out_.strands() - 1) {
      throw ParseError("generator index " + std::to_string(std::llabs(g))
                           + " out of range for "
                           + std::to_string(out_.strands()) + " strands",
                       at);
    }
    out_.push_back(static_cast<int>(g));
  }

  void append(BraidWord const& w) { out_ *= w; }

  void require_boundary() const {
    if (pos_ < text_.size()
        && !std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      throw ParseError("expected whitespace", pos_);
    }
  }

  long long parse_signed() {
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    long long v = parse_unsigned();
    return negative ? -v : v;
  }

  long long parse_unsigned() {
    std::size_t start = pos_;
    long long v = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_,
                                     text_.data() + text_.size(), v);
    if (ec != std::errc() || ptr == text_.data() + start) {
      throw ParseError("expected integer", start);
    }
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    if (v < 0) {
      throw ParseError("expected unsigned integer", start);
    }
    return v;
  }

  void skip_space() {
    while (pos_ < text_.size()
           && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  BraidWord out_;
};

}  // namespace detail

inline BraidWord parse_braid(std::string_view text, int strands) {
  return detail::BraidParser(text, strands).parse();
}

// ---------------------------------------------------------------------------
// Permutations
// ---------------------------------------------------------------------------

// A permutation of strand positions, stored 0-based. image(s) is where the
// strand that starts at position s ends up.
class Permutation {
 public:
  explicit Permutation(int size) : images_(static_cast<std::size_t>(size)) {
    std::iota(images_.begin(), images_.end(), 0);
  }

  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
      if (v < 0 || static_cast<std::size_t>(v) >= images_.size() || seen[v]) {
        throw InputError("not a permutation");
      }
      seen[v] = true;
    }
  }

  int size() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int s) const { return images_.at(static_cast<std::size_t>(s)); }
  std::vector<int> const& images() const noexcept { return images_; }

  bool is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (images_[i] != static_cast<int>(i)) {
        return false;
      }
    }
    return true;
  }

  // First this, then next.
  Permutation then(Permutation const& next) const {
    std::vector<int> out(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) {
      out[i] = next(images_[i]);
    }
    return Permutation(std::move(out));
  }

  // Cycles in order of their smallest element; each cycle starts at its
  // smallest element and follows the images.
  std::vector<std::vector<int>> cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t s = 0; s < images_.size(); ++s) {
      if (seen[s]) {
        continue;
      }
      std::vector<int> cycle;
      for (int t = static_cast<int>(s); !seen[t]; t = images_[t]) {
        seen[t] = true;
        cycle.push_back(t);
      }
      out.push_back(std::move(cycle));
    }
    return out;
  }

  friend bool operator==(Permutation const&, Permutation const&) = default;

 private:
  std::vector<int> images_;
};

inline Permutation permutation_of(BraidWord const& b) {
  std::vector<int> strand_at(static_cast<std::size_t>(b.strands()));
  std::iota(strand_at.begin(), strand_at.end(), 0);
  for (int g : b.letters()) {
    int p = std::abs(g) - 1;
    std::swap(strand_at[p], strand_at[p + 1]);
  }
  std::vector<int> images(strand_at.size());
  for (std::size_t pos = 0; pos < strand_at.size(); ++pos) {
    images[strand_at[pos]] = static_cast<int>(pos);
  }
  return Permutation(std::move(images));
}

}  // namespace torlink
