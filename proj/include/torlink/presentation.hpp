#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "torlink/artin.hpp"
#include "torlink/braid.hpp"
#include "torlink/free_word.hpp"
#include "torlink/smith.hpp"

namespace torlink {

// Finitely presented group <x_1..x_m | relators>. Relators are freely
// reduced, never empty and never repeated.
class Presentation {
 public:
  explicit Presentation(int generator_count = 0)
      : generator_count_(generator_count) {
    if (generator_count < 0) {
      throw InputError("negative generator count");
    }
  }

  int generator_count() const noexcept { return generator_count_; }
  std::vector<FreeWord> const& relators() const noexcept { return relators_; }

  // Returns false when r is trivial or already present.
  bool add_relator(FreeWord const& r) {
    if (r.rank() != generator_count_) {
      throw InputError("relator rank " + std::to_string(r.rank())
                       + " does not match " + std::to_string(generator_count_)
                       + " generators");
    }
    if (r.is_identity()
        || std::find(relators_.begin(), relators_.end(), r)
               != relators_.end()) {
      return false;
    }
    relators_.push_back(r);
    return true;
  }

  // Relation lhs = rhs.
  bool add_relation(FreeWord const& lhs, FreeWord const& rhs) {
    return add_relator(lhs.inverse() * rhs);
  }

  FreeWord generator(int i) const {
    require_generator(i);
    return FreeWord::generator(generator_count_, i);
  }

  void require_generator(int i) const {
    if (i < 1 || i > generator_count_) {
      throw InputError("generator index " + std::to_string(i)
                       + " out of range 1.."
                       + std::to_string(generator_count_));
    }
  }

  friend bool operator==(Presentation const&, Presentation const&) = default;

 private:
  int generator_count_;
  std::vector<FreeWord> relators_;
};

// pi_1 of the complement of S_m(a, b):
// <x_1..x_m | x_i = A^a(x_i) = A^b(x_i)>.
inline Presentation link_group(BraidWord const& a, BraidWord const& b) {
  a.require_same_strands(b);
  if (!braids_commute(a, b)) {
    throw NotCommutingError(
        "basis braids do not commute; not a torus-covering link");
  }
  int const m = a.strands();
  Presentation p(m);
  for (BraidWord const* w : {&a, &b}) {
    ArtinAutomorphism const phi(*w);
    for (int i = 1; i <= m; ++i) {
      p.add_relation(FreeWord::generator(m, i), phi.image(i));
    }
  }
  return p;
}

// Appends [x_i, x_j].
inline Presentation add_commutator(Presentation p, int i, int j) {
  p.require_generator(i);
  p.require_generator(j);
  if (i == j) {
    throw InputError("commutator needs two distinct generators");
  }
  p.add_relator(commutator(p.generator(i), p.generator(j)));
  return p;
}

// Relator exponent sums: one row per relator, one column per generator.
inline IntMatrix exponent_sum_matrix(Presentation const& p) {
  IntMatrix m;
  for (auto const& r : p.relators()) {
    std::vector<Integer> row(static_cast<std::size_t>(p.generator_count()), 0);
    for (int g : r.letters()) {
      row[static_cast<std::size_t>(std::abs(g) - 1)] += g > 0 ? 1 : -1;
    }
    m.push_back(std::move(row));
  }
  return m;
}

inline SmithForm abelianization(Presentation const& p) {
  return smith_normal_form(exponent_sum_matrix(p),
                           static_cast<std::size_t>(p.generator_count()));
}

// ---------------------------------------------------------------------------
// Text form: a "# generators <m>" header, then one relator per line in
// letter syntax, e.g. "x1 x2 x1^-1 x2^-1". Blank lines and other '#' lines
// are ignored on input.
// ---------------------------------------------------------------------------

inline std::string to_text(Presentation const& p) {
  std::string out = "# generators " + std::to_string(p.generator_count()) + "\n";
  for (auto const& r : p.relators()) {
    out += to_string(r);
    out += '\n';
  }
  return out;
}

// Parses "x3 x1^-2 x2" into a reduced word.
inline FreeWord parse_free_word(std::string_view text, int rank) {
  FreeWord out(rank);
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size()
           && std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
  };
  auto number = [&](bool allow_sign) {
    std::size_t start = pos;
    bool negative = false;
    if (allow_sign && pos < text.size() && text[pos] == '-') {
      negative = true;
      ++pos;
    }
    long long v = 0;
    auto [ptr, ec] =
        std::from_chars(text.data() + pos, text.data() + text.size(), v);
    if (ec != std::errc() || ptr == text.data() + pos) {
      throw ParseError("expected integer", start);
    }
    pos = static_cast<std::size_t>(ptr - text.data());
    return negative ? -v : v;
  };
  skip();
  if (text.substr(pos) == "1") {
    return out;
  }
  while (pos < text.size()) {
    if (text[pos] != 'x') {
      throw ParseError("expected 'x'", pos);
    }
    std::size_t at = pos;
    ++pos;
    long long index = number(false);
    if (index < 1 || index > rank) {
      throw ParseError("generator x" + std::to_string(index)
                           + " out of range for rank " + std::to_string(rank),
                       at);
    }
    long long power = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      power = number(true);
    }
    for (long long k = 0; k < std::llabs(power); ++k) {
      out.append_letter(static_cast<int>(power < 0 ? -index : index));
    }
    skip();
  }
  return out;
}

inline Presentation parse_presentation(std::string_view text,
                                       int generator_count = -1) {
  std::vector<std::string> lines;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    lines.push_back(line);
  }
  for (auto const& line : lines) {
    std::string_view v(line);
    if (v.starts_with("# generators ")) {
      generator_count = std::stoi(std::string(v.substr(13)));
    }
  }
  if (generator_count < 0) {
    throw InputError("presentation text lacks a '# generators' header");
  }
  Presentation p(generator_count);
  for (auto const& line : lines) {
    std::string_view v(line);
    auto first = v.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || v[first] == '#') {
      continue;
    }
    p.add_relator(parse_free_word(v, generator_count));
  }
  return p;
}

}  // namespace torlink
