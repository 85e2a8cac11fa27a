#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "torlink/braid.hpp"
#include "torlink/errors.hpp"

namespace torlink {

enum class FamilyTag { X, Y, Z, P, Q, FullTwist, PartialFullTwist };

// How to read the printed middle factor of Y_{k,l,e}, which lists
// sigma_{k+1} sigma_{k-1} ... sigma_3 (sigma_k is skipped).
//   verbatim:    sigma_{k+1}, then sigma_{k-1} down to sigma_3
//   consecutive: sigma_{k+1} down to sigma_3
enum class YVariant { verbatim, consecutive };

using SignTriple = std::array<int, 3>;

struct FamilySpec {
  FamilyTag tag = FamilyTag::X;
  int k = 1;
  int l = 1;
  SignTriple e = {1, 1, 1};
  long long N = 1;  // FullTwist / PartialFullTwist exponent
  int strands = 0;  // FullTwist / PartialFullTwist only
  YVariant variant = YVariant::consecutive;

  friend bool operator==(FamilySpec const&, FamilySpec const&) = default;
};

inline std::string_view tag_name(FamilyTag t) {
  switch (t) {
    case FamilyTag::X: return "X";
    case FamilyTag::Y: return "Y";
    case FamilyTag::Z: return "Z";
    case FamilyTag::P: return "P";
    case FamilyTag::Q: return "Q";
    case FamilyTag::FullTwist: return "FullTwist";
    case FamilyTag::PartialFullTwist: return "PartialFullTwist";
  }
  return "?";
}

inline FamilyTag parse_tag(std::string_view s) {
  for (auto t : {FamilyTag::X, FamilyTag::Y, FamilyTag::Z, FamilyTag::P,
                 FamilyTag::Q, FamilyTag::FullTwist,
                 FamilyTag::PartialFullTwist}) {
    if (tag_name(t) == s) {
      return t;
    }
  }
  throw InputError("unknown family '" + std::string(s) + "'");
}

inline std::string_view variant_name(YVariant v) {
  return v == YVariant::verbatim ? "verbatim" : "consecutive";
}

inline YVariant parse_variant(std::string_view s) {
  if (s == "verbatim") {
    return YVariant::verbatim;
  }
  if (s == "consecutive") {
    return YVariant::consecutive;
  }
  throw InputError("unknown Y variant '" + std::string(s) + "'");
}

// "+,-,+" -> {1,-1,1}
inline SignTriple parse_signs(std::string_view s) {
  SignTriple out{};
  std::size_t slot = 0;
  std::size_t i = 0;
  while (i < s.size()) {
    if (slot == 3) {
      throw InputError("sign triple has more than three entries: '"
                       + std::string(s) + "'");
    }
    std::string_view item = s.substr(i, s.find(',', i) - i);
    if (item == "+" || item == "+1" || item == "1") {
      out[slot] = 1;
    } else if (item == "-" || item == "-1") {
      out[slot] = -1;
    } else {
      throw InputError("bad sign '" + std::string(item) + "' in '"
                       + std::string(s) + "'");
    }
    ++slot;
    i += item.size() + 1;
  }
  if (slot != 3) {
    throw InputError("sign triple needs three entries: '" + std::string(s)
                     + "'");
  }
  return out;
}

inline std::string signs_to_string(SignTriple const& e) {
  std::string out;
  for (std::size_t i = 0; i < 3; ++i) {
    if (i > 0) {
      out += ',';
    }
    out += e[i] > 0 ? '+' : '-';
  }
  return out;
}

inline std::string describe(FamilySpec const& f) {
  using std::to_string;
  switch (f.tag) {
    case FamilyTag::X:
    case FamilyTag::Y:
      return std::string(tag_name(f.tag)) + "_{" + to_string(f.k) + ","
             + to_string(f.l) + ",(" + signs_to_string(f.e) + ")}";
    case FamilyTag::Z:
      return "Z_{" + to_string(f.k) + ",(" + signs_to_string(f.e) + ")}";
    case FamilyTag::P:
    case FamilyTag::Q:
      return std::string(tag_name(f.tag)) + "_" + to_string(f.k);
    case FamilyTag::FullTwist:
      return "Delta^{2*" + to_string(f.N) + "} in B_" + to_string(f.strands);
    case FamilyTag::PartialFullTwist:
      return "Delta'^{2*" + to_string(f.N) + "} in B_" + to_string(f.strands);
  }
  return "?";
}

namespace detail {

inline void require_sign_triple(SignTriple const& e) {
  for (int s : e) {
    if (s != 1 && s != -1) {
      throw InputError("sign triple entries must be +1 or -1");
    }
  }
}

inline BraidWord power_of_generator(int strands, int g, long long exponent) {
  return BraidWord(strands, {g}).pow(exponent);
}

}  // namespace detail

// Number of strands of the braid make_family(spec) returns.
inline int family_strands(FamilySpec const& f) {
  switch (f.tag) {
    case FamilyTag::X:
    case FamilyTag::Y: return f.k + f.l + 2;
    case FamilyTag::Z: return f.k + 3;
    case FamilyTag::P: return f.k + 2;
    case FamilyTag::Q: return 3;
    case FamilyTag::FullTwist:
    case FamilyTag::PartialFullTwist: return f.strands;
  }
  return 0;
}

inline BraidWord make_family(FamilySpec const& f) {
  using detail::power_of_generator;
  switch (f.tag) {
    case FamilyTag::X: {
      if (f.k < 1 || f.l < 1) {
        throw InputError("X needs k, l >= 1");
      }
      detail::require_sign_triple(f.e);
      int const k = f.k, l = f.l, m = k + l + 2;
      return power_of_generator(m, 1, 2 * f.e[0])
             * ascending_run(m, 2, k)
             * power_of_generator(m, k + 1, 2 * f.e[1])
             * ascending_run(m, k + 2, k + l)
             * power_of_generator(m, k + l + 1, 2 * f.e[2]);
    }
    case FamilyTag::Y: {
      if (f.k < 1 || f.l < 1) {
        throw InputError("Y needs k, l >= 1");
      }
      detail::require_sign_triple(f.e);
      int const k = f.k, l = f.l, m = k + l + 2;
      BraidWord middle = f.variant == YVariant::consecutive
                             ? descending_run(m, k + 1, 3)
                             : BraidWord(m, {k + 1}) * descending_run(m, k - 1, 3);
      return ascending_run(m, 1, k + l).pow(static_cast<long long>(k + l + 1)
                                            * f.e[0])
             * descending_run(m, k + l + 1, k + 3)
             * power_of_generator(m, k + 2, 2 * f.e[1])
             * middle
             * power_of_generator(m, 2, 2 * f.e[2]);
    }
    case FamilyTag::Z: {
      if (f.k < 1) {
        throw InputError("Z needs k >= 1");
      }
      detail::require_sign_triple(f.e);
      int const k = f.k, m = k + 3;
      return ascending_run(m, 1, k + 1).pow(static_cast<long long>(k + 2)
                                            * f.e[0])
             * ascending_run(m, 2, k + 2).pow(static_cast<long long>(k + 2)
                                              * f.e[1])
             * descending_run(m, k + 2, 4)
             * power_of_generator(m, 3, 2 * f.e[2]);
    }
    case FamilyTag::P: {
      if (f.k < 1) {
        throw InputError("P needs k >= 1");
      }
      int const k = f.k, m = k + 2;
      return ascending_run(m, 1, k - 1) * power_of_generator(m, k, 2)
             * power_of_generator(m, k + 1, 2);
    }
    case FamilyTag::Q: {
      if (f.k < 1) {
        throw InputError("Q needs k >= 1");
      }
      return power_of_generator(3, 1, 2) * power_of_generator(3, 2, 2LL * f.k);
    }
    case FamilyTag::FullTwist:
      if (f.strands < 1) {
        throw InputError("FullTwist needs a positive strand count");
      }
      return full_twist(f.strands, f.N);
    case FamilyTag::PartialFullTwist:
      if (f.strands < 2) {
        throw InputError("PartialFullTwist needs at least 2 strands");
      }
      return partial_full_twist(f.strands, f.N);
  }
  throw InputError("unknown family");
}

}  // namespace torlink
