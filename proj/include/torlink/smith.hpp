#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "torlink/errors.hpp"

namespace torlink {

using Integer = boost::multiprecision::cpp_int;
using IntMatrix = std::vector<std::vector<Integer>>;

inline IntMatrix identity_matrix(std::size_t n) {
  IntMatrix id(n, std::vector<Integer>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    id[i][i] = 1;
  }
  return id;
}

inline IntMatrix multiply(IntMatrix const& a, IntMatrix const& b,
                          std::size_t a_cols) {
  std::size_t const rows = a.size();
  std::size_t const cols = b.empty() ? 0 : b.front().size();
  IntMatrix out(rows, std::vector<Integer>(cols, 0));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t k = 0; k < a_cols; ++k) {
      if (a[i][k] == 0) {
        continue;
      }
      for (std::size_t j = 0; j < cols; ++j) {
        out[i][j] += a[i][k] * b[k][j];
      }
    }
  }
  return out;
}

// Exact determinant by fraction-free (Bareiss) elimination.
inline Integer determinant(IntMatrix m) {
  std::size_t const n = m.size();
  if (n == 0) {
    return 1;
  }
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_with = k + 1;
      while (swap_with < n && m[swap_with][k] == 0) {
        ++swap_with;
      }
      if (swap_with == n) {
        return 0;
      }
      std::swap(m[k], m[swap_with]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

// left * M * right = D with D diagonal, nonnegative, d_1 | d_2 | ...
struct SmithForm {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Integer> diagonal;  // length min(rows, cols)
  IntMatrix left;                 // rows x rows, unimodular
  IntMatrix right;                // cols x cols, unimodular

  std::size_t rank() const {
    return static_cast<std::size_t>(
        std::count_if(diagonal.begin(), diagonal.end(),
                      [](Integer const& d) { return d != 0; }));
  }

  // For M read as a relation matrix of an abelian group on `cols`
  // generators: rank of the free part.
  std::size_t free_rank() const { return cols - rank(); }

  // Invariant factors greater than one.
  std::vector<Integer> torsion() const {
    std::vector<Integer> out;
    for (auto const& d : diagonal) {
      if (d > 1) {
        out.push_back(d);
      }
    }
    return out;
  }
};

namespace detail {

class SmithReducer {
 public:
  explicit SmithReducer(IntMatrix m, std::size_t cols)
      : a_(std::move(m)),
        rows_(a_.size()),
        cols_(cols),
        left_(identity_matrix(rows_)),
        right_(identity_matrix(cols_)) {
    for (auto const& row : a_) {
      if (row.size() != cols_) {
        throw InputError("ragged integer matrix");
      }
    }
  }

  SmithForm run() {
    std::size_t const diag = std::min(rows_, cols_);
    for (std::size_t t = 0; t < diag; ++t) {
      if (!place_pivot(t)) {
        break;
      }
      while (true) {
        clear_row_and_column(t);
        // d_t must divide everything left in the trailing block.
        auto bad = find_non_multiple(t);
        if (!bad) {
          break;
        }
        add_row(t, *bad, 1);
      }
      if (a_[t][t] < 0) {
        negate_row(t);
      }
    }
    SmithForm out;
    out.rows = rows_;
    out.cols = cols_;
    for (std::size_t t = 0; t < diag; ++t) {
      out.diagonal.push_back(a_[t][t]);
    }
    out.left = std::move(left_);
    out.right = std::move(right_);
    return out;
  }

 private:
  // Moves a smallest nonzero entry of the trailing block to (t, t).
  bool place_pivot(std::size_t t) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    Integer best_abs = 0;
    for (std::size_t i = t; i < rows_; ++i) {
      for (std::size_t j = t; j < cols_; ++j) {
        if (a_[i][j] != 0) {
          Integer v = abs(a_[i][j]);
          if (!best || v < best_abs) {
            best = {i, j};
            best_abs = v;
          }
        }
      }
    }
    if (!best) {
      return false;
    }
    swap_rows(t, best->first);
    swap_cols(t, best->second);
    return true;
  }

  void clear_row_and_column(std::size_t t) {
    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (std::size_t i = t + 1; i < rows_; ++i) {
        if (a_[i][t] == 0) {
          continue;
        }
        Integer q = a_[i][t] / a_[t][t];
        add_row(i, t, -q);
        if (a_[i][t] != 0) {
          swap_rows(t, i);
          dirty = true;
        }
      }
      for (std::size_t j = t + 1; j < cols_; ++j) {
        if (a_[t][j] == 0) {
          continue;
        }
        Integer q = a_[t][j] / a_[t][t];
        add_col(j, t, -q);
        if (a_[t][j] != 0) {
          swap_cols(t, j);
          dirty = true;
        }
      }
    }
  }

  std::optional<std::size_t> find_non_multiple(std::size_t t) const {
    for (std::size_t i = t + 1; i < rows_; ++i) {
      for (std::size_t j = t + 1; j < cols_; ++j) {
        if (a_[i][j] % a_[t][t] != 0) {
          return i;
        }
      }
    }
    return std::nullopt;
  }

  // row[dst] += f * row[src]
  void add_row(std::size_t dst, std::size_t src, Integer const& f) {
    for (std::size_t j = 0; j < cols_; ++j) {
      a_[dst][j] += f * a_[src][j];
    }
    for (std::size_t j = 0; j < rows_; ++j) {
      left_[dst][j] += f * left_[src][j];
    }
  }

  // col[dst] += f * col[src]
  void add_col(std::size_t dst, std::size_t src, Integer const& f) {
    for (std::size_t i = 0; i < rows_; ++i) {
      a_[i][dst] += f * a_[i][src];
    }
    for (std::size_t i = 0; i < cols_; ++i) {
      right_[i][dst] += f * right_[i][src];
    }
  }

  void swap_rows(std::size_t r, std::size_t s) {
    if (r != s) {
      std::swap(a_[r], a_[s]);
      std::swap(left_[r], left_[s]);
    }
  }

  void swap_cols(std::size_t c, std::size_t d) {
    if (c == d) {
      return;
    }
    for (auto& row : a_) {
      std::swap(row[c], row[d]);
    }
    for (auto& row : right_) {
      std::swap(row[c], row[d]);
    }
  }

  void negate_row(std::size_t r) {
    for (auto& v : a_[r]) {
      v = -v;
    }
    for (auto& v : left_[r]) {
      v = -v;
    }
  }

  IntMatrix a_;
  std::size_t rows_;
  std::size_t cols_;
  IntMatrix left_;
  IntMatrix right_;
};

}  // namespace detail

// `cols` is needed to describe matrices with zero rows.
inline SmithForm smith_normal_form(IntMatrix m, std::size_t cols) {
  return detail::SmithReducer(std::move(m), cols).run();
}

inline SmithForm smith_normal_form(IntMatrix m) {
  std::size_t cols = m.empty() ? 0 : m.front().size();
  return smith_normal_form(std::move(m), cols);
}

// ---------------------------------------------------------------------------
// Integer lattices
// ---------------------------------------------------------------------------

// Row-style Hermite form of the integer span of `rows`: nonzero rows only,
// pivots strictly increasing and positive.
inline IntMatrix hermite_rows(IntMatrix rows, std::size_t width) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < width && r < rows.size(); ++c) {
    // Euclid down the column until only one nonzero entry remains at or
    // below row r.
    while (true) {
      std::optional<std::size_t> pivot;
      for (std::size_t i = r; i < rows.size(); ++i) {
        if (rows[i][c] != 0
            && (!pivot || abs(rows[i][c]) < abs(rows[*pivot][c]))) {
          pivot = i;
        }
      }
      if (!pivot) {
        break;
      }
      std::swap(rows[r], rows[*pivot]);
      bool cleared = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][c] != 0) {
          Integer q = rows[i][c] / rows[r][c];
          for (std::size_t j = c; j < width; ++j) {
            rows[i][j] -= q * rows[r][j];
          }
          cleared = cleared && rows[i][c] == 0;
        }
      }
      if (cleared) {
        break;
      }
    }
    if (rows[r][c] == 0) {
      continue;
    }
    if (rows[r][c] < 0) {
      for (auto& v : rows[r]) {
        v = -v;
      }
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

// True iff v is an integer combination of rows.
inline bool lattice_contains(IntMatrix const& rows, std::vector<Integer> v) {
  std::size_t const width = v.size();
  for (auto const& row : rows) {
    if (row.size() != width) {
      throw InputError("lattice vectors have different lengths");
    }
  }
  IntMatrix h = hermite_rows(rows, width);
  std::size_t c = 0;
  for (auto const& row : h) {
    while (row[c] == 0) {
      if (v[c] != 0) {
        return false;
      }
      ++c;
    }
    if (v[c] % row[c] != 0) {
      return false;
    }
    Integer q = v[c] / row[c];
    for (std::size_t j = c; j < width; ++j) {
      v[j] -= q * row[j];
    }
    ++c;
  }
  return std::all_of(v.begin(), v.end(), [](Integer const& x) { return x == 0; });
}

inline bool lattice_contains(std::vector<std::vector<long long>> const& rows,
                             std::vector<long long> const& v) {
  IntMatrix m;
  for (auto const& row : rows) {
    m.emplace_back(row.begin(), row.end());
  }
  return lattice_contains(m, std::vector<Integer>(v.begin(), v.end()));
}

}  // namespace torlink
