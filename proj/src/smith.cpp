#include "gammalab/smith.hpp"

#include <utility>

#include "gammalab/errors.hpp"

namespace gammalab {

IntMatrix identity_matrix(std::size_t n) {
  IntMatrix m(n, std::vector<BigInt>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMatrix multiply(const IntMatrix& x, const IntMatrix& y) {
  if (x.empty()) return {};
  const std::size_t r = x.size(), k = y.size(), c = y.empty() ? 0 : y[0].size();
  IntMatrix out(r, std::vector<BigInt>(c, 0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (x[i][l] == 0) continue;
      for (std::size_t j = 0; j < c; ++j) out[i][j] += x[i][l] * y[l][j];
    }
  return out;
}

namespace {

class Reducer {
 public:
  Reducer(const IntMatrix& a, std::size_t cols, bool track_left)
      : a_(a), rows_(a.size()), cols_(cols), track_left_(track_left) {
    for (const auto& row : a_)
      if (row.size() != cols_) throw InputError("ragged integer matrix");
    r_ = identity_matrix(cols_);
    rinv_ = identity_matrix(cols_);
    if (track_left_) l_ = identity_matrix(rows_);
  }

  SmithForm run() {
    const std::size_t n = std::min(rows_, cols_);
    for (std::size_t t = 0; t < n; ++t) {
      if (!move_smallest_to(t, t)) break;
      while (true) {
        if (!clear_column(t)) continue;
        if (!clear_row(t)) continue;
        if (enforce_divisibility(t)) break;
      }
      if (a_[t][t] < 0) negate_row(t);
    }
    SmithForm f;
    f.rows = rows_;
    f.cols = cols_;
    for (std::size_t t = 0; t < n; ++t) f.diagonal.push_back(a_[t][t]);
    f.left = std::move(l_);
    f.right = std::move(r_);
    f.right_inverse = std::move(rinv_);
    return f;
  }

 private:
  // Moves the nonzero entry of least magnitude in the trailing block to (t, t).
  bool move_smallest_to(std::size_t t, std::size_t from) {
    std::size_t bi = rows_, bj = cols_;
    BigInt best = 0;
    for (std::size_t i = from; i < rows_; ++i)
      for (std::size_t j = t; j < cols_; ++j) {
        if (a_[i][j] == 0) continue;
        const BigInt mag = abs(a_[i][j]);
        if (bi == rows_ || mag < best) {
          best = mag;
          bi = i;
          bj = j;
          if (best == 1) break;
        }
      }
    if (bi == rows_) return false;
    swap_rows(t, bi);
    swap_cols(t, bj);
    return true;
  }

  // Returns false if a smaller remainder was moved into the pivot.
  bool clear_column(std::size_t t) {
    bool clean = true;
    for (std::size_t i = t + 1; i < rows_; ++i) {
      if (a_[i][t] == 0) continue;
      const BigInt q = a_[i][t] / a_[t][t];
      if (q != 0) add_row_multiple(i, t, -q);
      if (a_[i][t] != 0) clean = false;
    }
    if (clean) return true;
    std::size_t best = t;
    for (std::size_t i = t + 1; i < rows_; ++i)
      if (a_[i][t] != 0 && abs(a_[i][t]) < abs(a_[best][t])) best = i;
    swap_rows(t, best);
    return false;
  }

  bool clear_row(std::size_t t) {
    bool clean = true;
    for (std::size_t j = t + 1; j < cols_; ++j) {
      if (a_[t][j] == 0) continue;
      const BigInt q = a_[t][j] / a_[t][t];
      if (q != 0) add_col_multiple(j, t, -q);
      if (a_[t][j] != 0) clean = false;
    }
    if (clean) return true;
    std::size_t best = t;
    for (std::size_t j = t + 1; j < cols_; ++j)
      if (a_[t][j] != 0 && abs(a_[t][j]) < abs(a_[t][best])) best = j;
    swap_cols(t, best);
    return false;
  }

  // The pivot must divide every entry of the trailing block.
  bool enforce_divisibility(std::size_t t) {
    for (std::size_t i = t + 1; i < rows_; ++i)
      for (std::size_t j = t + 1; j < cols_; ++j)
        if (a_[i][j] % a_[t][t] != 0) {
          add_row_multiple(t, i, 1);
          return false;
        }
    return true;
  }

  void swap_rows(std::size_t i, std::size_t k) {
    if (i == k) return;
    std::swap(a_[i], a_[k]);
    if (track_left_) std::swap(l_[i], l_[k]);
  }
  void swap_cols(std::size_t j, std::size_t k) {
    if (j == k) return;
    for (auto& row : a_) std::swap(row[j], row[k]);
    for (auto& row : r_) std::swap(row[j], row[k]);
    std::swap(rinv_[j], rinv_[k]);
  }
  void negate_row(std::size_t i) {
    for (auto& x : a_[i]) x = -x;
    if (track_left_)
      for (auto& x : l_[i]) x = -x;
  }
  // row_i += q * row_k
  void add_row_multiple(std::size_t i, std::size_t k, const BigInt& q) {
    for (std::size_t j = 0; j < cols_; ++j)
      if (a_[k][j] != 0) a_[i][j] += q * a_[k][j];
    if (track_left_)
      for (std::size_t j = 0; j < rows_; ++j)
        if (l_[k][j] != 0) l_[i][j] += q * l_[k][j];
  }
  // col_j += q * col_k, and the inverse row operation on R⁻¹
  void add_col_multiple(std::size_t j, std::size_t k, const BigInt& q) {
    for (auto& row : a_)
      if (row[k] != 0) row[j] += q * row[k];
    for (auto& row : r_)
      if (row[k] != 0) row[j] += q * row[k];
    for (std::size_t c = 0; c < cols_; ++c)
      if (rinv_[j][c] != 0) rinv_[k][c] -= q * rinv_[j][c];
  }

  IntMatrix a_;
  std::size_t rows_, cols_;
  bool track_left_;
  IntMatrix l_, r_, rinv_;
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a, std::size_t cols, bool track_left) {
  Reducer reducer(a, cols, track_left);
  return reducer.run();
}

bool verify_smith(const IntMatrix& a, const SmithForm& f) {
  const auto id = identity_matrix(f.cols);
  if (multiply(f.right, f.right_inverse) != id) return false;
  for (std::size_t t = 0; t + 1 < f.diagonal.size(); ++t) {
    if (f.diagonal[t] < 0) return false;
    if (f.diagonal[t] == 0) {
      if (f.diagonal[t + 1] != 0) return false;
    } else if (f.diagonal[t + 1] % f.diagonal[t] != 0) {
      return false;
    }
  }
  IntMatrix d(f.rows, std::vector<BigInt>(f.cols, 0));
  for (std::size_t t = 0; t < f.diagonal.size(); ++t) d[t][t] = f.diagonal[t];
  const IntMatrix ar = multiply(a, f.right);
  if (f.left.empty()) {
    // Without L, check that A·R has the diagonal's row space: every row of
    // A·R is supported on the diagonal and divisible by it.
    for (const auto& row : ar)
      for (std::size_t j = 0; j < f.cols; ++j) {
        if (row[j] == 0) continue;
        if (j >= f.diagonal.size() || f.diagonal[j] == 0 || row[j] % f.diagonal[j] != 0) return false;
      }
    return true;
  }
  return multiply(f.left, ar) == d;
}

std::vector<BigInt> presented_group_factors(const IntMatrix& a, std::size_t cols) {
  const auto f = smith_normal_form(a, cols);
  std::vector<BigInt> out;
  for (const auto& d : f.diagonal)
    if (d != 1) out.push_back(d);
  for (std::size_t j = f.diagonal.size(); j < cols; ++j) out.push_back(0);
  return out;
}

}  // namespace gammalab
