#include "galgrp/int_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace galgrp {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>> &rows) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows.front().size();
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix &rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product dimension mismatch");
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int &a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out.at(i, j) += a * rhs.at(k, j);
    }
  return out;
}

std::vector<Int> IntMatrix::apply(const std::vector<Int> &x) const {
  if (x.size() != cols_) throw std::invalid_argument("matrix apply dimension mismatch");
  std::vector<Int> y(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (at(i, j) != 0) y[i] += at(i, j) * x[j];
  return y;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

bool IntMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Int &e) { return e == 0; });
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Int &factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) at(dst, j) += factor * at(src, j);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Int &factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) at(i, dst) += factor * at(i, src);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t j = 0; j < cols_; ++j) at(r, j) = -at(r, j);
}

void IntMatrix::negate_col(std::size_t c) {
  for (std::size_t i = 0; i < rows_; ++i) at(i, c) = -at(i, c);
}

std::vector<Int> SmithDecomposition::diagonal() const {
  std::size_t n = std::min(s.rows(), s.cols());
  std::vector<Int> d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = s.at(i, i);
  return d;
}

namespace {

// Smallest-nonzero-pivot search in the trailing submatrix starting at t.
bool find_pivot(const IntMatrix &s, std::size_t t, std::size_t &pi, std::size_t &pj) {
  bool found = false;
  Int best;
  for (std::size_t i = t; i < s.rows(); ++i)
    for (std::size_t j = t; j < s.cols(); ++j) {
      const Int &e = s.at(i, j);
      if (e == 0) continue;
      Int a = abs(e);
      if (!found || a < best) {
        found = true;
        best = a;
        pi = i;
        pj = j;
      }
    }
  return found;
}

} // namespace

SmithDecomposition smith_normal_form(const IntMatrix &m) {
  SmithDecomposition r{IntMatrix::identity(m.rows()), m, IntMatrix::identity(m.cols())};
  IntMatrix &s = r.s;
  IntMatrix &u = r.u;
  IntMatrix &v = r.v;

  std::size_t n = std::min(s.rows(), s.cols());
  for (std::size_t t = 0; t < n; ++t) {
    for (;;) {
      std::size_t pi = 0, pj = 0;
      if (!find_pivot(s, t, pi, pj)) { t = n; break; } // trailing block is zero

      s.swap_rows(t, pi);
      u.swap_rows(t, pi);
      s.swap_cols(t, pj);
      v.swap_cols(t, pj);
      if (s.at(t, t) < 0) {
        s.negate_row(t);
        u.negate_row(t);
      }

      // Clear column t, then row t. Truncated quotients may leave remainders,
      // which the next pass picks up with a strictly smaller pivot.
      bool dirty = false;
      for (std::size_t i = t + 1; i < s.rows(); ++i) {
        if (s.at(i, t) == 0) continue;
        Int q = s.at(i, t) / s.at(t, t);
        s.add_row_multiple(i, t, -q);
        u.add_row_multiple(i, t, -q);
        if (s.at(i, t) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < s.cols(); ++j) {
        if (s.at(t, j) == 0) continue;
        Int q = s.at(t, j) / s.at(t, t);
        s.add_col_multiple(j, t, -q);
        v.add_col_multiple(j, t, -q);
        if (s.at(t, j) != 0) dirty = true;
      }
      if (dirty) continue;

      // Pivot must divide every remaining entry; drag an offender into row t.
      bool fixed = true;
      for (std::size_t i = t + 1; i < s.rows() && fixed; ++i)
        for (std::size_t j = t + 1; j < s.cols() && fixed; ++j)
          if (s.at(i, j) % s.at(t, t) != 0) {
            s.add_row_multiple(t, i, 1);
            u.add_row_multiple(t, i, 1);
            fixed = false;
          }
      if (fixed) break;
    }
    if (t >= n) break;
  }
  return r;
}

Int determinant(const IntMatrix &m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  std::size_t n = m.rows();
  if (n == 0) return 1;

  // Bareiss fraction-free elimination.
  IntMatrix a = m;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a.at(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
    prev = a.at(k, k);
  }
  return sign > 0 ? a.at(n - 1, n - 1) : -a.at(n - 1, n - 1);
}

IntMatrix kernel_basis(const IntMatrix &m) {
  SmithDecomposition d = smith_normal_form(m);
  std::size_t n = std::min(m.rows(), m.cols());
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (j >= n || d.s.at(j, j) == 0) free_cols.push_back(j);

  IntMatrix basis(m.cols(), free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k)
    for (std::size_t i = 0; i < m.cols(); ++i) basis.at(i, k) = d.v.at(i, free_cols[k]);
  return basis;
}

std::optional<std::vector<Int>> solve_integer(const IntMatrix &m, const std::vector<Int> &rhs) {
  if (rhs.size() != m.rows()) throw std::invalid_argument("solve dimension mismatch");
  SmithDecomposition d = smith_normal_form(m);
  std::vector<Int> y = d.u.apply(rhs);
  std::size_t n = std::min(m.rows(), m.cols());
  std::vector<Int> w(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const Int diag = i < n ? d.s.at(i, i) : Int(0);
    if (diag == 0) {
      if (y[i] != 0) return std::nullopt;
    } else {
      if (y[i] % diag != 0) return std::nullopt;
      w[i] = y[i] / diag;
    }
  }
  return d.v.apply(w);
}

} // namespace galgrp
