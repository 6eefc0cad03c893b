#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

namespace galgrp {

using Int = boost::multiprecision::cpp_int;

/// Dense integer matrix with arbitrary-precision entries, row-major.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<Int>> &rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int &at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Int &at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  const std::vector<Int> &entries() const { return entries_; }

  IntMatrix operator*(const IntMatrix &rhs) const;
  std::vector<Int> apply(const std::vector<Int> &x) const;
  IntMatrix transposed() const;

  bool operator==(const IntMatrix &) const = default;

  bool is_zero() const;

  // elementary operations (also used by the Smith reduction)
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  void add_row_multiple(std::size_t dst, std::size_t src, const Int &factor);
  void add_col_multiple(std::size_t dst, std::size_t src, const Int &factor);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> entries_;
};

/// u * m * v = s with u, v unimodular and s diagonal, non-negative,
/// each diagonal entry dividing the next.
struct SmithDecomposition {
  IntMatrix u;
  IntMatrix s;
  IntMatrix v;

  /// Diagonal of s padded with zeros up to min(rows, cols).
  std::vector<Int> diagonal() const;
};

SmithDecomposition smith_normal_form(const IntMatrix &m);

/// Determinant of a square matrix (fraction-free elimination).
Int determinant(const IntMatrix &m);

/// Columns form a basis of the lattice { x : m * x = 0 }.
IntMatrix kernel_basis(const IntMatrix &m);

/// One integer solution of m * x = rhs, or nullopt if none exists.
std::optional<std::vector<Int>> solve_integer(const IntMatrix &m, const std::vector<Int> &rhs);

} // namespace galgrp
