#pragma once

// Brute-force oracles for finite abelian structure, independent of the
// Smith-normal-form code paths they are used to check.

#include "galgrp/int_matrix.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

namespace galgrp::testing {

using boost::multiprecision::cpp_rational;

/// Membership of x in the column lattice of m, for full-column-rank m,
/// via exact rational elimination.
inline bool lattice_member(const IntMatrix &m, const std::vector<Int> &x) {
  std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<cpp_rational>> a(rows, std::vector<cpp_rational>(cols + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = cpp_rational(m.at(i, j));
    a[i][cols] = cpp_rational(x[i]);
  }

  std::size_t row = 0;
  std::vector<std::size_t> pivot_of_col(cols, rows);
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t p = row;
    while (p < rows && a[p][col] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[row]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == row || a[i][col] == 0) continue;
      cpp_rational f = a[i][col] / a[row][col];
      for (std::size_t j = col; j <= cols; ++j) a[i][j] -= f * a[row][j];
    }
    pivot_of_col[col] = row;
    ++row;
  }
  // inconsistent row?
  for (std::size_t i = row; i < rows; ++i)
    if (a[i][cols] != 0) return false;
  // full column rank expected: every column must have a pivot
  for (std::size_t col = 0; col < cols; ++col)
    if (pivot_of_col[col] == rows) throw std::invalid_argument("oracle needs full column rank");
  for (std::size_t col = 0; col < cols; ++col) {
    cpp_rational y = a[pivot_of_col[col]][cols] / a[pivot_of_col[col]][col];
    if (denominator(y) != 1) return false;
  }
  return true;
}

/// Rebuilds ascending invariant factors from the multiset of element orders
/// of a finite abelian group.
inline std::vector<Int> invariant_factors_from_orders(std::vector<Int> orders) {
  Int size = static_cast<Int>(orders.size());
  if (size == 0) throw std::invalid_argument("empty group");

  // prime factors of the group order
  std::vector<Int> primes;
  Int rest = size;
  for (Int p = 2; p * p <= rest; ++p)
    if (rest % p == 0) {
      primes.push_back(p);
      while (rest % p == 0) rest /= p;
    }
  if (rest > 1) primes.push_back(rest);

  // per-prime descending lists of cyclic prime-power orders
  std::vector<std::vector<Int>> per_prime;
  for (const Int &p : primes) {
    std::vector<Int> counts{1}; // counts[j] = #{x : p^j x = 0}
    Int pj = 1;
    for (;;) {
      pj *= p;
      Int c = 0;
      for (const Int &o : orders)
        if (pj % o == 0) ++c;
      counts.push_back(c);
      if (c == counts[counts.size() - 2]) break; // p-part exhausted
    }
    // lambda_j = log_p(counts[j] / counts[j-1]) = #cyclic factors of order >= p^j
    std::vector<long long> lambda;
    for (std::size_t j = 1; j < counts.size(); ++j) {
      Int ratio = counts[j] / counts[j - 1];
      long long l = 0;
      while (ratio > 1) {
        ratio /= p;
        ++l;
      }
      lambda.push_back(l);
    }
    std::vector<Int> factors; // descending prime powers
    for (std::size_t j = 0; j < lambda.size(); ++j) {
      long long exact = lambda[j] - (j + 1 < lambda.size() ? lambda[j + 1] : 0);
      Int power = 1;
      for (std::size_t t = 0; t <= j; ++t) power *= p;
      for (long long c = 0; c < exact; ++c) factors.push_back(power);
    }
    std::sort(factors.rbegin(), factors.rend());
    if (!factors.empty()) per_prime.push_back(std::move(factors));
  }

  // zip the descending lists: largest with largest across primes
  std::size_t slots = 0;
  for (const auto &f : per_prime) slots = std::max(slots, f.size());
  std::vector<Int> invariants(slots, Int(1));
  for (const auto &f : per_prime)
    for (std::size_t i = 0; i < f.size(); ++i) invariants[i] *= f[i];
  std::sort(invariants.begin(), invariants.end());
  std::erase(invariants, Int(1));
  return invariants;
}

/// Exhaustively enumerates Z^r / (column lattice of m) for full-column-rank m
/// with finite quotient; returns the ascending invariant factors.
inline std::vector<Int> cokernel_brute_force(const IntMatrix &m, std::size_t max_elements) {
  std::size_t r = m.rows();
  std::vector<std::vector<Int>> reps{std::vector<Int>(r, Int(0))};
  auto known = [&](const std::vector<Int> &x) {
    for (const auto &rep : reps) {
      std::vector<Int> diff(r);
      for (std::size_t i = 0; i < r; ++i) diff[i] = x[i] - rep[i];
      if (lattice_member(m, diff)) return true;
    }
    return false;
  };
  for (std::size_t at = 0; at < reps.size(); ++at) {
    for (std::size_t i = 0; i < r; ++i)
      for (int sign : {1, -1}) {
        std::vector<Int> next = reps[at];
        next[i] += sign;
        if (!known(next)) {
          if (reps.size() >= max_elements)
            throw std::runtime_error("quotient too large for brute force");
          reps.push_back(next);
        }
      }
  }

  std::vector<Int> orders;
  for (const auto &rep : reps) {
    Int k = 1;
    for (;;) {
      std::vector<Int> scaled(r);
      for (std::size_t i = 0; i < r; ++i) scaled[i] = k * rep[i];
      if (lattice_member(m, scaled)) break;
      ++k;
    }
    orders.push_back(k);
  }
  return invariant_factors_from_orders(std::move(orders));
}

} // namespace galgrp::testing
