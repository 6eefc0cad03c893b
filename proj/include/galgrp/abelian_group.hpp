#pragma once

#include "galgrp/int_matrix.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace galgrp {

/// Finitely generated abelian group in invariant-factor form:
/// Z/d1 + ... + Z/dt + Z^rank with 2 <= d1 | d2 | ... | dt.
class FgAbelianGroup {
public:
  FgAbelianGroup() = default; // trivial group

  /// Normalizes arbitrary torsion coefficients (gcd/lcm sweeps, strips 1s).
  static FgAbelianGroup from_factors(std::vector<Int> torsion, std::size_t free_rank);
  static FgAbelianGroup trivial() { return {}; }
  static FgAbelianGroup cyclic(const Int &n); // n >= 1; cyclic(1) is trivial
  static FgAbelianGroup free_group(std::size_t rank);

  const std::vector<Int> &torsion() const { return torsion_; }
  std::size_t free_rank() const { return free_rank_; }
  std::size_t generator_count() const { return torsion_.size() + free_rank_; }

  bool is_trivial() const { return torsion_.empty() && free_rank_ == 0; }
  bool is_finite() const { return free_rank_ == 0; }
  bool is_cyclic() const;

  /// Group order; nullopt when infinite.
  std::optional<Int> order() const;
  /// Smallest e with e*x = 0 for all x; nullopt when infinite (free part present).
  std::optional<Int> exponent() const;

  FgAbelianGroup direct_sum(const FgAbelianGroup &other) const;
  FgAbelianGroup power(std::size_t copies) const;

  bool operator==(const FgAbelianGroup &) const = default;

private:
  std::vector<Int> torsion_;
  std::size_t free_rank_ = 0;
};

/// Cokernel Z^rows / (column space of m), in invariant-factor form.
FgAbelianGroup cokernel(const IntMatrix &m);

/// Cokernel together with the coordinate map Z^rows -> invariant factors.
/// class_of(x) gives coordinates of [x], torsion coordinates first
/// (reduced into [0, d_i)), then free coordinates.
struct CokernelData {
  FgAbelianGroup type;
  IntMatrix u;                         // row transform from the Smith decomposition
  std::vector<Int> diagonal;           // one entry per row of u (0 = free row)
  std::vector<std::size_t> torsion_rows;
  std::vector<std::size_t> free_rows;

  std::vector<Int> class_of(const std::vector<Int> &x) const;
};

CokernelData cokernel_with_map(const IntMatrix &m);

/// Homomorphism between finitely generated abelian groups.
/// Column j of `matrix` holds the target coordinates (torsion generators
/// first, then free generators) of the image of source generator j.
struct AbHom {
  FgAbelianGroup source;
  FgAbelianGroup target;
  IntMatrix matrix;

  /// Throws std::invalid_argument if dimensions or torsion orders don't match.
  void validate() const;
};

/// Abstract isomorphism type of ker(f).
FgAbelianGroup hom_kernel(const AbHom &f);

/// Exterior square: H2 of an abelian group.
FgAbelianGroup exterior_square(const FgAbelianGroup &a);

/// a^copies modulo the diagonal copy of the order-`sub_order` subgroup of the
/// distinguished cyclic summand (the largest torsion factor, or a free factor
/// when a is torsion-free). Isomorphic to a^(copies-1) + a/N.
FgAbelianGroup quotient_by_diagonal(const FgAbelianGroup &a, std::size_t copies,
                                    const Int &sub_order);

/// Relation matrix of the group (diagonal torsion block, free columns absent).
IntMatrix relation_matrix(const FgAbelianGroup &a);

} // namespace galgrp
