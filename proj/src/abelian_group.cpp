#include "galgrp/abelian_group.hpp"

#include <algorithm>
#include <stdexcept>

namespace galgrp {

namespace {

Int gcd(Int a, Int b) {
  a = abs(a);
  b = abs(b);
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

} // namespace

FgAbelianGroup FgAbelianGroup::from_factors(std::vector<Int> torsion, std::size_t free_rank) {
  for (const Int &d : torsion)
    if (d <= 0) throw std::invalid_argument("torsion coefficients must be positive");

  // Pairwise gcd/lcm sweeps until the divisibility chain holds.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < torsion.size(); ++i)
      for (std::size_t j = i + 1; j < torsion.size(); ++j) {
        if (torsion[j] % torsion[i] == 0) continue;
        Int g = gcd(torsion[i], torsion[j]);
        Int l = torsion[i] / g * torsion[j];
        torsion[i] = g;
        torsion[j] = l;
        changed = true;
      }
  }
  std::sort(torsion.begin(), torsion.end());
  std::erase(torsion, Int(1));

  FgAbelianGroup a;
  a.torsion_ = std::move(torsion);
  a.free_rank_ = free_rank;
  return a;
}

FgAbelianGroup FgAbelianGroup::cyclic(const Int &n) {
  if (n < 1) throw std::invalid_argument("cyclic group order must be >= 1");
  return from_factors({n}, 0);
}

FgAbelianGroup FgAbelianGroup::free_group(std::size_t rank) { return from_factors({}, rank); }

bool FgAbelianGroup::is_cyclic() const {
  if (free_rank_ == 0) return torsion_.size() <= 1;
  return free_rank_ == 1 && torsion_.empty();
}

std::optional<Int> FgAbelianGroup::order() const {
  if (free_rank_ > 0) return std::nullopt;
  Int o = 1;
  for (const Int &d : torsion_) o *= d;
  return o;
}

std::optional<Int> FgAbelianGroup::exponent() const {
  if (free_rank_ > 0) return std::nullopt;
  return torsion_.empty() ? Int(1) : torsion_.back();
}

FgAbelianGroup FgAbelianGroup::direct_sum(const FgAbelianGroup &other) const {
  std::vector<Int> t = torsion_;
  t.insert(t.end(), other.torsion_.begin(), other.torsion_.end());
  return from_factors(std::move(t), free_rank_ + other.free_rank_);
}

FgAbelianGroup FgAbelianGroup::power(std::size_t copies) const {
  std::vector<Int> t;
  t.reserve(torsion_.size() * copies);
  for (std::size_t c = 0; c < copies; ++c) t.insert(t.end(), torsion_.begin(), torsion_.end());
  return from_factors(std::move(t), free_rank_ * copies);
}

IntMatrix relation_matrix(const FgAbelianGroup &a) {
  IntMatrix m(a.generator_count(), a.torsion().size());
  for (std::size_t i = 0; i < a.torsion().size(); ++i) m.at(i, i) = a.torsion()[i];
  return m;
}

CokernelData cokernel_with_map(const IntMatrix &m) {
  SmithDecomposition d = smith_normal_form(m);
  std::size_t n = std::min(m.rows(), m.cols());

  CokernelData out;
  out.u = d.u;
  out.diagonal.assign(m.rows(), Int(0));
  std::vector<Int> torsion;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Int diag = i < n ? d.s.at(i, i) : Int(0);
    out.diagonal[i] = diag;
    if (diag == 0)
      out.free_rows.push_back(i);
    else if (diag > 1) {
      out.torsion_rows.push_back(i);
      torsion.push_back(diag);
    }
  }
  out.type = FgAbelianGroup::from_factors(std::move(torsion), out.free_rows.size());
  return out;
}

std::vector<Int> CokernelData::class_of(const std::vector<Int> &x) const {
  std::vector<Int> y = u.apply(x);
  std::vector<Int> coords;
  coords.reserve(torsion_rows.size() + free_rows.size());
  for (std::size_t r : torsion_rows) {
    Int c = y[r] % diagonal[r];
    if (c < 0) c += diagonal[r];
    coords.push_back(c);
  }
  for (std::size_t r : free_rows) coords.push_back(y[r]);
  return coords;
}

FgAbelianGroup cokernel(const IntMatrix &m) { return cokernel_with_map(m).type; }

void AbHom::validate() const {
  if (matrix.rows() != target.generator_count() || matrix.cols() != source.generator_count())
    throw std::invalid_argument("hom matrix dimensions do not match generator counts");

  // Image of an order-d generator must be killed by d.
  std::size_t tt = target.torsion().size();
  for (std::size_t j = 0; j < source.torsion().size(); ++j) {
    const Int &d = source.torsion()[j];
    for (std::size_t i = 0; i < matrix.rows(); ++i) {
      Int v = d * matrix.at(i, j);
      if (i < tt) {
        if (v % target.torsion()[i] != 0)
          throw std::invalid_argument("hom does not respect torsion orders");
      } else if (v != 0) {
        throw std::invalid_argument("torsion generator maps to infinite-order element");
      }
    }
  }
}

FgAbelianGroup hom_kernel(const AbHom &f) {
  f.validate();
  std::size_t p = f.source.generator_count();
  if (p == 0) return FgAbelianGroup::trivial();

  IntMatrix rel_a = relation_matrix(f.source);
  IntMatrix rel_b = relation_matrix(f.target);

  // Lattice L = { x in Z^p : f(x) lies in the target relation lattice }.
  // Obtained as the projection of ker [F | R_B] onto the x block.
  IntMatrix combined(f.target.generator_count(), p + rel_b.cols());
  for (std::size_t i = 0; i < combined.rows(); ++i) {
    for (std::size_t j = 0; j < p; ++j) combined.at(i, j) = f.matrix.at(i, j);
    for (std::size_t j = 0; j < rel_b.cols(); ++j) combined.at(i, p + j) = rel_b.at(i, j);
  }

  IntMatrix lattice(p, 0);
  if (combined.rows() == 0) {
    lattice = IntMatrix::identity(p); // trivial target: everything is in the kernel
  } else {
    IntMatrix full = kernel_basis(combined);
    lattice = IntMatrix(p, full.cols());
    for (std::size_t j = 0; j < full.cols(); ++j)
      for (std::size_t i = 0; i < p; ++i) lattice.at(i, j) = full.at(i, j);
  }

  if (lattice.cols() == 0) return FgAbelianGroup::trivial();

  // ker(f) = L / (source relations); express each relation in the basis of L.
  IntMatrix coeffs(lattice.cols(), rel_a.cols());
  for (std::size_t j = 0; j < rel_a.cols(); ++j) {
    std::vector<Int> rhs(p);
    for (std::size_t i = 0; i < p; ++i) rhs[i] = rel_a.at(i, j);
    auto c = solve_integer(lattice, rhs);
    if (!c) throw std::invalid_argument("hom does not respect torsion (relation outside lattice)");
    for (std::size_t i = 0; i < lattice.cols(); ++i) coeffs.at(i, j) = (*c)[i];
  }
  return cokernel(coeffs);
}

FgAbelianGroup exterior_square(const FgAbelianGroup &a) {
  const auto &t = a.torsion();
  std::size_t r = a.free_rank();
  std::vector<Int> torsion;
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = i + 1; j < t.size(); ++j) torsion.push_back(gcd(t[i], t[j]));
    for (std::size_t k = 0; k < r; ++k) torsion.push_back(t[i]);
  }
  std::size_t free_part = r >= 2 ? r * (r - 1) / 2 : 0;
  return FgAbelianGroup::from_factors(std::move(torsion), free_part);
}

FgAbelianGroup quotient_by_diagonal(const FgAbelianGroup &a, std::size_t copies,
                                    const Int &sub_order) {
  if (copies < 2) throw std::invalid_argument("quotient_by_diagonal needs copies >= 2");
  if (sub_order < 1) throw std::invalid_argument("subgroup order must be >= 1");

  FgAbelianGroup rest = a.power(copies - 1);
  if (sub_order == 1) return rest.direct_sum(a);

  FgAbelianGroup quot;
  if (!a.torsion().empty()) {
    const Int &d = a.torsion().back();
    if (d % sub_order != 0)
      throw std::invalid_argument("subgroup order must divide the distinguished torsion order");
    std::vector<Int> t(a.torsion().begin(), a.torsion().end() - 1);
    t.push_back(d / sub_order);
    quot = FgAbelianGroup::from_factors(std::move(t), a.free_rank());
  } else if (a.free_rank() > 0) {
    quot = FgAbelianGroup::from_factors({sub_order}, a.free_rank() - 1);
  } else {
    throw std::invalid_argument("trivial group has no subgroup of order > 1");
  }
  return rest.direct_sum(quot);
}

} // namespace galgrp
