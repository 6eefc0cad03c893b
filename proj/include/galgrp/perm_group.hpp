#pragma once

#include "galgrp/abelian_group.hpp"
#include "galgrp/perm.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace galgrp {

inline constexpr std::size_t kDefaultElementCap = 100000;

/// Finite group given by permutation generators. Enumeration runs once per
/// instance (cached); the cap makes oversized closures fail loudly.
class PermGroup {
public:
  explicit PermGroup(std::size_t degree, std::vector<Perm> generators = {},
                     std::size_t element_cap = kDefaultElementCap);

  std::size_t degree() const { return degree_; }
  std::size_t element_cap() const { return cap_; }
  const std::vector<Perm> &generators() const { return generators_; }

  /// Full element set via breadth-first closure, in BFS order.
  /// Throws CapExceededError if the closure exceeds the cap.
  const std::vector<Perm> &elements() const;
  std::size_t order() const { return elements().size(); }
  bool contains(const Perm &p) const;
  bool is_abelian() const;
  bool is_trivial() const { return order() == 1; }

  /// Least common multiple of element orders.
  Int exponent() const;

  /// Exponent vector over the generator list for one BFS word reaching p
  /// (inverse-free; meaningful after abelianization).
  std::vector<Int> word_vector(const Perm &p) const;

private:
  struct State;
  std::size_t degree_;
  std::size_t cap_;
  std::vector<Perm> generators_;
  std::shared_ptr<State> state_; // lazy enumeration cache
};

PermGroup subgroup_generated(const PermGroup &g, const std::vector<Perm> &elems);
PermGroup derived_subgroup(const PermGroup &g);

/// Permutation action on the left cosets of n (must be normal in g).
PermGroup quotient_group(const PermGroup &g, const PermGroup &n);

/// gamma_1 = g, gamma_{i+1} = [g, gamma_i], listed until the series stabilizes
/// (last entry trivial iff g is nilpotent).
std::vector<PermGroup> lower_central_series(const PermGroup &g);

/// Nilpotency class, or nullopt if not nilpotent.
std::optional<int> nilpotency_class(const PermGroup &g);

/// Abelianization together with the coordinate map G -> G/[G,G].
class Abelianization {
public:
  const FgAbelianGroup &type() const { return type_; }
  /// Coordinates of the class of p, torsion coordinates first then free.
  std::vector<Int> class_of(const Perm &p) const;

private:
  friend Abelianization abelianization_map(const PermGroup &g);
  FgAbelianGroup type_;
  PermGroup group_{1};
  PermGroup quotient_{1};
  std::vector<Perm> coset_reps_;
  std::unordered_set<Perm> derived_elements_;
  CokernelData coker_;
};

Abelianization abelianization_map(const PermGroup &g);
FgAbelianGroup abelianization(const PermGroup &g);

// Stock groups (all realized as permutation groups).
PermGroup cyclic_group(std::size_t n);
PermGroup symmetric_group(std::size_t n);
PermGroup dihedral_group(std::size_t n);   // order 2n, n >= 3
PermGroup klein_four_group();
PermGroup quaternion_group();              // Q8 on its regular representation
PermGroup direct_product(const PermGroup &a, const PermGroup &b);

} // namespace galgrp
