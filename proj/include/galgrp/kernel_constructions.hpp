#pragma once

#include "galgrp/abelian_group.hpp"
#include "galgrp/perm_group.hpp"
#include "galgrp/snd_relators.hpp"
#include "galgrp/word.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace galgrp {

// ---------------------------------------------------------------------------
// Semidirect-product elements (g_1..g_n; sigma) with the coordinate action:
// (g, sigma)(h, tau) = (g * sigma(h), sigma tau), sigma(h)[sigma(i)] = h[i].
// The coordinate type is Perm for finite carriers and Word for free ones.
// ---------------------------------------------------------------------------

template <class T> struct EElement {
  std::vector<T> coords;
  Perm perm;

  bool operator==(const EElement &) const = default;
};

using EPermElement = EElement<Perm>;
using EWordElement = EElement<Word>;

EPermElement e_multiply(const EPermElement &x, const EPermElement &y);
EWordElement e_multiply(const EWordElement &x, const EWordElement &y);
EPermElement e_inverse(const EPermElement &x);
EWordElement e_inverse(const EWordElement &x);
bool e_is_identity(const EPermElement &x);
bool e_is_identity(const EWordElement &x);
std::string e_str(const EWordElement &x);

// ---------------------------------------------------------------------------
// The product-kernel construction K(G, n) = ker(G^n -> G^ab).
// ---------------------------------------------------------------------------

/// Class of the ordered product g_1 ... g_n in the abelianization of g.
/// Coordinates follow Abelianization::class_of.
std::vector<Int> psi_map(const std::vector<Perm> &coords, const Abelianization &ab);
std::vector<Int> psi_map(const std::vector<Perm> &coords, const PermGroup &g);

/// K(G, n) realized on n disjoint copies of the base domain, generated by
/// the tuples with g at one slot and g^-1 at another. The order formula
/// |K| = |G|^n / |G^ab| certifies completeness of the closure.
struct KGroupRealization {
  PermGroup group{1};
  int n = 0;
  std::size_t base_degree = 0;
  Int base_order;
  FgAbelianGroup base_abelianization;

  /// Embeds a base element into coordinate slot.
  Perm slot(const Perm &p, int coordinate) const;
  /// Block permutation of the n coordinate slots.
  Perm coordinate_permutation(const Perm &sigma) const;
};

KGroupRealization k_group_finite(const PermGroup &g, int n);

/// K(A, n) for abelian A is A^(n-1).
FgAbelianGroup k_group_abelian(const FgAbelianGroup &a, int n);

/// The subgroup [K, S_{n-1}] generated by x * sigma(x^-1) where sigma runs
/// over the coordinate permutations fixing the first (or last) slot.
PermGroup commutator_with_symmetric(const KGroupRealization &k, bool fix_first = true);

/// K(G,n) / [K(G,n), S_{n-1}]; isomorphic to G.
PermGroup recover_quotient(const PermGroup &g, int n);

// ---------------------------------------------------------------------------
// Structure of the central extension of H2(G) by K(G, n) for abelian G.
// ---------------------------------------------------------------------------

struct KTildeDescriptor {
  FgAbelianGroup base_group;
  int n = 0;
  FgAbelianGroup h2;              // exterior square of the base
  FgAbelianGroup k_part;          // base^(n-1)
  FgAbelianGroup abelianization;  // equals k_part
  std::optional<Int> order;       // |h2| * |k_part| when finite
  std::optional<FgAbelianGroup> exact_iso; // base^(n-1) iff the base is cyclic

  bool operator==(const KTildeDescriptor &) const = default;
};

KTildeDescriptor ktilde_structure(const FgAbelianGroup &a, int n);

// ---------------------------------------------------------------------------
// Relator verification for the layered presentation: s_1 -> (1 2),
// s_i -> (f_i, f_i^-1, 1, ..., 1)(1 2), sigma -> sigma, multiplied out in the
// semidirect product of free-word tuples with the symmetric group.
// ---------------------------------------------------------------------------

struct PhiFailure {
  std::size_t index = 0;
  std::string relator;
  std::string image;
  bool operator==(const PhiFailure &) const = default;
};

struct VerificationReport {
  int n = 0;
  int d = 0;
  std::size_t relator_count = 0;
  std::vector<PhiFailure> failures;
  bool all_identity = true;
  bool operator==(const VerificationReport &) const = default;
};

/// Pushes every relator through the map above and reports any nontrivial
/// image. The underlying isomorphism needs n >= 5; smaller n is refused
/// unless allow_small_n is set (exploration only). allow_large_n lifts the
/// n <= 6 cap on the conjugator enumeration.
VerificationReport verify_phi_relators(int n, int d, bool allow_small_n = false,
                                       bool allow_large_n = false);

/// Image of a single relator letter sequence (exposed for spot checks).
EWordElement phi_image(const SndRelator &relator, int n);

} // namespace galgrp
