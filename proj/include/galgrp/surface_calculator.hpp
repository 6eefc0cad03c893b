#pragma once

#include "galgrp/abelian_group.hpp"
#include "galgrp/kernel_constructions.hpp"

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace galgrp {

/// Surface family with numeric parameters. Degrees and divisibility indices
/// are derived from the line bundle data of each family.
struct SurfaceSpec {
  enum class Family { ProjectivePlane, Quadric, Hirzebruch, CurveCrossLine, Custom };

  Family family = Family::ProjectivePlane;
  long long k = 0;   // plane: O(k); curve x line: fibre degree of the curve bundle
  long long a = 0;   // quadric / Hirzebruch
  long long b = 0;
  long long e = 0;   // Hirzebruch index
  long long g = 0;   // curve genus
  long long d = 0;   // curve x line: degree along the line factor
  long long n = 0;   // custom: projection degree
  long long div = 0; // custom: divisibility index

  static SurfaceSpec projective_plane(long long k);
  static SurfaceSpec quadric(long long a, long long b);
  static SurfaceSpec hirzebruch(long long e, long long a, long long b);
  static SurfaceSpec curve_cross_line(long long g, long long d, long long k);
  static SurfaceSpec custom(long long n, long long div);

  /// Throws std::invalid_argument outside the supported parameter ranges.
  void validate() const;
  /// Non-fatal flags (e.g. Hirzebruch parameters below the comfortable
  /// ampleness range).
  std::vector<std::string> warnings() const;

  bool simply_connected() const { return family != Family::CurveCrossLine; }
  std::string family_id() const; // p2 | quadric | hirzebruch | cxp1 | custom

  bool operator==(const SurfaceSpec &) const = default;
};

/// Recursive description of a group that need not be abelian.
struct GroupDescriptor {
  enum class Kind { Abelian, Extension, SurfaceGroup, KGroup };

  Kind kind = Kind::Abelian;
  std::optional<FgAbelianGroup> abelian; // Kind::Abelian

  // Kind::Extension: 1 -> kernel -> . -> quotient -> 1
  std::shared_ptr<GroupDescriptor> kernel;
  std::shared_ptr<GroupDescriptor> quotient;
  bool central = false;
  std::optional<bool> split;

  long long genus = 0; // Kind::SurfaceGroup

  // Kind::KGroup: the product kernel of `base` at degree kgroup_n
  std::shared_ptr<GroupDescriptor> base;
  long long kgroup_n = 0;

  /// Known abelianization (always set for Abelian; set where determined).
  std::optional<FgAbelianGroup> known_abelianization;

  static GroupDescriptor make_abelian(FgAbelianGroup a);
  static GroupDescriptor make_extension(GroupDescriptor kernel, GroupDescriptor quotient,
                                        bool central, std::optional<bool> split,
                                        std::optional<FgAbelianGroup> abelianization);
  static GroupDescriptor make_surface_group(long long genus);
  static GroupDescriptor make_k_group(GroupDescriptor base, long long n,
                                      std::optional<FgAbelianGroup> abelianization);

  bool operator==(const GroupDescriptor &other) const;
};

/// Layered description of the projective quotient when it is not explicit.
struct ExtensionTower {
  struct Layer {
    std::string label;
    GroupDescriptor group;
    std::optional<std::string> note;
    bool operator==(const Layer &) const = default;
  };
  std::vector<Layer> layers;
  std::optional<std::string> note;
  bool operator==(const ExtensionTower &) const = default;
};

using ProjectiveGroup = std::variant<GroupDescriptor, ExtensionTower>;

struct StructureReport {
  SurfaceSpec spec;
  Int degree_n;
  Int divisibility;
  GroupDescriptor affine_pi1;
  GroupDescriptor affine_galois_pi1;
  ProjectiveGroup projective_galois_pi1;
  FgAbelianGroup h1_galois;
  FgAbelianGroup h1_affine_galois;
  std::vector<std::string> assumptions;
  std::vector<std::string> warnings;

  bool operator==(const StructureReport &) const = default;
};

Int projection_degree(const SurfaceSpec &s);
Int divisibility_index(const SurfaceSpec &s);

/// Fundamental group of the complement of the hyperplane section.
GroupDescriptor pi1_affine_model(const SurfaceSpec &s);
/// Its abelianization.
FgAbelianGroup h1_affine(const SurfaceSpec &s);
/// Second homology of that fundamental group.
FgAbelianGroup h2_affine(const SurfaceSpec &s);

/// Kernel of the reduction-sum map (Z/d)^m -> Z/target_order.
FgAbelianGroup kappa_kernel(const Int &d, const Int &target_order, std::size_t m);

GroupDescriptor affine_galois_pi1(const SurfaceSpec &s);
ProjectiveGroup galois_pi1_quotient(const SurfaceSpec &s);
FgAbelianGroup galois_h1(const SurfaceSpec &s);
FgAbelianGroup galois_h1_affine(const SurfaceSpec &s);

/// True iff the family has finite fundamental group; asserts the computed
/// projective quotient is finite in that case.
bool finite_check(const SurfaceSpec &s);

StructureReport analyze_surface(const SurfaceSpec &s, bool caff_known_trivial = false);

} // namespace galgrp
