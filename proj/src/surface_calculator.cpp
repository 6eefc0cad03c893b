#include "galgrp/surface_calculator.hpp"

#include <numeric>
#include <stdexcept>

namespace galgrp {

namespace {

// Reports materialize one torsion entry per factor; keep that desk-scale.
constexpr long long kMaxMaterializedRank = 10'000'000;

std::size_t checked_copies(const Int &n) {
  if (n < 0 || n > Int(kMaxMaterializedRank))
    throw std::invalid_argument("projection degree too large to materialize the report");
  return static_cast<std::size_t>(n.convert_to<long long>());
}

} // namespace

SurfaceSpec SurfaceSpec::projective_plane(long long k) {
  SurfaceSpec s;
  s.family = Family::ProjectivePlane;
  s.k = k;
  return s;
}

SurfaceSpec SurfaceSpec::quadric(long long a, long long b) {
  SurfaceSpec s;
  s.family = Family::Quadric;
  s.a = a;
  s.b = b;
  return s;
}

SurfaceSpec SurfaceSpec::hirzebruch(long long e, long long a, long long b) {
  SurfaceSpec s;
  s.family = Family::Hirzebruch;
  s.e = e;
  s.a = a;
  s.b = b;
  return s;
}

SurfaceSpec SurfaceSpec::curve_cross_line(long long g, long long d, long long k) {
  SurfaceSpec s;
  s.family = Family::CurveCrossLine;
  s.g = g;
  s.d = d;
  s.k = k;
  return s;
}

SurfaceSpec SurfaceSpec::custom(long long n, long long div) {
  SurfaceSpec s;
  s.family = Family::Custom;
  s.n = n;
  s.div = div;
  return s;
}

void SurfaceSpec::validate() const {
  switch (family) {
  case Family::ProjectivePlane:
    if (k < 5) throw std::invalid_argument("plane bundle degree k must be >= 5");
    break;
  case Family::Quadric:
    if (a < 5 || b < 5) throw std::invalid_argument("quadric bidegree (a, b) must be >= 5");
    break;
  case Family::Hirzebruch:
    if (e < 1) throw std::invalid_argument("Hirzebruch index e must be >= 1");
    if (a < 1 || b < 1) throw std::invalid_argument("Hirzebruch bundle needs a, b >= 1");
    break;
  case Family::CurveCrossLine:
    if (g < 1) throw std::invalid_argument("curve genus must be >= 1");
    if (d < 1 || k < 1) throw std::invalid_argument("bundle bidegrees must be positive");
    if (2 * d * k < 5) throw std::invalid_argument("projection degree 2dk must be >= 5");
    break;
  case Family::Custom:
    if (n < 5) throw std::invalid_argument("projection degree must be >= 5");
    if (div < 1) throw std::invalid_argument("divisibility index must be >= 1");
    break;
  }
}

std::vector<std::string> SurfaceSpec::warnings() const {
  std::vector<std::string> w;
  if (family == Family::Hirzebruch && (a < 5 || b < 5))
    w.push_back("Hirzebruch parameters below a, b >= 5 may not give a sufficiently "
                "ample bundle; results assume they do");
  return w;
}

std::string SurfaceSpec::family_id() const {
  switch (family) {
  case Family::ProjectivePlane: return "p2";
  case Family::Quadric: return "quadric";
  case Family::Hirzebruch: return "hirzebruch";
  case Family::CurveCrossLine: return "cxp1";
  case Family::Custom: return "custom";
  }
  return "?";
}

GroupDescriptor GroupDescriptor::make_abelian(FgAbelianGroup a) {
  GroupDescriptor d;
  d.kind = Kind::Abelian;
  d.known_abelianization = a;
  d.abelian = std::move(a);
  return d;
}

GroupDescriptor GroupDescriptor::make_extension(GroupDescriptor kernel, GroupDescriptor quotient,
                                                bool central, std::optional<bool> split,
                                                std::optional<FgAbelianGroup> abelianization) {
  GroupDescriptor d;
  d.kind = Kind::Extension;
  d.kernel = std::make_shared<GroupDescriptor>(std::move(kernel));
  d.quotient = std::make_shared<GroupDescriptor>(std::move(quotient));
  d.central = central;
  d.split = split;
  d.known_abelianization = std::move(abelianization);
  return d;
}

GroupDescriptor GroupDescriptor::make_surface_group(long long genus) {
  GroupDescriptor d;
  d.kind = Kind::SurfaceGroup;
  d.genus = genus;
  d.known_abelianization = FgAbelianGroup::free_group(static_cast<std::size_t>(2 * genus));
  return d;
}

GroupDescriptor GroupDescriptor::make_k_group(GroupDescriptor base, long long n,
                                              std::optional<FgAbelianGroup> abelianization) {
  GroupDescriptor d;
  d.kind = Kind::KGroup;
  d.base = std::make_shared<GroupDescriptor>(std::move(base));
  d.kgroup_n = n;
  d.known_abelianization = std::move(abelianization);
  return d;
}

bool GroupDescriptor::operator==(const GroupDescriptor &o) const {
  auto ptr_eq = [](const std::shared_ptr<GroupDescriptor> &x,
                   const std::shared_ptr<GroupDescriptor> &y) {
    if (!x || !y) return !x && !y;
    return *x == *y;
  };
  return kind == o.kind && abelian == o.abelian && ptr_eq(kernel, o.kernel) &&
         ptr_eq(quotient, o.quotient) && central == o.central && split == o.split &&
         genus == o.genus && ptr_eq(base, o.base) && kgroup_n == o.kgroup_n &&
         known_abelianization == o.known_abelianization;
}

Int projection_degree(const SurfaceSpec &s) {
  s.validate();
  switch (s.family) {
  case SurfaceSpec::Family::ProjectivePlane: return Int(s.k) * s.k;
  case SurfaceSpec::Family::Quadric: return Int(2) * s.a * s.b;
  case SurfaceSpec::Family::Hirzebruch: return Int(2) * s.a * s.b + Int(s.e) * s.a * s.a;
  case SurfaceSpec::Family::CurveCrossLine: return Int(2) * s.d * s.k;
  case SurfaceSpec::Family::Custom: return Int(s.n);
  }
  throw std::logic_error("unreachable");
}

Int divisibility_index(const SurfaceSpec &s) {
  s.validate();
  switch (s.family) {
  case SurfaceSpec::Family::ProjectivePlane: return Int(s.k);
  case SurfaceSpec::Family::Quadric: return Int(std::gcd(s.a, s.b));
  case SurfaceSpec::Family::Hirzebruch: return Int(std::gcd(s.a, s.b));
  case SurfaceSpec::Family::CurveCrossLine: return Int(std::gcd(s.k, s.d));
  case SurfaceSpec::Family::Custom: return Int(s.div);
  }
  throw std::logic_error("unreachable");
}

GroupDescriptor pi1_affine_model(const SurfaceSpec &s) {
  s.validate();
  if (s.simply_connected())
    return GroupDescriptor::make_abelian(FgAbelianGroup::cyclic(divisibility_index(s)));

  // Central extension of the curve group by a cyclic group of order d;
  // splits when d divides k.
  GroupDescriptor kernel = GroupDescriptor::make_abelian(FgAbelianGroup::cyclic(Int(s.d)));
  GroupDescriptor quotient = GroupDescriptor::make_surface_group(s.g);
  return GroupDescriptor::make_extension(std::move(kernel), std::move(quotient),
                                         /*central=*/true,
                                         /*split=*/s.k % s.d == 0, h1_affine(s));
}

FgAbelianGroup h1_affine(const SurfaceSpec &s) {
  s.validate();
  if (s.simply_connected()) return FgAbelianGroup::cyclic(divisibility_index(s));
  return FgAbelianGroup::cyclic(divisibility_index(s))
      .direct_sum(FgAbelianGroup::free_group(static_cast<std::size_t>(2 * s.g)));
}

FgAbelianGroup h2_affine(const SurfaceSpec &s) {
  s.validate();
  if (s.simply_connected()) return FgAbelianGroup::trivial(); // cyclic groups have no H2
  FgAbelianGroup torsion =
      FgAbelianGroup::cyclic(Int(s.d)).power(static_cast<std::size_t>(2 * s.g));
  return torsion.direct_sum(FgAbelianGroup::free_group(1));
}

FgAbelianGroup kappa_kernel(const Int &d, const Int &target_order, std::size_t m) {
  if (d < 1 || target_order < 1) throw std::invalid_argument("orders must be positive");
  if (d % target_order != 0)
    throw std::invalid_argument("target order must divide the cyclic order");
  if (m < 1) throw std::invalid_argument("kappa needs m >= 1");

  FgAbelianGroup source = FgAbelianGroup::cyclic(d).power(m);
  FgAbelianGroup target = FgAbelianGroup::cyclic(target_order);
  IntMatrix matrix(target.generator_count(), source.generator_count());
  for (std::size_t j = 0; j < matrix.cols(); ++j)
    for (std::size_t i = 0; i < matrix.rows(); ++i) matrix.at(i, j) = 1;
  return hom_kernel({source, target, matrix});
}

GroupDescriptor affine_galois_pi1(const SurfaceSpec &s) {
  s.validate();
  Int n = projection_degree(s);
  if (s.simply_connected()) {
    FgAbelianGroup cyc = FgAbelianGroup::cyclic(divisibility_index(s));
    return GroupDescriptor::make_abelian(cyc.power(checked_copies(n - 1)));
  }

  // Central extension of H2 of the affine group by the product kernel of the
  // affine group; its abelianization is (H1 affine)^(n-1).
  FgAbelianGroup ab = h1_affine(s).power(checked_copies(n - 1));
  GroupDescriptor kpart = GroupDescriptor::make_k_group(
      pi1_affine_model(s), (Int(2) * s.d * s.k).convert_to<long long>(), ab);
  return GroupDescriptor::make_extension(GroupDescriptor::make_abelian(h2_affine(s)),
                                         std::move(kpart), /*central=*/true,
                                         /*split=*/std::nullopt, ab);
}

ProjectiveGroup galois_pi1_quotient(const SurfaceSpec &s) {
  s.validate();
  Int n = projection_degree(s);
  if (s.simply_connected()) {
    FgAbelianGroup cyc = FgAbelianGroup::cyclic(divisibility_index(s));
    return GroupDescriptor::make_abelian(cyc.power(checked_copies(n - 2)));
  }

  Int gcd_kd = divisibility_index(s);
  ExtensionTower tower;
  tower.layers.push_back(
      {"H2(pi1 affine)/Z", GroupDescriptor::make_abelian(h2_affine(s)),
       "modulo an undetermined cyclic subgroup Z"});
  tower.layers.push_back(
      {"ker kappa_{n-1}",
       GroupDescriptor::make_abelian(kappa_kernel(Int(s.d), gcd_kd, checked_copies(n - 1))),
       std::nullopt});
  tower.layers.push_back(
      {"K(pi1(X), n)",
       GroupDescriptor::make_k_group(
           GroupDescriptor::make_surface_group(s.g), n.convert_to<long long>(),
           FgAbelianGroup::free_group(static_cast<std::size_t>(2 * s.g) *
                                      checked_copies(n - 1))),
       std::nullopt});
  tower.note = "in the computed examples the cyclic group Z kills the H2 layer";
  return tower;
}

FgAbelianGroup galois_h1(const SurfaceSpec &s) {
  s.validate();
  Int n = projection_degree(s);
  // H1 of the Galois closure quotient: (H1 affine)^(n-1) modulo the diagonal
  // image of the loop at infinity, whose order is the divisibility index.
  FgAbelianGroup affine = h1_affine(s);
  return quotient_by_diagonal(affine, checked_copies(n - 1), divisibility_index(s));
}

FgAbelianGroup galois_h1_affine(const SurfaceSpec &s) {
  s.validate();
  Int n = projection_degree(s);
  return h1_affine(s).power(checked_copies(n - 1));
}

bool finite_check(const SurfaceSpec &s) {
  s.validate();
  if (!s.simply_connected()) return false;
  ProjectiveGroup q = galois_pi1_quotient(s);
  const auto *desc = std::get_if<GroupDescriptor>(&q);
  if (desc == nullptr || !desc->abelian || !desc->abelian->is_finite())
    throw std::logic_error("finite family produced a non-finite quotient");
  return true;
}

StructureReport analyze_surface(const SurfaceSpec &s, bool caff_known_trivial) {
  s.validate();
  StructureReport r;
  r.spec = s;
  r.degree_n = projection_degree(s);
  r.divisibility = divisibility_index(s);
  r.affine_pi1 = pi1_affine_model(s);
  r.affine_galois_pi1 = affine_galois_pi1(s);
  r.projective_galois_pi1 = galois_pi1_quotient(s);
  r.h1_galois = galois_h1(s);
  r.h1_affine_galois = galois_h1_affine(s);
  r.assumptions.push_back("C^aff assumed trivial");
  if (caff_known_trivial)
    r.assumptions.push_back("C^aff verified trivial for this family by external computations");
  r.warnings = s.warnings();
  return r;
}

} // namespace galgrp
