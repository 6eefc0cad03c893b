#include "galgrp/surface_calculator.hpp"

#include "support/abelian_oracles.hpp"

#include <doctest.h>

using namespace galgrp;

namespace {

FgAbelianGroup cyc_power(long long d, std::size_t e) {
  return FgAbelianGroup::cyclic(Int(d)).power(e);
}

} // namespace

TEST_CASE("projection degrees") {
  CHECK(projection_degree(SurfaceSpec::projective_plane(5)) == 25);
  CHECK(projection_degree(SurfaceSpec::quadric(5, 5)) == 50);
  CHECK(projection_degree(SurfaceSpec::hirzebruch(1, 5, 5)) == 75);
  CHECK(projection_degree(SurfaceSpec::curve_cross_line(1, 2, 4)) == 16);
  CHECK(projection_degree(SurfaceSpec::custom(7, 2)) == 7);
}

TEST_CASE("divisibility indices") {
  CHECK(divisibility_index(SurfaceSpec::projective_plane(5)) == 5);
  CHECK(divisibility_index(SurfaceSpec::quadric(6, 9)) == 3);
  CHECK(divisibility_index(SurfaceSpec::hirzebruch(2, 6, 8)) == 2);
  CHECK(divisibility_index(SurfaceSpec::curve_cross_line(1, 2, 4)) == 2);
  CHECK(divisibility_index(SurfaceSpec::custom(7, 3)) == 3);
}

TEST_CASE("spec validation") {
  CHECK_THROWS_AS(SurfaceSpec::projective_plane(4).validate(), std::invalid_argument);
  CHECK_THROWS_AS(SurfaceSpec::quadric(4, 9).validate(), std::invalid_argument);
  CHECK_THROWS_AS(SurfaceSpec::curve_cross_line(0, 1, 3).validate(), std::invalid_argument);
  CHECK_THROWS_AS(SurfaceSpec::curve_cross_line(1, 1, 2).validate(), std::invalid_argument);
  CHECK_THROWS_AS(SurfaceSpec::custom(4, 1).validate(), std::invalid_argument);
  CHECK_NOTHROW(SurfaceSpec::hirzebruch(1, 2, 3).validate()); // flagged, not rejected
  CHECK_FALSE(SurfaceSpec::hirzebruch(1, 2, 3).warnings().empty());
  CHECK(SurfaceSpec::hirzebruch(1, 5, 5).warnings().empty());
}

TEST_CASE("affine fundamental group models") {
  GroupDescriptor p2 = pi1_affine_model(SurfaceSpec::projective_plane(5));
  REQUIRE(p2.kind == GroupDescriptor::Kind::Abelian);
  CHECK(*p2.abelian == FgAbelianGroup::cyclic(5));

  GroupDescriptor trivial_kernel = pi1_affine_model(SurfaceSpec::curve_cross_line(1, 1, 3));
  REQUIRE(trivial_kernel.kind == GroupDescriptor::Kind::Extension);
  CHECK(trivial_kernel.kernel->abelian->is_trivial());
  CHECK(trivial_kernel.quotient->kind == GroupDescriptor::Kind::SurfaceGroup);
  CHECK(*trivial_kernel.known_abelianization == FgAbelianGroup::free_group(2));

  GroupDescriptor split = pi1_affine_model(SurfaceSpec::curve_cross_line(1, 2, 4));
  CHECK(*split.known_abelianization ==
        FgAbelianGroup::from_factors({2}, 2)); // Z/2 + Z^2
  REQUIRE(split.split.has_value());
  CHECK(*split.split); // 2 divides 4

  GroupDescriptor nonsplit = pi1_affine_model(SurfaceSpec::curve_cross_line(1, 4, 6));
  REQUIRE(nonsplit.split.has_value());
  CHECK_FALSE(*nonsplit.split);
}

TEST_CASE("second homology of the affine group") {
  CHECK(h2_affine(SurfaceSpec::projective_plane(5)).is_trivial());
  CHECK(h2_affine(SurfaceSpec::curve_cross_line(1, 3, 6)) ==
        FgAbelianGroup::from_factors({3, 3}, 1));
  CHECK(h2_affine(SurfaceSpec::curve_cross_line(2, 1, 5)) == FgAbelianGroup::free_group(1));
}

TEST_CASE("kappa kernels") {
  CHECK(kappa_kernel(1, 1, 4).is_trivial());
  CHECK(kappa_kernel(2, 2, 2) == FgAbelianGroup::cyclic(2));
  FgAbelianGroup k = kappa_kernel(3, 3, 5);
  REQUIRE(k.is_finite());
  CHECK(*k.order() == 81);
  CHECK_THROWS_AS(kappa_kernel(4, 3, 2), std::invalid_argument);
}

TEST_CASE("kappa kernel order is d^m / t for a desk-scale grid") {
  for (long long d = 1; d <= 6; ++d)
    for (long long t = 1; t <= d; ++t) {
      if (d % t != 0) continue;
      for (std::size_t m = 1; m <= 4; ++m) {
        CAPTURE(d);
        CAPTURE(t);
        CAPTURE(m);
        FgAbelianGroup k = kappa_kernel(Int(d), Int(t), m);
        Int expected = 1;
        for (std::size_t i = 0; i < m; ++i) expected *= d;
        expected /= t;
        CHECK(*k.order() == expected);
      }
    }
}

TEST_CASE("affine Galois groups for simply connected families") {
  GroupDescriptor p2 = affine_galois_pi1(SurfaceSpec::projective_plane(5));
  CHECK(*p2.abelian == cyc_power(5, 24));

  GroupDescriptor custom = affine_galois_pi1(SurfaceSpec::custom(6, 1));
  CHECK(custom.abelian->is_trivial());

  GroupDescriptor quadric = affine_galois_pi1(SurfaceSpec::quadric(6, 9));
  CHECK(*quadric.abelian == cyc_power(3, 107));
}

TEST_CASE("affine Galois group for the curve family") {
  SurfaceSpec s = SurfaceSpec::curve_cross_line(1, 2, 4); // n = 16
  GroupDescriptor d = affine_galois_pi1(s);
  REQUIRE(d.kind == GroupDescriptor::Kind::Extension);
  CHECK(d.central);
  CHECK(*d.kernel->abelian == h2_affine(s));
  CHECK(d.quotient->kind == GroupDescriptor::Kind::KGroup);
  // abelianization is (H1 affine)^(n-1)
  CHECK(*d.known_abelianization == h1_affine(s).power(15));
}

TEST_CASE("projective Galois quotients for simply connected families") {
  auto p2 = galois_pi1_quotient(SurfaceSpec::projective_plane(5));
  CHECK(*std::get<GroupDescriptor>(p2).abelian == cyc_power(5, 23));

  auto hirz = galois_pi1_quotient(SurfaceSpec::hirzebruch(1, 5, 5));
  CHECK(*std::get<GroupDescriptor>(hirz).abelian == cyc_power(5, 73));

  // one cyclic factor less than the affine answer
  for (const SurfaceSpec &s :
       {SurfaceSpec::projective_plane(6), SurfaceSpec::quadric(5, 10),
        SurfaceSpec::hirzebruch(2, 4, 6), SurfaceSpec::custom(9, 4)}) {
    GroupDescriptor affine = affine_galois_pi1(s);
    GroupDescriptor proj = std::get<GroupDescriptor>(galois_pi1_quotient(s));
    Int div = divisibility_index(s);
    CHECK(affine.abelian->torsion().size() ==
          proj.abelian->torsion().size() + (div > 1 ? 1 : 0));
  }
}

TEST_CASE("projective Galois tower for the curve family") {
  SurfaceSpec s = SurfaceSpec::curve_cross_line(1, 1, 3); // n = 6, d = 1
  auto result = galois_pi1_quotient(s);
  const auto &tower = std::get<ExtensionTower>(result);
  REQUIRE(tower.layers.size() == 3);
  CHECK(tower.layers[0].label == "H2(pi1 affine)/Z");
  CHECK(tower.layers[1].label == "ker kappa_{n-1}");
  CHECK(tower.layers[2].label == "K(pi1(X), n)");

  // d = 1 trivializes the kappa layer
  CHECK(tower.layers[1].group.abelian->is_trivial());
  // the K layer carries the rank-2g(n-1) abelianization
  CHECK(*tower.layers[2].group.known_abelianization == FgAbelianGroup::free_group(10));
  CHECK(tower.layers[2].group.kind == GroupDescriptor::Kind::KGroup);
  CHECK(tower.layers[2].group.base->kind == GroupDescriptor::Kind::SurfaceGroup);

  SurfaceSpec s2 = SurfaceSpec::curve_cross_line(1, 2, 4); // n = 16, gcd = 2
  auto result2 = galois_pi1_quotient(s2);
  const auto &tower2 = std::get<ExtensionTower>(result2);
  FgAbelianGroup kappa_layer = *tower2.layers[1].group.abelian;
  Int expected = 1;
  for (int i = 0; i < 15; ++i) expected *= 2;
  expected /= 2;
  CHECK(*kappa_layer.order() == expected);
}

TEST_CASE("H1 of the Galois closure") {
  CHECK(galois_h1(SurfaceSpec::projective_plane(5)) == cyc_power(5, 23));
  CHECK(galois_h1(SurfaceSpec::curve_cross_line(1, 1, 3)) == FgAbelianGroup::free_group(10));
  CHECK(galois_h1(SurfaceSpec::curve_cross_line(1, 2, 4)) ==
        cyc_power(2, 14).direct_sum(FgAbelianGroup::free_group(30)));
}

TEST_CASE("the remark's cross-check: Z^(4k-2) for torsion-free curve examples") {
  for (long long k : {3, 4, 5}) {
    SurfaceSpec s = SurfaceSpec::curve_cross_line(1, 1, k);
    CHECK(galois_h1(s) == FgAbelianGroup::free_group(static_cast<std::size_t>(4 * k - 2)));
  }
}

TEST_CASE("H1 rank matches (n - 1) times the base rank") {
  for (const SurfaceSpec &s :
       {SurfaceSpec::projective_plane(5), SurfaceSpec::quadric(5, 6),
        SurfaceSpec::curve_cross_line(1, 2, 4), SurfaceSpec::curve_cross_line(2, 1, 4)}) {
    std::size_t base_rank =
        s.family == SurfaceSpec::Family::CurveCrossLine ? static_cast<std::size_t>(2 * s.g) : 0;
    Int n = projection_degree(s);
    FgAbelianGroup h1 = galois_h1(s);
    CHECK(Int(h1.free_rank()) == (n - 1) * Int(base_rank));
  }
}

TEST_CASE("H1 torsion: exponent divides the divisibility index, count is n - 2") {
  for (const SurfaceSpec &s :
       {SurfaceSpec::projective_plane(5), SurfaceSpec::quadric(6, 9),
        SurfaceSpec::hirzebruch(1, 5, 5), SurfaceSpec::curve_cross_line(1, 2, 4)}) {
    FgAbelianGroup h1 = galois_h1(s);
    Int div = divisibility_index(s);
    if (div == 1) {
      CHECK(h1.torsion().empty());
      continue;
    }
    Int n = projection_degree(s);
    CHECK(Int(h1.torsion().size()) == n - 2);
    for (const Int &t : h1.torsion()) CHECK(div % t == 0);
  }
}

TEST_CASE("H1 of the affine Galois closure is the full power") {
  CHECK(galois_h1_affine(SurfaceSpec::projective_plane(5)) == cyc_power(5, 24));
  SurfaceSpec s = SurfaceSpec::curve_cross_line(1, 2, 4);
  CHECK(galois_h1_affine(s) == h1_affine(s).power(15));
}

TEST_CASE("finiteness check") {
  CHECK(finite_check(SurfaceSpec::projective_plane(5)));
  CHECK(finite_check(SurfaceSpec::quadric(5, 5)));
  CHECK_FALSE(finite_check(SurfaceSpec::curve_cross_line(1, 1, 3)));

  // |result| = 5^48 for the bidegree-(5,5) quadric
  auto q = galois_pi1_quotient(SurfaceSpec::quadric(5, 5));
  Int expected = 1;
  for (int i = 0; i < 48; ++i) expected *= 5;
  CHECK(*std::get<GroupDescriptor>(q).abelian->order() == expected);
}

TEST_CASE("structure reports carry the assumption flag") {
  StructureReport r = analyze_surface(SurfaceSpec::projective_plane(5));
  REQUIRE(!r.assumptions.empty());
  CHECK(r.assumptions.front() == "C^aff assumed trivial");
  CHECK(r.assumptions.size() == 1);

  StructureReport r2 = analyze_surface(SurfaceSpec::projective_plane(5), true);
  CHECK(r2.assumptions.size() == 2);
  CHECK(r2.assumptions.front() == "C^aff assumed trivial");
}

TEST_CASE("simply connected: projective quotient is the affine one minus a factor") {
  for (long long k : {5, 6, 7}) {
    SurfaceSpec s = SurfaceSpec::projective_plane(k);
    GroupDescriptor affine = affine_galois_pi1(s);
    GroupDescriptor proj = std::get<GroupDescriptor>(galois_pi1_quotient(s));
    FgAbelianGroup shrunk = quotient_by_diagonal(FgAbelianGroup::cyclic(Int(k)),
                                                 static_cast<std::size_t>(k * k - 1), Int(k));
    CHECK(*proj.abelian == shrunk);
    CHECK(affine.abelian->torsion().size() == proj.abelian->torsion().size() + 1);
  }
}
