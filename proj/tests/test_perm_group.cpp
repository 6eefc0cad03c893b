#include "galgrp/perm_group.hpp"

#include "galgrp/errors.hpp"

#include <doctest.h>

#include <set>

using namespace galgrp;

TEST_CASE("permutation basics") {
  Perm a = Perm::parse("(1 2)");
  Perm b = Perm::parse("(1 2 3)");
  CHECK(a.degree() == 2);
  CHECK(b.degree() == 3);
  CHECK((b * b * b).is_identity());
  CHECK(b.inverse() * b == Perm::identity(3));
  CHECK(Perm::parse("()").is_identity());
  CHECK(Perm::parse("(1 2)(3 4 5)").str() == "(1 2)(3 4 5)");
  CHECK(Perm::identity(4).str() == "()");
  CHECK_THROWS_AS(Perm::parse("(1"), ParseError);
  CHECK_THROWS_AS(Perm::parse("(0 1)"), ParseError);
  CHECK_THROWS_AS(Perm::parse("(1 2)(2 3)"), std::exception); // overlapping cycles
}

TEST_CASE("element enumeration") {
  CHECK(PermGroup(2, {Perm::parse("(1 2)")}).order() == 2);
  CHECK(symmetric_group(3).order() == 6);
  CHECK(PermGroup(4).order() == 1); // no generators: trivial group
  CHECK(symmetric_group(5).order() == 120);
  CHECK(cyclic_group(6).order() == 6);
  CHECK(dihedral_group(4).order() == 8);
  CHECK(quaternion_group().order() == 8);
  CHECK(klein_four_group().order() == 4);
}

TEST_CASE("element cap makes oversized closures fail loudly") {
  PermGroup s5(5, symmetric_group(5).generators(), 100);
  CHECK_THROWS_AS(s5.elements(), CapExceededError);
}

TEST_CASE("Lagrange: group order divides the ambient factorial") {
  std::vector<PermGroup> groups{symmetric_group(4), dihedral_group(4), klein_four_group(),
                                quaternion_group(), cyclic_group(6)};
  for (const PermGroup &g : groups) {
    std::size_t factorial = 1;
    for (std::size_t i = 2; i <= g.degree(); ++i) factorial *= i;
    CHECK(factorial % g.order() == 0);
  }
}

TEST_CASE("subgroup generation") {
  PermGroup s3 = symmetric_group(3);
  CHECK(subgroup_generated(s3, {Perm::identity(3)}).order() == 1);
  CHECK(subgroup_generated(s3, {Perm::parse("(1 2 3)")}).order() == 3);

  PermGroup s4 = symmetric_group(4);
  std::vector<Perm> double_transpositions{Perm::parse("(1 2)(3 4)"), Perm::parse("(1 3)(2 4)"),
                                          Perm::parse("(1 4)(2 3)")};
  CHECK(subgroup_generated(s4, double_transpositions).order() == 4);
}

TEST_CASE("derived subgroups") {
  CHECK(derived_subgroup(cyclic_group(6)).is_trivial());
  CHECK(derived_subgroup(klein_four_group()).is_trivial());

  PermGroup a3 = derived_subgroup(symmetric_group(3));
  CHECK(a3.order() == 3);

  // re-verified against all element-pair commutators
  PermGroup s3 = symmetric_group(3);
  std::set<Perm> all_comms;
  for (const Perm &x : s3.elements())
    for (const Perm &y : s3.elements()) all_comms.insert(x * y * x.inverse() * y.inverse());
  for (const Perm &c : all_comms) CHECK(a3.contains(c));

  PermGroup q8_derived = derived_subgroup(quaternion_group());
  CHECK(q8_derived.order() == 2); // {1, -1}
}

TEST_CASE("derived subgroup is normal and the quotient is abelian") {
  for (const PermGroup &g : {symmetric_group(4), dihedral_group(4), quaternion_group()}) {
    PermGroup d = derived_subgroup(g);
    PermGroup q = quotient_group(g, d); // throws if not normal
    CHECK(q.is_abelian());
    CHECK(q.order() * d.order() == g.order());
  }
}

TEST_CASE("abelianization types") {
  CHECK(abelianization(symmetric_group(3)) == FgAbelianGroup::cyclic(2));
  CHECK(abelianization(cyclic_group(6)) == FgAbelianGroup::cyclic(6));
  CHECK(abelianization(klein_four_group()) == FgAbelianGroup::from_factors({2, 2}, 0));
  CHECK(abelianization(quaternion_group()) == FgAbelianGroup::from_factors({2, 2}, 0));
  CHECK(abelianization(dihedral_group(4)) == FgAbelianGroup::from_factors({2, 2}, 0));
  CHECK(abelianization(symmetric_group(4)) == FgAbelianGroup::cyclic(2));
  CHECK(abelianization(PermGroup(3)).is_trivial());
}

TEST_CASE("abelianization order times derived order equals group order") {
  for (const PermGroup &g : {symmetric_group(4), dihedral_group(4), quaternion_group(),
                             cyclic_group(12), klein_four_group()}) {
    FgAbelianGroup ab = abelianization(g);
    PermGroup d = derived_subgroup(g);
    CHECK(*ab.order() * d.order() == g.order());
  }
}

TEST_CASE("lower central series") {
  auto abelian = lower_central_series(cyclic_group(5));
  CHECK(abelian.size() == 2);
  CHECK(abelian.back().is_trivial());
  CHECK(nilpotency_class(cyclic_group(5)) == 1);

  auto d4 = lower_central_series(dihedral_group(4));
  CHECK(nilpotency_class(dihedral_group(4)) == 2);
  CHECK(d4[1].order() == 2); // gamma_2 is the rotation square

  CHECK(nilpotency_class(quaternion_group()) == 2);

  auto s3 = lower_central_series(symmetric_group(3));
  CHECK_FALSE(nilpotency_class(symmetric_group(3)).has_value()); // stabilizes at A3
  CHECK(s3.back().order() == 3);

  CHECK(nilpotency_class(PermGroup(2)) == 0); // trivial group
}

TEST_CASE("lower central series terms are normal and descending") {
  for (const PermGroup &g : {dihedral_group(4), quaternion_group(), symmetric_group(3)}) {
    auto series = lower_central_series(g);
    for (std::size_t i = 0; i + 1 < series.size(); ++i)
      CHECK(series[i + 1].order() <= series[i].order());
    for (std::size_t i = 1; i < series.size(); ++i) {
      for (const Perm &a : g.generators())
        for (const Perm &s : series[i].generators())
          CHECK(series[i].contains(a * s * a.inverse()));
    }
  }
}

TEST_CASE("quotient groups") {
  PermGroup s3 = symmetric_group(3);
  CHECK(quotient_group(s3, s3).order() == 1);
  CHECK(quotient_group(s3, derived_subgroup(s3)).order() == 2);

  // (Z/4 x Z/4) / diagonal is Z/4
  PermGroup z4z4 = direct_product(cyclic_group(4), cyclic_group(4));
  Perm diag = Perm::parse("(1 2 3 4)(5 6 7 8)");
  PermGroup diagonal = subgroup_generated(z4z4, {diag});
  PermGroup q = quotient_group(z4z4, diagonal);
  CHECK(q.order() == 4);
  CHECK(abelianization(q) == FgAbelianGroup::cyclic(4));
}

TEST_CASE("quotient by a non-normal subgroup is rejected") {
  PermGroup s3 = symmetric_group(3);
  PermGroup flip = subgroup_generated(s3, {Perm::parse("(1 2)").extended(3)});
  CHECK_THROWS_AS(quotient_group(s3, flip), std::invalid_argument);
}

TEST_CASE("abelianization coordinate map") {
  Abelianization ab = abelianization_map(cyclic_group(4));
  CHECK(ab.type() == FgAbelianGroup::cyclic(4));
  Perm c = Perm::parse("(1 2 3 4)");
  auto coords = ab.class_of(c * c * c);
  REQUIRE(coords.size() == 1);
  CHECK(coords[0] == 3);
  CHECK(ab.class_of(Perm::identity(4)) == std::vector<Int>{0});

  Abelianization s3ab = abelianization_map(symmetric_group(3));
  CHECK(s3ab.class_of(Perm::parse("(1 2 3)")) == std::vector<Int>{0}); // even
  CHECK(s3ab.class_of(Perm::parse("(1 2)").extended(3)) == std::vector<Int>{1});
}

TEST_CASE("group exponent") {
  CHECK(quaternion_group().exponent() == 4);
  CHECK(symmetric_group(3).exponent() == 6);
  CHECK(klein_four_group().exponent() == 2);
}
