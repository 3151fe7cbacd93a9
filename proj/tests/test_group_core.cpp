// Oracle values for the finite-group layer, frozen from hand checks and
// standard references: subgroup counts of small 2-groups, Sylow and core
// subgroups of S4, orders of (P)SL_2(17), and isomorphism testing.

#include <catch2/catch_amalgamated.hpp>

#include <fusionkit/hom.hpp>
#include <fusionkit/smallgroup.hpp>
#include <fusionkit/subgroups.hpp>

using namespace fusionkit;

TEST_CASE("cyclic and dihedral basics", "[group-core]") {
  Group c12 = cyclic_group(12);
  REQUIRE(c12.n == 12);
  REQUIRE(c12.order(1) == 12);
  REQUIRE(c12.order(4) == 3);
  REQUIRE(c12.inv(5) == 7);
  REQUIRE(c12.is_abelian());

  Group d16 = dihedral_group(8);
  REQUIRE(d16.n == 16);
  REQUIRE_FALSE(d16.is_abelian());
  // any flip has order two, a generator rotation order eight
  REQUIRE(d16.order(8) == 2);
  REQUIRE(d16.order(1) == 8);
  // r x r = x for the reflection x and any rotation r
  int r = 1, x = 8;
  REQUIRE(d16.conj(x, r) == d16.inv(r));
}

TEST_CASE("subgroup enumeration is complete and deterministic", "[group-core]") {
  Group d16 = dihedral_group(8);
  auto subs = enumerate_subgroups(d16, whole_group(d16));
  // 1 trivial + 9 of order 2 + (1 cyclic + 4 klein) + (1 cyclic + 2 dihedral) + D16
  REQUIRE(subs.size() == 19);
  // sorted by (size, lex), trivial first, whole group last
  REQUIRE(subs.front() == trivial_subgroup());
  REQUIRE(subs.back() == whole_group(d16));
  for (size_t i = 1; i < subs.size(); ++i) {
    REQUIRE(subs[i - 1].size() <= subs[i].size());
    REQUIRE(is_subgroup(d16, subs[i]));
  }

  // the quaternion group of order 8 as matrices over Z/3 has 6 subgroups
  MatGroup q8 = mat2_group(3, {Mat2{0, 2, 1, 0}, Mat2{1, 1, 1, 2}}, "Q8");
  REQUIRE(q8.group.n == 8);
  REQUIRE(enumerate_subgroups(q8.group, whole_group(q8.group)).size() == 6);
}

TEST_CASE("sylow subgroups, cores and prime-to-p generation in S4", "[group-core]") {
  Group s4 = symmetric_group(4);
  REQUIRE(s4.n == 24);
  Elems all = whole_group(s4);

  Elems syl2 = sylow_subgroup(s4, all, 2);
  REQUIRE(syl2.size() == 8);
  Elems syl3 = sylow_subgroup(s4, all, 3);
  REQUIRE(syl3.size() == 3);

  // O_2(S4) is the normal Klein subgroup
  Elems core = p_core(s4, all, 2);
  REQUIRE(core.size() == 4);
  REQUIRE(is_normal_in(s4, core, all));
  for (int g : core)
    if (g != 0) REQUIRE(s4.order(g) == 2);

  // the subgroup generated by odd-order elements is A4
  Elems a4 = pprime_generated(s4, all, 2);
  REQUIRE(a4.size() == 12);
  REQUIRE(is_normal_in(s4, a4, all));
  REQUIRE(subset_of(core, a4));
}

TEST_CASE("quotients", "[group-core]") {
  Group d8 = dihedral_group(4);
  Elems center = center_of(d8, whole_group(d8));
  REQUIRE(center.size() == 2);
  auto q = quotient_group(d8, whole_group(d8), center, "D8/Z");
  REQUIRE(q.group.n == 4);
  REQUIRE(q.group.is_abelian());
  for (int g = 1; g < q.group.n; ++g) REQUIRE(q.group.order(g) == 2); // klein
}

TEST_CASE("automorphisms and injective homomorphisms", "[group-core]") {
  Group klein = product_group(cyclic_group(2), cyclic_group(2));
  auto autos = automorphisms(klein, whole_group(klein));
  REQUIRE(autos.size() == 6);
  auto hg = hom_group(autos);
  REQUIRE(hg.group.n == 6);
  REQUIRE_FALSE(hg.group.is_abelian()); // Aut(V) = S3

  // injective maps from the rotation C4 into D8 land on the unique cyclic
  // 4-subgroup, giving two maps (identity and inversion)
  Group d8 = dihedral_group(4);
  Elems rot{0, 1, 2, 3};
  auto in_d8 = injective_homs(d8, rot, whole_group(d8));
  REQUIRE(in_d8.size() == 2);

  // a klein subgroup maps injectively onto either klein subgroup of D8,
  // six automorphisms each
  Elems v{0, 2, 4, 6};
  REQUIRE(injective_homs(d8, v, whole_group(d8)).size() == 12);
}

TEST_CASE("matrix groups over prime fields", "[group-core]") {
  MatGroup sl = sl2_group(17);
  REQUIRE(sl.group.n == 4896);
  MatGroup psl = psl2_group(17);
  REQUIRE(psl.group.n == 2448);
  // -I is the unique central involution of SL2
  int minus = sl.id_of(Mat2{16, 0, 0, 16});
  REQUIRE(sl.group.order(minus) == 2);
  Elems z = center_of(sl.group, whole_group(sl.group));
  REQUIRE(z.size() == 2);
  REQUIRE(contains(z, minus));

  MatGroup gl3 = gl2_group(3);
  REQUIRE(gl3.group.n == 48);
}

TEST_CASE("isomorphism search distinguishes D8 from Q8", "[group-core]") {
  Group d8 = dihedral_group(4);
  MatGroup q8 = mat2_group(3, {Mat2{0, 2, 1, 0}, Mat2{1, 1, 1, 2}}, "Q8");
  REQUIRE(find_isomorphism(d8, d8).has_value());
  REQUIRE_FALSE(find_isomorphism(q8.group, d8).has_value());
  REQUIRE(find_isomorphism(q8.group, q8.group).has_value());
}
