// Truncated p-toral groups: presentation relations, codec round trips,
// torus structure, level lifting with the canonical embedding, and the
// deeper-torus shift automorphisms.

#include <catch2/catch_amalgamated.hpp>

#include <set>

#include <fusionkit/presentations.hpp>

using namespace fusionkit;

namespace {

void check_exhaustive_associativity(const Group& g) {
  REQUIRE(g.n <= 256);
  for (int a = 0; a < g.n; ++a)
    for (int b = 0; b < g.n; ++b)
      for (int c = 0; c < g.n; ++c)
        REQUIRE(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
}

bool embedding_is_hom(const PToral& low, const PToral& high,
                      const std::vector<int>& map) {
  std::set<int> image(map.begin(), map.end());
  if (int(image.size()) != low.group.n) return false;
  for (int a = 0; a < low.group.n; ++a)
    for (int b = 0; b < low.group.n; ++b)
      if (map[size_t(low.group.mul(a, b))] !=
          high.group.mul(map[size_t(a)], map[size_t(b)]))
        return false;
  return true;
}

} // namespace

TEST_CASE("dihedral truncation", "[ptoral]") {
  PToral S = make_dihedral(3);
  REQUIRE(S.order() == 16);
  int x = S.named.at("x"), s = S.named.at("s"), t1 = S.named.at("t1");
  REQUIRE(S.group.order(s) == 8);
  REQUIRE(S.group.order(x) == 2);
  REQUIRE(S.group.order(t1) == 2);
  // inversion action: x t x^-1 = t^-1 for every torus element
  for (int t : S.torus())
    REQUIRE(S.group.conj(x, t) == S.group.inv(t));
  REQUIRE(center_of(S.group, whole_group(S.group)) == Elems{0, t1});
  REQUIRE(is_normal_in(S.group, S.torus(), whole_group(S.group)));
  auto q = quotient_group(S.group, whole_group(S.group), S.torus(), "S/T");
  REQUIRE(q.group.n == 2);
  REQUIRE(find_isomorphism(S.group, dihedral_group(8)).has_value());
  check_exhaustive_associativity(S.group);
}

TEST_CASE("quaternion truncation", "[ptoral]") {
  PToral S = make_quaternion(3);
  REQUIRE(S.order() == 16);
  int y = S.named.at("y"), t1 = S.named.at("t1"), t2 = S.named.at("t2");
  REQUIRE(S.group.mul(y, y) == t1);
  REQUIRE(S.group.order(y) == 4);
  // generalized quaternion: a unique involution
  REQUIRE(elements_of_order(S.group, whole_group(S.group), 2) == Elems{t1});
  REQUIRE(center_of(S.group, whole_group(S.group)) == Elems{0, t1});
  REQUIRE_FALSE(find_isomorphism(S.group, dihedral_group(8)).has_value());

  // the subgroup generated by the order-four torus layer and y is Q8
  Elems w = closure(S.group, {t2, y});
  REQUIRE(w.size() == 8);
  auto wg = subgroup_as_group(S.group, w, "W");
  MatGroup q8 = mat2_group(3, {Mat2{0, 2, 1, 0}, Mat2{1, 1, 1, 2}}, "Q8");
  REQUIRE(find_isomorphism(wg.group, q8.group).has_value());
  check_exhaustive_associativity(S.group);
}

TEST_CASE("bare torus truncation", "[ptoral]") {
  PToral S = make_circle(3, 2);
  REQUIRE(S.order() == 9);
  REQUIRE(S.group.is_abelian());
  REQUIRE(S.group.order(S.named.at("s")) == 9);
  REQUIRE(S.group.order(S.named.at("t1")) == 3);
}

TEST_CASE("rank-two truncation at p=3", "[ptoral]") {
  PToral S = make_exotic(2);
  REQUIRE(S.order() == 243);
  int x = S.named.at("x"), u = S.named.at("u"), v = S.named.at("v");
  int v1 = S.named.at("v1");
  REQUIRE(S.group.order(x) == 3);
  REQUIRE(S.group.order(u) == 9);

  // the action matrix has order three and 1 + A + A^2 = 0 mod 9
  const IntMat& A = S.phi[1];
  const IntMat& A2 = S.phi[2];
  for (int i = 0; i < 4; ++i)
    REQUIRE((((i % 3 == 0 ? 1 : 0) + A[size_t(i)] + A2[size_t(i)]) % 9) == 0);

  // conjugation by x applies A: x u x^-1 = (-2, -1) = (7, 8)
  REQUIRE(S.group.conj(x, u) == S.encode({7, 8}, 0));
  // commutator convention [u,x] = u^-1 x^-1 u x
  int comm = S.group.mul(S.group.mul(S.group.inv(u), S.group.inv(x)),
                         S.group.mul(u, x));
  REQUIRE(comm == v);

  // center is the fixed subgroup of the torus action
  REQUIRE(center_of(S.group, whole_group(S.group)) ==
          closure(S.group, {v1}));
  REQUIRE(closure(S.group, {v1}).size() == 3);

  // everything outside the torus has order three, the torus contributes 8
  REQUIRE(elements_of_order(S.group, whole_group(S.group), 3).size() == 170);

  // the centralizer of x is elementary abelian of order 9
  Elems cx = centralizer_in(S.group, whole_group(S.group), closure(S.group, {x}));
  REQUIRE(cx == closure(S.group, {v1, x}));
  REQUIRE(cx.size() == 9);
  check_exhaustive_associativity(S.group);
}

TEST_CASE("level lift and canonical embedding", "[ptoral]") {
  // lifting the spec reproduces the next presentation verbatim
  REQUIRE(level_lift(quaternion_spec(2)).cocycle == quaternion_spec(3).cocycle);
  REQUIRE(level_lift(dihedral_spec(2)).gen_action == dihedral_spec(3).gen_action);

  PToral low = make_quaternion(2);
  PToral high = make_quaternion(3);
  auto map = iota_embedding(low, high);
  REQUIRE(embedding_is_hom(low, high, map));
  // the image is the Q8 layer generated by the deeper t2 and y
  Elems img(map.begin(), map.end());
  std::sort(img.begin(), img.end());
  REQUIRE(img == closure(high.group, {high.named.at("t2"), high.named.at("y")}));

  PToral elow = make_exotic(1);
  PToral ehigh = make_exotic(2);
  auto emap = iota_embedding(elow, ehigh);
  REQUIRE(embedding_is_hom(elow, ehigh, emap));
}

TEST_CASE("deeper-torus shift automorphisms", "[ptoral]") {
  PToral D = make_dihedral(3);
  auto shifts = delta_shift_automorphisms(D);
  REQUIRE(shifts.size() == 8);
  std::set<int> x_images;
  for (const Hom& f : shifts) {
    REQUIRE(is_injective_hom(D.group, f));
    for (int t : D.torus()) REQUIRE(apply(f, t) == t); // torus fixed pointwise
    x_images.insert(apply(f, D.named.at("x")));
  }
  // every torus translate of x is realized, not just the even ones that
  // level-3 conjugation reaches
  REQUIRE(x_images.size() == 8);

  PToral Q = make_quaternion(3);
  auto qshifts = delta_shift_automorphisms(Q);
  REQUIRE(qshifts.size() == 8);
  for (const Hom& f : qshifts) REQUIRE(is_injective_hom(Q.group, f));

  PToral E = make_exotic(2);
  auto eshifts = delta_shift_automorphisms(E);
  REQUIRE(eshifts.size() == 81);
  std::set<int> ex_images;
  for (const Hom& f : eshifts) {
    REQUIRE(is_injective_hom(E.group, f));
    ex_images.insert(apply(f, E.named.at("x")));
  }
  REQUIRE(ex_images.size() == 81); // all torus translates of x
}

TEST_CASE("invalid presentations are rejected", "[ptoral]") {
  TruncationSpec bad = dihedral_spec(3);
  bad.p = 6;
  REQUIRE_THROWS_WITH(make_truncation(bad), "p is not prime");

  bad = dihedral_spec(3);
  bad.gen_action = {{2}}; // 2^2 != 1 mod 8, not an action of Z/2
  REQUIRE_THROWS_WITH(make_truncation(bad), "action is not a homomorphism");

  bad = dihedral_spec(3);
  bad.cocycle[{0, 1}] = {1};
  REQUIRE_THROWS_WITH(make_truncation(bad), "cocycle is not normalized");

  bad = quaternion_spec(3);
  bad.cocycle[{1, 1}] = {3}; // breaks the cocycle identity (and associativity)
  REQUIRE_THROWS_WITH(make_truncation(bad), "2-cocycle identity fails");

  bad = dihedral_spec(3);
  bad.gen_action = {{1, 0, 0, 1}};
  REQUIRE_THROWS_WITH(make_truncation(bad), "action matrix has wrong shape");
}

TEST_CASE("product presentations", "[ptoral]") {
  TruncationSpec prod = product_spec(dihedral_spec(2), circle_spec(2, 2));
  PToral S = make_truncation(prod);
  REQUIRE(S.order() == 32);
  REQUIRE(S.spec.rank == 2);
  REQUIRE(S.torus().size() == 16);
  // center: the order-two layer of the inverted coordinate times the whole
  // second coordinate
  REQUIRE(center_of(S.group, whole_group(S.group)).size() == 8);

  TruncationSpec qq = product_spec(quaternion_spec(2), quaternion_spec(2));
  PToral S2 = make_truncation(qq);
  REQUIRE(S2.order() == 64);
  REQUIRE(S2.pi.n == 4);
  // cocycle entries survive in both coordinates
  int y1 = S2.encode({0, 0}, 2); // first factor flip: high digit
  int y2 = S2.encode({0, 0}, 1);
  REQUIRE(S2.group.order(y1) == 4);
  REQUIRE(S2.group.order(y2) == 4);
}
