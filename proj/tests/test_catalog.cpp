// Catalog construction.  Every builder carries its own table of frozen
// invariants and throws if the built system disagrees, so "it constructs"
// is already a strong assertion; these tests exercise the name grammar, the
// named-element bookkeeping and the precondition surface.

#include <catch2/catch_amalgamated.hpp>

#include <fusionkit/catalog.hpp>

using namespace fusionkit;

TEST_CASE("canonical catalog entries construct and self-verify", "[catalog]") {
  for (const auto& [name, summary] : catalog_names()) {
    if (name.rfind("exotic3", 0) == 0) continue; // exercised in its own suite
    INFO(name);
    CatalogEntry e = build_by_name(name);
    REQUIRE(e.name == name);
    REQUIRE_FALSE(e.summary.empty());
    for (const auto& row : e.expected) REQUIRE(row.ok());
    REQUIRE(e.system.subs.back() == e.system.S);
  }
  REQUIRE(catalog_names().size() >= 7);
}

TEST_CASE("named elements have the advertised orders", "[catalog]") {
  CatalogEntry so3 = build_by_name("so3:l=3");
  REQUIRE(so3.named.count("t1"));
  REQUIRE(so3.named.count("x"));
  REQUIRE(so3.system.U.order(so3.named.at("t1")) == 2);
  REQUIRE(so3.system.U.order(so3.named.at("x")) == 2);

  CatalogEntry su2 = build_by_name("su2:l=3");
  REQUIRE(su2.system.U.order(su2.named.at("y")) == 4);
  // t1 generates the unique central involution subgroup
  int t1 = su2.named.at("t1");
  REQUIRE(su2.system.U.order(t1) == 2);
  REQUIRE(center_of(su2.system.U, su2.system.S) == closure(su2.system.U, {t1}));

  CatalogEntry prod = build_by_name("product:so3xso2,l=2");
  REQUIRE(prod.named.count("x"));
  REQUIRE(prod.named.count("2:t1"));
  REQUIRE(prod.system.U.order(prod.named.at("2:t1")) == 2);
}

TEST_CASE("catalog name grammar rejects malformed requests", "[catalog]") {
  REQUIRE_THROWS_AS(build_by_name("zu2:l=3"), std::invalid_argument);
  REQUIRE_THROWS_AS(build_by_name("so2"), std::invalid_argument);
  REQUIRE_THROWS_AS(build_by_name("so2:p=x,l=2"), std::invalid_argument);
  REQUIRE_THROWS_AS(build_by_name("so2:p=3"), std::invalid_argument);
  REQUIRE_THROWS_AS(build_by_name("oracle:m11,p=2"), std::invalid_argument);
}

TEST_CASE("builders enforce their arithmetic preconditions", "[catalog]") {
  REQUIRE_THROWS_AS(build_so2(4, 2), PreconditionError);
  REQUIRE_THROWS_AS(build_sullivan(2, 1, 2), PreconditionError);
  REQUIRE_THROWS_AS(build_sullivan(5, 3, 2), PreconditionError); // 3 does not divide 4
  REQUIRE_THROWS_AS(build_so3(1), PreconditionError);
  REQUIRE_THROWS_AS(build_exotic3(0), PreconditionError);
  REQUIRE_THROWS_AS(build_finite_oracle("sym4", 3), PreconditionError);
}

TEST_CASE("sullivan sphere unit has exact multiplicative order", "[catalog]") {
  // p=7, n=2 forces the unit -1: the smallest primitive root mod 7 is 3 and
  // 3^((7-1)/2 * 7) = -1 mod 49
  CatalogEntry e = build_sullivan(7, 2, 2);
  int top = e.system.index_of(e.system.S);
  REQUIRE(e.system.auts(top).size() == 2);

  // p=5, n=4, level 2: the unit is 7 mod 25, of order exactly 4
  CatalogEntry f = build_sullivan(5, 4, 2);
  REQUIRE(f.system.auts(f.system.index_of(f.system.S)).size() == 4);
}
