// Structural analysis: classification flags, strongly closed and normal
// subgroups, subsystem normality, hyperfocal subgroups, p-power-index
// subsystems, and the rank-1 irreducibility verdicts.

#include <catch2/catch_amalgamated.hpp>

#include <fusionkit/catalog.hpp>
#include <fusionkit/structure.hpp>

using namespace fusionkit;

namespace {

// the expensive entries are shared across test cases
const CatalogEntry& so3_entry() {
  static CatalogEntry e = build_by_name("so3:l=3");
  return e;
}

const CatalogEntry& su2_entry() {
  static CatalogEntry e = build_by_name("su2:l=3");
  return e;
}

const CatalogEntry& sullivan_entry() {
  static CatalogEntry e = build_by_name("sullivan:p=5,n=4,l=2");
  return e;
}

const CatalogEntry& dihedral_inner_entry() {
  static CatalogEntry e = build_by_name("dihedral-inner:l=3");
  return e;
}

const Elems dihedral_torus = {0, 1, 2, 3, 4, 5, 6, 7};
const Elems klein_v = {0, 4, 8, 12}; // <t1, x> inside the level-3 dihedral

bool has_exponent_two(const Group& G, const Elems& A) {
  for (int a : A)
    if (G.mul(a, a) != 0) return false;
  return true;
}

} // namespace

TEST_CASE("classification of the level-3 dihedral truncation", "[structure]") {
  const FusionSystem& F = so3_entry().system;
  SubgroupClassification cl = classify_subgroups(F);

  REQUIRE(cl.classes.size() == 7);

  // exactly two centric-radical classes: the Klein four-group class and S
  std::vector<int> cr = cl.centric_radical();
  REQUIRE(cr.size() == 2);
  const ClassFlags& small = cl.classes[size_t(cr[0])];
  const ClassFlags& top = cl.classes[size_t(cr[1])];
  REQUIRE(F.subs[size_t(small.representative)].size() == 4);
  REQUIRE(small.members.size() == 4);
  for (int j : small.members)
    REQUIRE(has_exponent_two(F.U, F.subs[size_t(j)]));
  REQUIRE(F.subs[size_t(top.representative)] == F.S);

  // the torus is centric but not radical, and sits in its own class
  int iT = F.index_of(dihedral_torus);
  const ClassFlags& tc = cl.classes[size_t(cl.class_of[size_t(iT)])];
  REQUIRE(tc.members.size() == 1);
  REQUIRE(tc.centric);
  REQUIRE_FALSE(tc.radical);

  // all four Klein subgroups land in a single class
  int iV = F.index_of(klein_v);
  REQUIRE(cl.class_of[size_t(iV)] == cr[0]);

  // involutions form one fusion class of size 9
  std::vector<Elems> invol = element_classes_of_order(F, 2);
  REQUIRE(invol.size() == 1);
  REQUIRE(invol.front().size() == 9);

  // the order-3 automizer evidence at the Klein class
  REQUIRE(F.auts(iV).size() == 6);

  // flags are constant on classes: the radical test agrees at every member
  for (const ClassFlags& k : cl.classes)
    for (int j : k.members)
      REQUIRE(detail::radical_at(F, j) == k.radical);
}

TEST_CASE("classification of the symmetric-group oracle", "[structure]") {
  CatalogEntry e = build_by_name("oracle:sym4,p=2");
  const FusionSystem& F = e.system;
  SubgroupClassification cl = classify_subgroups(F);

  std::vector<int> cr = cl.centric_radical();
  REQUIRE(cr.size() == 2);
  REQUIRE(F.subs[size_t(cl.classes[size_t(cr[0])].representative)].size() == 4);
  REQUIRE(F.subs[size_t(cl.classes[size_t(cr[1])].representative)].size() == 8);

  // the radical order-4 class is the normal Klein four-group
  Elems core = p_core(F.U, whole_group(F.U), 2);
  REQUIRE(F.subs[size_t(cl.classes[size_t(cr[0])].representative)] == core);

  // centric implies quasicentric throughout
  for (const ClassFlags& k : cl.classes)
    if (k.centric) REQUIRE(k.quasicentric);
}

TEST_CASE("strongly closed subgroups and the center", "[structure]") {
  const FusionSystem& so3 = so3_entry().system;
  std::vector<Elems> sc = strongly_closed_subgroups(so3);
  REQUIRE(sc.size() == 2);
  REQUIRE(sc.front() == trivial_subgroup());
  REQUIRE(sc.back() == so3.S);
  REQUIRE_FALSE(is_strongly_closed(so3, dihedral_torus));

  // strongly closed subgroups are normal in S
  for (const Elems& A : sc) REQUIRE(is_normal_in(so3.U, A, so3.S));

  REQUIRE(f_center(so3) == trivial_subgroup());
  REQUIRE(f_center(sullivan_entry().system) == trivial_subgroup());
  REQUIRE(f_center(su2_entry().system) == Elems{0, 4});
}

TEST_CASE("normal subgroups against the strongly closed lattice",
          "[structure]") {
  const FusionSystem& so3 = so3_entry().system;
  std::vector<Elems> fnorm = f_normal_subgroups(so3);
  // the order-3 maps on the Klein subgroup never extend into the 2-group
  // automizer of S, so only the trivial subgroup is normal here
  REQUIRE(fnorm.size() == 1);
  REQUIRE(fnorm.front() == trivial_subgroup());

  const FusionSystem& sull = sullivan_entry().system;
  std::vector<Elems> fnorm_s = f_normal_subgroups(sull);
  REQUIRE(fnorm_s.size() == 3);
  std::vector<size_t> orders;
  for (const Elems& A : fnorm_s) orders.push_back(A.size());
  REQUIRE(orders == std::vector<size_t>{1, 5, 25});

  // every normal subgroup is strongly closed, every strongly closed one is
  // normal in S
  std::vector<Elems> sc = strongly_closed_subgroups(sull);
  for (const Elems& A : fnorm_s) {
    REQUIRE(std::find(sc.begin(), sc.end(), A) != sc.end());
    REQUIRE(is_normal_in(sull.U, A, sull.S));
  }

  // a strongly closed torus is normal: the inner dihedral system and the
  // Sullivan system both carry one
  const FusionSystem& dih = dihedral_inner_entry().system;
  REQUIRE(is_strongly_closed(dih, dihedral_torus));
  REQUIRE(is_f_normal(dih, dihedral_torus));
  REQUIRE(is_strongly_closed(sull, sull.S));
  REQUIRE(is_f_normal(sull, sull.S));
}

TEST_CASE("subsystem normality conditions fail in order", "[structure]") {
  const FusionSystem& so3 = so3_entry().system;

  // the torus system is not even strongly closed inside the full dihedral
  // fusion: N1 fails with an escaping involution
  FusionSystem ft = detail::inner_system(so3, dihedral_torus, {}, "so3-torus");
  NormalityReport n1fail = is_normal_subsystem(ft, so3);
  REQUIRE_FALSE(n1fail.verdict);
  REQUIRE(n1fail.first_failure() == "N1");
  REQUIRE(n1fail.condition("N1")->witnesses.front().kind ==
          "escaping-element");
  REQUIRE(n1fail.condition("N2")->note == "skipped: N1 failed");

  // mismatched universes and morphism escape are rejected up front
  REQUIRE_THROWS_WITH(is_normal_subsystem(sullivan_entry().system, so3),
                      "subsystem lives in a different universe");
  REQUIRE_THROWS_WITH(
      is_normal_subsystem(so3, dihedral_inner_entry().system),
      "subsystem morphisms do not lie in the parent system");
}

TEST_CASE("hyperfocal subgroup by automizers and by the group oracle",
          "[structure]") {
  // the symmetric-group oracle: both routes give the normal Klein subgroup
  CatalogEntry s4 = build_by_name("oracle:sym4,p=2");
  HyperfocalResult hf = hyperfocal(s4.system, trivial_subgroup());
  Elems oracle = hyperfocal_group_oracle(s4.system.U, s4.system.S, 2);
  REQUIRE(hf.subgroup.size() == 4);
  REQUIRE(hf.subgroup == oracle);
  REQUIRE(has_exponent_two(s4.system.U, hf.subgroup));

  // the order-3 maps on the Klein subgroup push the dihedral hyperfocal up
  // to all of S; inner fusion alone leaves just the torus
  HyperfocalResult so3h = hyperfocal(so3_entry().system, dihedral_torus);
  REQUIRE(so3h.subgroup == so3_entry().system.S);
  REQUIRE(so3h.quotient.group.n == 1);

  HyperfocalResult dihh =
      hyperfocal(dihedral_inner_entry().system, dihedral_torus);
  REQUIRE(dihh.subgroup == dihedral_torus);
  REQUIRE(dihh.quotient.group.n == 2);

  // the hyperfocal subgroup is strongly closed and contains the torus
  struct Probe {
    const FusionSystem* F;
    Elems T;
  };
  std::vector<Probe> probes = {
      {&so3_entry().system, dihedral_torus},
      {&su2_entry().system, dihedral_torus},
      {&dihedral_inner_entry().system, dihedral_torus},
      {&sullivan_entry().system, sullivan_entry().system.S}};
  for (const Probe& pr : probes) {
    Elems h = hyperfocal(*pr.F, pr.T).subgroup;
    REQUIRE(is_strongly_closed(*pr.F, h));
    REQUIRE(subset_of(pr.T, h));
  }
}

TEST_CASE("p-power-index subsystems", "[structure]") {
  const FusionSystem& dih = dihedral_inner_entry().system;

  // over the torus the construction collapses to the torus inner system
  FusionSystem over_t = p_power_index_subsystem(dih, dihedral_torus,
                                                dihedral_torus, {});
  FusionSystem ft = detail::inner_system(dih, dihedral_torus, {}, "ft");
  REQUIRE(over_t.S == ft.S);
  REQUIRE(over_t.iso == ft.iso);

  // over the full Sylow it reproduces the system itself
  FusionSystem over_s =
      p_power_index_subsystem(dih, dih.S, dihedral_torus, dih.innt);
  REQUIRE(over_s.iso == dih.iso);

  // the minimal one is normal: inner dihedral and Sullivan evidence
  NormalityReport dn = is_normal_subsystem(over_t, dih);
  REQUIRE(dn.verdict);
  for (const char* tag : {"N1", "N2", "N3", "N4"})
    REQUIRE(dn.condition(tag)->pass);

  const FusionSystem& sull = sullivan_entry().system;
  Elems sh = hyperfocal(sull, sull.S).subgroup;
  FusionSystem sop = p_power_index_subsystem(sull, sh, sull.S, sull.innt);
  REQUIRE(is_normal_subsystem(sop, sull).verdict);

  // quasicentric flags agree with the parent on subgroups of R
  SubgroupClassification qt = classify_subgroups(over_t);
  SubgroupClassification qd = classify_subgroups(dih);
  for (size_t i = 0; i < over_t.subs.size(); ++i) {
    int di = dih.index_of(over_t.subs[i]);
    REQUIRE(qt.classes[size_t(qt.class_of[i])].quasicentric ==
            qd.classes[size_t(qd.class_of[size_t(di)])].quasicentric);
  }

  // a fusion-active dihedral system has hyperfocal S, so the torus is too
  // small to carry a subsystem of p-power index
  REQUIRE_THROWS_WITH(
      p_power_index_subsystem(so3_entry().system, dihedral_torus,
                              dihedral_torus, {}),
      "R does not contain the hyperfocal subgroup");
}

TEST_CASE("rank-1 irreducibility verdicts", "[structure]") {
  // circle: nothing proper to test against
  CatalogEntry so2 = build_by_name("so2:p=3,l=2");
  IrreducibilityCertificate c2 = is_irreducible_rank1(so2.system, so2.system.S, 1);
  REQUIRE(c2.irreducible);
  REQUIRE(c2.candidates.empty());

  // dihedral: the inner candidate over S fails the conjugation bijection,
  // and the failure sits exactly at the Klein four-group
  IrreducibilityCertificate c3 =
      is_irreducible_rank1(so3_entry().system, dihedral_torus, 1);
  REQUIRE(c3.irreducible);
  REQUIRE(c3.candidates.size() == 1);
  REQUIRE(c3.candidates.front().name == "sylow-inner");
  const NormalityReport& rep = c3.candidates.front().report;
  REQUIRE_FALSE(rep.verdict);
  REQUIRE(rep.first_failure() == "N2");
  const SaturationWitness& w = rep.condition("N2")->witnesses.front();
  REQUIRE(w.subgroup == klein_v);
  REQUIRE(w.morphism.has_value());
  REQUIRE(w.morphism->dom == klein_v);

  // quaternion: same shape of verdict
  IrreducibilityCertificate cq =
      is_irreducible_rank1(su2_entry().system, dihedral_torus, 1);
  REQUIRE(cq.irreducible);

  // the Sullivan system is reducible: its torus system is a proper normal
  // subsystem passing all four conditions
  const FusionSystem& sull = sullivan_entry().system;
  IrreducibilityCertificate cs = is_irreducible_rank1(sull, sull.S, 1);
  REQUIRE_FALSE(cs.irreducible);
  REQUIRE(cs.witness == "torus-inner");
  for (const auto& cand : cs.candidates)
    if (cand.name == "torus-inner") {
      REQUIRE(cand.report.verdict);
      for (const char* tag : {"N1", "N2", "N3", "N4"})
        REQUIRE(cand.report.condition(tag)->pass);
    }

  REQUIRE_THROWS_AS(is_irreducible_rank1(sull, sull.S, 2), PreconditionError);
}

TEST_CASE("rank-1 irreducible component", "[structure]") {
  // fusion-active systems keep their full Sylow
  Rank1Component c3 =
      irreducible_component_rank1(so3_entry().system, dihedral_torus, 1);
  REQUIRE(c3.S0 == so3_entry().system.S);
  REQUIRE(c3.component.iso == so3_entry().system.iso);

  Rank1Component cq =
      irreducible_component_rank1(su2_entry().system, dihedral_torus, 1);
  REQUIRE(cq.S0 == su2_entry().system.S);

  // the Sullivan component is the bare torus system
  const FusionSystem& sull = sullivan_entry().system;
  Rank1Component cs = irreducible_component_rank1(sull, sull.S, 1);
  REQUIRE(cs.S0 == sull.S);
  REQUIRE(cs.component.iso_total() < sull.iso_total());
  FusionSystem bare = detail::inner_system(sull, sull.S, {}, "bare");
  REQUIRE(cs.component.iso == bare.iso);

  // a component is its own component
  Rank1Component fixed = irreducible_component_rank1(cs.component, sull.S, 1);
  REQUIRE(fixed.component.iso == cs.component.iso);

  REQUIRE_THROWS_AS(irreducible_component_rank1(sull, sull.S, 2),
                    PreconditionError);
}

TEST_CASE("quotient of the quaternion system matches the dihedral catalog",
          "[structure]") {
  const FusionSystem& su2 = su2_entry().system;
  QuotientFusion q = quotient_fusion(su2, f_center(su2));
  CatalogEntry so3l2 = build_by_name("so3:l=2");

  std::optional<std::vector<int>> cert =
      find_fusion_isomorphism(q.system, so3l2.system);
  REQUIRE(cert.has_value());
  // the certificate is a genuine bijection of the Sylows
  std::vector<int> image = *cert;
  std::sort(image.begin(), image.end());
  REQUIRE(image == so3l2.system.S);

  // no such map exists between the dihedral and quaternion systems
  CatalogEntry su2l2 = build_by_name("su2:l=2");
  REQUIRE_FALSE(find_fusion_isomorphism(so3l2.system, su2l2.system).has_value());
  REQUIRE_FALSE(find_fusion_isomorphism(so3l2.system, su2).has_value());
}
