// Transporter categories over their Sylow subgroups.  The committed fixtures
// pin down worked examples end to end: morphism counts for the restricted
// Sym(4) datum, the centric linking fixtures of Sym(4) and of the binary
// octahedral group, exact halving of every morphism set under the central
// quotient, and a valid admissible extension connecting the two.  Each
// fixture is also regenerated from scratch and byte-compared, so the files
// in data/ can never drift from the code that claims to produce them.

#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include <fusionkit/io.hpp>
#include <fusionkit/presentations.hpp>
#include <fusionkit/structure.hpp>

using namespace fusionkit;

namespace {

std::string data_path(const std::string& name) {
  return std::string(FUSIONKIT_DATA_DIR) + "/" + name;
}

std::string file_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

TransporterData load_fixture(const std::string& name) {
  return transporter_from_json(read_json_file(data_path(name)));
}

long mors_between(const TransporterData& T, int i, int j) {
  long c = 0;
  for (const TransporterMor& m : T.mors)
    if (m.src == i && m.dst == j) ++c;
  return c;
}

long kernel_size_at(const TransporterData& T, int k) {
  Hom id = identity_hom(T.objects[size_t(k)]);
  long c = 0;
  for (const TransporterMor& m : T.mors)
    if (m.src == k && m.dst == k && m.rho == id) ++c;
  return c;
}

void require_all_axioms(const TransporterReport& r) {
  for (const char* tag : {"A1", "A2", "B", "C", "I", "II", "III"}) {
    INFO(tag);
    const AxiomResult* a = r.axiom(tag);
    REQUIRE(a != nullptr);
    REQUIRE(a->pass);
  }
}

} // namespace

TEST_CASE("restricted fixture reproduces the worked morphism counts",
          "[transporter]") {
  TransporterData T = load_fixture("sym4-restricted.json");
  REQUIRE(T.objects.size() == 2);
  REQUIRE(T.objects[0].size() == 4);
  REQUIRE(T.objects[1].size() == 8);
  TransporterReport r = validate_transporter(T);
  REQUIRE(r.verdict);
  require_all_axioms(r);

  // the four-group is normal, so the whole group carries it into anything
  REQUIRE(mors_between(T, 0, 0) == 24);
  REQUIRE(mors_between(T, 0, 1) == 24);
  REQUIRE(mors_between(T, 1, 1) == 8);
  REQUIRE(mors_between(T, 1, 0) == 0);
  REQUIRE(T.mors.size() == 56);
}

TEST_CASE("centric fixture passes every axiom with central kernels",
          "[transporter]") {
  TransporterData T = load_fixture("sym4-linking.json");
  REQUIRE(T.objects.size() == 4);
  REQUIRE(T.mors.size() == 88);
  TransporterReport r = validate_transporter(T);
  REQUIRE(r.verdict);
  require_all_axioms(r);
  for (size_t k = 0; k < T.objects.size(); ++k)
    REQUIRE(kernel_size_at(T, int(k)) ==
            long(center_of(T.F.U, T.objects[k]).size()));
}

TEST_CASE("corrupted fixture fails the free kernel action", "[transporter]") {
  TransporterData T = load_fixture("sym4-linking-corrupted.json");
  TransporterReport r = validate_transporter(T);
  REQUIRE_FALSE(r.verdict);
  const AxiomResult* a2 = r.axiom("A2");
  REQUIRE(a2 != nullptr);
  REQUIRE_FALSE(a2->pass);
  REQUIRE_FALSE(a2->witnesses.empty());

  // it differs from the clean fixture in exactly one projection
  TransporterData good = load_fixture("sym4-linking.json");
  REQUIRE(good.mors.size() == T.mors.size());
  int diffs = 0;
  for (size_t m = 0; m < T.mors.size(); ++m)
    if (!(T.mors[m].rho == good.mors[m].rho)) ++diffs;
  REQUIRE(diffs == 1);
}

TEST_CASE("quaternion-Sylow fixture validates with automizer 48",
          "[transporter]") {
  TransporterData T = load_fixture("su2-linking.json");
  REQUIRE(T.objects.size() == 6);
  std::vector<size_t> sizes;
  for (const Elems& P : T.objects) sizes.push_back(P.size());
  REQUIRE(sizes == std::vector<size_t>{4, 4, 8, 8, 8, 16});
  REQUIRE(T.mors.size() == 272);
  TransporterReport r = validate_transporter(T);
  REQUIRE(r.verdict);
  require_all_axioms(r);

  long big = 0;
  for (size_t k = 0; k < T.objects.size(); ++k)
    big = std::max(big, mors_between(T, int(k), int(k)));
  REQUIRE(big == 48);
  for (size_t k = 0; k < T.objects.size(); ++k)
    REQUIRE(kernel_size_at(T, int(k)) ==
            long(center_of(T.F.U, T.objects[k]).size()));
}

TEST_CASE("central quotient halves every morphism set", "[transporter]") {
  TransporterData T = load_fixture("su2-linking.json");
  Elems z = center_of(T.F.U, whole_group(T.F.U));
  REQUIRE(z.size() == 2);

  TransporterData Q = quotient_transporter(T, z);
  TransporterReport r = validate_transporter(Q);
  REQUIRE(r.verdict);
  REQUIRE(Q.objects.size() == 6);
  REQUIRE(Q.mors.size() == 136);

  // match each object with its projection, then compare pair by pair
  QuotientResult qq = quotient_group(T.F.U, whole_group(T.F.U), z, "q");
  std::vector<int> qidx(T.objects.size(), -1);
  for (size_t k = 0; k < T.objects.size(); ++k) {
    Elems im;
    for (int x : T.objects[k]) im.push_back(qq.coset_of[size_t(x)]);
    std::sort(im.begin(), im.end());
    im.erase(std::unique(im.begin(), im.end()), im.end());
    for (size_t b = 0; b < Q.objects.size(); ++b)
      if (Q.objects[b] == im) qidx[k] = int(b);
    REQUIRE(qidx[k] >= 0);
  }
  for (size_t i = 0; i < T.objects.size(); ++i)
    for (size_t j = 0; j < T.objects.size(); ++j)
      REQUIRE(mors_between(T, int(i), int(j)) ==
              2 * mors_between(Q, qidx[i], qidx[j]));

  // the quotient fusion system is the one of the Sym(4) fixture
  TransporterData base = load_fixture("sym4-linking.json");
  REQUIRE(find_fusion_isomorphism(Q.F, base.F).has_value());
}

TEST_CASE("quotients require a normal kernel", "[transporter]") {
  TransporterData T = load_fixture("su2-linking.json");
  Elems bad;
  for (const Elems& P : T.F.subs)
    if (P.size() == 4 && !is_normal_in(T.F.U, P, T.F.S)) bad = P;
  REQUIRE_FALSE(bad.empty());
  REQUIRE_THROWS_AS(quotient_transporter(T, bad), PreconditionError);
}

TEST_CASE("extension fixture is valid and admissible", "[transporter]") {
  ExtensionData X =
      extension_from_json(read_json_file(data_path("ext-su2-over-so3.json")));
  REQUIRE(X.total.mors.size() == 272);
  REQUIRE(X.base.mors.size() == 136);
  REQUIRE(X.tau.size() == 272);
  REQUIRE(X.kernel.size() == 2);

  ExtensionReport er = validate_extension(X);
  REQUIRE(er.valid);
  REQUIRE(er.admissible);
  for (const char* tag :
       {"i", "ii", "iii", "pullback", "round-trip", "admissibility"}) {
    INFO(tag);
    const AxiomResult* c = er.condition(tag);
    REQUIRE(c != nullptr);
    REQUIRE(c->pass);
  }
}

TEST_CASE("trivial extensions validate", "[transporter]") {
  TransporterData T = load_fixture("sym4-linking.json");
  std::vector<int> idtau(T.mors.size());
  for (size_t m = 0; m < idtau.size(); ++m) idtau[m] = int(m);
  ExtensionData X{"trivial", T, T, idtau, trivial_subgroup()};
  ExtensionReport er = validate_extension(X);
  REQUIRE(er.valid);
  REQUIRE(er.admissible);
}

TEST_CASE("extension projection must be a functor", "[transporter]") {
  ExtensionData X =
      extension_from_json(read_json_file(data_path("ext-su2-over-so3.json")));
  int a = -1, b = -1;
  for (size_t m = 0; m < X.tau.size() && b < 0; ++m)
    for (size_t w = m + 1; w < X.tau.size(); ++w)
      if (X.total.mors[m].src == X.total.mors[w].src &&
          X.total.mors[m].dst == X.total.mors[w].dst && X.tau[m] != X.tau[w]) {
        a = int(m);
        b = int(w);
        break;
      }
  REQUIRE(b >= 0);
  X.tau[size_t(b)] = X.tau[size_t(a)];
  REQUIRE_THROWS_WITH(validate_extension(X),
                      "malformed extension: the projection is not a functor");
}

TEST_CASE("full transporter categories of small groups validate",
          "[transporter]") {
  Group s4 = symmetric_group(4);
  Elems d8 = sylow_subgroup(s4, whole_group(s4), 2);
  GroupTransporter full = make_group_transporter(s4, d8, 2, "sym4-full");
  REQUIRE(full.data.objects.size() == 10);
  REQUIRE(full.data.mors.size() == 640);
  REQUIRE(validate_transporter(full.data).verdict);

  Group d12 = dihedral_group(6);
  Elems s2 = sylow_subgroup(d12, whole_group(d12), 2);
  REQUIRE(validate_transporter(
              make_group_transporter(d12, s2, 2, "d12-full").data)
              .verdict);

  MatGroup sl23 = sl2_group(3);
  Elems q8 = sylow_subgroup(sl23.group, whole_group(sl23.group), 2);
  REQUIRE(validate_transporter(
              make_group_transporter(sl23.group, q8, 2, "sl23-full").data)
              .verdict);
}

TEST_CASE("malformed categories are reported distinctly", "[transporter]") {
  TransporterData good = load_fixture("sym4-linking.json");

  SECTION("a dropped composition entry is a precondition failure") {
    TransporterData bad = good;
    bad.comp.erase(bad.comp.begin());
    REQUIRE_THROWS_AS(validate_transporter(bad), PreconditionError);
  }

  SECTION("a remapped composite breaks the category laws") {
    TransporterData bad = good;
    auto it = bad.comp.begin();
    while (bad.mors[size_t(it->second)].eps &&
           *bad.mors[size_t(it->second)].eps == 0)
      ++it;
    const TransporterMor& c = bad.mors[size_t(it->second)];
    for (size_t w = 0; w < bad.mors.size(); ++w)
      if (int(w) != it->second && bad.mors[w].src == c.src &&
          bad.mors[w].dst == c.dst) {
        it->second = int(w);
        break;
      }
    REQUIRE_THROWS_AS(validate_transporter(bad), std::runtime_error);
  }

  SECTION("object families must be closed under overgroups") {
    Group s4 = symmetric_group(4);
    Elems d8 = sylow_subgroup(s4, whole_group(s4), 2);
    Elems vnorm;
    for (const Elems& P : enumerate_subgroups(s4, d8))
      if (P.size() == 4 && is_normal_in(s4, P, whole_group(s4))) vnorm = P;
    REQUIRE_THROWS_AS(make_group_transporter(s4, d8, 2, "broken", {vnorm}),
                      PreconditionError);
  }
}

TEST_CASE("fixtures regenerate byte for byte", "[transporter]") {
  Group s4 = symmetric_group(4);
  Elems d8 = sylow_subgroup(s4, whole_group(s4), 2);
  Elems vnorm;
  for (const Elems& P : enumerate_subgroups(s4, d8))
    if (P.size() == 4 && is_normal_in(s4, P, whole_group(s4))) vnorm = P;

  GroupTransporter restricted =
      make_group_transporter(s4, d8, 2, "sym4-restricted", {vnorm, d8});
  REQUIRE(json_text(transporter_to_json(restricted.data)) ==
          file_bytes(data_path("sym4-restricted.json")));

  GroupTransporter linking = make_group_transporter(
      s4, d8, 2, "sym4-linking", centric_family(s4, d8));
  REQUIRE(json_text(transporter_to_json(linking.data)) ==
          file_bytes(data_path("sym4-linking.json")));

  Group o48 = binary_octahedral_group();
  Elems q16 = sylow_subgroup(o48, whole_group(o48), 2);
  std::vector<Elems> cfo = centric_family(o48, q16);
  GroupTransporter su2 =
      make_group_transporter(o48, q16, 2, "su2-linking", cfo);
  REQUIRE(json_text(transporter_to_json(su2.data)) ==
          file_bytes(data_path("su2-linking.json")));

  Elems zamb = center_of(o48, whole_group(o48));
  ExtensionData ext =
      make_central_extension(o48, q16, 2, zamb, "su2-over-so3", cfo);
  REQUIRE(json_text(extension_to_json(ext)) ==
          file_bytes(data_path("ext-su2-over-so3.json")));
}

TEST_CASE("loaded fixtures re-serialize to the committed bytes",
          "[transporter]") {
  for (const char* name : {"sym4-restricted.json", "sym4-linking.json",
                           "sym4-linking-corrupted.json", "su2-linking.json"}) {
    INFO(name);
    TransporterData T = load_fixture(name);
    REQUIRE(json_text(transporter_to_json(T)) == file_bytes(data_path(name)));
  }
  ExtensionData X =
      extension_from_json(read_json_file(data_path("ext-su2-over-so3.json")));
  REQUIRE(json_text(extension_to_json(X)) ==
          file_bytes(data_path("ext-su2-over-so3.json")));
}

TEST_CASE("negative control file fails the Sylow automizer axiom",
          "[transporter]") {
  FusionSystem f =
      fusion_from_json(read_json_file(data_path("broken-dihedral.json")));
  SaturationReport rep = check_saturation(f);
  REQUIRE_FALSE(rep.verdict);
  const AxiomResult* one = rep.axiom("I");
  REQUIRE(one != nullptr);
  REQUIRE_FALSE(one->pass);
  REQUIRE_FALSE(one->witnesses.empty());

  // the witness replays against the bad system and survives serialization
  SaturationWitness w =
      witness_from_json(witness_to_json(one->witnesses.front()));
  REQUIRE(replay_witness(f, "I", w));

  // the honest system over the same presentation rejects it
  PToral P = make_dihedral(3);
  FusionSeed seed{"dihedral-inner", P.group, whole_group(P.group), 2,
                  delta_shift_automorphisms(P), {}};
  FusionSystem good = close_fusion(seed);
  REQUIRE_FALSE(replay_witness(good, "I", w));
}
