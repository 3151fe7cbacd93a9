// Regenerates the committed fixture files under data/.  Every construction
// here is deterministic, so rerunning the tool must reproduce the files byte
// for byte; the test suite enforces exactly that.
//
// Fixtures:
//   sym4-restricted.json        transporter of Sym(4) on {V, S}
//   sym4-linking.json           centric linking fixture of Sym(4)
//   sym4-linking-corrupted.json one projection remapped; breaks axiom (A2)
//   su2-linking.json            centric linking fixture of the binary
//                               octahedral group (quaternion Sylow of order 16)
//   ext-su2-over-so3.json       the central extension of the octahedral
//                               quotient by the su2 fixture
//   broken-dihedral.json        fusion seed whose torus automizer is too
//                               large to admit a Sylow inclusion; the stock
//                               saturation negative control

#include <iostream>
#include <string>

#include "fusionkit/io.hpp"
#include "fusionkit/presentations.hpp"

using namespace fusionkit;

static json broken_dihedral_seed() {
  PToral P = make_dihedral(3);
  json j;
  j["schema"] = "fusionkit-fusion-v1";
  j["name"] = "broken-dihedral";
  j["p"] = 2;
  json a = truncation_to_json(P.spec);
  a["kind"] = "truncation";
  j["ambient"] = std::move(a);
  j["sylow"] = whole_group(P.group);
  j["inner"] = detail::hom_blocks_to_json(delta_shift_automorphisms(P));
  // every unit multiplier on the torus, not just the inversion that conjugation
  // one level deeper actually realizes; axiom (I) then fails at the torus
  std::vector<Hom> gens;
  Elems torus = P.torus();
  for (int u : {3, 5, 7}) {
    Hom f;
    f.dom = torus;
    for (int t : torus) f.img.push_back(int((long(u) * t) % P.M));
    gens.push_back(std::move(f));
  }
  j["generators"] = detail::hom_blocks_to_json(gens);
  return j;
}

static TransporterData corrupt_projection(TransporterData bad) {
  for (TransporterMor& mor : bad.mors) {
    if (mor.eps) continue;
    int si = bad.F.index_of(bad.objects[size_t(mor.src)]);
    int sj = bad.F.index_of(bad.objects[size_t(mor.dst)]);
    for (const Hom& h : bad.F.hom_set(si, sj))
      if (!(h == mor.rho) && h.dom == mor.rho.dom &&
          image_of(h).size() == image_of(mor.rho).size()) {
        mor.rho = h;
        return bad;
      }
  }
  throw std::runtime_error("no label available to corrupt");
}

int main(int argc, char** argv) try {
  std::string dir = argc > 1 ? argv[1] : "data";
  auto emit = [&](const std::string& name, const json& j) {
    std::string path = dir + "/" + name;
    write_json_file(path, j);
    std::cout << path << "\n";
  };

  Group s4 = symmetric_group(4);
  Elems d8 = sylow_subgroup(s4, whole_group(s4), 2);

  // the normal four-group and the Sylow itself
  Elems vnorm;
  for (const Elems& P : enumerate_subgroups(s4, d8))
    if (P.size() == 4 && is_normal_in(s4, P, whole_group(s4))) vnorm = P;
  GroupTransporter restricted = make_group_transporter(
      s4, d8, 2, "sym4-restricted", {vnorm, d8});
  emit("sym4-restricted.json", transporter_to_json(restricted.data));

  GroupTransporter linking = make_group_transporter(
      s4, d8, 2, "sym4-linking", centric_family(s4, d8));
  emit("sym4-linking.json", transporter_to_json(linking.data));
  emit("sym4-linking-corrupted.json",
       transporter_to_json(corrupt_projection(linking.data)));

  Group o48 = binary_octahedral_group();
  Elems q16 = sylow_subgroup(o48, whole_group(o48), 2);
  std::vector<Elems> cfo = centric_family(o48, q16);
  GroupTransporter su2 =
      make_group_transporter(o48, q16, 2, "su2-linking", cfo);
  emit("su2-linking.json", transporter_to_json(su2.data));

  Elems zamb = center_of(o48, whole_group(o48));
  ExtensionData ext =
      make_central_extension(o48, q16, 2, zamb, "su2-over-so3", cfo);
  emit("ext-su2-over-so3.json", extension_to_json(ext));

  emit("broken-dihedral.json", broken_dihedral_seed());
  return 0;
} catch (const std::exception& e) {
  std::cerr << "harvest failed: " << e.what() << "\n";
  return 1;
}
