#pragma once

// JSON import and export for the shared data contracts: truncation
// presentations, multiplication-table groups, fusion systems, saturation and
// transporter reports, transporter categories, and extensions.
//
// Fusion systems are stored as generating data, never as the full closed
// morphism sets: the writer emits the truncated-inner automizer plus a small
// generating family (the automorphism group of each subgroup and one linking
// isomorphism per conjugacy class member), and the loader rebuilds the closed
// system with close_fusion.  Closure is idempotent on this data, so a dump of
// a closed system reloads to exactly the same system.
//
// Output is canonical: object keys serialize in sorted order and every array
// is produced in a deterministic order derived from the value, so writing the
// same structure twice yields identical bytes.  json_text is the one byte
// form used for files.

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "fusion.hpp"
#include "ptoral.hpp"
#include "saturation.hpp"
#include "transporter.hpp"

namespace fusionkit {

using json = nlohmann::json;

namespace detail {

inline const json& need(const json& j, const char* key, const char* what) {
  auto it = j.find(key);
  if (it == j.end())
    throw std::invalid_argument(std::string(what) + " is missing \"" + key +
                                "\"");
  return *it;
}

// matrix and cocycle entries travel as decimal strings so large moduli never
// collide with JSON number limits; plain integers are accepted on input
inline long json_int(const json& v, const char* what) {
  if (v.is_number_integer()) return v.get<long>();
  if (v.is_string()) {
    const std::string& s = v.get_ref<const std::string&>();
    try {
      size_t pos = 0;
      long r = std::stol(s, &pos);
      if (pos == s.size() && !s.empty()) return r;
    } catch (const std::exception&) {
    }
  }
  throw std::invalid_argument(std::string(what) + " is not an integer");
}

inline std::vector<int> json_ids(const json& v, const char* what) {
  if (!v.is_array())
    throw std::invalid_argument(std::string(what) + " is not an array");
  std::vector<int> out;
  out.reserve(v.size());
  for (const auto& e : v) out.push_back(int(json_int(e, what)));
  return out;
}

} // namespace detail

// ---- truncation presentations ----

inline json truncation_to_json(const TruncationSpec& s) {
  json j;
  j["p"] = s.p;
  j["rank"] = s.rank;
  j["level"] = s.level;
  json c;
  c["kind"] = s.complement.kind;
  if (s.complement.kind == "cyclic")
    c["order"] = s.complement.orders.empty() ? 1 : s.complement.orders[0];
  else if (s.complement.kind == "abelian")
    c["orders"] = s.complement.orders;
  j["complement"] = c;
  json act = json::array();
  for (const IntMat& m : s.gen_action) {
    json rows = json::array();
    for (int r = 0; r < s.rank; ++r) {
      json row = json::array();
      for (int cix = 0; cix < s.rank; ++cix)
        row.push_back(std::to_string(m[size_t(r) * s.rank + cix]));
      rows.push_back(std::move(row));
    }
    act.push_back(std::move(rows));
  }
  j["action"] = std::move(act);
  if (!s.cocycle.empty()) {
    json cc = json::array();
    for (const auto& [key, vec] : s.cocycle) {
      json vals = json::array();
      for (long v : vec) vals.push_back(std::to_string(v));
      cc.push_back(json::array({key.first, key.second, std::move(vals)}));
    }
    j["cocycle"] = std::move(cc);
  }
  return j;
}

inline TruncationSpec truncation_from_json(const json& j) {
  TruncationSpec s;
  s.p = int(detail::json_int(detail::need(j, "p", "truncation spec"), "p"));
  s.rank =
      int(detail::json_int(detail::need(j, "rank", "truncation spec"), "rank"));
  s.level = int(
      detail::json_int(detail::need(j, "level", "truncation spec"), "level"));
  if (j.contains("complement")) {
    const json& c = j["complement"];
    s.complement.kind =
        detail::need(c, "kind", "complement").get<std::string>();
    s.complement.orders.clear();
    if (c.contains("order"))
      s.complement.orders.push_back(
          int(detail::json_int(c["order"], "complement order")));
    else if (c.contains("orders"))
      for (const auto& v : c["orders"])
        s.complement.orders.push_back(
            int(detail::json_int(v, "complement order")));
  }
  if (j.contains("action"))
    for (const auto& rows : j["action"]) {
      IntMat m;
      for (const auto& row : rows)
        for (const auto& v : row)
          m.push_back(detail::json_int(v, "action entry"));
      if (int(m.size()) != s.rank * s.rank)
        throw std::invalid_argument("action matrix has wrong shape");
      s.gen_action.push_back(std::move(m));
    }
  if (j.contains("cocycle"))
    for (const auto& ent : j["cocycle"]) {
      if (!ent.is_array() || ent.size() != 3)
        throw std::invalid_argument("cocycle entry is not [w1, w2, values]");
      int w1 = int(detail::json_int(ent[0], "cocycle index"));
      int w2 = int(detail::json_int(ent[1], "cocycle index"));
      IntVec vec;
      for (const auto& v : ent[2])
        vec.push_back(detail::json_int(v, "cocycle value"));
      s.cocycle[{w1, w2}] = std::move(vec);
    }
  return s;
}

// ---- multiplication-table groups ----

inline json group_to_json(const Group& G) {
  json j;
  j["name"] = G.name;
  j["order"] = G.n;
  json t = json::array();
  for (int a = 0; a < G.n; ++a)
    for (int b = 0; b < G.n; ++b) t.push_back(G.mul(a, b));
  j["table"] = std::move(t);
  return j;
}

inline Group group_from_json(const json& j) {
  int n = int(detail::json_int(detail::need(j, "order", "group"), "order"));
  if (n < 1) throw std::invalid_argument("group order must be positive");
  std::vector<int> table =
      detail::json_ids(detail::need(j, "table", "group"), "group table");
  if (long(table.size()) != long(n) * n)
    throw std::invalid_argument("group table has wrong size");
  for (int v : table)
    if (v < 0 || v >= n)
      throw std::invalid_argument("group table entry out of range");
  std::string name = j.value("name", std::string("group"));
  return Group::from_table(n, std::move(table), std::move(name));
}

// ---- morphism blocks ----
//
// a block is one domain subgroup together with the image rows of every
// serialized morphism out of it; images are parallel to the sorted domain
// list, and the target subgroup is implicit in the images

namespace detail {

inline json hom_blocks_to_json(const std::vector<Hom>& homs) {
  std::map<Elems, std::vector<std::vector<int>>> by_dom;
  for (const Hom& f : homs) by_dom[f.dom].push_back(f.img);
  std::vector<const Elems*> order;
  order.reserve(by_dom.size());
  for (const auto& [dom, imgs] : by_dom) order.push_back(&dom);
  std::sort(order.begin(), order.end(), [](const Elems* a, const Elems* b) {
    if (a->size() != b->size()) return a->size() < b->size();
    return *a < *b;
  });
  json out = json::array();
  for (const Elems* dom : order) {
    auto& imgs = by_dom[*dom];
    std::sort(imgs.begin(), imgs.end());
    imgs.erase(std::unique(imgs.begin(), imgs.end()), imgs.end());
    json b;
    b["subgroup"] = *dom;
    b["automorphisms"] = imgs;
    out.push_back(std::move(b));
  }
  return out;
}

inline std::vector<Hom> hom_blocks_from_json(const json& arr,
                                             const char* what) {
  if (!arr.is_array())
    throw std::invalid_argument(std::string(what) + " is not an array");
  std::vector<Hom> out;
  for (const auto& b : arr) {
    std::vector<int> dom = json_ids(need(b, "subgroup", what), what);
    const json& rows = need(b, "automorphisms", what);
    for (const auto& row : rows) {
      std::vector<int> img = json_ids(row, what);
      if (img.size() != dom.size())
        throw std::invalid_argument(std::string(what) +
                                    " image row has the wrong length");
      std::vector<std::pair<int, int>> z(dom.size());
      for (size_t i = 0; i < dom.size(); ++i) z[i] = {dom[i], img[i]};
      std::sort(z.begin(), z.end());
      Hom f;
      f.dom.reserve(z.size());
      f.img.reserve(z.size());
      for (auto& [d, m] : z) {
        if (!f.dom.empty() && f.dom.back() == d)
          throw std::invalid_argument(std::string(what) +
                                      " lists a domain element twice");
        f.dom.push_back(d);
        f.img.push_back(m);
      }
      out.push_back(std::move(f));
    }
  }
  return out;
}

// generating family read back off a closed system: the full automorphism
// group of every subgroup, plus one isomorphism from the least member of each
// conjugacy class to every other member; closure restores all hom sets
inline std::vector<Hom> fusion_generating_homs(const FusionSystem& F) {
  std::vector<Hom> gens;
  size_t ns = F.subs.size();
  for (size_t i = 0; i < ns; ++i) {
    const std::vector<Hom>& au = F.auts(int(i));
    if (au.size() > 1) gens.insert(gens.end(), au.begin(), au.end());
  }
  std::vector<char> seen(ns, 0);
  for (size_t i = 0; i < ns; ++i) {
    int root = F.find_sub(int(i));
    if (seen[size_t(root)]) continue;
    seen[size_t(root)] = 1;
    std::vector<int> members = F.sub_class(int(i));
    std::sort(members.begin(), members.end());
    int hub = members.front();
    for (int m : members)
      if (m != hub) gens.push_back(F.isos(hub, m).front());
  }
  return gens;
}

} // namespace detail

// ---- fusion systems ----

inline json fusion_to_json(
    const FusionSystem& F,
    const std::optional<TruncationSpec>& ambient = std::nullopt) {
  json j;
  j["schema"] = "fusionkit-fusion-v1";
  j["name"] = F.name;
  j["p"] = F.p;
  if (ambient) {
    json a = truncation_to_json(*ambient);
    a["kind"] = "truncation";
    j["ambient"] = std::move(a);
  } else {
    json a;
    a["kind"] = "table";
    a["universe"] = group_to_json(F.U);
    j["ambient"] = std::move(a);
  }
  j["sylow"] = F.S;
  j["sylow_order"] = F.S.size();
  j["inner"] = detail::hom_blocks_to_json(F.innt);
  j["generators"] =
      detail::hom_blocks_to_json(detail::fusion_generating_homs(F));
  return j;
}

// parsed fusion data before closure; the presentation is carried along when
// the ambient group came from a truncation spec so callers keep the named
// elements and the level structure
struct FusionSource {
  FusionSeed seed;
  std::optional<TruncationSpec> truncation;
  std::optional<PToral> presentation;
};

inline FusionSource fusion_source_from_json(const json& j) {
  if (j.contains("schema") &&
      j["schema"].get<std::string>() != "fusionkit-fusion-v1")
    throw std::invalid_argument("unsupported fusion schema: " +
                                j["schema"].get<std::string>());
  FusionSource src;
  src.seed.name = j.value("name", std::string("fusion"));
  src.seed.p =
      int(detail::json_int(detail::need(j, "p", "fusion system"), "p"));
  const json& amb = detail::need(j, "ambient", "fusion system");
  std::string kind =
      detail::need(amb, "kind", "ambient").get<std::string>();
  if (kind == "truncation") {
    src.truncation = truncation_from_json(amb);
    src.presentation = make_truncation(*src.truncation);
    src.seed.U = src.presentation->group;
  } else if (kind == "table") {
    src.seed.U = group_from_json(detail::need(amb, "universe", "ambient"));
  } else {
    throw std::invalid_argument("unknown ambient kind: " + kind);
  }
  if (j.contains("sylow")) {
    src.seed.S = detail::json_ids(j["sylow"], "sylow");
    std::sort(src.seed.S.begin(), src.seed.S.end());
    src.seed.S.erase(std::unique(src.seed.S.begin(), src.seed.S.end()),
                     src.seed.S.end());
  } else {
    src.seed.S = whole_group(src.seed.U);
  }
  for (int v : src.seed.S)
    if (v < 0 || v >= src.seed.U.n)
      throw std::invalid_argument("sylow element out of range");
  if (closure(src.seed.U, src.seed.S) != src.seed.S)
    throw std::invalid_argument("sylow set is not a subgroup");
  if (j.contains("inner"))
    src.seed.innt_gens =
        detail::hom_blocks_from_json(j["inner"], "inner block");
  if (j.contains("generators"))
    src.seed.gens =
        detail::hom_blocks_from_json(j["generators"], "generator block");
  return src;
}

inline FusionSystem fusion_from_json(const json& j) {
  return close_fusion(fusion_source_from_json(j).seed);
}

// ---- reports ----

inline json witness_to_json(const SaturationWitness& w) {
  json j;
  j["kind"] = w.kind;
  j["subgroup"] = w.subgroup;
  if (w.morphism) {
    json m;
    m["domain"] = w.morphism->dom;
    m["images"] = w.morphism->img;
    j["morphism"] = std::move(m);
  }
  if (!w.detail.empty()) j["detail"] = w.detail;
  return j;
}

inline SaturationWitness witness_from_json(const json& j) {
  SaturationWitness w;
  w.kind = detail::need(j, "kind", "witness").get<std::string>();
  w.subgroup = detail::json_ids(detail::need(j, "subgroup", "witness"),
                                "witness subgroup");
  if (j.contains("morphism")) {
    const json& m = j["morphism"];
    Hom f;
    f.dom = detail::json_ids(detail::need(m, "domain", "witness morphism"),
                             "witness morphism");
    f.img = detail::json_ids(detail::need(m, "images", "witness morphism"),
                             "witness morphism");
    if (f.dom.size() != f.img.size())
      throw std::invalid_argument("witness morphism images have wrong length");
    w.morphism = std::move(f);
  }
  w.detail = j.value("detail", std::string());
  return w;
}

inline json axiom_result_to_json(const AxiomResult& a) {
  json j;
  j["tag"] = a.tag;
  j["pass"] = a.pass;
  if (!a.note.empty()) j["note"] = a.note;
  if (!a.witnesses.empty()) j["witness"] = witness_to_json(a.witnesses.front());
  return j;
}

inline json saturation_report_to_json(const SaturationReport& r) {
  json j;
  j["system"] = r.system;
  j["verdict"] = r.verdict;
  json ax = json::array();
  for (const AxiomResult& a : r.axioms) ax.push_back(axiom_result_to_json(a));
  j["axioms"] = std::move(ax);
  j["millis"] = r.millis;
  return j;
}

inline json transporter_report_to_json(const TransporterReport& r) {
  json j;
  j["category"] = r.category;
  j["verdict"] = r.verdict;
  json ax = json::array();
  for (const AxiomResult& a : r.axioms) ax.push_back(axiom_result_to_json(a));
  j["axioms"] = std::move(ax);
  j["millis"] = r.millis;
  return j;
}

inline json extension_report_to_json(const ExtensionReport& r) {
  json j;
  j["extension"] = r.extension;
  j["valid"] = r.valid;
  j["admissible"] = r.admissible;
  json cs = json::array();
  for (const AxiomResult& c : r.conditions)
    cs.push_back(axiom_result_to_json(c));
  j["conditions"] = std::move(cs);
  j["millis"] = r.millis;
  return j;
}

// ---- transporter categories ----

inline json transporter_to_json(const TransporterData& T) {
  json j;
  j["schema"] = "fusionkit-transporter-v1";
  j["name"] = T.name;
  j["p"] = T.F.p;
  j["universe"] = group_to_json(T.F.U);
  j["sylow"] = T.F.S;
  json fus;
  fus["name"] = T.F.name;
  fus["inner"] = detail::hom_blocks_to_json(T.F.innt);
  fus["generators"] =
      detail::hom_blocks_to_json(detail::fusion_generating_homs(T.F));
  j["fusion"] = std::move(fus);
  j["objects"] = T.objects;

  std::vector<int> sub_of(T.objects.size());
  for (size_t k = 0; k < T.objects.size(); ++k)
    sub_of[k] = T.F.index_of(T.objects[k]);
  std::map<std::pair<int, int>, std::vector<Hom>> hom_cache;
  auto homs_between = [&](int i, int k) -> const std::vector<Hom>& {
    auto key = std::make_pair(i, k);
    auto it = hom_cache.find(key);
    if (it == hom_cache.end())
      it = hom_cache.emplace(key, T.F.hom_set(sub_of[size_t(i)],
                                              sub_of[size_t(k)]))
               .first;
    return it->second;
  };
  json mor = json::array();
  for (const TransporterMor& m : T.mors) {
    const std::vector<Hom>& hs = homs_between(m.src, m.dst);
    auto it = std::lower_bound(hs.begin(), hs.end(), m.rho);
    if (it == hs.end() || !(*it == m.rho))
      throw std::runtime_error(
          "morphism projects outside the fusion system");
    json e;
    e["source"] = m.src;
    e["target"] = m.dst;
    e["rho"] = int(it - hs.begin());
    if (m.eps) e["eps_preimage"] = *m.eps;
    mor.push_back(std::move(e));
  }
  j["morphisms"] = std::move(mor);

  json comps = json::array();
  for (const auto& [key, c] : T.comp)
    comps.push_back(json::array({key.second, key.first, c}));
  j["composition"] = std::move(comps);
  return j;
}

inline TransporterData transporter_from_json(const json& j) {
  if (j.contains("schema") &&
      j["schema"].get<std::string>() != "fusionkit-transporter-v1")
    throw std::invalid_argument("unsupported transporter schema: " +
                                j["schema"].get<std::string>());
  TransporterData T;
  T.name = j.value("name", std::string("transporter"));
  FusionSeed seed;
  seed.U = group_from_json(detail::need(j, "universe", "transporter"));
  seed.p =
      int(detail::json_int(detail::need(j, "p", "transporter"), "p"));
  seed.S = detail::json_ids(detail::need(j, "sylow", "transporter"), "sylow");
  std::sort(seed.S.begin(), seed.S.end());
  seed.S.erase(std::unique(seed.S.begin(), seed.S.end()), seed.S.end());
  const json& fus = detail::need(j, "fusion", "transporter");
  seed.name = fus.value("name", T.name + "-fusion");
  if (fus.contains("inner"))
    seed.innt_gens = detail::hom_blocks_from_json(fus["inner"], "inner block");
  if (fus.contains("generators"))
    seed.gens =
        detail::hom_blocks_from_json(fus["generators"], "generator block");
  T.F = close_fusion(seed);

  for (const auto& o : detail::need(j, "objects", "transporter")) {
    Elems P = detail::json_ids(o, "transporter object");
    std::sort(P.begin(), P.end());
    T.objects.push_back(std::move(P));
  }
  std::vector<int> sub_of(T.objects.size());
  for (size_t k = 0; k < T.objects.size(); ++k)
    sub_of[k] = T.F.index_of(T.objects[k]);
  std::map<std::pair<int, int>, std::vector<Hom>> hom_cache;

  for (const auto& e : detail::need(j, "morphisms", "transporter")) {
    TransporterMor m;
    m.src = int(detail::json_int(detail::need(e, "source", "morphism"),
                                 "morphism source"));
    m.dst = int(detail::json_int(detail::need(e, "target", "morphism"),
                                 "morphism target"));
    if (m.src < 0 || m.src >= int(T.objects.size()) || m.dst < 0 ||
        m.dst >= int(T.objects.size()))
      throw std::invalid_argument("morphism endpoints out of range");
    auto key = std::make_pair(m.src, m.dst);
    auto it = hom_cache.find(key);
    if (it == hom_cache.end())
      it = hom_cache.emplace(key, T.F.hom_set(sub_of[size_t(m.src)],
                                              sub_of[size_t(m.dst)]))
               .first;
    const std::vector<Hom>& hs = it->second;
    long k = detail::json_int(detail::need(e, "rho", "morphism"), "rho index");
    if (k < 0 || k >= long(hs.size()))
      throw std::invalid_argument("rho index out of range");
    m.rho = hs[size_t(k)];
    if (e.contains("eps_preimage"))
      m.eps = int(detail::json_int(e["eps_preimage"], "eps preimage"));
    T.mors.push_back(std::move(m));
  }

  long nm = long(T.mors.size());
  for (const auto& t : detail::need(j, "composition", "transporter")) {
    if (!t.is_array() || t.size() != 3)
      throw std::invalid_argument(
          "composition entry is not [first, after, composite]");
    long a = detail::json_int(t[0], "composition label");
    long b = detail::json_int(t[1], "composition label");
    long c = detail::json_int(t[2], "composition label");
    if (a < 0 || a >= nm || b < 0 || b >= nm || c < 0 || c >= nm)
      throw std::invalid_argument("composition entry out of range");
    T.comp[{int(b), int(a)}] = int(c);
  }
  return T;
}

// ---- extensions ----

inline json extension_to_json(const ExtensionData& X) {
  json j;
  j["schema"] = "fusionkit-extension-v1";
  j["name"] = X.name;
  j["base"] = transporter_to_json(X.base);
  j["total"] = transporter_to_json(X.total);
  j["tau"] = X.tau;
  j["kernel"] = X.kernel;
  return j;
}

inline ExtensionData extension_from_json(const json& j) {
  if (j.contains("schema") &&
      j["schema"].get<std::string>() != "fusionkit-extension-v1")
    throw std::invalid_argument("unsupported extension schema: " +
                                j["schema"].get<std::string>());
  ExtensionData X;
  X.name = j.value("name", std::string("extension"));
  X.base = transporter_from_json(detail::need(j, "base", "extension"));
  X.total = transporter_from_json(detail::need(j, "total", "extension"));
  X.tau = detail::json_ids(detail::need(j, "tau", "extension"), "tau");
  X.kernel =
      detail::json_ids(detail::need(j, "kernel", "extension"), "kernel");
  std::sort(X.kernel.begin(), X.kernel.end());
  return X;
}

// ---- files ----

// the canonical byte form: compact dump plus one trailing newline
inline std::string json_text(const json& j) { return j.dump() + "\n"; }

inline json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
  }
  return j;
}

inline void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << json_text(j);
  if (!out) throw std::runtime_error("failed writing file: " + path);
}

} // namespace fusionkit
