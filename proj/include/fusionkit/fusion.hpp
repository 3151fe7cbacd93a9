#pragma once

// Fusion systems on a finite p-group S sitting inside an ambient universe
// group U (usually U = S; for conjugation families U is the big group).
// Morphisms are stored extensionally as isomorphisms onto their image, one
// sorted bucket per ordered pair of subgroups; Hom(P,Q) is the union of the
// iso buckets into subgroups of Q.  A system is built either directly from
// conjugation in U or by closing a generating set of morphisms under
// inversion, restriction to subgroups, and composition at exact endpoints.
//
// Each system carries its truncated-inner automizer: the subgroup of Aut(S)
// realized by conjugation inside the one-level-deeper truncation (inner
// automorphisms plus the deeper-torus shifts).  Saturation tests measure
// Sylow conditions against it; for fusion systems of honest finite groups it
// degenerates to Inn(S) and the tests reduce to the classical definitions.

#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "budget.hpp"
#include "hom.hpp"
#include "smallgroup.hpp"
#include "subgroups.hpp"

namespace fusionkit {

class FusionSystem {
public:
  std::string name;
  Group U;   // ambient universe
  Elems S;   // the Sylow subgroup, as a subset of U
  int p = 2;

  std::vector<Elems> subs;           // every subgroup of S, (size, lex) order
  std::map<Elems, int> sub_index;
  std::vector<std::vector<char>> contained_in; // [i][j]: subs[i] <= subs[j]
  std::vector<Hom> innt;             // truncated-inner automizer, all elements

  // iso[i * subs.size() + j]: isomorphisms subs[i] -> subs[j], sorted
  std::vector<std::vector<Hom>> iso;

  int index_of(const Elems& P) const {
    auto it = sub_index.find(P);
    if (it == sub_index.end())
      throw std::runtime_error("not a subgroup of the Sylow: " + name);
    return it->second;
  }

  const std::vector<Hom>& isos(int i, int j) const {
    return iso[size_t(i) * subs.size() + j];
  }

  const std::vector<Hom>& auts(int i) const { return isos(i, i); }

  // morphisms P -> Q: isos onto any subgroup of Q, viewed as maps into Q
  std::vector<Hom> hom_set(int i, int j) const {
    std::vector<Hom> out;
    for (size_t k = 0; k < subs.size(); ++k)
      if (contained_in[k][size_t(j)])
        for (const Hom& f : isos(i, int(k))) out.push_back(f);
    std::sort(out.begin(), out.end());
    return out;
  }

  long hom_count(int i, int j) const {
    long c = 0;
    for (size_t k = 0; k < subs.size(); ++k)
      if (contained_in[k][size_t(j)]) c += long(isos(i, int(k)).size());
    return c;
  }

  // ---- conjugacy bookkeeping (filled by finalize) ----

  std::vector<int> sub_parent;   // union-find over subgroup indices
  std::vector<int> elem_parent;  // union-find over positions in S

  int find_sub(int i) const {
    while (sub_parent[size_t(i)] != i) i = sub_parent[size_t(i)];
    return i;
  }

  int pos_of(int x) const {
    auto it = std::lower_bound(S.begin(), S.end(), x);
    if (it == S.end() || *it != x)
      throw std::runtime_error("element outside the Sylow");
    return int(it - S.begin());
  }

  int find_elem_pos(int pos) const {
    while (elem_parent[size_t(pos)] != pos) pos = elem_parent[size_t(pos)];
    return pos;
  }

  bool conjugate_subs(int i, int j) const { return find_sub(i) == find_sub(j); }

  bool conjugate_elems(int x, int y) const {
    return find_elem_pos(pos_of(x)) == find_elem_pos(pos_of(y));
  }

  std::vector<int> sub_class(int i) const {
    std::vector<int> out;
    int r = find_sub(i);
    for (size_t j = 0; j < subs.size(); ++j)
      if (find_sub(int(j)) == r) out.push_back(int(j));
    return out;
  }

  Elems elem_class(int x) const {
    Elems out;
    int r = find_elem_pos(pos_of(x));
    for (size_t k = 0; k < S.size(); ++k)
      if (find_elem_pos(int(k)) == r) out.push_back(S[k]);
    return out;
  }

  // ---- local subgroup data ----

  Elems normalizer(int i) const { return normalizer_in(U, S, subs[size_t(i)]); }
  Elems centralizer(int i) const { return centralizer_in(U, S, subs[size_t(i)]); }

  bool fully_normalized(int i) const {
    size_t n = normalizer(i).size();
    for (int j : sub_class(i))
      if (normalizer(j).size() > n) return false;
    return true;
  }

  bool fully_centralized(int i) const {
    size_t c = centralizer(i).size();
    for (int j : sub_class(i))
      if (centralizer(j).size() > c) return false;
    return true;
  }

  // conjugation morphisms P -> Q from elements of S
  std::vector<Hom> aut_s(int i) const {
    std::vector<Hom> out;
    const Elems& P = subs[size_t(i)];
    for (int g : normalizer(i)) out.push_back(conj_hom(U, g, P));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  std::vector<Hom> inn(int i) const {
    std::vector<Hom> out;
    const Elems& P = subs[size_t(i)];
    for (int g : P) out.push_back(conj_hom(U, g, P));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  // restrictions of the truncated-inner automizer that stabilize P
  std::vector<Hom> aut_innt(int i) const {
    std::vector<Hom> out;
    const Elems& P = subs[size_t(i)];
    for (const Hom& f : innt) {
      Hom r = restrict_hom(f, P);
      if (image_of(r) == P) out.push_back(std::move(r));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  void finalize() {
    size_t ns = subs.size();
    sub_parent.resize(ns);
    std::iota(sub_parent.begin(), sub_parent.end(), 0);
    elem_parent.resize(S.size());
    std::iota(elem_parent.begin(), elem_parent.end(), 0);
    auto unite_sub = [&](int a, int b) {
      a = find_sub(a); b = find_sub(b);
      if (a != b) sub_parent[size_t(std::max(a, b))] = std::min(a, b);
    };
    auto unite_elem = [&](int a, int b) {
      a = find_elem_pos(a); b = find_elem_pos(b);
      if (a != b) elem_parent[size_t(std::max(a, b))] = std::min(a, b);
    };
    for (size_t i = 0; i < ns; ++i)
      for (size_t j = 0; j < ns; ++j)
        for (const Hom& f : iso[i * ns + j]) {
          unite_sub(int(i), int(j));
          for (size_t k = 0; k < f.dom.size(); ++k)
            unite_elem(pos_of(f.dom[k]), pos_of(f.img[k]));
        }
  }

  long iso_total() const {
    long c = 0;
    for (const auto& bucket : iso) c += long(bucket.size());
    return c;
  }
};

// ---- construction ----

struct FusionSeed {
  std::string name;
  Group U;
  Elems S;
  int p = 2;
  std::vector<Hom> innt_gens; // automorphisms of S; Inn(S) is added implicitly
  std::vector<Hom> gens;      // extra generating morphisms between subgroups
};

namespace detail {

// closure of a set of automorphisms of S under composition
inline std::vector<Hom> close_automorphism_set(const Group& U, const Elems& S,
                                               std::vector<Hom> gens) {
  Hom id = identity_hom(S);
  std::set<Hom> elems{id};
  std::deque<Hom> work{id};
  for (Hom& g : gens) {
    if (g.dom != S || image_of(g) != S)
      throw std::runtime_error("automizer generator is not an automorphism of S");
    if (elems.insert(g).second) work.push_back(g);
  }
  std::vector<Hom> gen_list(elems.begin(), elems.end());
  while (!work.empty()) {
    Hom f = work.front();
    work.pop_front();
    for (const Hom& g : gen_list) {
      Hom h = compose(g, f);
      if (elems.insert(h).second) work.push_back(h);
      Hom h2 = compose(f, g);
      if (elems.insert(h2).second) work.push_back(h2);
    }
    require_budget("automizer closure", long(elems.size()), 1 << 20);
  }
  (void)U;
  return {elems.begin(), elems.end()};
}

} // namespace detail

// fusion system of the ambient group: every morphism is conjugation by an
// element of U; the truncated-inner automizer degenerates to Inn(S)
inline FusionSystem fusion_of_group(const Group& U, const Elems& S, int p,
                                    const std::string& name) {
  FusionSystem F;
  F.name = name;
  F.U = U;
  F.S = S;
  F.p = p;
  F.subs = enumerate_subgroups(U, S);
  size_t ns = F.subs.size();
  F.sub_index.clear();
  for (size_t i = 0; i < ns; ++i) F.sub_index[F.subs[i]] = int(i);
  F.contained_in.assign(ns, std::vector<char>(ns, 0));
  for (size_t i = 0; i < ns; ++i)
    for (size_t j = 0; j < ns; ++j)
      F.contained_in[i][j] = subset_of(F.subs[i], F.subs[j]) ? 1 : 0;

  F.iso.assign(ns * ns, {});
  std::vector<std::set<Hom>> buckets(ns * ns);
  for (int g = 0; g < U.n; ++g)
    for (size_t i = 0; i < ns; ++i) {
      Elems img = conj_subgroup(U, g, F.subs[i]);
      auto it = F.sub_index.find(img);
      if (it == F.sub_index.end()) continue; // lands outside S
      buckets[i * ns + size_t(it->second)].insert(conj_hom(U, g, F.subs[i]));
    }
  for (size_t k = 0; k < ns * ns; ++k)
    F.iso[k].assign(buckets[k].begin(), buckets[k].end());

  std::vector<Hom> inn_gens;
  for (int s : S) inn_gens.push_back(conj_hom(U, s, S));
  F.innt = detail::close_automorphism_set(U, S, inn_gens);
  F.finalize();
  return F;
}

// per-subgroup automizer maps realized by conjugation in U: for every
// subgroup R of S, the automorphisms of R induced by its normalizer in U.
// By the Alperin fusion theorem these generate the full conjugation fusion
// system back under close_fusion; the equivalence is part of the test suite.
inline std::vector<Hom> harvest_conjugation_automizers(const Group& U,
                                                       const Elems& S) {
  std::set<Hom> out;
  for (const Elems& R : enumerate_subgroups(U, S)) {
    if (R.size() <= 1) continue;
    for (int g : normalizer_in(U, whole_group(U), R)) out.insert(conj_hom(U, g, R));
  }
  return {out.begin(), out.end()};
}

// close a generating set of morphisms under inversion, restriction to every
// subgroup of the domain, and composition at exact endpoints
inline FusionSystem close_fusion(const FusionSeed& seed) {
  FusionSystem F;
  F.name = seed.name;
  F.U = seed.U;
  F.S = seed.S;
  F.p = seed.p;
  F.subs = enumerate_subgroups(F.U, F.S);
  size_t ns = F.subs.size();
  for (size_t i = 0; i < ns; ++i) F.sub_index[F.subs[i]] = int(i);
  F.contained_in.assign(ns, std::vector<char>(ns, 0));
  for (size_t i = 0; i < ns; ++i)
    for (size_t j = 0; j < ns; ++j)
      F.contained_in[i][j] = subset_of(F.subs[i], F.subs[j]) ? 1 : 0;

  std::vector<Hom> inn_gens;
  for (int s : F.S) inn_gens.push_back(conj_hom(F.U, s, F.S));
  for (const Hom& g : seed.innt_gens) inn_gens.push_back(g);
  F.innt = detail::close_automorphism_set(F.U, F.S, inn_gens);

  std::vector<std::set<Hom>> buckets(ns * ns);
  std::deque<std::pair<std::pair<int, int>, Hom>> work;
  long total = 0;
  auto push = [&](int i, int j, Hom h) {
    if (buckets[size_t(i) * ns + size_t(j)].insert(h).second) {
      ++total;
      require_budget("fusion closure morphisms", total, budget().morphism_count);
      work.push_back({{i, j}, std::move(h)});
    }
  };

  // seeds: the automizer restricted everywhere, then the extra generators
  for (const Hom& f : F.innt)
    for (size_t i = 0; i < ns; ++i) {
      Hom r = restrict_hom(f, F.subs[i]);
      Elems img = image_of(r);
      auto it = F.sub_index.find(img);
      if (it == F.sub_index.end())
        throw std::runtime_error("automizer does not preserve the Sylow");
      push(int(i), it->second, std::move(r));
    }
  for (const Hom& g : seed.gens) {
    auto di = F.sub_index.find(g.dom);
    if (di == F.sub_index.end())
      throw std::runtime_error("generator domain is not a subgroup of the Sylow");
    if (!is_injective_hom(F.U, g))
      throw std::runtime_error("generator is not an injective homomorphism");
    Elems img = image_of(g);
    auto ii = F.sub_index.find(img);
    if (ii == F.sub_index.end())
      throw std::runtime_error("generator image is not a subgroup of the Sylow");
    push(di->second, ii->second, g);
  }

  while (!work.empty()) {
    auto [pair_ij, f] = work.front();
    work.pop_front();
    auto [i, j] = pair_ij;
    push(j, i, inverse_hom(f));
    for (size_t k = 0; k < ns; ++k)
      if (int(k) != i && F.contained_in[k][size_t(i)]) {
        Hom r = restrict_hom(f, F.subs[k]);
        int ri = F.index_of(image_of(r)); // before the move below
        push(int(k), ri, std::move(r));
      }
    for (size_t k = 0; k < ns; ++k) {
      for (const Hom& g : buckets[size_t(j) * ns + k])
        push(i, int(k), compose(g, f));
      for (const Hom& g : buckets[k * ns + size_t(i)])
        push(int(k), j, compose(f, g));
    }
  }

  F.iso.assign(ns * ns, {});
  for (size_t k = 0; k < ns * ns; ++k)
    F.iso[k].assign(buckets[k].begin(), buckets[k].end());
  F.finalize();
  return F;
}

} // namespace fusionkit
