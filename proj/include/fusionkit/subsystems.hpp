#pragma once

// Subsystems and constructions derived from a fusion system: K-normalizers
// (centralizers and normalizers as the two standard cases), quotients by a
// strongly closed subgroup, and direct products.  All of them produce plain
// FusionSystem values that share the parent universe (or a quotient/product
// of it), so every analysis that runs on a system runs on them unchanged.
//
// Truncated-inner automizers descend by restriction: the automizer of a
// derived system is generated by its own inner automorphisms together with
// the restrictions of parent automizer elements that stabilize the new Sylow
// and act on it by morphisms the subsystem actually contains.

#include <set>

#include "fusion.hpp"

namespace fusionkit {

namespace detail {

inline void index_subgroups(FusionSystem& F) {
  size_t ns = F.subs.size();
  F.sub_index.clear();
  for (size_t i = 0; i < ns; ++i) F.sub_index[F.subs[i]] = int(i);
  F.contained_in.assign(ns, std::vector<char>(ns, 0));
  for (size_t i = 0; i < ns; ++i)
    for (size_t j = 0; j < ns; ++j)
      F.contained_in[i][j] = subset_of(F.subs[i], F.subs[j]) ? 1 : 0;
}

// automizer for a derived system with Sylow R: inner automorphisms plus the
// parent automizer elements that stabilize R and restrict into own_auts
inline std::vector<Hom> descend_automizer(const FusionSystem& parent,
                                          const Elems& R,
                                          const std::vector<Hom>& own_auts) {
  std::vector<Hom> gens;
  for (int g : R) gens.push_back(conj_hom(parent.U, g, R));
  for (const Hom& f : parent.innt) {
    Hom r = restrict_hom(f, R);
    if (image_of(r) != R) continue;
    if (!std::binary_search(own_auts.begin(), own_auts.end(), r)) continue;
    gens.push_back(std::move(r));
  }
  return close_automorphism_set(parent.U, R, std::move(gens));
}

} // namespace detail

// N_F^K(A): the subsystem on N_S^K(A) = {g in N_S(A) : c_g|A in K} whose
// morphisms are restrictions of F-morphisms that extend over A with the
// A-part lying in K.  K must be a subgroup of Aut_F(A).
inline FusionSystem k_normalizer_subsystem(const FusionSystem& F,
                                           const Elems& A,
                                           std::vector<Hom> K,
                                           const std::string& label) {
  int iA = F.index_of(A);
  std::sort(K.begin(), K.end());
  K.erase(std::unique(K.begin(), K.end()), K.end());
  const std::vector<Hom>& autA = F.auts(iA);
  for (const Hom& k : K)
    if (!std::binary_search(autA.begin(), autA.end(), k))
      throw PreconditionError("K is not contained in the F-automorphisms of A");
  for (const Hom& k : K) {
    if (!std::binary_search(K.begin(), K.end(), inverse_hom(k)))
      throw PreconditionError("K is not a subgroup of Aut_F(A)");
    for (const Hom& k2 : K)
      if (!std::binary_search(K.begin(), K.end(), compose(k, k2)))
        throw PreconditionError("K is not a subgroup of Aut_F(A)");
  }

  FusionSystem E;
  E.name = F.name + "|" + label;
  E.U = F.U;
  E.p = F.p;
  Elems ns_a = normalizer_in(F.U, F.S, A);
  E.S.clear();
  for (int g : ns_a)
    if (std::binary_search(K.begin(), K.end(), conj_hom(F.U, g, A)))
      E.S.push_back(g);
  // N_S^K(A) is a group: closed under products since K is
  if (!is_subgroup(F.U, E.S))
    throw std::runtime_error("K-normalizer is not a subgroup");
  E.subs = enumerate_subgroups(E.U, E.S);
  detail::index_subgroups(E);

  size_t ns = E.subs.size();
  std::vector<std::set<Hom>> buckets(ns * ns);
  for (size_t i = 0; i < ns; ++i) {
    const Elems& P = E.subs[i];
    Elems PA = P;
    PA.insert(PA.end(), A.begin(), A.end());
    std::sort(PA.begin(), PA.end());
    PA.erase(std::unique(PA.begin(), PA.end()), PA.end());
    PA = closure(F.U, PA);
    int iPA = F.index_of(PA);
    for (size_t k = 0; k < F.subs.size(); ++k)
      for (const Hom& g : F.isos(iPA, int(k))) {
        // need g(A) = A with the A-part in K
        Elems gA;
        gA.reserve(A.size());
        for (int a : A) gA.push_back(apply(g, a));
        std::sort(gA.begin(), gA.end());
        if (gA != A) continue;
        if (!std::binary_search(K.begin(), K.end(), restrict_hom(g, A)))
          continue;
        Hom r = restrict_hom(g, P);
        int j = E.index_of(image_of(r)); // lands in N_S^K(A) automatically
        buckets[i * ns + size_t(j)].insert(std::move(r));
      }
  }
  E.iso.assign(ns * ns, {});
  for (size_t k = 0; k < ns * ns; ++k)
    E.iso[k].assign(buckets[k].begin(), buckets[k].end());
  int iS = E.index_of(E.S);
  E.innt = detail::descend_automizer(F, E.S, E.auts(iS));
  E.finalize();
  return E;
}

inline FusionSystem normalizer_subsystem(const FusionSystem& F, const Elems& A) {
  return k_normalizer_subsystem(F, A, F.auts(F.index_of(A)), "N");
}

inline FusionSystem centralizer_subsystem(const FusionSystem& F, const Elems& A) {
  return k_normalizer_subsystem(F, A, {identity_hom(A)}, "C");
}

inline FusionSystem centralizer_subsystem(const FusionSystem& F, int x) {
  return k_normalizer_subsystem(F, closure(F.U, {x}), {identity_hom(closure(F.U, {x}))}, "C");
}

// ---- quotient by a strongly closed subgroup ----

inline bool is_strongly_closed(const FusionSystem& F, const Elems& N) {
  for (int a : N)
    for (int b : F.elem_class(a))
      if (!contains(N, b)) return false;
  return true;
}

struct QuotientFusion {
  FusionSystem system;
  QuotientResult onto; // the underlying group quotient, for element tracing
};

inline QuotientFusion quotient_fusion(const FusionSystem& F, const Elems& N) {
  if (int(F.S.size()) != F.U.n)
    throw PreconditionError("quotient requires the Sylow to be the whole universe");
  F.index_of(N); // must be a subgroup
  if (!is_normal_in(F.U, N, F.S))
    throw PreconditionError("quotient kernel is not normal in the Sylow");
  if (!is_strongly_closed(F, N))
    throw PreconditionError("quotient kernel is not strongly closed");

  QuotientFusion out{FusionSystem{}, quotient_group(F.U, F.S, N, F.name + "-quot")};
  FusionSystem& E = out.system;
  const QuotientResult& qr = out.onto;
  E.name = F.name + "/N";
  E.U = qr.group;
  E.S = whole_group(E.U);
  E.p = F.p;
  E.subs = enumerate_subgroups(E.U, E.S);
  detail::index_subgroups(E);

  int iN = F.index_of(N);
  size_t ns = E.subs.size();
  std::vector<std::set<Hom>> buckets(ns * ns);
  auto project_sub = [&](const Elems& P) {
    Elems out_p;
    for (int x : P) out_p.push_back(qr.coset_of[size_t(x)]);
    std::sort(out_p.begin(), out_p.end());
    out_p.erase(std::unique(out_p.begin(), out_p.end()), out_p.end());
    return out_p;
  };
  for (size_t i = 0; i < F.subs.size(); ++i) {
    if (!F.contained_in[size_t(iN)][i]) continue; // need N <= P
    for (size_t j = 0; j < F.subs.size(); ++j)
      for (const Hom& g : F.isos(int(i), int(j))) {
        // g(N) = N because N is strongly closed, so g descends
        Elems dom_q = project_sub(g.dom);
        Hom h;
        h.dom = dom_q;
        h.img.assign(dom_q.size(), -1);
        for (size_t k = 0; k < g.dom.size(); ++k) {
          int dq = qr.coset_of[size_t(g.dom[k])];
          int iq = qr.coset_of[size_t(g.img[k])];
          size_t pos = size_t(std::lower_bound(dom_q.begin(), dom_q.end(), dq) -
                              dom_q.begin());
          h.img[pos] = iq;
        }
        buckets[size_t(E.index_of(dom_q)) * ns + size_t(E.index_of(image_of(h)))]
            .insert(std::move(h));
      }
  }
  E.iso.assign(ns * ns, {});
  for (size_t k = 0; k < ns * ns; ++k)
    E.iso[k].assign(buckets[k].begin(), buckets[k].end());

  // automizer elements all stabilize a strongly closed subgroup, so each one
  // descends to the quotient
  std::vector<Hom> innt_gens;
  for (const Hom& f : F.innt) {
    Hom h;
    h.dom = E.S;
    h.img.assign(E.S.size(), -1);
    std::vector<char> seen(E.S.size(), 0);
    for (size_t k = 0; k < f.dom.size(); ++k) {
      int dq = qr.coset_of[size_t(f.dom[k])];
      int iq = qr.coset_of[size_t(f.img[k])];
      h.img[size_t(dq)] = iq;
      seen[size_t(dq)] = 1;
    }
    for (char s : seen)
      if (!s) throw std::runtime_error("automizer did not cover the quotient");
    innt_gens.push_back(std::move(h));
  }
  E.innt = detail::close_automorphism_set(E.U, E.S, std::move(innt_gens));
  E.finalize();
  return out;
}

// ---- direct product ----

namespace detail {

inline Hom product_hom(const Hom& f1, const Hom& f2, int n2) {
  Hom h;
  for (size_t a = 0; a < f1.dom.size(); ++a)
    for (size_t b = 0; b < f2.dom.size(); ++b)
      h.dom.push_back(f1.dom[a] * n2 + f2.dom[b]);
  std::sort(h.dom.begin(), h.dom.end());
  h.img.assign(h.dom.size(), -1);
  for (size_t a = 0; a < f1.dom.size(); ++a)
    for (size_t b = 0; b < f2.dom.size(); ++b) {
      int x = f1.dom[a] * n2 + f2.dom[b];
      int y = f1.img[a] * n2 + f2.img[b];
      size_t pos = size_t(std::lower_bound(h.dom.begin(), h.dom.end(), x) -
                          h.dom.begin());
      h.img[pos] = y;
    }
  return h;
}

} // namespace detail

inline FusionSystem product_fusion(const FusionSystem& F1,
                                   const FusionSystem& F2) {
  if (F1.p != F2.p)
    throw PreconditionError("product factors have different primes");
  if (int(F1.S.size()) != F1.U.n || int(F2.S.size()) != F2.U.n)
    throw PreconditionError("product requires full-universe factors");
  FusionSystem E;
  E.name = F1.name + "x" + F2.name;
  E.U = product_group(F1.U, F2.U);
  E.S = whole_group(E.U);
  E.p = F1.p;
  E.subs = enumerate_subgroups(E.U, E.S);
  detail::index_subgroups(E);

  int n2 = F2.U.n;
  size_t ns = E.subs.size();
  std::vector<std::set<Hom>> buckets(ns * ns);
  for (size_t i = 0; i < ns; ++i) {
    const Elems& P = E.subs[i];
    Elems A1, A2;
    for (int x : P) {
      A1.push_back(x / n2);
      A2.push_back(x % n2);
    }
    std::sort(A1.begin(), A1.end());
    A1.erase(std::unique(A1.begin(), A1.end()), A1.end());
    std::sort(A2.begin(), A2.end());
    A2.erase(std::unique(A2.begin(), A2.end()), A2.end());
    int i1 = F1.index_of(A1), i2 = F2.index_of(A2);
    for (size_t k1 = 0; k1 < F1.subs.size(); ++k1)
      for (const Hom& f1 : F1.isos(i1, int(k1)))
        for (size_t k2 = 0; k2 < F2.subs.size(); ++k2)
          for (const Hom& f2 : F2.isos(i2, int(k2))) {
            Hom full = detail::product_hom(f1, f2, n2);
            Hom r = restrict_hom(full, P);
            buckets[i * ns + size_t(E.index_of(image_of(r)))].insert(std::move(r));
          }
  }
  E.iso.assign(ns * ns, {});
  for (size_t k = 0; k < ns * ns; ++k)
    E.iso[k].assign(buckets[k].begin(), buckets[k].end());

  std::vector<Hom> innt_gens;
  for (const Hom& f1 : F1.innt)
    for (const Hom& f2 : F2.innt)
      innt_gens.push_back(detail::product_hom(f1, f2, n2));
  E.innt = detail::close_automorphism_set(E.U, E.S, std::move(innt_gens));
  E.finalize();
  return E;
}

} // namespace fusionkit
