#pragma once

// Subgroup computations over a fixed ambient Group.  A subgroup is a sorted
// vector of element ids; sortedness is an invariant everywhere so set
// operations and deterministic ordering come for free.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "budget.hpp"
#include "smallgroup.hpp"

namespace fusionkit {

using Elems = std::vector<int>; // sorted element ids

inline bool contains(const Elems& a, int x) {
  return std::binary_search(a.begin(), a.end(), x);
}

inline bool subset_of(const Elems& a, const Elems& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline Elems intersect(const Elems& a, const Elems& b) {
  Elems r;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(r));
  return r;
}

inline Elems closure(const Group& G, const Elems& gens) {
  std::set<int> elems{0};
  std::vector<int> frontier{0};
  std::vector<int> gen_list(gens.begin(), gens.end());
  for (int g : gens)
    if (elems.insert(g).second) frontier.push_back(g);
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int e : frontier)
      for (int g : gen_list) {
        int p = G.mul(e, g);
        if (elems.insert(p).second) next.push_back(p);
        int q = G.mul(g, e);
        if (elems.insert(q).second) next.push_back(q);
      }
    frontier = std::move(next);
  }
  return Elems(elems.begin(), elems.end());
}

inline Elems whole_group(const Group& G) {
  Elems r(G.n);
  for (int i = 0; i < G.n; ++i) r[i] = i;
  return r;
}

inline Elems trivial_subgroup() { return Elems{0}; }

inline Elems conj_subgroup(const Group& G, int g, const Elems& P) {
  Elems r;
  r.reserve(P.size());
  for (int x : P) r.push_back(G.conj(g, x));
  std::sort(r.begin(), r.end());
  return r;
}

// normalizer of P inside the subgroup A
inline Elems normalizer_in(const Group& G, const Elems& A, const Elems& P) {
  Elems r;
  for (int a : A) {
    bool ok = true;
    for (int x : P)
      if (!contains(P, G.conj(a, x))) { ok = false; break; }
    if (ok) r.push_back(a);
  }
  return r;
}

// centralizer of P inside the subgroup A
inline Elems centralizer_in(const Group& G, const Elems& A, const Elems& P) {
  Elems r;
  for (int a : A) {
    bool ok = true;
    for (int x : P)
      if (G.mul(a, x) != G.mul(x, a)) { ok = false; break; }
    if (ok) r.push_back(a);
  }
  return r;
}

inline Elems center_of(const Group& G, const Elems& P) {
  return centralizer_in(G, P, P);
}

inline bool is_subgroup(const Group& G, const Elems& P) {
  if (P.empty() || P[0] != 0) return false;
  for (int a : P)
    for (int b : P)
      if (!contains(P, G.mul(a, b))) return false;
  return true;
}

inline bool is_normal_in(const Group& G, const Elems& A, const Elems& P) {
  // P normal in A (assumes P subset of A)
  for (int a : A)
    for (int x : P)
      if (!contains(P, G.conj(a, x))) return false;
  return true;
}

inline Elems product_set(const Group& G, const Elems& A, const Elems& B) {
  // the set AB; a subgroup when one factor normalizes the other
  std::set<int> r;
  for (int a : A)
    for (int b : B) r.insert(G.mul(a, b));
  return Elems(r.begin(), r.end());
}

// all subgroups of A, deduplicated, sorted by (order, elements).
// Seeds are the cyclic subgroups; saturation joins known subgroups with
// seeds until no new subgroup appears.  Exact for finite groups.
inline std::vector<Elems> enumerate_subgroups(const Group& G, const Elems& A) {
  require_budget("subgroup enumeration group order", long(A.size()),
                 budget().group_order);
  std::set<Elems> cyclic;
  for (int a : A) cyclic.insert(closure(G, {a}));
  std::set<Elems> subs(cyclic.begin(), cyclic.end());
  subs.insert(trivial_subgroup());
  std::vector<Elems> frontier(subs.begin(), subs.end());
  while (!frontier.empty()) {
    std::vector<Elems> next;
    for (const auto& H : frontier)
      for (const auto& C : cyclic) {
        if (subset_of(C, H)) continue;
        Elems gens = H;
        gens.insert(gens.end(), C.begin(), C.end());
        std::sort(gens.begin(), gens.end());
        gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
        Elems J = closure(G, gens);
        if (J.size() > A.size()) continue; // escaped A: impossible if A is a group
        if (!subset_of(J, A)) continue;
        if (subs.insert(J).second) {
          next.push_back(J);
          require_budget("subgroup count", long(subs.size()),
                         budget().subgroup_count);
        }
      }
    frontier = std::move(next);
  }
  std::vector<Elems> out(subs.begin(), subs.end());
  std::sort(out.begin(), out.end(), [](const Elems& x, const Elems& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
  });
  return out;
}

inline int p_part(long n, int p) {
  int v = 1;
  while (n % p == 0) { n /= p; v *= p; }
  return v;
}

// a Sylow p-subgroup of the subgroup A, grown by normalizer steps
inline Elems sylow_subgroup(const Group& G, const Elems& A, int p) {
  long target = p_part(long(A.size()), p);
  Elems P = trivial_subgroup();
  while (long(P.size()) < target) {
    Elems N = normalizer_in(G, A, P);
    bool grew = false;
    for (int a : N) {
      if (contains(P, a)) continue;
      int o = G.order(a);
      bool ppow = true;
      for (int t = o; t > 1;) {
        if (t % p) { ppow = false; break; }
        t /= p;
      }
      if (!ppow) continue;
      Elems gens = P;
      gens.push_back(a);
      std::sort(gens.begin(), gens.end());
      Elems J = closure(G, gens);
      long jp = p_part(long(J.size()), p);
      if (jp == long(J.size()) && long(J.size()) > long(P.size())) {
        P = J;
        grew = true;
        break;
      }
    }
    if (!grew)
      throw std::runtime_error("sylow growth stalled (non-group input?)");
  }
  return P;
}

// largest normal p-subgroup: intersection of the Sylow p-subgroup's
// conjugates
inline Elems p_core(const Group& G, const Elems& A, int p) {
  Elems P = sylow_subgroup(G, A, p);
  Elems core = P;
  for (int a : A) {
    if (core.size() == 1) break;
    core = intersect(core, conj_subgroup(G, a, P));
  }
  // the intersection of all conjugates of a Sylow is normal and contains
  // every normal p-subgroup
  return core;
}

// subgroup generated by all elements of order prime to p
inline Elems pprime_generated(const Group& G, const Elems& A, int p) {
  Elems gens;
  for (int a : A)
    if (G.order(a) % p != 0) gens.push_back(a);
  return closure(G, gens);
}

inline std::vector<int> elements_of_order(const Group& G, const Elems& A,
                                          int k) {
  std::vector<int> r;
  for (int a : A)
    if (G.order(a) == k) r.push_back(a);
  return r;
}

// quotient group A/N with cosets named by their minimal element; returns the
// group plus the id-of-coset map for elements of A
struct QuotientResult {
  Group group;
  std::vector<int> coset_of;   // indexed by position in A
  Elems amb;                   // copy of A
  std::vector<Elems> cosets;   // cosets[i] sorted, i = quotient element id
};

inline QuotientResult quotient_group(const Group& G, const Elems& A,
                                     const Elems& N, const std::string& name) {
  std::map<int, int> coset_rep; // element -> min element of its coset
  std::map<int, Elems> coset_elems;
  for (int a : A) {
    if (coset_rep.count(a)) continue;
    Elems coset;
    for (int x : N) coset.push_back(G.mul(a, x));
    std::sort(coset.begin(), coset.end());
    for (int y : coset) coset_rep[y] = coset[0];
    coset_elems[coset[0]] = coset;
  }
  std::vector<int> reps;
  for (auto& [rep, elems] : coset_elems) reps.push_back(rep);
  std::sort(reps.begin(), reps.end()); // rep 0 (identity coset) comes first
  std::map<int, int> rep_id;
  for (size_t i = 0; i < reps.size(); ++i) rep_id[reps[i]] = int(i);
  int n = int(reps.size());
  std::vector<int> table(size_t(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      table[size_t(i) * n + j] = rep_id.at(coset_rep.at(G.mul(reps[i], reps[j])));
  QuotientResult qr;
  qr.group = Group::from_table(n, std::move(table), name);
  qr.amb = A;
  qr.coset_of.resize(A.size());
  for (size_t i = 0; i < A.size(); ++i)
    qr.coset_of[i] = rep_id.at(coset_rep.at(A[i]));
  qr.cosets.resize(n);
  for (auto& [rep, elems] : coset_elems) qr.cosets[rep_id.at(rep)] = elems;
  return qr;
}

// re-table a subgroup as a standalone Group; ids follow the sorted order of
// P, so the identity keeps id 0
struct SubgroupGroup {
  Group group;
  Elems amb; // amb[i] = ambient id of local id i
  std::map<int, int> local; // ambient id -> local id
};

inline SubgroupGroup subgroup_as_group(const Group& G, const Elems& P,
                                       const std::string& name) {
  SubgroupGroup sg;
  sg.amb = P;
  for (size_t i = 0; i < P.size(); ++i) sg.local[P[i]] = int(i);
  int n = int(P.size());
  std::vector<int> table(size_t(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      table[size_t(i) * n + j] = sg.local.at(G.mul(P[i], P[j]));
  sg.group = Group::from_table(n, std::move(table), name);
  return sg;
}

} // namespace fusionkit
