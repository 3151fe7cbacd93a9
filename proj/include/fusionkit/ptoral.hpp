#pragma once

// Truncated discrete p-toral groups: extensions of a finite p-group pi by a
// torus (Z/p^l)^r, given by an action matrix per pi generator and a
// normalized 2-cocycle.  Multiplication is the twisted product
//   (t1,w1)(t2,w2) = (t1 + phi(w1) t2 + c(w1,w2), w1 w2).
// Element ids pack the torus vector and the complement part:
//   id = w * M^r + sum_i t_i * M^i  with  M = p^level.
//
// The action matrices and cocycle values are kept as raw integers so the
// same data defines the group at level l+1: matrices unchanged, cocycle
// multiplied by p.  That compatibility is what makes the canonical embedding
// (t,w) -> (p t, w) into the next level a homomorphism, and it is the source
// of the "deeper torus" automorphisms harvested by delta_shift_automorphisms.

#include <cassert>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "budget.hpp"
#include "hom.hpp"
#include "smallgroup.hpp"
#include "subgroups.hpp"

namespace fusionkit {

using IntMat = std::vector<long>; // r x r row-major, raw integers
using IntVec = std::vector<long>; // length r, raw integers

struct ComplementSpec {
  std::string kind = "trivial"; // trivial | cyclic | abelian
  std::vector<int> orders;      // cyclic: one entry; abelian: one per factor
};

struct TruncationSpec {
  int p = 2;
  int rank = 0;
  int level = 1;
  ComplementSpec complement;
  std::vector<IntMat> gen_action; // one integer matrix per complement generator
  // sparse cocycle: (w1, w2) -> integer vector; missing = zero
  std::map<std::pair<int, int>, IntVec> cocycle;
};

namespace detail {

inline long mod_reduce(long v, long m) {
  long r = v % m;
  return r < 0 ? r + m : r;
}

inline IntMat mat_mul_mod(const IntMat& A, const IntMat& B, int r, long m) {
  IntMat C(size_t(r) * r, 0);
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < r; ++k) {
      long a = A[size_t(i) * r + k];
      if (!a) continue;
      for (int j = 0; j < r; ++j)
        C[size_t(i) * r + j] =
            mod_reduce(C[size_t(i) * r + j] + a * B[size_t(k) * r + j], m);
    }
  return C;
}

inline IntVec mat_vec_mod(const IntMat& A, const IntVec& t, int r, long m) {
  IntVec v(r, 0);
  for (int i = 0; i < r; ++i) {
    long acc = 0;
    for (int j = 0; j < r; ++j)
      acc += mod_reduce(A[size_t(i) * r + j], m) * t[j] % m;
    v[i] = mod_reduce(acc, m);
  }
  return v;
}

inline Group complement_group(const ComplementSpec& cs) {
  if (cs.kind == "trivial") return Group();
  if (cs.kind == "cyclic") return cyclic_group(cs.orders.at(0));
  if (cs.kind == "abelian") {
    Group g;
    bool first = true;
    for (int o : cs.orders) {
      g = first ? cyclic_group(o) : product_group(g, cyclic_group(o));
      first = false;
    }
    return g;
  }
  throw std::runtime_error("unknown complement kind: " + cs.kind);
}

// generator element ids of the complement group, matching gen_action order
inline std::vector<int> complement_generators(const ComplementSpec& cs) {
  if (cs.kind == "trivial") return {};
  if (cs.kind == "cyclic") return {1};
  if (cs.kind == "abelian") {
    // generator of factor k has a single 1 in coordinate k under the
    // product_group id packing (left factor in the high digits)
    std::vector<int> gens;
    int low = 1;
    std::vector<int> weights(cs.orders.size());
    for (int i = int(cs.orders.size()) - 1; i >= 0; --i) {
      weights[size_t(i)] = low;
      low *= cs.orders[size_t(i)];
    }
    for (size_t i = 0; i < cs.orders.size(); ++i)
      gens.push_back(weights[i]);
    return gens;
  }
  throw std::runtime_error("unknown complement kind: " + cs.kind);
}

} // namespace detail

class PToral {
public:
  TruncationSpec spec;
  Group group;                  // the truncated group itself
  Group pi;                     // the complement
  long M = 1;                   // p^level
  long Mr = 1;                  // M^rank
  std::vector<IntMat> phi;      // action matrix per pi element, reduced mod M
  std::vector<IntVec> cocycle;  // dense |pi|^2 table, reduced mod M
  std::map<std::string, int> named; // named elements for the CLI

  int encode(const IntVec& t, int w) const {
    long id = w;
    for (int i = spec.rank - 1; i >= 0; --i)
      id = id * M + detail::mod_reduce(t[size_t(i)], M);
    return int(id);
  }

  std::pair<IntVec, int> decode(int id) const {
    IntVec t(size_t(spec.rank), 0);
    long v = id;
    for (int i = 0; i < spec.rank; ++i) {
      t[size_t(i)] = v % M;
      v /= M;
    }
    return {t, int(v)};
  }

  Elems torus() const {
    Elems r;
    r.reserve(size_t(Mr));
    for (long t = 0; t < Mr; ++t) r.push_back(int(t));
    return r;
  }

  int order() const { return group.n; }
};

inline void validate_spec(const TruncationSpec& s) {
  auto is_prime = [](int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
      if (p % d == 0) return false;
    return true;
  };
  if (!is_prime(s.p)) throw std::runtime_error("p is not prime");
  if (s.rank < 0) throw std::runtime_error("negative rank");
  if (s.level < 1) throw std::runtime_error("level must be >= 1");
  Group pi = detail::complement_group(s.complement);
  long npi = pi.n;
  while (npi % s.p == 0) npi /= s.p;
  if (npi != 1) throw std::runtime_error("complement order is not a power of p");
  auto gens = detail::complement_generators(s.complement);
  if (gens.size() != s.gen_action.size())
    throw std::runtime_error("need one action matrix per complement generator");
  for (const auto& m : s.gen_action)
    if (int(m.size()) != s.rank * s.rank)
      throw std::runtime_error("action matrix has wrong shape");
}

inline PToral make_truncation(const TruncationSpec& s) {
  validate_spec(s);
  PToral P;
  P.spec = s;
  P.pi = detail::complement_group(s.complement);
  P.M = 1;
  for (int i = 0; i < s.level; ++i) P.M *= s.p;
  P.Mr = 1;
  for (int i = 0; i < s.rank; ++i) P.Mr *= P.M;
  long n = P.Mr * P.pi.n;
  require_budget("truncated group order", n, budget().group_order * 16L);

  // expand phi from generator matrices to all of pi by breadth-first word
  // products; conflicting values mean the action is not a homomorphism
  int r = s.rank;
  IntMat id_mat(size_t(r) * r, 0);
  for (int i = 0; i < r; ++i) id_mat[size_t(i) * r + i] = 1;
  P.phi.assign(size_t(P.pi.n), IntMat());
  P.phi[0] = id_mat;
  auto gens = detail::complement_generators(s.complement);
  std::vector<int> frontier{0};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int w : frontier)
      for (size_t gi = 0; gi < gens.size(); ++gi) {
        int w2 = P.pi.mul(w, gens[gi]);
        IntMat m = detail::mat_mul_mod(P.phi[size_t(w)], s.gen_action[gi], r, P.M);
        if (P.phi[size_t(w2)].empty()) {
          P.phi[size_t(w2)] = std::move(m);
          next.push_back(w2);
        } else if (P.phi[size_t(w2)] != m) {
          throw std::runtime_error("action is not a homomorphism");
        }
      }
    frontier = std::move(next);
  }
  for (int w = 0; w < P.pi.n; ++w) {
    if (P.phi[size_t(w)].empty())
      throw std::runtime_error("complement generators do not generate pi");
    // verify homomorphism on all pairs
  }
  for (int w1 = 0; w1 < P.pi.n; ++w1)
    for (int w2 = 0; w2 < P.pi.n; ++w2) {
      IntMat m = detail::mat_mul_mod(P.phi[size_t(w1)], P.phi[size_t(w2)], r, P.M);
      if (m != P.phi[size_t(P.pi.mul(w1, w2))])
        throw std::runtime_error("action is not a homomorphism");
    }

  // dense reduced cocycle
  P.cocycle.assign(size_t(P.pi.n) * P.pi.n, IntVec(size_t(r), 0));
  for (const auto& [key, val] : s.cocycle) {
    auto [w1, w2] = key;
    if (w1 < 0 || w1 >= P.pi.n || w2 < 0 || w2 >= P.pi.n)
      throw std::runtime_error("cocycle index out of range");
    if (int(val.size()) != r) throw std::runtime_error("cocycle value shape");
    IntVec v(size_t(r), 0);
    for (int i = 0; i < r; ++i) v[size_t(i)] = detail::mod_reduce(val[size_t(i)], P.M);
    P.cocycle[size_t(w1) * P.pi.n + w2] = std::move(v);
  }
  auto coc = [&](int w1, int w2) -> const IntVec& {
    return P.cocycle[size_t(w1) * P.pi.n + w2];
  };
  // normalization and the 2-cocycle identity (equivalently: associativity)
  for (int w = 0; w < P.pi.n; ++w) {
    for (int i = 0; i < r; ++i)
      if (coc(0, w)[size_t(i)] != 0 || coc(w, 0)[size_t(i)] != 0)
        throw std::runtime_error("cocycle is not normalized");
  }
  for (int w1 = 0; w1 < P.pi.n; ++w1)
    for (int w2 = 0; w2 < P.pi.n; ++w2)
      for (int w3 = 0; w3 < P.pi.n; ++w3) {
        IntVec lhs = detail::mat_vec_mod(P.phi[size_t(w1)], coc(w2, w3), r, P.M);
        const IntVec& a = coc(P.pi.mul(w1, w2), w3);
        const IntVec& b = coc(w1, P.pi.mul(w2, w3));
        const IntVec& c = coc(w1, w2);
        for (int i = 0; i < r; ++i) {
          long v = detail::mod_reduce(
              lhs[size_t(i)] - a[size_t(i)] + b[size_t(i)] - c[size_t(i)], P.M);
          if (v != 0) throw std::runtime_error("2-cocycle identity fails");
        }
      }

  // the group law
  long M = P.M, Mr = P.Mr;
  int rank = r;
  int npi = P.pi.n;
  auto phi = P.phi;       // copies captured by the closure
  auto cocy = P.cocycle;
  Group pi_copy = P.pi;
  auto mul = [M, Mr, rank, npi, phi, cocy, pi_copy](int a, int b) -> int {
    long ta = a % Mr, wa = a / Mr, tb = b % Mr, wb = b / Mr;
    const IntMat& A = phi[size_t(wa)];
    const IntVec& c = cocy[size_t(wa) * npi + wb];
    long id = pi_copy.mul(int(wa), int(wb));
    long out = 0, pw = 1;
    long tbv = tb, tav = ta;
    for (int i = 0; i < rank; ++i) {
      long ti = tav % M;
      tav /= M;
      // row i of A times the torus vector of b
      long acc = ti + c[size_t(i)];
      long tb2 = tbv;
      for (int j = 0; j < rank; ++j) {
        long bj = tb2 % M;
        tb2 /= M;
        acc += A[size_t(i) * rank + j] % M * bj;
      }
      out += detail::mod_reduce(acc, M) * pw;
      pw *= M;
    }
    return int(id * Mr + out);
  };
  P.group = Group::from_fn(int(n), mul, "ptoral");
  return P;
}

// same data one level deeper: matrices unchanged, cocycle scaled by p
inline TruncationSpec level_lift(const TruncationSpec& s) {
  TruncationSpec t = s;
  t.level = s.level + 1;
  for (auto& [key, val] : t.cocycle)
    for (auto& v : val) v *= s.p;
  return t;
}

// the canonical embedding (t,w) -> (p t, w) into the lifted group
inline std::vector<int> iota_embedding(const PToral& low, const PToral& high) {
  assert(high.spec.level == low.spec.level + 1);
  std::vector<int> map(size_t(low.group.n));
  for (int a = 0; a < low.group.n; ++a) {
    auto [t, w] = low.decode(a);
    IntVec t2(t.size());
    for (size_t i = 0; i < t.size(); ++i) t2[i] = t[i] * low.spec.p;
    map[size_t(a)] = high.encode(t2, w);
  }
  return map;
}

// Automorphisms of the level-l group induced by conjugation with torus
// elements of the level-(l+1) group: conjugation by sigma sends (t,w) to
// (t + d(w), w) with d(w) = (1 - phi(w)) sigma computed at level l+1.  The
// ones whose shifts land in the embedded copy of the level-l group descend
// to automorphisms of it.  Includes conjugation by level-l torus elements,
// so the result always contains those inner automorphisms.
inline std::vector<Hom> delta_shift_automorphisms(const PToral& P) {
  long M1 = P.M * P.spec.p;
  int r = P.spec.rank;
  // phi at the lifted level, from the same integer matrices
  std::vector<IntMat> phi_up(size_t(P.pi.n));
  {
    IntMat id_mat(size_t(r) * r, 0);
    for (int i = 0; i < r; ++i) id_mat[size_t(i) * r + i] = 1;
    phi_up[0] = id_mat;
    auto gens = detail::complement_generators(P.spec.complement);
    std::vector<int> frontier{0};
    while (!frontier.empty()) {
      std::vector<int> next;
      for (int w : frontier)
        for (size_t gi = 0; gi < gens.size(); ++gi) {
          int w2 = P.pi.mul(w, gens[gi]);
          IntMat m = detail::mat_mul_mod(phi_up[size_t(w)],
                                         P.spec.gen_action[gi], r, M1);
          if (phi_up[size_t(w2)].empty()) {
            phi_up[size_t(w2)] = std::move(m);
            next.push_back(w2);
          }
        }
      frontier = std::move(next);
    }
  }
  std::set<std::vector<long>> seen; // the shift tables d(w)/p
  std::vector<Hom> out;
  long count = 1;
  for (int i = 0; i < r; ++i) count *= M1;
  Elems everyone = whole_group(P.group);
  for (long code = 0; code < count; ++code) {
    // sigma from the code digits
    IntVec sigma(size_t(r), 0);
    long v = code;
    for (int i = 0; i < r; ++i) { sigma[size_t(i)] = v % M1; v /= M1; }
    std::vector<long> shifts; // concatenated d(w)/p per w
    bool ok = true;
    for (int w = 0; w < P.pi.n && ok; ++w) {
      // d = (1 - phi_up(w)) sigma  mod M1
      IntVec ps = detail::mat_vec_mod(phi_up[size_t(w)], sigma, r, M1);
      for (int i = 0; i < r; ++i) {
        long d = detail::mod_reduce(sigma[size_t(i)] - ps[size_t(i)], M1);
        if (d % P.spec.p) { ok = false; break; }
        shifts.push_back(d / P.spec.p);
      }
    }
    if (!ok) continue;
    if (!seen.insert(shifts).second) continue;
    Hom f;
    f.dom = everyone;
    f.img.reserve(everyone.size());
    for (int a : everyone) {
      auto [t, w] = P.decode(a);
      IntVec t2(t.size());
      for (int i = 0; i < r; ++i)
        t2[size_t(i)] = detail::mod_reduce(t[size_t(i)] + shifts[size_t(w) * r + i], P.M);
      f.img.push_back(P.encode(t2, w));
    }
    out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace fusionkit
