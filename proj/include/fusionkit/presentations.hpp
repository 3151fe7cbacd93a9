#pragma once

// Stock truncation presentations: the dihedral and quaternion 2-groups that
// truncate the rank-one torus with its inversion action, the bare torus, the
// rank-two presentation at p = 3 whose complement acts with an order-three
// integer matrix of determinant one, and direct products.  Each builder also
// names the standard elements so the CLI can refer to them.

#include <string>

#include "ptoral.hpp"

namespace fusionkit {

// (Z/2^l) : Z/2 with inversion; the dihedral group of order 2^{l+1}
inline TruncationSpec dihedral_spec(int level) {
  TruncationSpec s;
  s.p = 2;
  s.rank = 1;
  s.level = level;
  s.complement = {"cyclic", {2}};
  s.gen_action = {{-1}};
  return s;
}

// same action with the extension twisted by c(w,w) = 2^{l-1}; the
// generalized quaternion group of order 2^{l+1}
inline TruncationSpec quaternion_spec(int level) {
  TruncationSpec s = dihedral_spec(level);
  long half = 1;
  for (int i = 1; i < level; ++i) half *= 2;
  s.cocycle[{1, 1}] = {half};
  return s;
}

// the bare truncated torus Z/p^l
inline TruncationSpec circle_spec(int p, int level) {
  TruncationSpec s;
  s.p = p;
  s.rank = 1;
  s.level = level;
  s.complement = {"trivial", {}};
  return s;
}

// (Z/3^l)^2 : Z/3, the complement generator acting by [[-2,3],[-1,1]],
// an integer matrix of order three and determinant one whose fixed
// subgroup on the truncated torus is generated by (0, 3^{l-1})
inline TruncationSpec exotic_spec(int level) {
  TruncationSpec s;
  s.p = 3;
  s.rank = 2;
  s.level = level;
  s.complement = {"cyclic", {3}};
  s.gen_action = {{-2, 3, -1, 1}};
  return s;
}

// direct product; factors must share the prime and the level
inline TruncationSpec product_spec(const TruncationSpec& a, const TruncationSpec& b) {
  if (a.p != b.p) throw std::runtime_error("product factors have different primes");
  if (a.level != b.level) throw std::runtime_error("product factors have different levels");
  TruncationSpec s;
  s.p = a.p;
  s.rank = a.rank + b.rank;
  s.level = a.level;
  std::vector<int> orders;
  for (const TruncationSpec* f : {&a, &b}) {
    if (f->complement.kind == "cyclic" || f->complement.kind == "abelian")
      for (int o : f->complement.orders) orders.push_back(o);
    else if (f->complement.kind != "trivial")
      throw std::runtime_error("unsupported complement kind in product");
  }
  s.complement = orders.empty() ? ComplementSpec{"trivial", {}}
                                : ComplementSpec{"abelian", orders};
  auto block = [&](const IntMat& m, int r, bool first) {
    IntMat e(size_t(s.rank) * s.rank, 0);
    for (int i = 0; i < s.rank; ++i) e[size_t(i) * s.rank + i] = 1;
    int off = first ? 0 : a.rank;
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j)
        e[size_t(off + i) * s.rank + (off + j)] = m[size_t(i) * r + j];
    return e;
  };
  for (const auto& m : a.gen_action) s.gen_action.push_back(block(m, a.rank, true));
  for (const auto& m : b.gen_action) s.gen_action.push_back(block(m, b.rank, false));
  // complement ids in the concatenated packing: the first factor occupies
  // the high digits, so w = w1 * |pi_b| + w2
  Group pia = detail::complement_group(a.complement);
  Group pib = detail::complement_group(b.complement);
  auto pad = [&](const IntVec* va, const IntVec* vb) {
    IntVec v(size_t(s.rank), 0);
    if (va) for (int i = 0; i < a.rank; ++i) v[size_t(i)] = (*va)[size_t(i)];
    if (vb) for (int i = 0; i < b.rank; ++i) v[size_t(a.rank + i)] = (*vb)[size_t(i)];
    return v;
  };
  for (int w1 = 0; w1 < pia.n; ++w1)
    for (int u1 = 0; u1 < pia.n; ++u1) {
      auto ita = a.cocycle.find({w1, u1});
      const IntVec* va = ita == a.cocycle.end() ? nullptr : &ita->second;
      for (int w2 = 0; w2 < pib.n; ++w2)
        for (int u2 = 0; u2 < pib.n; ++u2) {
          auto itb = b.cocycle.find({w2, u2});
          const IntVec* vb = itb == b.cocycle.end() ? nullptr : &itb->second;
          if (!va && !vb) continue;
          s.cocycle[{w1 * pib.n + w2, u1 * pib.n + u2}] = pad(va, vb);
        }
    }
  return s;
}

// torus element of order p^k in coordinate `coord` (the standard layering
// t_k = p^{l-k} e_coord), named t1, t2, ... in rank one
inline int layered_torus_element(const PToral& P, int coord, int k) {
  long v = P.M;
  for (int i = 0; i < k; ++i) v /= P.spec.p;
  IntVec t(size_t(P.spec.rank), 0);
  t[size_t(coord)] = v;
  return P.encode(t, 0);
}

inline PToral make_dihedral(int level) {
  PToral P = make_truncation(dihedral_spec(level));
  P.group.name = "dihedral-2^" + std::to_string(level + 1);
  P.named["s"] = P.encode({1}, 0);
  P.named["x"] = P.encode({0}, 1);
  for (int k = 1; k <= level; ++k)
    P.named["t" + std::to_string(k)] = layered_torus_element(P, 0, k);
  return P;
}

inline PToral make_quaternion(int level) {
  PToral P = make_truncation(quaternion_spec(level));
  P.group.name = "quaternion-2^" + std::to_string(level + 1);
  P.named["s"] = P.encode({1}, 0);
  P.named["y"] = P.encode({0}, 1);
  for (int k = 1; k <= level; ++k)
    P.named["t" + std::to_string(k)] = layered_torus_element(P, 0, k);
  return P;
}

inline PToral make_circle(int p, int level) {
  PToral P = make_truncation(circle_spec(p, level));
  P.group.name = "torus-" + std::to_string(p) + "^" + std::to_string(level);
  P.named["s"] = P.encode({1}, 0);
  for (int k = 1; k <= level; ++k)
    P.named["t" + std::to_string(k)] = layered_torus_element(P, 0, k);
  return P;
}

inline PToral make_exotic(int level) {
  PToral P = make_truncation(exotic_spec(level));
  P.group.name = "exotic-3^" + std::to_string(level);
  P.named["u"] = P.encode({1, 0}, 0);
  P.named["v"] = P.encode({0, 1}, 0);
  P.named["u1"] = layered_torus_element(P, 0, 1);
  P.named["v1"] = layered_torus_element(P, 1, 1);
  P.named["x"] = P.encode({0, 0}, 1);
  return P;
}

// binary octahedral group of order 48, realized as the normalizer of a
// quaternion subgroup of SL2(F17) and re-indexed as a standalone table; the
// double cover of the octahedral group whose Sylow 2-subgroup is the
// generalized quaternion group of order 16
inline Group binary_octahedral_group() {
  MatGroup m = sl2_group(17);
  int i4 = m.id_of(Mat2{4, 0, 0, 13});  // diag(4, 4^{-1}), squares to -I
  int rot = m.id_of(Mat2{0, 1, 16, 0}); // the standard symplectic rotation
  Elems q8 = closure(m.group, Elems{i4, rot});
  Elems n = normalizer_in(m.group, whole_group(m.group), q8);
  Group g = quotient_group(m.group, n, trivial_subgroup(), "2O").group;
  if (g.n != 48)
    throw std::runtime_error("binary octahedral construction broke");
  return g;
}

} // namespace fusionkit
