#pragma once

// Named example systems. Each builder assembles a fusion system from its
// presentation, closes it, and re-verifies a table of expected invariants on
// every build, so the catalog doubles as a self-testing fixture set. Entry
// names are parsed rather than looked up, which makes the name grammar the
// parameter surface: "so3:l=4" builds the level-4 dihedral system even
// though only "so3:l=3" appears in the canonical listing.

#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "fusionkit/fusion.hpp"
#include "fusionkit/presentations.hpp"
#include "fusionkit/subsystems.hpp"

namespace fusionkit {

struct ExpectedCheck {
  std::string label;
  long expected = 0;
  long actual = 0;
  bool ok() const { return expected == actual; }
};

struct CatalogEntry {
  std::string name;    // canonical addressable name, e.g. "so3:l=3"
  std::string summary; // one line for the listing
  FusionSystem system;
  std::map<std::string, int> named;  // element names usable on the CLI
  std::vector<ExpectedCheck> expected;
  std::optional<PToral> presentation; // present for the p-toral entries
};

namespace detail {

inline void expect(CatalogEntry& e, const std::string& label, long expected,
                   long actual) {
  e.expected.push_back({label, expected, actual});
}

inline void verify_expected(const CatalogEntry& e) {
  std::string bad;
  for (const auto& c : e.expected)
    if (!c.ok())
      bad += "  " + c.label + ": expected " + std::to_string(c.expected) +
             ", got " + std::to_string(c.actual) + "\n";
  if (!bad.empty())
    throw std::logic_error("catalog entry " + e.name +
                           " failed its invariant table:\n" + bad);
}

inline bool small_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline long pow_mod(long b, long e, long m) {
  long r = 1 % m;
  b %= m;
  if (b < 0) b += m;
  while (e > 0) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

inline long inv_mod(long a, long m) {
  long t = 0, nt = 1, r = m, nr = a % m;
  if (nr < 0) nr += m;
  while (nr != 0) {
    long q = r / nr;
    long tmp = t - q * nt; t = nt; nt = tmp;
    tmp = r - q * nr; r = nr; nr = tmp;
  }
  if (r != 1) throw std::runtime_error("element not invertible");
  return t < 0 ? t + m : t;
}

// square root of a unit mod p^level (p odd), Newton-lifted from a root mod p
inline long hensel_sqrt(long c, int p, int level) {
  long m = 1;
  for (int i = 0; i < level; ++i) m *= p;
  c %= m;
  if (c < 0) c += m;
  long r = -1;
  for (long x = 0; x < p; ++x)
    if ((x * x - c) % p == 0) { r = x; break; }
  if (r < 0) throw std::runtime_error("not a quadratic residue");
  long mk = p;
  for (int i = 1; i < level; ++i) {
    mk *= p;
    long num = (r * r - c) % mk;
    if (num < 0) num += mk;
    r = (r - num % mk * inv_mod(2 * r % mk, mk)) % mk;
    if (r < 0) r += mk;
  }
  if ((r * r - c) % m != 0) throw std::logic_error("square root lift failed");
  return r;
}

inline Mat2 mat2_reduce(long a, long b, long c, long d, int m) {
  auto r = [m](long v) { v %= m; return int(v < 0 ? v + m : v); };
  return Mat2{r(a), r(b), r(c), r(d)};
}

inline Mat2 mat2_inverse(const Mat2& x, int m) {
  long det = (long(x.a) * x.d - long(x.b) * x.c) % m;
  long di = inv_mod(det < 0 ? det + m : det, m);
  return mat2_reduce(di * x.d, -di * x.b, -di * x.c, di * x.a, m);
}

inline Mat2 mat2_conj(const Mat2& h, const Mat2& x, int m) {
  return mat2_mul(mat2_mul(h, x, m), mat2_inverse(h, m), m);
}

inline Mat2 mat2_pow(Mat2 x, int e, int m) {
  Mat2 r{1, 0, 0, 1};
  while (e > 0) {
    if (e & 1) r = mat2_mul(r, x, m);
    x = mat2_mul(x, x, m);
    e >>= 1;
  }
  return r;
}

// The order-48 automizer of the rank-2 torus at truncation level l. The
// group is a copy of GL_2(3) inside GL_2(Z/3^l); the visible generator
// matrices close to order 48 only mod 3 (the natural lift of the swap/shear
// pair picks up a unit of infinite multiplicative order), so the lift is
// built from the quaternion presentation Q_8 : Sym_3 instead:
//   i = [[0,-1],[1,0]],  j = [[a,1],[1,-a]] with a^2 = -2,
//   w = (-1+i+j+ij)/2 of order 3,  g = lambda*(i+j) with lambda^2 = -1/2,
// then the whole group is conjugated so that w becomes the x-action matrix.
// Uniqueness up to conjugacy makes any such realization canonical.
inline MatGroup exotic_gamma(int level) {
  int m = 1;
  for (int k = 0; k < level; ++k) m *= 3;
  Mat2 A = mat2_reduce(-2, 3, -1, 1, m);
  Mat2 I{1, 0, 0, 1};
  Mat2 mi = mat2_reduce(0, -1, 1, 0, m);
  long a = hensel_sqrt(-2, 3, level);
  Mat2 mj = mat2_reduce(a, 1, 1, -a, m);
  Mat2 mk = mat2_mul(mi, mj, m);
  long half = inv_mod(2, m);
  Mat2 w = mat2_reduce(half * (-1 + mi.a + mj.a + mk.a),
                       half * (mi.b + mj.b + mk.b),
                       half * (mi.c + mj.c + mk.c),
                       half * (-1 + mi.d + mj.d + mk.d), m);
  long lam = hensel_sqrt(-half, 3, level);
  Mat2 g = mat2_reduce(lam * (mi.a + mj.a), lam * (mi.b + mj.b),
                       lam * (mi.c + mj.c), lam * (mi.d + mj.d), m);
  if (!(mat2_pow(mi, 2, m) == mat2_reduce(-1, 0, 0, -1, m)) ||
      !(mat2_pow(mj, 2, m) == mat2_reduce(-1, 0, 0, -1, m)) ||
      !(mat2_pow(w, 3, m) == I) || mat2_pow(w, 1, m) == I ||
      !(mat2_pow(g, 2, m) == I) || g == I)
    throw std::logic_error("quaternion generators are off");

  // conjugate w to the x-action matrix via a cyclic-vector change of basis
  auto column_basis = [&](const Mat2& x) {
    const int seeds[4][2] = {{1, 0}, {0, 1}, {1, 1}, {1, 2}};
    for (auto& s : seeds) {
      Mat2 p = mat2_reduce(s[0], long(x.a) * s[0] + long(x.b) * s[1],
                           s[1], long(x.c) * s[0] + long(x.d) * s[1], m);
      long det = (long(p.a) * p.d - long(p.b) * p.c) % m;
      if (det % 3 != 0) return p;
    }
    throw std::logic_error("no cyclic vector");
  };
  Mat2 p1 = column_basis(w);
  Mat2 p2 = column_basis(A);
  Mat2 h = mat2_mul(p2, mat2_inverse(p1, m), m);
  if (!(mat2_conj(h, w, m) == A))
    throw std::logic_error("basis transport missed the x-action");

  std::vector<Mat2> gens{mat2_conj(h, mi, m), mat2_conj(h, mj, m), A,
                         mat2_conj(h, g, m)};
  MatGroup G = mat2_group(m, gens, "Gamma(l=" + std::to_string(level) + ")");
  if (G.group.n != 48)
    throw std::logic_error("torus automizer closed to order " +
                           std::to_string(G.group.n));
  if (G.id_of(A) < 0) throw std::logic_error("x-action missing from automizer");
  std::set<long> mod3;
  for (const auto& x : G.elems)
    mod3.insert(mat2_key(Mat2{x.a % 3, x.b % 3, x.c % 3, x.d % 3}, 3));
  if (mod3.size() != 48)
    throw std::logic_error("automizer does not reduce faithfully mod 3");
  return G;
}

// torus automorphism of a rank-2 truncation given by a matrix
inline Hom torus_matrix_hom(const PToral& P, const Mat2& x) {
  Elems T = P.torus();
  std::vector<int> img(T.size());
  for (size_t idx = 0; idx < T.size(); ++idx) {
    auto [t, w] = P.decode(T[idx]);
    IntVec s{(long(x.a) * t[0] + long(x.b) * t[1]) % P.M,
             (long(x.c) * t[0] + long(x.d) * t[1]) % P.M};
    img[idx] = P.encode(s, w);
  }
  return Hom{T, img};
}

// Automorphisms of S induced by its normalizer inside the semidirect
// product H = T : Gamma. Conjugation is computed literally in H and pushed
// back through the embedding (t, x^k) -> (t, A^k).
inline std::vector<Hom> exotic_automizer(const PToral& P, const MatGroup& gamma) {
  const long m2 = P.Mr; // torus size
  const int nH = int(gamma.group.n * m2);
  const int mod = gamma.mod;
  auto gelems = std::make_shared<std::vector<Mat2>>(gamma.elems);
  auto ggroup = std::make_shared<Group>(gamma.group);
  long m2c = m2;
  long Mc = P.M;
  auto mul = [gelems, ggroup, m2c, Mc, mod](int x, int y) {
    int gx = int(x / m2c), gy = int(y / m2c);
    long tx = x % m2c, ty = y % m2c;
    const Mat2& G = (*gelems)[size_t(gx)];
    long t0 = ty % Mc, t1 = ty / Mc;
    long s0 = (tx % Mc + (long(G.a) * t0 + long(G.b) * t1)) % Mc;
    long s1 = (tx / Mc + (long(G.c) * t0 + long(G.d) * t1)) % Mc;
    (void)mod;
    return int(long(ggroup->mul(gx, gy)) * m2c + s1 * Mc + s0);
  };
  Group H = Group::from_fn(nH, mul, "T:Gamma");

  Mat2 A = mat2_reduce(-2, 3, -1, 1, mod);
  int idA = gamma.id_of(A);
  int idA2 = gamma.id_of(mat2_mul(A, A, mod));
  if (idA < 0 || idA2 < 0) throw std::logic_error("x-action lost in automizer");
  int pow_id[3] = {0, idA, idA2};

  // embedding of S and its inverse
  int nS = P.group.n;
  std::vector<int> eps(size_t(nS), 0);
  std::map<int, int> eps_inv;
  for (int s = 0; s < nS; ++s) {
    auto [t, w] = P.decode(s);
    int h = int(long(pow_id[w]) * m2c + t[1] * Mc + t[0]);
    eps[size_t(s)] = h;
    eps_inv[h] = s;
  }
  for (int s = 0; s < nS; ++s)
    for (int gsel : {P.named.at("u"), P.named.at("x")})
      if (eps[size_t(P.group.mul(s, gsel))] != H.mul(eps[size_t(s)], eps[size_t(gsel)]))
        throw std::logic_error("semidirect embedding is not a homomorphism");

  Elems Sall = whole_group(P.group);
  std::set<std::vector<int>> seen;
  std::vector<Hom> out;
  for (int h = 0; h < nH; ++h) {
    // (t, g) normalizes the image of S exactly when g normalizes <A>
    Mat2 cg = mat2_conj((*gelems)[size_t(h / m2c)], A, mod);
    int cid = gamma.id_of(cg);
    if (cid != idA && cid != idA2) continue;
    int hi = H.inv(h);
    std::vector<int> img(size_t(nS), 0);
    for (int s = 0; s < nS; ++s)
      img[size_t(s)] = eps_inv.at(H.mul(H.mul(h, eps[size_t(s)]), hi));
    if (seen.insert(img).second) out.push_back(Hom{Sall, img});
  }
  return out;
}

} // namespace detail

// trivial fusion on a rank-1 torus
inline CatalogEntry build_so2(int p, int level) {
  if (!detail::small_prime(p)) throw PreconditionError("p is not prime");
  CatalogEntry e;
  PToral P = make_circle(p, level);
  FusionSeed seed;
  seed.name = "so2:p=" + std::to_string(p) + ",l=" + std::to_string(level);
  seed.U = P.group;
  seed.S = whole_group(P.group);
  seed.p = p;
  seed.innt_gens = delta_shift_automorphisms(P);
  e.name = seed.name;
  e.summary = "circle group, trivial fusion on a rank-1 torus";
  e.system = close_fusion(seed);
  e.named = P.named;
  long M = P.M;
  detail::expect(e, "|S|", M, e.system.U.n);
  detail::expect(e, "|Aut_F(S)|", 1,
                 long(e.system.auts(e.system.index_of(seed.S)).size()));
  detail::expect(e, "subgroup count", level + 1, long(e.system.subs.size()));
  e.presentation = std::move(P);
  detail::verify_expected(e);
  return e;
}

// rank-1 torus with fusion generated by a single order-n unit
inline CatalogEntry build_sullivan(int p, int n, int level) {
  if (!detail::small_prime(p) || p == 2)
    throw PreconditionError("sullivan sphere requires an odd prime");
  if (n < 2 || (p - 1) % n != 0)
    throw PreconditionError("n does not divide p-1");
  CatalogEntry e;
  PToral P = make_circle(p, level);
  long M = P.M;

  // the order-n unit: power up a fixed primitive root, then Teichmueller-lift
  // so the same formula one level down gives the reduction (level-compatible)
  long root = 0;
  for (long g = 2; g < p; ++g) {
    long ord = 1, x = g % p;
    while (x != 1) { x = x * g % p; ++ord; }
    if (ord == p - 1) { root = g; break; }
  }
  long lift = 1;
  for (int k = 1; k < level; ++k) lift *= p;
  long zeta = detail::pow_mod(root, lift * ((p - 1) / n), M);
  long zo = 1, zp = zeta;
  while (zp != 1) { zp = zp * zeta % M; ++zo; }
  if (level >= 2) {
    long Mlow = M / p;
    long zlow = detail::pow_mod(root, (lift / p) * ((p - 1) / n), Mlow);
    if (zeta % Mlow != zlow)
      throw std::logic_error("unit lift is not level-compatible");
  }

  FusionSeed seed;
  seed.name = "sullivan:p=" + std::to_string(p) + ",n=" + std::to_string(n) +
              ",l=" + std::to_string(level);
  seed.U = P.group;
  seed.S = whole_group(P.group);
  seed.p = p;
  seed.innt_gens = delta_shift_automorphisms(P);
  std::vector<int> img(size_t(M), 0);
  for (long t = 0; t < M; ++t) img[size_t(t)] = int(t * zeta % M);
  seed.gens.push_back(Hom{seed.S, img});

  e.name = seed.name;
  e.summary = "rank-1 torus with an order-" + std::to_string(n) +
              " unit acting";
  e.system = close_fusion(seed);
  e.named = P.named;
  detail::expect(e, "|S|", M, e.system.U.n);
  detail::expect(e, "order of the acting unit", n, zo);
  detail::expect(e, "|Aut_F(S)|", n,
                 long(e.system.auts(e.system.index_of(seed.S)).size()));
  e.presentation = std::move(P);
  detail::verify_expected(e);
  return e;
}

// dihedral truncation with full automorphisms of the central Klein four
inline CatalogEntry build_so3(int level) {
  if (level < 2)
    throw PreconditionError("dihedral system needs level >= 2");
  CatalogEntry e;
  PToral P = make_dihedral(level);
  Group& U = P.group;
  Elems S = whole_group(U);
  Elems V = closure(U, {P.named.at("t1"), P.named.at("x")});
  auto autV = automorphisms(U, V);

  FusionSeed seed;
  seed.name = "so3:l=" + std::to_string(level);
  seed.U = U;
  seed.S = S;
  seed.p = 2;
  seed.innt_gens = delta_shift_automorphisms(P);
  long deltas = long(seed.innt_gens.size());
  seed.gens = autV;

  e.name = seed.name;
  e.summary = "dihedral truncation, fusion generated by Aut(V)";
  e.system = close_fusion(seed);
  e.named = P.named;
  long M = P.M;
  detail::expect(e, "|S|", 2 * M, e.system.U.n);
  detail::expect(e, "|V|", 4, long(V.size()));
  detail::expect(e, "|Aut(V)| seeded", 6, long(autV.size()));
  detail::expect(e, "|Aut_F(V)|", 6,
                 long(e.system.auts(e.system.index_of(V)).size()));
  detail::expect(e, "deeper-torus shift count", M, deltas);
  detail::expect(e, "|Aut_F(S)|", 2 * M,
                 long(e.system.auts(e.system.index_of(S)).size()));
  e.presentation = std::move(P);
  detail::verify_expected(e);
  return e;
}

// quaternion truncation with full automorphisms of the order-8 subgroup
inline CatalogEntry build_su2(int level) {
  if (level < 2)
    throw PreconditionError("quaternion system needs level >= 2");
  CatalogEntry e;
  PToral P = make_quaternion(level);
  Group& U = P.group;
  Elems S = whole_group(U);
  Elems W = closure(U, {P.named.at("t2"), P.named.at("y")});
  auto autW = automorphisms(U, W);

  FusionSeed seed;
  seed.name = "su2:l=" + std::to_string(level);
  seed.U = U;
  seed.S = S;
  seed.p = 2;
  seed.innt_gens = delta_shift_automorphisms(P);
  long deltas = long(seed.innt_gens.size());
  seed.gens = autW;

  e.name = seed.name;
  e.summary = "quaternion truncation, fusion generated by Aut(W)";
  e.system = close_fusion(seed);
  e.named = P.named;
  long M = P.M;
  detail::expect(e, "|S|", 2 * M, e.system.U.n);
  detail::expect(e, "|W|", 8, long(W.size()));
  detail::expect(e, "|Aut(W)| seeded", 24, long(autW.size()));
  detail::expect(e, "|Aut_F(W)|", 24,
                 long(e.system.auts(e.system.index_of(W)).size()));
  detail::expect(e, "involution count", 1,
                 long(elements_of_order(U, S, 2).size()));
  detail::expect(e, "deeper-torus shift count", M, deltas);
  // at level 2 the distinguished quaternion subgroup is all of S, so the
  // Sylow automizer is its full 24-element automizer rather than the
  // truncated-inner 2-group
  detail::expect(e, "|Aut_F(S)|", M == 4 ? 24 : 2 * M,
                 long(e.system.auts(e.system.index_of(S)).size()));
  e.presentation = std::move(P);
  detail::verify_expected(e);
  return e;
}

// the rank-2 3-local system: torus automizer Gamma (a copy of GL_2(3)),
// full Aut on V = <v1, x>, and the automizer of S harvested inside T:Gamma
inline CatalogEntry build_exotic3(int level) {
  if (level < 1) throw PreconditionError("exotic system needs level >= 1");
  CatalogEntry e;
  PToral P = make_exotic(level);
  Group& U = P.group;
  Elems S = whole_group(U);
  long M = P.M, M2 = P.Mr;

  MatGroup gamma = detail::exotic_gamma(level);
  Mat2 A = detail::mat2_reduce(-2, 3, -1, 1, gamma.mod);
  long ngam = 0;
  for (const auto& x : gamma.elems) {
    Mat2 c = detail::mat2_conj(x, A, gamma.mod);
    if (gamma.id_of(c) == gamma.id_of(A) ||
        gamma.id_of(c) == gamma.id_of(mat2_mul(A, A, gamma.mod)))
      ++ngam;
  }

  Elems V = closure(U, {P.named.at("v1"), P.named.at("x")});
  auto autV = automorphisms(U, V);
  auto autS = detail::exotic_automizer(P, gamma);

  FusionSeed seed;
  seed.name = "exotic3:l=" + std::to_string(level);
  seed.U = U;
  seed.S = S;
  seed.p = 3;
  seed.innt_gens = delta_shift_automorphisms(P);
  long deltas = long(seed.innt_gens.size());
  for (const auto& mat : gamma.elems)
    seed.gens.push_back(detail::torus_matrix_hom(P, mat));
  for (const auto& f : autV) seed.gens.push_back(f);
  for (const auto& f : autS) seed.gens.push_back(f);

  e.name = seed.name;
  e.summary = "rank-2 3-local system with torus automizer GL_2(3)";
  e.system = close_fusion(seed);
  e.named = P.named;

  Elems T = P.torus();
  Elems Z = center_of(U, S);
  Elems v1sub = closure(U, {P.named.at("v1")});
  detail::expect(e, "|S|", 3 * M2, e.system.U.n);
  detail::expect(e, "torus automizer order", 48, gamma.group.n);
  detail::expect(e, "|N_Gamma(<x-action>)|", 12, ngam);
  detail::expect(e, "|Z(S)|", 3, long(Z.size()));
  detail::expect(e, "Z(S) = <v1>", 1, Z == v1sub ? 1 : 0);
  detail::expect(e, "|Aut(V)| seeded", 48, long(autV.size()));
  detail::expect(e, "automizer of S harvested in T:Gamma", 4 * M2,
                 long(autS.size()));
  detail::expect(e, "deeper-torus shift count", M2, deltas);
  detail::expect(e, "elements of order 3", 8 + 2 * M2,
                 long(elements_of_order(U, S, 3).size()));
  detail::expect(e, "|Aut_F(S)|", 12 * M2,
                 long(e.system.auts(e.system.index_of(S)).size()));
  detail::expect(e, "|Aut_F(T)|", 48,
                 long(e.system.auts(e.system.index_of(T)).size()));
  detail::expect(e, "|Aut_F(V)|", 48,
                 long(e.system.auts(e.system.index_of(V)).size()));
  e.presentation = std::move(P);
  detail::verify_expected(e);
  return e;
}

// coordinate-wise product of two closed systems
inline CatalogEntry build_product(const CatalogEntry& a, const CatalogEntry& b,
                                  const std::string& name) {
  CatalogEntry e;
  e.name = name;
  e.summary = "product of " + a.name + " and " + b.name;
  e.system = product_fusion(a.system, b.system);
  // named elements of the left factor keep their names; right factor gets a
  // "2:" prefix; ids follow the product encoding (left * |right| + right)
  for (const auto& [k, v] : a.named)
    e.named[k] = v * b.system.U.n;
  for (const auto& [k, v] : b.named)
    e.named["2:" + k] = v;
  size_t ia = a.system.index_of(a.system.S);
  size_t ib = b.system.index_of(b.system.S);
  size_t ie = e.system.index_of(e.system.S);
  detail::expect(e, "|S|", long(a.system.S.size()) * long(b.system.S.size()),
                 long(e.system.S.size()));
  detail::expect(e, "|Aut_F(S1 x S2)| = |Aut_F(S1)| * |Aut_F(S2)|",
                 long(a.system.auts(ia).size()) * long(b.system.auts(ib).size()),
                 long(e.system.auts(ie).size()));
  detail::verify_expected(e);
  return e;
}

// brute-force fusion system of a finite group, used as ground truth
inline CatalogEntry build_finite_oracle(const std::string& key, int p) {
  Group G;
  long expect_s = 0;
  if (key == "sym4") {
    G = symmetric_group(4);
    if (p != 2) throw PreconditionError("oracle sym4 is a p=2 fixture");
    expect_s = 8;
  } else if (key == "d12") {
    G = dihedral_group(6);
    if (p != 3) throw PreconditionError("oracle d12 is a p=3 fixture");
    expect_s = 3;
  } else if (key == "sl23") {
    G = sl2_group(3).group;
    if (p != 3) throw PreconditionError("oracle sl23 is a p=3 fixture");
    expect_s = 3;
  } else {
    throw std::invalid_argument("unknown oracle group: " + key);
  }
  CatalogEntry e;
  Elems S = sylow_subgroup(G, whole_group(G), p);
  e.name = "oracle:" + key + ",p=" + std::to_string(p);
  e.summary = "fusion system of " + G.name + " at p=" + std::to_string(p);
  e.system = fusion_of_group(G, S, p, e.name);
  detail::expect(e, "|S|", expect_s, long(S.size()));
  if (key == "sym4") {
    Elems core = p_core(G, whole_group(G), 2);
    detail::expect(e, "|O_2(G)|", 4, long(core.size()));
    detail::expect(e, "|Aut_F(O_2)|", 6,
                   long(e.system.auts(e.system.index_of(core)).size()));
  } else if (key == "d12") {
    detail::expect(e, "|Aut_F(S)|", 2,
                   long(e.system.auts(e.system.index_of(S)).size()));
  } else {
    // in SL_2(3) the two order-3 classes are not fused (N(P) = C(P) = Z/6),
    // so the Sylow automizer is trivial
    detail::expect(e, "|Aut_F(S)|", 1,
                   long(e.system.auts(e.system.index_of(S)).size()));
  }
  detail::verify_expected(e);
  return e;
}

// inner fusion of the dihedral truncation: no generators beyond the
// truncated-inner automizer (the stand-in for F_S(S) at finite level)
inline CatalogEntry build_dihedral_inner(int level) {
  if (level < 2)
    throw PreconditionError("dihedral system needs level >= 2");
  CatalogEntry e;
  PToral P = make_dihedral(level);
  FusionSeed seed;
  seed.name = "dihedral-inner:l=" + std::to_string(level);
  seed.U = P.group;
  seed.S = whole_group(P.group);
  seed.p = 2;
  seed.innt_gens = delta_shift_automorphisms(P);
  e.name = seed.name;
  e.summary = "dihedral truncation with inner fusion only";
  e.system = close_fusion(seed);
  e.named = P.named;
  long M = P.M;
  detail::expect(e, "|S|", 2 * M, e.system.U.n);
  detail::expect(e, "|Aut_F(S)|", 2 * M,
                 long(e.system.auts(e.system.index_of(seed.S)).size()));
  e.presentation = std::move(P);
  detail::verify_expected(e);
  return e;
}

// ---- the name grammar ----

namespace detail {

inline std::map<std::string, long> parse_params(const std::string& s) {
  std::map<std::string, long> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == item.size())
      throw std::invalid_argument("malformed catalog parameter: " + item);
    char* end = nullptr;
    long v = std::strtol(item.c_str() + eq + 1, &end, 10);
    if (end == nullptr || *end != '\0')
      throw std::invalid_argument("malformed catalog parameter: " + item);
    out[item.substr(0, eq)] = v;
  }
  return out;
}

inline long need(const std::map<std::string, long>& m, const std::string& k,
                 const std::string& name) {
  auto it = m.find(k);
  if (it == m.end())
    throw std::invalid_argument("catalog entry " + name +
                                " needs parameter " + k);
  return it->second;
}

} // namespace detail

inline CatalogEntry build_by_name(const std::string& name) {
  auto colon = name.find(':');
  std::string head = name.substr(0, colon);
  std::string rest = colon == std::string::npos ? "" : name.substr(colon + 1);
  if (head == "so2") {
    auto ps = detail::parse_params(rest);
    return build_so2(int(detail::need(ps, "p", name)),
                     int(detail::need(ps, "l", name)));
  }
  if (head == "sullivan") {
    auto ps = detail::parse_params(rest);
    return build_sullivan(int(detail::need(ps, "p", name)),
                          int(detail::need(ps, "n", name)),
                          int(detail::need(ps, "l", name)));
  }
  if (head == "so3") {
    auto ps = detail::parse_params(rest);
    return build_so3(int(detail::need(ps, "l", name)));
  }
  if (head == "su2") {
    auto ps = detail::parse_params(rest);
    return build_su2(int(detail::need(ps, "l", name)));
  }
  if (head == "exotic3") {
    auto ps = detail::parse_params(rest);
    return build_exotic3(int(detail::need(ps, "l", name)));
  }
  if (head == "dihedral-inner") {
    auto ps = detail::parse_params(rest);
    return build_dihedral_inner(int(detail::need(ps, "l", name)));
  }
  if (head == "product") {
    auto comma = rest.find(',');
    std::string which = comma == std::string::npos ? rest : rest.substr(0, comma);
    auto ps = detail::parse_params(comma == std::string::npos ? ""
                                                              : rest.substr(comma + 1));
    if (which != "so3xso2")
      throw std::invalid_argument("unknown product entry: " + name);
    int l = int(detail::need(ps, "l", name));
    return build_product(build_so3(l), build_so2(2, l),
                         "product:so3xso2,l=" + std::to_string(l));
  }
  if (head == "oracle") {
    auto comma = rest.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("oracle entry needs a prime: " + name);
    std::string which = rest.substr(0, comma);
    auto ps = detail::parse_params(rest.substr(comma + 1));
    return build_finite_oracle(which, int(detail::need(ps, "p", name)));
  }
  throw std::invalid_argument("unknown catalog entry: " + name);
}

// the canonical listing; every name here round-trips through build_by_name
inline std::vector<std::pair<std::string, std::string>> catalog_names() {
  return {
      {"so2:p=2,l=2", "circle at p=2, trivial fusion"},
      {"so2:p=3,l=2", "circle at p=3, trivial fusion"},
      {"so2:p=5,l=2", "circle at p=5, trivial fusion"},
      {"sullivan:p=5,n=4,l=2", "rank-1 torus with an order-4 unit"},
      {"so3:l=3", "dihedral truncation with Aut(V) fusion"},
      {"su2:l=3", "quaternion truncation with Aut(W) fusion"},
      {"exotic3:l=2", "rank-2 3-local system, torus automizer GL_2(3)"},
      {"product:so3xso2,l=2", "product of the dihedral and circle systems"},
      {"oracle:sym4,p=2", "fusion of the symmetric group on 4 letters"},
      {"oracle:d12,p=3", "fusion of the dihedral group of order 12"},
      {"oracle:sl23,p=3", "fusion of SL_2(3)"},
      {"dihedral-inner:l=3", "dihedral truncation, inner fusion only"},
  };
}

} // namespace fusionkit
