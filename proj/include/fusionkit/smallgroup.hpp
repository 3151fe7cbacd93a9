#pragma once

// Finite groups on element ids 0..n-1 with id 0 the identity.  Small groups
// carry a full multiplication table; larger ones keep a multiplication
// callback (the table would not fit) plus a cached inverse vector.  All
// factories assign ids deterministically so enumeration output is stable
// across runs.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "budget.hpp"

namespace fusionkit {

constexpr int kTableLimit = 1024; // tabulate multiplication up to this order

class Group {
public:
  int n = 1;
  std::string name = "1";

  Group() : table_{0} { finish(); } // the trivial group

  static Group from_table(int n, std::vector<int> table, std::string name) {
    Group g;
    g.n = n;
    g.table_ = std::move(table);
    g.name = std::move(name);
    g.finish();
    return g;
  }

  static Group from_fn(int n, std::function<int(int, int)> mul,
                       std::string name) {
    Group g;
    g.n = n;
    g.name = std::move(name);
    if (n <= kTableLimit) {
      g.table_.assign(size_t(n) * n, 0);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) g.table_[size_t(a) * n + b] = mul(a, b);
    } else {
      g.table_.clear();
      g.mul_ = std::move(mul);
    }
    g.finish();
    return g;
  }

  int mul(int a, int b) const {
    return table_.empty() ? mul_(a, b) : table_[size_t(a) * n + b];
  }

  int inv(int a) const { return inv_[a]; }

  int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }

  int power(int a, long k) const {
    long o = order(a);
    k %= o;
    if (k < 0) k += o;
    int r = 0;
    for (long i = 0; i < k; ++i) r = mul(r, a);
    return r;
  }

  int order(int a) const { return ord_[a]; }

  bool is_abelian() const {
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }

private:
  std::vector<int> table_;
  std::function<int(int, int)> mul_;
  std::vector<int> inv_;
  std::vector<int> ord_;

  void finish() {
    inv_.assign(n, -1);
    ord_.assign(n, 0);
    ord_[0] = 1;
    inv_[0] = 0;
    for (int a = 1; a < n; ++a) {
      // walk the cyclic group generated by a: a, a^2, ..., a^k = identity;
      // k is the order and a^(k-1) the inverse
      int x = a, k = 1, prev = a;
      while (x != 0) {
        prev = x;
        x = mul(x, a);
        ++k;
        if (k > n + 1) throw std::runtime_error("not a group: unbounded order");
      }
      ord_[a] = k;
      inv_[a] = prev;
    }
  }
};

// ---- elementary factories ----

inline Group cyclic_group(int m) {
  return Group::from_fn(m, [m](int a, int b) { return (a + b) % m; },
                        "C" + std::to_string(m));
}

// dihedral group of order 2m: id = r + m*f, rotation r, flip f
inline Group dihedral_group(int m) {
  auto mul = [m](int a, int b) {
    int r1 = a % m, f1 = a / m, r2 = b % m, f2 = b / m;
    int r = f1 ? (r1 - r2 % m + m) % m : (r1 + r2) % m;
    return r + m * (f1 ^ f2);
  };
  return Group::from_fn(2 * m, mul, "D" + std::to_string(2 * m));
}

inline Group product_group(const Group& A, const Group& B) {
  int bn = B.n;
  // capture by value through shared copies so the closure owns its data
  auto a = std::make_shared<Group>(A);
  auto b = std::make_shared<Group>(B);
  auto mul = [a, b, bn](int x, int y) {
    int xa = x / bn, xb = x % bn, ya = y / bn, yb = y % bn;
    return a->mul(xa, ya) * bn + b->mul(xb, yb);
  };
  return Group::from_fn(A.n * B.n, mul, A.name + "x" + B.name);
}

// ---- permutation groups ----

using Perm = std::vector<int>;

inline Perm perm_compose(const Perm& f, const Perm& g) {
  // (f*g)(i) = f(g(i))
  Perm r(f.size());
  for (size_t i = 0; i < f.size(); ++i) r[i] = f[g[i]];
  return r;
}

// group generated by permutations; ids sorted lexicographically with the
// identity first
inline Group perm_group(int deg, const std::vector<Perm>& gens,
                        std::string name) {
  Perm id(deg);
  std::iota(id.begin(), id.end(), 0);
  std::set<Perm> elems{id};
  std::vector<Perm> frontier{id};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& e : frontier)
      for (const auto& g : gens) {
        Perm p = perm_compose(e, g);
        if (elems.insert(p).second) next.push_back(p);
      }
    frontier = std::move(next);
  }
  std::vector<Perm> sorted(elems.begin(), elems.end());
  auto it = std::find(sorted.begin(), sorted.end(), id);
  std::rotate(sorted.begin(), it, it + 1);
  std::map<Perm, int> index;
  for (size_t i = 0; i < sorted.size(); ++i) index[sorted[i]] = int(i);
  int n = int(sorted.size());
  std::vector<int> table(size_t(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      table[size_t(a) * n + b] = index.at(perm_compose(sorted[a], sorted[b]));
  return Group::from_table(n, std::move(table), std::move(name));
}

inline Group symmetric_group(int deg) {
  std::vector<Perm> gens;
  Perm t(deg);
  std::iota(t.begin(), t.end(), 0);
  std::swap(t[0], t[1]);
  gens.push_back(t);
  Perm c(deg);
  for (int i = 0; i < deg; ++i) c[i] = (i + 1) % deg;
  gens.push_back(c);
  return perm_group(deg, gens, "S" + std::to_string(deg));
}

// ---- 2x2 matrix groups over Z/m ----

struct Mat2 {
  int a, b, c, d; // row major
  friend bool operator<(const Mat2& x, const Mat2& y) {
    return std::tie(x.a, x.b, x.c, x.d) < std::tie(y.a, y.b, y.c, y.d);
  }
  friend bool operator==(const Mat2& x, const Mat2& y) {
    return std::tie(x.a, x.b, x.c, x.d) == std::tie(y.a, y.b, y.c, y.d);
  }
};

inline Mat2 mat2_mul(const Mat2& x, const Mat2& y, int m) {
  auto r = [m](long v) { int t = int(v % m); return t < 0 ? t + m : t; };
  return Mat2{r(long(x.a) * y.a + long(x.b) * y.c),
              r(long(x.a) * y.b + long(x.b) * y.d),
              r(long(x.c) * y.a + long(x.d) * y.c),
              r(long(x.c) * y.b + long(x.d) * y.d)};
}

inline long mat2_key(const Mat2& x, int m) {
  return ((long(x.a) * m + x.b) * m + x.c) * m + x.d;
}

// A matrix group remembers its elements so callers can map ids back to
// matrices (transporter fixtures need this).
struct MatGroup {
  Group group;
  int mod = 0;
  std::vector<Mat2> elems; // elems[id]
  std::vector<int> key_to_id; // dense lookup over m^4 keys

  int id_of(const Mat2& x) const { return key_to_id[mat2_key(x, mod)]; }
};

inline MatGroup mat2_group(int m, const std::vector<Mat2>& gens,
                           std::string name,
                           const std::function<Mat2(Mat2)>& canon = nullptr) {
  auto canonical = [&](Mat2 x) { return canon ? canon(x) : x; };
  Mat2 id{1, 0, 0, 1};
  std::set<Mat2> elems{canonical(id)};
  std::vector<Mat2> frontier{canonical(id)};
  while (!frontier.empty()) {
    std::vector<Mat2> next;
    for (const auto& e : frontier)
      for (const auto& g : gens) {
        Mat2 p = canonical(mat2_mul(e, g, m));
        if (elems.insert(p).second) next.push_back(p);
        require_budget("matrix group closure", long(elems.size()), 1000000);
      }
    frontier = std::move(next);
  }
  MatGroup mg;
  mg.mod = m;
  mg.elems.assign(elems.begin(), elems.end());
  Mat2 cid = canonical(id);
  auto it = std::find(mg.elems.begin(), mg.elems.end(), cid);
  std::rotate(mg.elems.begin(), it, it + 1);
  long keyspace = long(m) * m * m * m;
  mg.key_to_id.assign(keyspace, -1);
  for (size_t i = 0; i < mg.elems.size(); ++i)
    mg.key_to_id[mat2_key(mg.elems[i], m)] = int(i);
  int n = int(mg.elems.size());
  auto elems_copy = std::make_shared<std::vector<Mat2>>(mg.elems);
  auto keys_copy = std::make_shared<std::vector<int>>(mg.key_to_id);
  auto canon_copy = canon;
  auto mul = [elems_copy, keys_copy, m, canon_copy](int x, int y) {
    Mat2 p = mat2_mul((*elems_copy)[x], (*elems_copy)[y], m);
    if (canon_copy) p = canon_copy(p);
    return (*keys_copy)[mat2_key(p, m)];
  };
  mg.group = Group::from_fn(n, mul, std::move(name));
  return mg;
}

// special linear group SL_2(q), q an odd prime; generated by the two
// elementary unipotent matrices
inline MatGroup sl2_group(int q) {
  std::vector<Mat2> gens{Mat2{1, 1, 0, 1}, Mat2{1, 0, 1, 1}};
  return mat2_group(q, gens, "SL2(" + std::to_string(q) + ")");
}

// projective special linear group: identify M with -M by sign normalization
// (scale so the first nonzero entry in row-major order lies in 1..q/2)
inline Mat2 psl2_canon(Mat2 x, int q) {
  int lead = x.a ? x.a : (x.b ? x.b : (x.c ? x.c : x.d));
  if (lead > q / 2) {
    x.a = (q - x.a) % q; x.b = (q - x.b) % q;
    x.c = (q - x.c) % q; x.d = (q - x.d) % q;
  }
  return x;
}

inline MatGroup psl2_group(int q) {
  auto canon = [q](Mat2 x) { return psl2_canon(x, q); };
  std::vector<Mat2> gens{canon(Mat2{1, 1, 0, 1}), canon(Mat2{1, 0, 1, 1})};
  return mat2_group(q, gens, "PSL2(" + std::to_string(q) + ")", canon);
}

inline MatGroup gl2_group(int m, std::string name = "") {
  // all invertible 2x2 matrices over Z/m generated by closure of units;
  // only used for small m, so enumerate directly
  std::vector<Mat2> all;
  auto gcd = [](int a, int b) { while (b) { a %= b; std::swap(a, b); } return a; };
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c)
        for (int d = 0; d < m; ++d) {
          int det = ((a * d - b * c) % m + m) % m;
          if (gcd(det, m) == 1) all.push_back(Mat2{a, b, c, d});
        }
  MatGroup mg;
  mg.mod = m;
  mg.elems = all;
  Mat2 id{1, 0, 0, 1};
  std::sort(mg.elems.begin(), mg.elems.end());
  auto it = std::find(mg.elems.begin(), mg.elems.end(), id);
  std::rotate(mg.elems.begin(), it, it + 1);
  long keyspace = long(m) * m * m * m;
  mg.key_to_id.assign(keyspace, -1);
  for (size_t i = 0; i < mg.elems.size(); ++i)
    mg.key_to_id[mat2_key(mg.elems[i], m)] = int(i);
  auto elems_copy = std::make_shared<std::vector<Mat2>>(mg.elems);
  auto keys_copy = std::make_shared<std::vector<int>>(mg.key_to_id);
  auto mul = [elems_copy, keys_copy, m](int x, int y) {
    return (*keys_copy)[mat2_key(mat2_mul((*elems_copy)[x], (*elems_copy)[y], m), m)];
  };
  if (name.empty()) name = "GL2(" + std::to_string(m) + ")";
  mg.group = Group::from_fn(int(mg.elems.size()), mul, std::move(name));
  return mg;
}

} // namespace fusionkit
