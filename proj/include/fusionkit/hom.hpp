#pragma once

// Injective homomorphisms between subgroups of one ambient group, stored
// extensionally: sorted domain ids plus the aligned image vector.  The
// extensional form makes equality canonical, which the fusion closure engine
// relies on for fixpoint detection.

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "budget.hpp"
#include "smallgroup.hpp"
#include "subgroups.hpp"

namespace fusionkit {

struct Hom {
  Elems dom;            // sorted ambient ids
  std::vector<int> img; // img[i] = image of dom[i]

  friend bool operator==(const Hom& a, const Hom& b) {
    return a.dom == b.dom && a.img == b.img;
  }
  friend bool operator<(const Hom& a, const Hom& b) {
    if (a.dom != b.dom) return a.dom < b.dom;
    return a.img < b.img;
  }
};

inline int apply(const Hom& f, int x) {
  auto it = std::lower_bound(f.dom.begin(), f.dom.end(), x);
  return f.img[size_t(it - f.dom.begin())];
}

inline Hom identity_hom(const Elems& P) {
  return Hom{P, std::vector<int>(P.begin(), P.end())};
}

inline Hom conj_hom(const Group& G, int g, const Elems& P) {
  Hom f;
  f.dom = P;
  f.img.reserve(P.size());
  for (int x : P) f.img.push_back(G.conj(g, x));
  return f;
}

inline Elems image_of(const Hom& f) {
  Elems r = f.img;
  std::sort(r.begin(), r.end());
  return r;
}

// g after f; f's image must lie inside g's domain
inline Hom compose(const Hom& g, const Hom& f) {
  Hom r;
  r.dom = f.dom;
  r.img.reserve(f.img.size());
  for (int y : f.img) r.img.push_back(apply(g, y));
  return r;
}

inline Hom restrict_hom(const Hom& f, const Elems& P) {
  Hom r;
  r.dom = P;
  r.img.reserve(P.size());
  for (int x : P) r.img.push_back(apply(f, x));
  return r;
}

inline Hom inverse_hom(const Hom& f) {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(f.dom.size());
  for (size_t i = 0; i < f.dom.size(); ++i) pairs.push_back({f.img[i], f.dom[i]});
  std::sort(pairs.begin(), pairs.end());
  Hom r;
  r.dom.reserve(pairs.size());
  r.img.reserve(pairs.size());
  for (auto& [a, b] : pairs) { r.dom.push_back(a); r.img.push_back(b); }
  return r;
}

inline bool is_injective_hom(const Group& G, const Hom& f) {
  if (f.dom.size() != f.img.size()) return false;
  Elems im = image_of(f);
  if (std::adjacent_find(im.begin(), im.end()) != im.end()) return false;
  for (int a : f.dom)
    for (int b : f.dom) {
      int ab = G.mul(a, b);
      if (!contains(f.dom, ab)) return false;
      if (apply(f, ab) != G.mul(apply(f, a), apply(f, b))) return false;
    }
  return true;
}

// minimal generating sequence by greedy closure growth; deterministic
inline Elems generating_sequence(const Group& G, const Elems& P) {
  Elems gens;
  Elems have = trivial_subgroup();
  for (int a : P) {
    if (contains(have, a)) continue;
    gens.push_back(a);
    Elems g2 = gens;
    have = closure(G, g2);
    if (have.size() == P.size()) break;
  }
  return gens;
}

namespace detail {

// state for the generator-image backtracking search
struct HomSearch {
  const Group& G;
  const Elems& P;
  const Elems& Q;
  Elems gens;
  std::vector<Hom> out;
  long nodes = 0;

  // partial map: list of (domain element, image) pairs forming a partial
  // subgroup map; kept as parallel vectors with dom sorted
  bool extend(Elems dom, std::vector<int> img, size_t gi) {
    ++nodes;
    require_budget("hom search nodes", nodes, budget().hom_search_nodes);
    if (gi == gens.size()) {
      if (dom.size() == P.size()) {
        Elems im = img;
        std::sort(im.begin(), im.end());
        if (std::adjacent_find(im.begin(), im.end()) == im.end())
          out.push_back(Hom{std::move(dom), std::move(img)});
      }
      return true;
    }
    int g = gens[gi];
    int go = G.order(g);
    for (int h : Q) {
      if (G.order(h) != go) continue;
      // close the partial map under multiplication with (g -> h)
      Elems d = dom;
      std::vector<int> m = img;
      auto find_img = [&](int x) -> int {
        auto it = std::lower_bound(d.begin(), d.end(), x);
        if (it != d.end() && *it == x) return m[size_t(it - d.begin())];
        return -1;
      };
      auto insert_pair = [&](int x, int y) -> bool {
        auto it = std::lower_bound(d.begin(), d.end(), x);
        if (it != d.end() && *it == x)
          return m[size_t(it - d.begin())] == y;
        size_t pos = size_t(it - d.begin());
        d.insert(it, x);
        m.insert(m.begin() + pos, y);
        return true;
      };
      bool ok = insert_pair(g, h);
      if (ok) {
        // worklist closure: products of all known pairs must be consistent
        bool changed = true;
        while (changed && ok) {
          changed = false;
          for (size_t i = 0; i < d.size() && ok; ++i)
            for (size_t j = 0; j < d.size() && ok; ++j) {
              int x = G.mul(d[i], d[j]);
              int y = G.mul(m[i], m[j]);
              if (!contains(Q, y)) { ok = false; break; }
              int have = find_img(x);
              if (have == -1) {
                insert_pair(x, y);
                changed = true;
              } else if (have != y) {
                ok = false;
              }
            }
        }
      }
      if (ok) extend(std::move(d), std::move(m), gi + 1);
    }
    return true;
  }
};

} // namespace detail

// all injective homomorphisms P -> Q, deterministically ordered
inline std::vector<Hom> injective_homs(const Group& G, const Elems& P,
                                       const Elems& Q) {
  if (P.size() > Q.size()) return {};
  if (P.size() == 1) return {identity_hom(trivial_subgroup())};
  detail::HomSearch hs{G, P, Q, generating_sequence(G, P), {}, 0};
  hs.extend(trivial_subgroup(), std::vector<int>{0}, 0);
  std::vector<Hom> out = std::move(hs.out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline std::vector<Hom> automorphisms(const Group& G, const Elems& P) {
  return injective_homs(G, P, P);
}

// abstract group built from a closed set of automorphisms of one subgroup;
// keeps the map from abstract ids back to the automorphisms
struct HomGroup {
  Group group;
  std::vector<Hom> maps; // maps[id]; id 0 is the identity map
};

inline HomGroup hom_group(const std::vector<Hom>& autos) {
  std::vector<Hom> sorted = autos;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  // identity first
  if (sorted.empty()) throw std::runtime_error("empty automorphism set");
  Hom id = identity_hom(sorted[0].dom);
  auto it = std::find(sorted.begin(), sorted.end(), id);
  if (it == sorted.end())
    throw std::runtime_error("automorphism set lacks the identity");
  std::rotate(sorted.begin(), it, it + 1);
  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < sorted.size(); ++i) index[sorted[i].img] = int(i);
  int n = int(sorted.size());
  std::vector<int> table(size_t(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Hom c = compose(sorted[i], sorted[j]);
      auto f = index.find(c.img);
      if (f == index.end())
        throw std::runtime_error("automorphism set not closed under composition");
      table[size_t(i) * n + j] = f->second;
    }
  HomGroup hg;
  hg.group = Group::from_table(n, std::move(table), "AutSet");
  hg.maps = std::move(sorted);
  return hg;
}

// quotient of a closed automorphism set by a normal closed subset (e.g. the
// inner automorphisms); returns the abstract quotient plus coset ids
struct OuterGroup {
  Group group;                 // the quotient
  std::vector<int> coset_of;   // coset id per automorphism id in hg
  HomGroup hg;                 // underlying automorphism group
};

inline OuterGroup outer_group(const std::vector<Hom>& autos,
                              const std::vector<Hom>& inner) {
  OuterGroup og;
  og.hg = hom_group(autos);
  Elems inner_ids;
  {
    std::map<std::vector<int>, int> index;
    for (size_t i = 0; i < og.hg.maps.size(); ++i)
      index[og.hg.maps[i].img] = int(i);
    for (const Hom& h : inner) {
      auto it = index.find(h.img);
      if (it == index.end())
        throw std::runtime_error("inner automorphism missing from Aut set");
      inner_ids.push_back(it->second);
    }
    std::sort(inner_ids.begin(), inner_ids.end());
    inner_ids.erase(std::unique(inner_ids.begin(), inner_ids.end()),
                    inner_ids.end());
  }
  QuotientResult qr = quotient_group(og.hg.group, whole_group(og.hg.group),
                                     inner_ids, "Out");
  og.group = std::move(qr.group);
  og.coset_of = std::move(qr.coset_of);
  return og;
}

// brute-force isomorphism search between two abstract groups; nullopt if
// none exists.  map[i] = image id in H of element id i of G.
inline std::optional<std::vector<int>> find_isomorphism(const Group& G,
                                                        const Group& H) {
  if (G.n != H.n) return std::nullopt;
  Elems all = whole_group(G);
  Elems gens = generating_sequence(G, all);
  Elems target = whole_group(H);
  // reuse the injective-hom machinery on the disjoint-union trick: search
  // directly with a local backtracker instead
  struct Search {
    const Group& G;
    const Group& H;
    Elems gens;
    std::optional<std::vector<int>> found;
    long nodes = 0;

    bool run(std::vector<int> dom, std::vector<int> img, size_t gi) {
      ++nodes;
      require_budget("iso search nodes", nodes, budget().hom_search_nodes);
      if (found) return true;
      if (gi == gens.size()) {
        if (int(dom.size()) == G.n) {
          std::vector<int> map(G.n, -1);
          for (size_t i = 0; i < dom.size(); ++i) map[dom[i]] = img[i];
          found = map;
        }
        return true;
      }
      int g = gens[gi];
      int go = G.order(g);
      for (int h = 0; h < H.n; ++h) {
        if (H.order(h) != go) continue;
        std::vector<int> d = dom, m = img;
        auto find_img = [&](int x) -> int {
          auto it = std::lower_bound(d.begin(), d.end(), x);
          if (it != d.end() && *it == x) return m[size_t(it - d.begin())];
          return -1;
        };
        auto insert_pair = [&](int x, int y) -> bool {
          auto it = std::lower_bound(d.begin(), d.end(), x);
          if (it != d.end() && *it == x) return m[size_t(it - d.begin())] == y;
          size_t pos = size_t(it - d.begin());
          d.insert(it, x);
          m.insert(m.begin() + pos, y);
          return true;
        };
        bool ok = insert_pair(g, h);
        bool changed = true;
        while (changed && ok) {
          changed = false;
          for (size_t i = 0; i < d.size() && ok; ++i)
            for (size_t j = 0; j < d.size() && ok; ++j) {
              int x = G.mul(d[i], d[j]);
              int y = H.mul(m[i], m[j]);
              int have = find_img(x);
              if (have == -1) {
                insert_pair(x, y);
                changed = true;
              } else if (have != y) {
                ok = false;
              }
            }
        }
        // injectivity on the closed partial map
        if (ok) {
          std::vector<int> mm = m;
          std::sort(mm.begin(), mm.end());
          if (std::adjacent_find(mm.begin(), mm.end()) != mm.end()) ok = false;
        }
        if (ok) run(std::move(d), std::move(m), gi + 1);
        if (found) return true;
      }
      return true;
    }
  };
  Search s{G, H, gens, std::nullopt, 0};
  s.run({0}, {0}, 0);
  return s.found;
}

} // namespace fusionkit
