// Finite groups as validated Cayley tables, plus the homomorphism-level
// constructions the module functors need: subgroups, transversals, double
// cosets, quotients, direct products, pullbacks, conjugated maps.
//
// Element 0 is always the identity. All validation is exhaustive; groups
// in scope are tiny (order <= ~72 for intermediate products), so checking
// every triple is affordable and keeps later proofs-by-checking trustworthy.
// Canonical representatives are always the minimal element index.

#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "indres/field.hpp"

namespace indres {

struct FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

struct FiniteGroup {
  int n = 0;
  std::vector<int> table;    // n*n row-major: table[a*n+b] = a*b
  std::vector<int> inv;      // inverses
  std::vector<std::string> labels;
  std::vector<std::vector<int>> perms;  // permutation realization, may be empty
  std::vector<int> declared_gens;       // as given at construction, may be empty
  std::vector<int> gens;                // nonempty generating set for n > 1

  int mul(int a, int b) const { return table[std::size_t(a) * n + b]; }
  int inverse(int a) const { return inv[std::size_t(a)]; }
  int conjugate(int x, int g) const { return mul(mul(x, g), inverse(x)); }  // x g x^-1

  int order_of(int g) const {
    int k = 1, x = g;
    while (x != 0) {
      x = mul(x, g);
      ++k;
    }
    return k;
  }

  const std::string& label(int g) const { return labels[std::size_t(g)]; }
};

inline bool same_group(const GroupPtr& a, const GroupPtr& b) {
  if (a == b) return true;
  return a && b && a->n == b->n && a->table == b->table;
}

namespace detail {

inline void validate_group(const FiniteGroup& g) {
  const int n = g.n;
  if (n <= 0) fail("group: empty");
  if (int(g.table.size()) != n * n) fail("group: bad table size");
  for (int x : g.table)
    if (x < 0 || x >= n) fail("group: table entry out of range");
  for (int a = 0; a < n; ++a) {
    if (g.mul(0, a) != a || g.mul(a, 0) != a)
      fail("group: element 0 is not an identity (at " + std::to_string(a) + ")");
  }
  for (int a = 0; a < n; ++a) {
    if (g.inv[std::size_t(a)] < 0 || g.inv[std::size_t(a)] >= n ||
        g.mul(a, g.inv[std::size_t(a)]) != 0 || g.mul(g.inv[std::size_t(a)], a) != 0)
      fail("group: bad inverse for element " + std::to_string(a));
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
          fail("group: associativity fails at (" + std::to_string(a) + "," +
               std::to_string(b) + "," + std::to_string(c) + ")");
}

inline std::vector<int> closure(const FiniteGroup& g, std::vector<int> seeds) {
  std::vector<char> in(std::size_t(g.n), 0);
  std::vector<int> list;
  auto add = [&](int x) {
    if (!in[std::size_t(x)]) {
      in[std::size_t(x)] = 1;
      list.push_back(x);
    }
  };
  add(0);
  for (int s : seeds) {
    if (s < 0 || s >= g.n) fail("group: seed element out of range");
    add(s);
  }
  for (std::size_t i = 0; i < list.size(); ++i) {
    add(g.inverse(list[i]));
    for (std::size_t j = 0; j < list.size(); ++j) {
      add(g.mul(list[i], list[j]));
      add(g.mul(list[j], list[i]));
    }
  }
  std::sort(list.begin(), list.end());
  return list;
}

// Greedy deterministic generating set: scan elements in index order and
// keep those not already generated.
inline std::vector<int> greedy_generators(const FiniteGroup& g) {
  std::vector<int> gens;
  std::vector<int> have = closure(g, {});
  for (int x = 1; x < g.n; ++x) {
    if (std::binary_search(have.begin(), have.end(), x)) continue;
    gens.push_back(x);
    have = closure(g, gens);
    if (int(have.size()) == g.n) break;
  }
  return gens;
}

inline GroupPtr finish_group(FiniteGroup g) {
  if (g.labels.empty()) {
    g.labels.resize(std::size_t(g.n));
    for (int i = 0; i < g.n; ++i) g.labels[std::size_t(i)] = "g" + std::to_string(i);
  }
  if (g.inv.empty()) {
    g.inv.assign(std::size_t(g.n), -1);
    for (int a = 0; a < g.n; ++a)
      for (int b = 0; b < g.n; ++b)
        if (g.mul(a, b) == 0 && g.mul(b, a) == 0) {
          g.inv[std::size_t(a)] = b;
          break;
        }
  }
  validate_group(g);
  if (!g.declared_gens.empty()) {
    for (int x : g.declared_gens)
      if (x < 0 || x >= g.n) fail("group: declared generator out of range");
    if (int(closure(g, g.declared_gens).size()) != g.n)
      fail("group: declared generators do not generate the group");
  }
  if (g.gens.empty()) g.gens = g.declared_gens.empty() ? greedy_generators(g) : g.declared_gens;
  return std::make_shared<FiniteGroup>(std::move(g));
}

}  // namespace detail

inline GroupPtr group_from_cayley(const std::vector<std::vector<int>>& rows,
                                  std::vector<std::string> labels = {}) {
  FiniteGroup g;
  g.n = int(rows.size());
  if (g.n == 0) fail("group: empty table");
  for (const auto& r : rows) {
    if (int(r.size()) != g.n) fail("group: table not square");
    g.table.insert(g.table.end(), r.begin(), r.end());
  }
  g.labels = std::move(labels);
  if (!g.labels.empty() && int(g.labels.size()) != g.n) fail("group: bad label count");
  return detail::finish_group(std::move(g));
}

// --- permutations ------------------------------------------------------

inline std::vector<int> compose_perm(const std::vector<int>& p, const std::vector<int>& q) {
  // (p*q)(i) = p(q(i)): apply q first
  std::vector<int> r(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) r[i] = p[std::size_t(q[i])];
  return r;
}

inline std::string cycle_string(const std::vector<int>& perm) {
  std::string s;
  std::vector<char> seen(perm.size(), 0);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i] || perm[i] == int(i)) continue;
    s += "(";
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = 1;
      if (!first) s += " ";
      s += std::to_string(j);
      first = false;
      j = std::size_t(perm[j]);
    }
    s += ")";
  }
  return s.empty() ? "()" : s;
}

// Parse cycle notation like "(0 1)(2 3)" or "()"; cycles compose
// right-to-left. Commas inside cycles are accepted as separators.
inline std::vector<int> parse_cycles(const std::string& text, int degree) {
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') fail("permutation: expected '(' in \"" + text + "\"");
    ++i;
    std::vector<int> cyc;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      if (text[i] == ',' || text[i] == ' ') {
        ++i;
        continue;
      }
      if (text[i] < '0' || text[i] > '9') fail("permutation: bad character in \"" + text + "\"");
      int v = 0;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') v = v * 10 + (text[i++] - '0');
      if (v >= degree) fail("permutation: point " + std::to_string(v) + " out of degree");
      cyc.push_back(v);
    }
    if (i == text.size()) fail("permutation: unterminated cycle in \"" + text + "\"");
    ++i;  // ')'
    for (std::size_t a = 0; a < cyc.size(); ++a)
      for (std::size_t b = a + 1; b < cyc.size(); ++b)
        if (cyc[a] == cyc[b]) fail("permutation: repeated point in cycle");
    if (cyc.size() > 1) cycles.push_back(cyc);
    skip_ws();
  }
  std::vector<int> perm(static_cast<std::size_t>(degree));
  for (int k = 0; k < degree; ++k) perm[std::size_t(k)] = k;
  for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
    std::vector<int> c(static_cast<std::size_t>(degree));
    for (int k = 0; k < degree; ++k) c[std::size_t(k)] = k;
    for (std::size_t a = 0; a < it->size(); ++a)
      c[std::size_t((*it)[a])] = (*it)[(a + 1) % it->size()];
    perm = compose_perm(c, perm);
  }
  return perm;
}

struct PermGroupResult {
  GroupPtr group;
  std::vector<std::vector<int>> element_perms;
};

inline PermGroupResult group_from_permutations(int degree,
                                               const std::vector<std::vector<int>>& generators) {
  if (degree < 0) fail("group: negative degree");
  for (const auto& p : generators) {
    if (int(p.size()) != degree) fail("group: generator degree mismatch");
    std::vector<char> hit(std::size_t(degree), 0);
    for (int v : p) {
      if (v < 0 || v >= degree || hit[std::size_t(v)]) fail("group: generator is not a bijection");
      hit[std::size_t(v)] = 1;
    }
  }
  std::vector<int> id(static_cast<std::size_t>(degree));
  for (int k = 0; k < degree; ++k) id[std::size_t(k)] = k;

  std::vector<std::vector<int>> elems{id};
  std::map<std::vector<int>, int> index{{id, 0}};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& g : generators) {
      std::vector<int> p = compose_perm(elems[i], g);
      if (index.emplace(p, int(elems.size())).second) elems.push_back(std::move(p));
    }
  }
  FiniteGroup g;
  g.n = int(elems.size());
  g.table.resize(std::size_t(g.n) * g.n);
  for (int a = 0; a < g.n; ++a)
    for (int b = 0; b < g.n; ++b) {
      auto it = index.find(compose_perm(elems[std::size_t(a)], elems[std::size_t(b)]));
      if (it == index.end()) fail("group: closure is not closed");
      g.table[std::size_t(a) * g.n + b] = it->second;
    }
  g.labels.resize(std::size_t(g.n));
  for (int a = 0; a < g.n; ++a) g.labels[std::size_t(a)] = cycle_string(elems[std::size_t(a)]);
  g.perms = elems;
  for (const auto& gen : generators) g.declared_gens.push_back(index.at(gen));
  // drop duplicate / identity generator indices, preserving order
  {
    std::vector<int> d;
    for (int x : g.declared_gens)
      if (x != 0 && std::find(d.begin(), d.end(), x) == d.end()) d.push_back(x);
    g.declared_gens = d;
  }
  GroupPtr ptr = detail::finish_group(std::move(g));
  return {ptr, elems};
}

// --- subgroups ----------------------------------------------------------

struct Subgroup {
  GroupPtr parent;
  std::vector<int> elements;  // sorted, always contains 0

  int order() const { return int(elements.size()); }

  bool contains(int g) const {
    return std::binary_search(elements.begin(), elements.end(), g);
  }

  bool is_normal() const {
    for (int x = 0; x < parent->n; ++x)
      for (int h : elements)
        if (!contains(parent->conjugate(x, h))) return false;
    return true;
  }

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return same_group(a.parent, b.parent) && a.elements == b.elements;
  }
  friend bool operator<(const Subgroup& a, const Subgroup& b) { return a.elements < b.elements; }
};

inline Subgroup subgroup_from_elements(GroupPtr g, std::vector<int> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  Subgroup s{std::move(g), std::move(elements)};
  if (s.elements.empty() || s.elements.front() != 0) fail("subgroup: missing identity");
  for (int a : s.elements) {
    if (a < 0 || a >= s.parent->n) fail("subgroup: element out of range");
    if (!s.contains(s.parent->inverse(a))) fail("subgroup: not closed under inverse");
    for (int b : s.elements)
      if (!s.contains(s.parent->mul(a, b))) fail("subgroup: not closed under product");
  }
  return s;
}

inline Subgroup subgroup_generated(GroupPtr g, const std::vector<int>& seeds) {
  auto elems = detail::closure(*g, seeds);
  return Subgroup{std::move(g), std::move(elems)};
}

inline Subgroup trivial_subgroup(GroupPtr g) { return Subgroup{std::move(g), {0}}; }

inline Subgroup full_subgroup(GroupPtr g) {
  std::vector<int> all(std::size_t(g->n));
  for (int i = 0; i < g->n; ++i) all[std::size_t(i)] = i;
  return Subgroup{std::move(g), std::move(all)};
}

inline bool subgroup_contains(const Subgroup& big, const Subgroup& small) {
  for (int x : small.elements)
    if (!big.contains(x)) return false;
  return true;
}

// All subgroups, by closing every generating set of size <= 3. Sufficient
// for the orders in scope (every group of order <= 24 here is 3-generated).
inline std::vector<Subgroup> all_subgroups(const GroupPtr& g) {
  std::set<std::vector<int>> seen;
  const int n = g->n;
  auto try_seed = [&](std::vector<int> seeds) { seen.insert(detail::closure(*g, seeds)); };
  try_seed({});
  for (int a = 1; a < n; ++a) {
    try_seed({a});
    for (int b = a + 1; b < n; ++b) {
      try_seed({a, b});
      for (int c = b + 1; c < n; ++c) try_seed({a, b, c});
    }
  }
  std::vector<Subgroup> out;
  for (const auto& e : seen) out.push_back(Subgroup{g, e});
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    return a.order() != b.order() ? a.order() < b.order() : a.elements < b.elements;
  });
  return out;
}

// --- homomorphisms ------------------------------------------------------

struct GroupHom {
  GroupPtr domain, codomain;
  std::vector<int> map;
  Subgroup kernel;
  Subgroup image;

  int operator()(int g) const { return map[std::size_t(g)]; }
  bool is_injective() const { return kernel.order() == 1; }
  bool is_surjective() const { return image.order() == codomain->n; }
  bool is_identity_map() const {
    if (!same_group(domain, codomain)) return false;
    for (int g = 0; g < domain->n; ++g)
      if (map[std::size_t(g)] != g) return false;
    return true;
  }
};

inline GroupHom hom_from_map(GroupPtr domain, GroupPtr codomain, std::vector<int> map) {
  if (int(map.size()) != domain->n) fail("hom: map size != group order");
  for (int v : map)
    if (v < 0 || v >= codomain->n) fail("hom: image element out of range");
  for (int a = 0; a < domain->n; ++a)
    for (int b = 0; b < domain->n; ++b)
      if (map[std::size_t(domain->mul(a, b))] !=
          codomain->mul(map[std::size_t(a)], map[std::size_t(b)]))
        fail("hom: not a homomorphism at pair (" + domain->label(a) + ", " + domain->label(b) + ")");
  if (map[0] != 0) fail("hom: identity not preserved");
  std::vector<int> ker, im;
  for (int a = 0; a < domain->n; ++a) {
    if (map[std::size_t(a)] == 0) ker.push_back(a);
    im.push_back(map[std::size_t(a)]);
  }
  GroupHom h;
  h.kernel = subgroup_from_elements(domain, std::move(ker));
  h.image = subgroup_from_elements(codomain, std::move(im));
  if (!h.kernel.is_normal()) fail("hom: kernel is not normal (broken table)");
  h.domain = std::move(domain);
  h.codomain = std::move(codomain);
  h.map = std::move(map);
  return h;
}

// Extend generator images to the whole group by breadth-first words.
inline GroupHom hom_from_generator_images(GroupPtr domain, GroupPtr codomain,
                                          const std::vector<int>& gens,
                                          const std::vector<int>& images) {
  if (gens.size() != images.size()) fail("hom: generator/image count mismatch");
  Subgroup gen_span = subgroup_generated(domain, gens);
  if (gen_span.order() != domain->n) fail("hom: generators do not generate the domain");
  std::vector<int> map(std::size_t(domain->n), -1);
  map[0] = 0;
  std::vector<int> frontier{0};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int x : frontier) {
      for (std::size_t k = 0; k < gens.size(); ++k) {
        int y = domain->mul(x, gens[k]);
        int img = codomain->mul(map[std::size_t(x)], images[k]);
        if (map[std::size_t(y)] < 0) {
          map[std::size_t(y)] = img;
          next.push_back(y);
        } else if (map[std::size_t(y)] != img) {
          fail("hom: generator images are inconsistent (not well-defined)");
        }
      }
    }
    frontier = std::move(next);
  }
  for (int v : map)
    if (v < 0) fail("hom: generators do not generate the domain");
  return hom_from_map(std::move(domain), std::move(codomain), std::move(map));
}

inline GroupHom identity_hom(const GroupPtr& g) {
  std::vector<int> m(static_cast<std::size_t>(g->n));
  for (int i = 0; i < g->n; ++i) m[std::size_t(i)] = i;
  return hom_from_map(g, g, std::move(m));
}

inline GroupHom trivial_hom(const GroupPtr& domain, const GroupPtr& codomain) {
  return hom_from_map(domain, codomain, std::vector<int>(std::size_t(domain->n), 0));
}

// psi after phi
inline GroupHom compose(const GroupHom& psi, const GroupHom& phi) {
  if (!same_group(phi.codomain, psi.domain)) fail("hom: compose mismatch");
  std::vector<int> m(static_cast<std::size_t>(phi.domain->n));
  for (int g = 0; g < phi.domain->n; ++g) m[std::size_t(g)] = psi(phi(g));
  return hom_from_map(phi.domain, psi.codomain, std::move(m));
}

inline Subgroup kernel(const GroupHom& f) { return f.kernel; }
inline Subgroup image(const GroupHom& f) { return f.image; }

// --- subgroup realized as its own group ---------------------------------

struct RealizedSubgroup {
  GroupPtr group;              // the subgroup as a FiniteGroup
  std::vector<int> to_parent;  // element i of group = to_parent[i] in parent
  GroupHom inclusion;          // group -> parent
};

inline RealizedSubgroup realize(const Subgroup& s) {
  const auto& parent = *s.parent;
  const int m = s.order();
  std::vector<int> pos(std::size_t(parent.n), -1);
  for (int i = 0; i < m; ++i) pos[std::size_t(s.elements[std::size_t(i)])] = i;
  FiniteGroup g;
  g.n = m;
  g.table.resize(std::size_t(m) * m);
  g.labels.resize(std::size_t(m));
  for (int a = 0; a < m; ++a) {
    g.labels[std::size_t(a)] = parent.label(s.elements[std::size_t(a)]);
    for (int b = 0; b < m; ++b)
      g.table[std::size_t(a) * m + b] =
          pos[std::size_t(parent.mul(s.elements[std::size_t(a)], s.elements[std::size_t(b)]))];
  }
  if (!parent.perms.empty()) {
    g.perms.resize(std::size_t(m));
    for (int a = 0; a < m; ++a) g.perms[std::size_t(a)] = parent.perms[std::size_t(s.elements[std::size_t(a)])];
  }
  GroupPtr ptr = detail::finish_group(std::move(g));
  GroupHom inc = hom_from_map(ptr, s.parent, s.elements);
  return {ptr, s.elements, std::move(inc)};
}

// Factor f through its image: f = inclusion . onto.
struct Factorization {
  RealizedSubgroup image;  // image(f) as its own group
  GroupHom onto;           // domain ->> image group
  GroupHom inclusion;      // image group -> codomain
};

inline Factorization factorize(const GroupHom& f) {
  RealizedSubgroup im = realize(f.image);
  std::vector<int> pos(std::size_t(f.codomain->n), -1);
  for (int i = 0; i < int(im.to_parent.size()); ++i) pos[std::size_t(im.to_parent[std::size_t(i)])] = i;
  std::vector<int> onto_map(static_cast<std::size_t>(f.domain->n));
  for (int g = 0; g < f.domain->n; ++g) onto_map[std::size_t(g)] = pos[std::size_t(f(g))];
  GroupHom onto = hom_from_map(f.domain, im.group, std::move(onto_map));
  GroupHom inc = im.inclusion;
  return {std::move(im), std::move(onto), std::move(inc)};
}

// Restriction of f to a subgroup of the domain, landing in a subgroup of
// the codomain that must contain the image of the restriction.
inline GroupHom restrict_hom_to(const GroupHom& f, const Subgroup& sub_domain,
                                const Subgroup& sub_codomain,
                                const RealizedSubgroup& dom_realized,
                                const RealizedSubgroup& cod_realized) {
  std::vector<int> pos(std::size_t(f.codomain->n), -1);
  for (int i = 0; i < int(cod_realized.to_parent.size()); ++i)
    pos[std::size_t(cod_realized.to_parent[std::size_t(i)])] = i;
  std::vector<int> m(dom_realized.to_parent.size());
  for (std::size_t i = 0; i < dom_realized.to_parent.size(); ++i) {
    int y = f(dom_realized.to_parent[i]);
    if (!sub_codomain.contains(y))
      fail("hom: restriction does not land in the given codomain subgroup");
    m[i] = pos[std::size_t(y)];
  }
  (void)sub_domain;
  return hom_from_map(dom_realized.group, cod_realized.group, std::move(m));
}

inline GroupHom restrict_hom_to(const GroupHom& f, const Subgroup& sub_domain,
                                const Subgroup& sub_codomain) {
  return restrict_hom_to(f, sub_domain, sub_codomain, realize(sub_domain), realize(sub_codomain));
}

// --- cosets -------------------------------------------------------------

// Representatives of left cosets tH, minimal index each, identity first.
inline std::vector<int> left_coset_transversal(const GroupPtr& g, const Subgroup& h) {
  if (!same_group(g, h.parent)) fail("transversal: subgroup of a different group");
  std::vector<char> covered(std::size_t(g->n), 0);
  std::vector<int> reps;
  for (int x = 0; x < g->n; ++x) {
    if (covered[std::size_t(x)]) continue;
    reps.push_back(x);
    for (int s : h.elements) covered[std::size_t(g->mul(x, s))] = 1;
  }
  if (int(reps.size()) * h.order() != g->n) fail("transversal: cosets do not partition");
  return reps;
}

struct DoubleCosetDecomposition {
  GroupPtr ambient;
  Subgroup left, right;
  std::vector<int> representatives;  // minimal index per coset, ascending
  std::vector<int> membership;       // element -> position of its representative
  std::vector<int> sizes;
};

inline DoubleCosetDecomposition double_cosets(const GroupPtr& g, const Subgroup& left,
                                              const Subgroup& right) {
  if (!same_group(g, left.parent) || !same_group(g, right.parent))
    fail("double cosets: subgroup of a different group");
  std::vector<int> membership(std::size_t(g->n), -1);
  std::vector<int> reps, sizes;
  for (int x = 0; x < g->n; ++x) {
    if (membership[std::size_t(x)] >= 0) continue;
    int idx = int(reps.size());
    reps.push_back(x);
    int size = 0;
    for (int a : left.elements)
      for (int b : right.elements) {
        int y = g->mul(g->mul(a, x), b);
        if (membership[std::size_t(y)] < 0) {
          membership[std::size_t(y)] = idx;
          ++size;
        } else if (membership[std::size_t(y)] != idx) {
          fail("double cosets: not a partition");
        }
      }
    sizes.push_back(size);
  }
  int total = 0;
  for (int s : sizes) total += s;
  if (total != g->n) fail("double cosets: sizes do not sum to the group order");
  return {g, left, right, std::move(reps), std::move(membership), std::move(sizes)};
}

// --- products, pullbacks, quotients --------------------------------------

struct DirectProduct {
  GroupPtr group;  // pair (a,b) at index a*|B| + b
  GroupHom proj_a, proj_b, inj_a, inj_b;
};

inline DirectProduct direct_product(const GroupPtr& a, const GroupPtr& b) {
  FiniteGroup g;
  g.n = a->n * b->n;
  g.table.resize(std::size_t(g.n) * g.n);
  g.labels.resize(std::size_t(g.n));
  auto idx = [&](int x, int y) { return x * b->n + y; };
  for (int x1 = 0; x1 < a->n; ++x1)
    for (int y1 = 0; y1 < b->n; ++y1) {
      g.labels[std::size_t(idx(x1, y1))] = "(" + a->label(x1) + "," + b->label(y1) + ")";
      for (int x2 = 0; x2 < a->n; ++x2)
        for (int y2 = 0; y2 < b->n; ++y2)
          g.table[std::size_t(idx(x1, y1)) * g.n + idx(x2, y2)] =
              idx(a->mul(x1, x2), b->mul(y1, y2));
    }
  GroupPtr p = detail::finish_group(std::move(g));
  std::vector<int> pa(static_cast<std::size_t>(p->n)), pb(static_cast<std::size_t>(p->n));
  for (int x = 0; x < a->n; ++x)
    for (int y = 0; y < b->n; ++y) {
      pa[std::size_t(idx(x, y))] = x;
      pb[std::size_t(idx(x, y))] = y;
    }
  std::vector<int> ia(static_cast<std::size_t>(a->n)), ib(static_cast<std::size_t>(b->n));
  for (int x = 0; x < a->n; ++x) ia[std::size_t(x)] = idx(x, 0);
  for (int y = 0; y < b->n; ++y) ib[std::size_t(y)] = idx(0, y);
  return {p, hom_from_map(p, a, std::move(pa)), hom_from_map(p, b, std::move(pb)),
          hom_from_map(a, p, std::move(ia)), hom_from_map(b, p, std::move(ib))};
}

// Fiber product of f and g over their common codomain, realized as a
// subgroup of dom(f) x dom(g) ordered lexicographically by pair index.
struct Pullback {
  GroupPtr group;
  GroupHom p_f;  // -> domain of f
  GroupHom p_g;  // -> domain of g
};

inline Pullback pullback(const GroupHom& f, const GroupHom& g) {
  if (!same_group(f.codomain, g.codomain)) fail("pullback: codomain mismatch");
  DirectProduct dp = direct_product(f.domain, g.domain);
  std::vector<int> members;
  for (int k = 0; k < f.domain->n; ++k)
    for (int h = 0; h < g.domain->n; ++h)
      if (f(k) == g(h)) members.push_back(k * g.domain->n + h);
  Subgroup sub = subgroup_from_elements(dp.group, std::move(members));
  RealizedSubgroup rs = realize(sub);
  GroupHom p_f = compose(dp.proj_a, rs.inclusion);
  GroupHom p_g = compose(dp.proj_b, rs.inclusion);
  for (int x = 0; x < rs.group->n; ++x)
    if (f(p_f(x)) != g(p_g(x))) fail("pullback: square does not commute");
  return {rs.group, std::move(p_f), std::move(p_g)};
}

// k |-> x a(k) x^-1
inline GroupHom conjugate_hom(const GroupHom& a, int x) {
  if (x < 0 || x >= a.codomain->n) fail("conjugate: element out of range");
  std::vector<int> m(static_cast<std::size_t>(a.domain->n));
  for (int k = 0; k < a.domain->n; ++k) m[std::size_t(k)] = a.codomain->conjugate(x, a(k));
  return hom_from_map(a.domain, a.codomain, std::move(m));
}

struct QuotientGroup {
  GroupPtr group;
  GroupHom projection;              // parent ->> quotient
  std::vector<int> representatives; // minimal-index coset representatives
};

inline QuotientGroup quotient_group(const GroupPtr& g, const Subgroup& k) {
  if (!same_group(g, k.parent)) fail("quotient: subgroup of a different group");
  if (!k.is_normal()) fail("quotient: subgroup is not normal");
  std::vector<int> coset_min(std::size_t(g->n), -1);
  std::vector<int> reps;
  for (int x = 0; x < g->n; ++x) {
    if (coset_min[std::size_t(x)] >= 0) continue;
    reps.push_back(x);
    for (int s : k.elements) coset_min[std::size_t(g->mul(x, s))] = x;
  }
  std::vector<int> pos(std::size_t(g->n), -1);
  for (int i = 0; i < int(reps.size()); ++i) pos[std::size_t(reps[std::size_t(i)])] = i;
  const int m = int(reps.size());
  FiniteGroup q;
  q.n = m;
  q.table.resize(std::size_t(m) * m);
  q.labels.resize(std::size_t(m));
  for (int i = 0; i < m; ++i) {
    q.labels[std::size_t(i)] = "[" + g->label(reps[std::size_t(i)]) + "]";
    for (int j = 0; j < m; ++j) {
      int prod = g->mul(reps[std::size_t(i)], reps[std::size_t(j)]);
      q.table[std::size_t(i) * m + j] = pos[std::size_t(coset_min[std::size_t(prod)])];
    }
  }
  GroupPtr qp = detail::finish_group(std::move(q));
  std::vector<int> proj(static_cast<std::size_t>(g->n));
  for (int x = 0; x < g->n; ++x) proj[std::size_t(x)] = pos[std::size_t(coset_min[std::size_t(x)])];
  GroupHom pi = hom_from_map(g, qp, std::move(proj));
  return {qp, std::move(pi), std::move(reps)};
}

}  // namespace indres
