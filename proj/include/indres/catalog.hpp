// The built-in desk-scale catalog: ten groups of order <= 12, the
// homomorphisms between them used by the verification suite (identities,
// inclusions, surjections, and non-injective non-surjective composites),
// and the representation constructors trivial / regular / permutation /
// random2.

#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "indres/io.hpp"
#include "indres/rep.hpp"

namespace indres {

// Deterministic 64-bit string hash for seeding per-object generators.
inline std::uint64_t fnv1a(const std::string& s, std::uint64_t seed = 0) {
  std::uint64_t h = 1469598103934665603ull ^ seed;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
  std::uint64_t z = a + 0x9e3779b97f4a7c15ull + b;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

namespace detail {

inline GroupPtr make_q8() {
  // elements (unit, sign): index = unit*2 + sign with units 1,i,j,k
  static const int unit_prod[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign_prod[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  // sign_prod[u1][u2]: 1 when the unit product picks up a minus
  // (i*i = j*j = k*k = -1, j*i = -k, k*j = -i, i*k = -j)
  std::vector<std::vector<int>> table(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int u1 = a / 2, s1 = a % 2, u2 = b / 2, s2 = b % 2;
      int u = unit_prod[u1][u2];
      int s = (s1 + s2 + sign_prod[u1][u2]) % 2;
      table[std::size_t(a)][std::size_t(b)] = u * 2 + s;
    }
  std::vector<std::string> labels = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  GroupPtr base = group_from_cayley(table, labels);
  FiniteGroup g = *base;
  g.declared_gens = {2, 4};  // i, j
  g.gens.clear();
  return finish_group(std::move(g));
}

}  // namespace detail

struct Catalog {
  std::map<std::string, GroupPtr> groups;
  std::vector<std::string> group_order;  // insertion order for stable listings
  std::map<std::string, GroupHom> homs;
  std::vector<std::string> hom_order;

  const GroupPtr& group(const std::string& name) const {
    auto it = groups.find(name);
    if (it == groups.end()) fail("catalog: unknown group '" + name + "'");
    return it->second;
  }
  const GroupHom& hom(const std::string& name) const {
    auto it = homs.find(name);
    if (it == homs.end()) fail("catalog: unknown homomorphism '" + name + "'");
    return it->second;
  }
};

inline int element_by_perm(const GroupPtr& g, const std::vector<int>& perm) {
  for (int i = 0; i < g->n; ++i)
    if (g->perms[std::size_t(i)] == perm) return i;
  fail("catalog: permutation not found in group");
}

inline Catalog builtin_catalog() {
  Catalog c;
  auto add_group = [&](const std::string& name, GroupPtr g) {
    c.groups.emplace(name, std::move(g));
    c.group_order.push_back(name);
  };
  auto cyclic = [&](int n) {
    std::vector<int> rot(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) rot[std::size_t(i)] = (i + 1) % n;
    return group_from_permutations(n, {rot}).group;
  };
  add_group("C1", group_from_permutations(1, {}).group);
  add_group("C2", cyclic(2));
  add_group("C3", cyclic(3));
  add_group("C4", cyclic(4));
  add_group("C6", cyclic(6));
  add_group("V4", group_from_permutations(4, {parse_cycles("(0 1)(2 3)", 4),
                                              parse_cycles("(0 2)(1 3)", 4)}).group);
  add_group("S3", group_from_permutations(3, {parse_cycles("(0 1)", 3),
                                              parse_cycles("(0 1 2)", 3)}).group);
  add_group("D4", group_from_permutations(4, {parse_cycles("(0 1 2 3)", 4),
                                              parse_cycles("(1 3)", 4)}).group);
  add_group("Q8", detail::make_q8());
  add_group("A4", group_from_permutations(4, {parse_cycles("(0 1 2)", 4),
                                              parse_cycles("(0 1)(2 3)", 4)}).group);

  auto add_hom = [&](const std::string& name, GroupHom h) {
    c.homs.emplace(name, std::move(h));
    c.hom_order.push_back(name);
  };
  const GroupPtr &c1 = c.group("C1"), &c2 = c.group("C2"), &c3 = c.group("C3"),
                 &c4 = c.group("C4"), &c6 = c.group("C6"), &v4 = c.group("V4"),
                 &s3 = c.group("S3"), &d4 = c.group("D4"), &q8 = c.group("Q8"),
                 &a4 = c.group("A4");
  int s3_3cyc = element_by_perm(s3, parse_cycles("(0 1 2)", 3));
  int s3_swap = element_by_perm(s3, parse_cycles("(0 1)", 3));

  add_hom("id_C1", identity_hom(c1));
  add_hom("id_C2", identity_hom(c2));
  add_hom("id_S3", identity_hom(s3));
  // inclusions of subgroups
  add_hom("incl_A3_S3", hom_from_generator_images(c3, s3, {1}, {s3_3cyc}));
  add_hom("incl_C2_C4", hom_from_generator_images(c2, c4, {1}, {2}));
  // surjections
  add_hom("sign_S3_C2", hom_from_generator_images(s3, c2, s3->declared_gens, {1, 0}));
  add_hom("proj_C4_C2", hom_from_generator_images(c4, c2, {1}, {1}));
  add_hom("proj_C6_C3", hom_from_generator_images(c6, c3, {1}, {1}));
  add_hom("proj_D4_V4", hom_from_generator_images(d4, v4, d4->declared_gens, {1, 2}));
  add_hom("proj_Q8_V4", hom_from_generator_images(q8, v4, q8->declared_gens, {1, 2}));
  add_hom("proj_A4_C3", hom_from_generator_images(a4, c3, a4->declared_gens, {1, 0}));
  add_hom("proj_V4_C2", hom_from_generator_images(v4, c2, v4->declared_gens, {1, 0}));
  add_hom("triv_C2_C1", trivial_hom(c2, c1));
  // non-injective, non-surjective composites
  add_hom("sign_S3_C4", hom_from_generator_images(s3, c4, s3->declared_gens, {2, 0}));
  add_hom("emb_C6_S3", hom_from_generator_images(c6, s3, {1}, {s3_3cyc}));
  add_hom("emb_C4_S3", hom_from_generator_images(c4, s3, {1}, {s3_swap}));
  return c;
}

// --- representation constructors -------------------------------------------

// 1-dimensional characters over f, found by assigning roots of unity to the
// generators and keeping the assignments that extend to homomorphisms.
inline std::vector<Representation> one_dim_characters(const GroupPtr& g,
                                                      const FieldDescriptor& f) {
  std::vector<FieldScalar> roots;
  if (f.is_rationals()) {
    roots = {FieldScalar::one(f), -FieldScalar::one(f)};
  } else {
    for (std::uint64_t r = 1; r < f.characteristic; ++r)
      roots.push_back(FieldScalar::from_int(f, long(r)));
  }
  const std::vector<int>& gens = g->gens;
  std::vector<Representation> out;
  if (gens.empty()) {
    out.push_back(trivial_rep(g, f, 1));
    return out;
  }
  std::vector<std::size_t> pick(gens.size(), 0);
  while (true) {
    std::vector<Matrix> gen_mats;
    for (std::size_t k = 0; k < gens.size(); ++k) {
      Matrix m(1, 1, f);
      m.at(0, 0) = roots[pick[k]];
      gen_mats.push_back(std::move(m));
    }
    try {
      out.push_back(rep_from_generator_matrices(g, f, gens, gen_mats));
    } catch (const std::exception&) {
      // assignment violates a relation; skip it
    }
    std::size_t pos = 0;
    while (pos < pick.size()) {
      if (++pick[pos] < roots.size()) break;
      pick[pos] = 0;
      ++pos;
    }
    if (pos == pick.size()) break;
  }
  return out;
}

// A pseudo-random validated 2-dimensional representation: pick a base
// representation (a 2x2 rotation block for cyclic groups when the order
// allows, otherwise a direct sum of two 1-dimensional characters) and
// conjugate it by a random invertible change of basis.
inline Representation random2_rep(const GroupPtr& g, const FieldDescriptor& f,
                                  std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Representation> candidates;
  // rotation-style blocks for single-generator groups
  if (g->gens.size() == 1) {
    const long specs[3][4] = {{3, 0, -1, -1}, {4, 0, -1, 0}, {6, 0, -1, 1}};
    for (const auto& s : specs) {
      if (g->n != int(s[0])) continue;
      Matrix m(2, 2, f);
      m.at(0, 0) = FieldScalar::from_int(f, s[1]);
      m.at(0, 1) = FieldScalar::from_int(f, s[2]);
      m.at(1, 0) = FieldScalar::one(f);
      m.at(1, 1) = FieldScalar::from_int(f, s[3]);
      try {
        candidates.push_back(rep_from_generator_matrices(g, f, g->gens, {m}));
      } catch (const std::exception&) {
      }
    }
  }
  std::vector<Representation> chars = one_dim_characters(g, f);
  for (std::size_t i = 0; i < chars.size(); ++i)
    for (std::size_t j = 0; j < chars.size(); ++j)
      candidates.push_back(direct_sum(g, f, {chars[i], chars[j]}).rep);
  const Representation& base = candidates[rng() % candidates.size()];

  Matrix t(2, 2, f);
  do {
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        long v = f.is_rationals() ? long(rng() % 7) - 3 : long(rng() % f.characteristic);
        t.at(i, j) = FieldScalar::from_int(f, v);
      }
  } while (!is_invertible(t));
  Matrix tinv = *inverse(t);
  std::vector<Matrix> mats;
  mats.reserve(std::size_t(g->n));
  for (int x = 0; x < g->n; ++x) mats.push_back(t * base.of(x) * tinv);
  return make_representation(g, f, std::move(mats));
}

// Construct a catalog representation by kind name. random2 is seeded
// deterministically from (suite seed, tag).
inline Representation catalog_rep(const std::string& kind, const GroupPtr& g,
                                  const FieldDescriptor& f, const std::string& tag,
                                  std::uint64_t suite_seed) {
  if (kind == "trivial") return trivial_rep(g, f, 1);
  if (kind == "regular") return regular_rep(g, f);
  if (kind == "permutation") {
    if (!g->perms.empty()) return permutation_rep(g, f, g->perms);
    // no defining permutation action: fall back to left translation
    std::vector<std::vector<int>> action(std::size_t(g->n), std::vector<int>(std::size_t(g->n)));
    for (int x = 0; x < g->n; ++x)
      for (int h = 0; h < g->n; ++h) action[std::size_t(x)][std::size_t(h)] = g->mul(x, h);
    return permutation_rep(g, f, action);
  }
  if (kind == "random2") return random2_rep(g, f, mix_seed(suite_seed, fnv1a(tag)));
  fail("catalog: unknown representation kind '" + kind + "' (want trivial, regular, "
       "permutation, random2)");
}

}  // namespace indres
