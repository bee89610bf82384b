#pragma once

// Hand-written test fixtures. These are deliberately constructed here, term by
// term, independent of the library's catalog, so catalog regressions and unit
// tests cannot share a transcription mistake.

#include <algorithm>
#include <set>

#include "folcoh/groups.hpp"
#include "folcoh/lie_algebra.hpp"

namespace fixtures {

using folcoh::LieAlgebra;
using folcoh::Matrix;
using folcoh::ReductivePair;
using folcoh::Scalar;
using folcoh::Vec;

inline LieAlgebra abelian(std::size_t n) {
  std::vector<std::string> basis;
  for (std::size_t i = 1; i <= n; ++i) basis.push_back("e" + std::to_string(i));
  return folcoh::make_algebra("abelian" + std::to_string(n), basis);
}

// [X,Y] = 2Y, [X,Z] = -2Z, [Y,Z] = X
inline LieAlgebra sl2() {
  auto g = folcoh::make_algebra("sl2", {"X", "Y", "Z"});
  folcoh::set_bracket(g, 0, 1, {Scalar(0), Scalar(2), Scalar(0)});
  folcoh::set_bracket(g, 0, 2, {Scalar(0), Scalar(0), Scalar(-2)});
  folcoh::set_bracket(g, 1, 2, {Scalar(1), Scalar(0), Scalar(0)});
  return g;
}

// [H,S] = S (affine line)
inline LieAlgebra ga1() {
  auto g = folcoh::make_algebra("ga1", {"H", "S"});
  folcoh::set_bracket(g, 0, 1, {Scalar(0), Scalar(1)});
  return g;
}

// [P,Q] = Z', center Z'
inline LieAlgebra heisenberg3() {
  auto g = folcoh::make_algebra("heisenberg3", {"P", "Q", "Z'"});
  folcoh::set_bracket(g, 0, 1, {Scalar(0), Scalar(0), Scalar(1)});
  return g;
}

// [E1,E2] = E3, [E2,E3] = E1, [E3,E1] = E2
inline LieAlgebra su2() {
  auto g = folcoh::make_algebra("su2", {"E1", "E2", "E3"});
  folcoh::set_bracket(g, 0, 1, {Scalar(0), Scalar(0), Scalar(1)});
  folcoh::set_bracket(g, 1, 2, {Scalar(1), Scalar(0), Scalar(0)});
  folcoh::set_bracket(g, 2, 0, {Scalar(0), Scalar(1), Scalar(0)});
  return g;
}

inline std::vector<Vec> sl2_k_basis() { return {{Scalar(0), Scalar(1), Scalar(-1)}}; }
inline std::vector<Vec> sl2_p_basis() {
  return {{Scalar(1), Scalar(0), Scalar(0)}, {Scalar(0), Scalar(1), Scalar(1)}};
}

inline ReductivePair sl2_so2_pair() {
  ReductivePair pair;
  pair.name = "sl2_so2_pair";
  pair.g = sl2();
  pair.k_basis = sl2_k_basis();
  pair.p_basis = sl2_p_basis();
  return pair;
}

inline ReductivePair trivial_pair(const LieAlgebra& g, std::string name) {
  ReductivePair pair;
  pair.name = std::move(name);
  pair.g = g;
  for (std::size_t i = 0; i < g.dim; ++i) {
    Vec e(g.dim);
    e[i] = 1;
    pair.p_basis.push_back(std::move(e));
  }
  return pair;
}

// Ad of the rotation through (cos, sin) = (3/5, 4/5) acting on sl2 by
// conjugation, expanded by hand in the (X, Y, Z) basis.
inline Matrix sl2_rotation_ad() {
  Matrix a(3, 3);
  a.set_col(0, {Scalar(-7, 25), Scalar(24, 25), Scalar(24, 25)});
  a.set_col(1, {Scalar(-12, 25), Scalar(9, 25), Scalar(-16, 25)});
  a.set_col(2, {Scalar(-12, 25), Scalar(-16, 25), Scalar(9, 25)});
  return a;
}

// Permutations as index arrays, composed as mappings: (f o g)(x) = f(g(x)).
using Perm = std::vector<std::size_t>;

inline Perm perm_compose(const Perm& f, const Perm& g) {
  Perm out(f.size());
  for (std::size_t x = 0; x < f.size(); ++x) out[x] = f[g[x]];
  return out;
}

inline std::vector<Perm> all_perms(std::size_t n) {
  Perm p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  std::vector<Perm> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline std::size_t perm_index(const std::vector<Perm>& perms, const Perm& p) {
  for (std::size_t i = 0; i < perms.size(); ++i)
    if (perms[i] == p) return i;
  throw std::runtime_error("perm_index: not a permutation of the list");
}

// Full symmetric group on n letters, elements in lexicographic order, with
// the permutation-matrix action when asked for.
inline folcoh::FiniteGroup symmetric_group(std::size_t n, bool with_action = false) {
  const auto perms = all_perms(n);
  folcoh::FiniteGroup g;
  g.name = "s" + std::to_string(n);
  g.order = perms.size();
  g.identity = 0;
  g.table.assign(g.order, std::vector<std::size_t>(g.order));
  for (std::size_t i = 0; i < g.order; ++i)
    for (std::size_t j = 0; j < g.order; ++j)
      g.table[i][j] = perm_index(perms, perm_compose(perms[i], perms[j]));
  if (with_action)
    for (const Perm& p : perms) {
      Matrix m(n, n);
      for (std::size_t x = 0; x < n; ++x) m(p[x], x) = 1;
      g.action.push_back(m);
    }
  return g;
}

inline folcoh::FiniteGroup cyclic_group(std::size_t n) {
  folcoh::FiniteGroup g;
  g.name = "z" + std::to_string(n);
  g.order = n;
  g.identity = 0;
  g.table.assign(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g.table[i][j] = (i + j) % n;
  return g;
}

inline std::vector<std::size_t> subgroup_closure(const folcoh::FiniteGroup& g,
                                                 const std::vector<std::size_t>& gens) {
  std::set<std::size_t> s(gens.begin(), gens.end());
  s.insert(g.identity);
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<std::size_t> snap(s.begin(), s.end());
    for (const std::size_t a : snap)
      for (const std::size_t b : snap)
        if (s.insert(g.table[a][b]).second) grew = true;
  }
  return {s.begin(), s.end()};
}

// [H,S] = S plus a central direction T; k = span(H,S) is a non-unimodular
// isotropy algebra with p = span(T) as a legitimate complement.
inline ReductivePair affine_isotropy_pair() {
  auto g = folcoh::make_algebra("ga1+line", {"H", "S", "T"});
  folcoh::set_bracket(g, 0, 1, {Scalar(0), Scalar(1), Scalar(0)});
  ReductivePair pair;
  pair.name = "affine_isotropy";
  pair.g = g;
  pair.k_basis = {{Scalar(1), Scalar(0), Scalar(0)}, {Scalar(0), Scalar(1), Scalar(0)}};
  pair.p_basis = {{Scalar(0), Scalar(0), Scalar(1)}};
  return pair;
}

} // namespace fixtures
