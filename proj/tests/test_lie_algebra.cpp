#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "folcoh/errors.hpp"
#include "folcoh/lie_algebra.hpp"
#include "oracles.hpp"

using namespace folcoh;

namespace {

// Oracle: column j of ad_X assembled by direct structure-constant expansion,
// bypassing LieAlgebra::bracket entirely.
Matrix oracle_ad(const LieAlgebra& g, const Vec& x) {
  Matrix m(g.dim, g.dim);
  for (std::size_t j = 0; j < g.dim; ++j)
    for (std::size_t k = 0; k < g.dim; ++k) {
      Scalar s = 0;
      for (std::size_t i = 0; i < g.dim; ++i) s += x[i] * g.structure(i, j, k);
      m(k, j) = s;
    }
  return m;
}

std::string kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const ValidationError& e) {
    return e.kind();
  }
  return "";
}

} // namespace

TEST_CASE("catalogued algebras satisfy the axioms") {
  for (const auto& g : {fixtures::abelian(3), fixtures::sl2(), fixtures::ga1(),
                        fixtures::heisenberg3(), fixtures::su2()})
    CHECK_NOTHROW(validate_algebra(g));
}

TEST_CASE("axiom violations are reported by kind") {
  LieAlgebra bad = fixtures::abelian(3);
  bad.c[(1 * 3 + 2) * 3 + 1] = 1;
  bad.c[(2 * 3 + 1) * 3 + 1] = 1; // same sign on both orders
  CHECK(kind_of([&] { validate_algebra(bad); }) == "AntisymmetryViolation");

  LieAlgebra nonjacobi = fixtures::abelian(3);
  set_bracket(nonjacobi, 0, 1, {Scalar(1), Scalar(0), Scalar(0)});
  set_bracket(nonjacobi, 1, 2, {Scalar(0), Scalar(1), Scalar(0)});
  CHECK(kind_of([&] { validate_algebra(nonjacobi); }) == "JacobiViolation");
}

TEST_CASE("ad matrices match the expansion oracle") {
  oracle::RatGen gen(808);
  for (const auto& g : {fixtures::sl2(), fixtures::ga1(), fixtures::heisenberg3(),
                        fixtures::su2()})
    for (int t = 0; t < 10; ++t) {
      const Vec x = gen.vec(g.dim);
      CHECK(g.ad(x) == oracle_ad(g, x));
    }
}

TEST_CASE("ad on specific elements") {
  CHECK(fixtures::abelian(3).ad({Scalar(1), Scalar(2), Scalar(3)}).is_zero());

  // ga(R), X = H: only action is S -> S.
  Matrix adH = fixtures::ga1().ad_basis(0);
  Matrix expected(2, 2);
  expected(1, 1) = 1;
  CHECK(adH == expected);

  // sl2, X = first basis vector: diagonal-free columns, trace 0.
  const Matrix adX = fixtures::sl2().ad_basis(0);
  CHECK(adX(0, 0) + adX(1, 1) + adX(2, 2) == 0);
  CHECK(adX.col(1) == Vec{Scalar(0), Scalar(2), Scalar(0)});
  CHECK(adX.col(2) == Vec{Scalar(0), Scalar(0), Scalar(-2)});
}

TEST_CASE("ad is a Lie algebra morphism (operator Jacobi)") {
  for (const auto& g : {fixtures::sl2(), fixtures::ga1(), fixtures::heisenberg3(),
                        fixtures::su2()})
    for (std::size_t i = 0; i < g.dim; ++i)
      for (std::size_t j = i + 1; j < g.dim; ++j) {
        const Matrix lhs = g.ad(g.bracket_basis(i, j));
        const Matrix rhs = g.ad_basis(i) * g.ad_basis(j) - g.ad_basis(j) * g.ad_basis(i);
        CHECK(lhs == rhs);
      }
}

TEST_CASE("modular characters") {
  CHECK(modular_character(fixtures::abelian(4)).unimodular);
  CHECK(modular_character(fixtures::sl2()).unimodular);
  CHECK(modular_character(fixtures::su2()).unimodular);
  CHECK(modular_character(fixtures::heisenberg3()).unimodular);

  const auto ga = modular_character(fixtures::ga1());
  CHECK(ga.chi == Vec{Scalar(1), Scalar(0)});
  CHECK(!ga.unimodular);
}

TEST_CASE("the character kills brackets") {
  for (const auto& g : {fixtures::sl2(), fixtures::ga1(), fixtures::heisenberg3(),
                        fixtures::su2()}) {
    const auto mc = modular_character(g);
    for (std::size_t i = 0; i < g.dim; ++i)
      for (std::size_t j = 0; j < g.dim; ++j) {
        const Vec b = g.bracket_basis(i, j);
        Scalar v = 0;
        for (std::size_t k = 0; k < g.dim; ++k) v += mc.chi[k] * b[k];
        CHECK(v == 0);
      }
  }
}

TEST_CASE("reductive pair validation") {
  auto pair = fixtures::sl2_so2_pair();
  CHECK_NOTHROW(validate_reductive_pair(pair));

  for (const auto& g : {fixtures::sl2(), fixtures::ga1(), fixtures::heisenberg3()})
    CHECK_NOTHROW(validate_reductive_pair(fixtures::trivial_pair(g, "t")));

  ReductivePair bad = pair;
  bad.p_basis = {{Scalar(1), Scalar(0), Scalar(0)}, {Scalar(0), Scalar(1), Scalar(0)}};
  CHECK(kind_of([&] { validate_reductive_pair(bad); }) == "NotAdInvariant");

  ReductivePair notsub = pair;
  notsub.k_basis = {{Scalar(0), Scalar(1), Scalar(0)}, {Scalar(0), Scalar(0), Scalar(1)}};
  notsub.p_basis = {{Scalar(1), Scalar(0), Scalar(0)}};
  CHECK(kind_of([&] { validate_reductive_pair(notsub); }) == "NotSubalgebra");

  ReductivePair degenerate = pair;
  degenerate.p_basis = {{Scalar(0), Scalar(2), Scalar(-2)}, {Scalar(1), Scalar(0), Scalar(0)}};
  CHECK(kind_of([&] { validate_reductive_pair(degenerate); }) == "NotComplement");
}

TEST_CASE("generators are validated as automorphisms preserving the split") {
  auto pair = fixtures::sl2_so2_pair();
  pair.generators.push_back(fixtures::sl2_rotation_ad());
  CHECK_NOTHROW(validate_reductive_pair(pair));

  Matrix not_auto = Matrix::identity(3);
  not_auto(0, 0) = 2;
  ReductivePair bad = pair;
  bad.generators = {not_auto};
  CHECK(kind_of([&] { validate_reductive_pair(bad); }) == "NotAutomorphism");
}

TEST_CASE("automorphism checker on its own") {
  const auto g = fixtures::sl2();
  CHECK_NOTHROW(require_automorphism(g, fixtures::sl2_rotation_ad(), "rotation"));
  CHECK_NOTHROW(require_automorphism(g, Matrix::identity(3), "id"));
  Matrix bad = Matrix::identity(3);
  bad(0, 0) = 2;
  CHECK(kind_of([&] { require_automorphism(g, bad, "diag"); }) == "NotAutomorphism");
}

TEST_CASE("split coordinates recombine") {
  const auto pair = fixtures::sl2_so2_pair();
  const auto sc = split_coords(pair);
  const Vec v = {Scalar(3), Scalar(-1, 2), Scalar(5)};
  const Vec kc = sc.k_part(v), pc = sc.p_part(v);
  Vec rebuilt(3);
  for (std::size_t a = 0; a < kc.size(); ++a)
    rebuilt = vec_add(rebuilt, vec_scale(kc[a], pair.k_basis[a]));
  for (std::size_t b = 0; b < pc.size(); ++b)
    rebuilt = vec_add(rebuilt, vec_scale(pc[b], pair.p_basis[b]));
  CHECK(rebuilt == v);
}

TEST_CASE("find_reductive_complement on the hyperbolic-plane pair") {
  const auto g = fixtures::sl2();
  const auto p = find_reductive_complement(g, fixtures::sl2_k_basis(), {});
  CHECK(p == fixtures::sl2_p_basis());

  ReductivePair pair;
  pair.g = g;
  pair.k_basis = fixtures::sl2_k_basis();
  pair.p_basis = p;
  CHECK_NOTHROW(validate_reductive_pair(pair));
}

TEST_CASE("find_reductive_complement easy cases") {
  // Central k: any complement works; the deterministic answer is span(P,Q).
  const auto h = fixtures::heisenberg3();
  const auto p = find_reductive_complement(h, {{Scalar(0), Scalar(0), Scalar(1)}}, {});
  CHECK(p == std::vector<Vec>{{Scalar(1), Scalar(0), Scalar(0)}, {Scalar(0), Scalar(1), Scalar(0)}});

  // Empty k: the standard basis.
  const auto full = find_reductive_complement(fixtures::ga1(), {}, {});
  CHECK(full == std::vector<Vec>{{Scalar(1), Scalar(0)}, {Scalar(0), Scalar(1)}});
}

TEST_CASE("find_reductive_complement reports unsolvable constraints") {
  // ga(R) with k = span(S): ad(S) maps any complement candidate onto S.
  const auto g = fixtures::ga1();
  CHECK(kind_of([&] {
          find_reductive_complement(g, {{Scalar(0), Scalar(1)}}, {});
        }) == "NoComplement");
}

TEST_CASE("complement finder honors generator constraints") {
  // Abelian R^3, k = span(e3). Without generators the complement is span(e1,e2);
  // it stays valid for a generator that preserves that plane.
  const auto g = fixtures::abelian(3);
  Matrix swap12(3, 3);
  swap12(0, 1) = 1;
  swap12(1, 0) = 1;
  swap12(2, 2) = 1;
  const auto p = find_reductive_complement(g, {{Scalar(0), Scalar(0), Scalar(1)}}, {swap12});
  CHECK(p == std::vector<Vec>{{Scalar(1), Scalar(0), Scalar(0)}, {Scalar(0), Scalar(1), Scalar(0)}});

  ReductivePair pair;
  pair.g = g;
  pair.k_basis = {{Scalar(0), Scalar(0), Scalar(1)}};
  pair.p_basis = p;
  pair.generators = {swap12};
  CHECK_NOTHROW(validate_reductive_pair(pair));
}
