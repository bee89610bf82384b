#include "folcoh/lie_algebra.hpp"

#include "folcoh/errors.hpp"

namespace folcoh {

Vec LieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
  Vec v(dim);
  for (std::size_t k = 0; k < dim; ++k) v[k] = structure(i, j, k);
  return v;
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
  if (x.size() != dim || y.size() != dim)
    throw ValidationError("DimensionMismatch", "bracket argument length != dim");
  Vec v(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      if (y[j] == 0) continue;
      const Scalar f = x[i] * y[j];
      for (std::size_t k = 0; k < dim; ++k) v[k] += f * structure(i, j, k);
    }
  }
  return v;
}

Matrix LieAlgebra::ad(const Vec& x) const {
  if (x.size() != dim) throw ValidationError("DimensionMismatch", "ad argument length != dim");
  Matrix m(dim, dim);
  for (std::size_t j = 0; j < dim; ++j) {
    Vec ej(dim);
    ej[j] = 1;
    m.set_col(j, bracket(x, ej));
  }
  return m;
}

Matrix LieAlgebra::ad_basis(std::size_t i) const {
  Vec x(dim);
  x[i] = 1;
  return ad(x);
}

LieAlgebra make_algebra(std::string name, std::vector<std::string> basis) {
  LieAlgebra g;
  g.name = std::move(name);
  g.dim = basis.size();
  g.basis = std::move(basis);
  g.c.assign(g.dim * g.dim * g.dim, Scalar(0));
  return g;
}

void set_bracket(LieAlgebra& g, std::size_t i, std::size_t j, const Vec& v) {
  if (v.size() != g.dim) throw ValidationError("DimensionMismatch", "bracket value length != dim");
  for (std::size_t k = 0; k < g.dim; ++k) {
    g.c[(i * g.dim + j) * g.dim + k] = v[k];
    g.c[(j * g.dim + i) * g.dim + k] = -v[k];
  }
}

void validate_algebra(const LieAlgebra& g) {
  const std::size_t n = g.dim;
  if (g.basis.size() != n || g.c.size() != n * n * n)
    throw ValidationError("DimensionMismatch", "structure table size does not match dim");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (g.structure(i, j, k) != -g.structure(j, i, k))
          throw ValidationError("AntisymmetryViolation",
                                "c(" + std::to_string(i) + "," + std::to_string(j) + "," +
                                    std::to_string(k) + ") != -c(" + std::to_string(j) + "," +
                                    std::to_string(i) + "," + std::to_string(k) + ")");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t l = j + 1; l < n; ++l) {
        Vec ei(n), ej(n), el(n);
        ei[i] = 1;
        ej[j] = 1;
        el[l] = 1;
        Vec residual = vec_add(g.bracket(ei, g.bracket_basis(j, l)),
                               vec_add(g.bracket(ej, g.bracket_basis(l, i)),
                                       g.bracket(el, g.bracket_basis(i, j))));
        if (!vec_is_zero(residual))
          throw ValidationError("JacobiViolation", "triple (" + g.basis[i] + "," + g.basis[j] +
                                                       "," + g.basis[l] + ") residual " +
                                                       vec_str(residual));
      }
}

ModularCharacter modular_character(const LieAlgebra& g) {
  ModularCharacter mc;
  mc.chi.resize(g.dim);
  for (std::size_t i = 0; i < g.dim; ++i) {
    const Matrix a = g.ad_basis(i);
    Scalar tr = 0;
    for (std::size_t j = 0; j < g.dim; ++j) tr += a(j, j);
    mc.chi[i] = tr;
  }
  mc.unimodular = vec_is_zero(mc.chi);
  return mc;
}

void require_automorphism(const LieAlgebra& g, const Matrix& a, const std::string& what) {
  if (a.rows() != g.dim || a.cols() != g.dim || a.rank() != g.dim)
    throw ValidationError("NotAutomorphism", what + ": matrix not invertible of size dim");
  for (std::size_t i = 0; i < g.dim; ++i)
    for (std::size_t j = i + 1; j < g.dim; ++j) {
      const Vec lhs = a.apply(g.bracket_basis(i, j));
      const Vec rhs = g.bracket(a.col(i), a.col(j));
      if (lhs != rhs)
        throw ValidationError("NotAutomorphism", what + ": image of [" + g.basis[i] + "," +
                                                     g.basis[j] + "] is not the bracket of images");
    }
}

SplitCoords split_coords(const ReductivePair& pair) {
  SplitCoords sc;
  sc.k_dim = pair.k_basis.size();
  sc.p_dim = pair.p_basis.size();
  std::vector<Vec> cols = pair.k_basis;
  cols.insert(cols.end(), pair.p_basis.begin(), pair.p_basis.end());
  sc.basis = Matrix::from_columns(pair.g.dim, cols);
  const auto inv = sc.basis.inverse();
  if (!inv)
    throw ValidationError("NotComplement", "k_basis and p_basis do not split the algebra");
  sc.basis_inv = *inv;
  return sc;
}

Vec SplitCoords::k_part(const Vec& ambient) const {
  const Vec s = basis_inv.apply(ambient);
  return Vec(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(k_dim));
}

Vec SplitCoords::p_part(const Vec& ambient) const {
  const Vec s = basis_inv.apply(ambient);
  return Vec(s.begin() + static_cast<std::ptrdiff_t>(k_dim), s.end());
}

Matrix ad_on_p(const ReductivePair& pair, const SplitCoords& sc, const Vec& x) {
  Matrix m(sc.p_dim, sc.p_dim);
  for (std::size_t j = 0; j < sc.p_dim; ++j)
    m.set_col(j, sc.p_part(pair.g.bracket(x, pair.p_basis[j])));
  return m;
}

Matrix generator_on_p(const ReductivePair& pair, const SplitCoords& sc, const Matrix& gen) {
  Matrix m(sc.p_dim, sc.p_dim);
  for (std::size_t j = 0; j < sc.p_dim; ++j)
    m.set_col(j, sc.p_part(gen.apply(pair.p_basis[j])));
  return m;
}

void validate_reductive_pair(const ReductivePair& pair) {
  const LieAlgebra& g = pair.g;
  validate_algebra(g);
  if (pair.k_basis.size() + pair.p_basis.size() != g.dim)
    throw ValidationError("NotComplement", "k and p dimensions do not sum to dim");
  for (const auto& v : pair.k_basis)
    if (v.size() != g.dim) throw ValidationError("DimensionMismatch", "k_basis vector length");
  for (const auto& v : pair.p_basis)
    if (v.size() != g.dim) throw ValidationError("DimensionMismatch", "p_basis vector length");
  split_coords(pair); // throws NotComplement unless the union is a basis

  for (std::size_t a = 0; a < pair.k_basis.size(); ++a)
    for (std::size_t b = a + 1; b < pair.k_basis.size(); ++b)
      if (!express_in_span(g.dim, pair.k_basis, g.bracket(pair.k_basis[a], pair.k_basis[b])))
        throw ValidationError("NotSubalgebra", "[k_" + std::to_string(a) + ", k_" +
                                                   std::to_string(b) + "] leaves span(k)");

  for (std::size_t a = 0; a < pair.k_basis.size(); ++a)
    for (std::size_t b = 0; b < pair.p_basis.size(); ++b)
      if (!express_in_span(g.dim, pair.p_basis, g.bracket(pair.k_basis[a], pair.p_basis[b])))
        throw ValidationError("NotAdInvariant", "bracket witness [k_" + std::to_string(a) +
                                                    ", p_" + std::to_string(b) +
                                                    "] leaves span(p)");

  for (std::size_t gi = 0; gi < pair.generators.size(); ++gi) {
    const Matrix& a = pair.generators[gi];
    require_automorphism(g, a, "generator " + std::to_string(gi));
    for (const auto& kv : pair.k_basis)
      if (!express_in_span(g.dim, pair.k_basis, a.apply(kv)))
        throw ValidationError("NotAdInvariant",
                              "generator " + std::to_string(gi) + " does not preserve k");
    for (const auto& pv : pair.p_basis)
      if (!express_in_span(g.dim, pair.p_basis, a.apply(pv)))
        throw ValidationError("NotAdInvariant",
                              "generator " + std::to_string(gi) + " does not preserve p");
  }
}

std::vector<Vec> find_reductive_complement(const LieAlgebra& g, const std::vector<Vec>& k_basis,
                                           const std::vector<Matrix>& generators) {
  const std::size_t n = g.dim;
  const std::size_t dk = k_basis.size();
  if (dk == 0) {
    std::vector<Vec> p;
    for (std::size_t i = 0; i < n; ++i) {
      Vec e(n);
      e[i] = 1;
      p.push_back(std::move(e));
    }
    return p;
  }
  for (std::size_t a = 0; a < dk; ++a)
    for (std::size_t b = a + 1; b < dk; ++b)
      if (!express_in_span(n, k_basis, g.bracket(k_basis[a], k_basis[b])))
        throw ValidationError("NotSubalgebra", "k is not closed under the bracket");

  // Unknown: Q (dk x n), P = K Q a projection onto span(k); p = ker P.
  // Constraints are linear: Q K = I, and P commutes with every ad(k_a) and
  // every generator (each preserves k, so commuting is exactly p-invariance).
  const Matrix K = Matrix::from_columns(n, k_basis);
  std::vector<Matrix> ops;
  for (const auto& kv : k_basis) ops.push_back(g.ad(kv));
  for (const auto& gen : generators) ops.push_back(gen);

  std::vector<Vec> eq_rows;
  Vec rhs;
  auto q_index = [n](std::size_t alpha, std::size_t beta) { return alpha * n + beta; };

  for (std::size_t alpha = 0; alpha < dk; ++alpha)
    for (std::size_t gamma = 0; gamma < dk; ++gamma) {
      Vec row(dk * n);
      for (std::size_t beta = 0; beta < n; ++beta) row[q_index(alpha, beta)] = K(beta, gamma);
      eq_rows.push_back(std::move(row));
      rhs.push_back(alpha == gamma ? Scalar(1) : Scalar(0));
    }

  for (const auto& m : ops) {
    const Matrix mk = m * K;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Vec row(dk * n);
        for (std::size_t alpha = 0; alpha < dk; ++alpha) {
          for (std::size_t beta = 0; beta < n; ++beta)
            row[q_index(alpha, beta)] += K(i, alpha) * m(beta, j);
          row[q_index(alpha, j)] -= mk(i, alpha);
        }
        eq_rows.push_back(std::move(row));
        rhs.push_back(Scalar(0));
      }
  }

  const auto q = Matrix::from_rows(dk * n, eq_rows).solve(rhs);
  if (!q)
    throw ValidationError("NoComplement", "invariance constraints for a complement of k are unsolvable");

  Matrix Q(dk, n);
  for (std::size_t alpha = 0; alpha < dk; ++alpha)
    for (std::size_t beta = 0; beta < n; ++beta) Q(alpha, beta) = (*q)[q_index(alpha, beta)];
  const Matrix P = K * Q;
  return echelon_basis(n, P.kernel_basis());
}

} // namespace folcoh
