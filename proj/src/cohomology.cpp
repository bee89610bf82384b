#include "folcoh/cohomology.hpp"

#include <string>

#include "folcoh/errors.hpp"
#include "folcoh/exterior.hpp"

namespace folcoh {

CoefficientModule trivial_module(std::size_t n, std::size_t m) {
  CoefficientModule v;
  v.name = "trivial";
  v.dim = m;
  v.rho.assign(n, Matrix(m, m));
  return v;
}

CoefficientModule adjoint_module(const LieAlgebra& g) {
  CoefficientModule v;
  v.name = "adjoint";
  v.dim = g.dim;
  for (std::size_t i = 0; i < g.dim; ++i) v.rho.push_back(g.ad_basis(i));
  return v;
}

Matrix module_action(const CoefficientModule& v, const Vec& x) {
  if (x.size() != v.rho.size()) throw Error("module_action: dimension mismatch");
  Matrix out(v.dim, v.dim);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0) out = out + v.rho[i].scaled(x[i]);
  return out;
}

void validate_module(const LieAlgebra& g, const CoefficientModule& v) {
  if (v.rho.size() != g.dim)
    throw ValidationError("DimensionMismatch",
                          "module lists " + std::to_string(v.rho.size()) +
                              " actions for an algebra of dimension " + std::to_string(g.dim));
  for (const Matrix& m : v.rho)
    if (m.rows() != v.dim || m.cols() != v.dim)
      throw ValidationError("DimensionMismatch", "module action matrix is not " +
                                                     std::to_string(v.dim) + "x" +
                                                     std::to_string(v.dim));
  for (std::size_t i = 0; i < g.dim; ++i)
    for (std::size_t j = i + 1; j < g.dim; ++j) {
      const Matrix lhs = module_action(v, g.bracket_basis(i, j));
      const Matrix rhs = v.rho[i] * v.rho[j] - v.rho[j] * v.rho[i];
      if (!(lhs == rhs))
        throw ValidationError("NotARepresentation",
                              "action of [" + g.basis[i] + ", " + g.basis[j] +
                                  "] differs from the commutator of the actions");
    }
}

Matrix ce_differential(const LieAlgebra& g, const CoefficientModule& v, std::size_t r) {
  const std::size_t n = g.dim;
  if (r >= n)
    throw ValidationError("DegreeOutOfRange", "differential out of degree " +
                                                  std::to_string(r) +
                                                  " undefined for dimension " +
                                                  std::to_string(n));
  const auto rows_idx = multi_indices(n, r + 1);
  const auto cols_idx = multi_indices(n, r);
  const std::size_t m = v.dim;
  Matrix d(rows_idx.size() * m, cols_idx.size() * m);
  for (std::size_t p = 0; p < rows_idx.size(); ++p) {
    const MultiIndex& full = rows_idx[p];
    for (std::size_t i = 0; i <= r; ++i) {
      MultiIndex omit = full;
      omit.erase(omit.begin() + i);
      const std::size_t q = multi_index_position(n, omit);
      const Matrix& act = v.rho[full[i]];
      const bool neg = i % 2 == 1;
      for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
          if (act(a, b) == 0) continue;
          d(p * m + a, q * m + b) += neg ? Scalar(-act(a, b)) : act(a, b);
        }
    }
    for (std::size_t i = 0; i <= r; ++i)
      for (std::size_t j = i + 1; j <= r; ++j) {
        MultiIndex rest = full;
        rest.erase(rest.begin() + j);
        rest.erase(rest.begin() + i);
        const Vec br = g.bracket_basis(full[i], full[j]);
        for (std::size_t k = 0; k < n; ++k) {
          if (br[k] == 0) continue;
          MultiIndex merged = rest;
          merged.insert(merged.begin(), k);
          const int sign = sort_with_sign(merged);
          if (sign == 0) continue;
          const std::size_t q = multi_index_position(n, merged);
          Scalar coeff = br[k];
          if ((i + j) % 2 == 1) coeff = -coeff;
          if (sign < 0) coeff = -coeff;
          for (std::size_t a = 0; a < m; ++a) d(p * m + a, q * m + a) += coeff;
        }
      }
  }
  return d;
}

CochainComplex ce_complex(const LieAlgebra& g, const CoefficientModule& v) {
  CochainComplex c;
  for (std::size_t r = 0; r <= g.dim; ++r) c.dims.push_back(binomial(g.dim, r) * v.dim);
  for (std::size_t r = 0; r < g.dim; ++r) c.d.push_back(ce_differential(g, v, r));
  return c;
}

void validate_complex(const CochainComplex& c) {
  if (c.d.size() + 1 != c.dims.size()) throw Error("complex: ragged grading");
  for (std::size_t r = 0; r < c.d.size(); ++r) {
    if (c.d[r].cols() != c.dims[r] || c.d[r].rows() != c.dims[r + 1])
      throw Error("complex: differential shape mismatch at degree " + std::to_string(r));
    if (r + 1 < c.d.size() && !(c.d[r + 1] * c.d[r]).is_zero())
      throw Error("complex: consecutive differentials do not compose to zero at degree " +
                  std::to_string(r));
  }
}

BettiTable complex_betti(const CochainComplex& c, bool want_reps) {
  BettiTable out;
  out.b.resize(c.dims.size());
  if (want_reps) out.reps.resize(c.dims.size());
  for (std::size_t r = 0; r < c.dims.size(); ++r) {
    std::vector<Vec> cocycles;
    if (r < c.d.size()) {
      cocycles = c.d[r].kernel_basis();
    } else {
      for (std::size_t i = 0; i < c.dims[r]; ++i) {
        Vec e(c.dims[r]);
        e[i] = 1;
        cocycles.push_back(e);
      }
    }
    const std::size_t prev_rank = r > 0 ? c.d[r - 1].rank() : 0;
    out.b[r] = cocycles.size() - prev_rank;
    if (!want_reps) continue;

    // greedy pivot pass over [coboundary generators | cocycles]: pivots in
    // the cocycle block are independent modulo the coboundaries
    std::vector<Vec> cols;
    const std::size_t boundary_cols = r > 0 ? c.d[r - 1].cols() : 0;
    for (std::size_t j = 0; j < boundary_cols; ++j) cols.push_back(c.d[r - 1].col(j));
    cols.insert(cols.end(), cocycles.begin(), cocycles.end());
    std::vector<std::size_t> pivots;
    Matrix::from_columns(c.dims[r], cols).rref(&pivots);
    std::vector<Vec> chosen;
    for (const std::size_t p : pivots)
      if (p >= boundary_cols) chosen.push_back(cols[p]);
    out.reps[r] = echelon_basis(c.dims[r], chosen);
  }
  return out;
}

BettiTable betti(const LieAlgebra& g, const CoefficientModule& v, bool want_reps) {
  return complex_betti(ce_complex(g, v), want_reps);
}

} // namespace folcoh
