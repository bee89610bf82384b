#include "folcoh/relative.hpp"

#include <string>
#include <utility>

#include "folcoh/errors.hpp"
#include "folcoh/exterior.hpp"

namespace folcoh {

namespace {

// Bracket projected to p and module restricted to the p-basis, packaged so
// the cochain differential machinery applies verbatim. The projected bracket
// need not satisfy Jacobi; nothing here validates it.
struct PData {
  LieAlgebra alg;
  CoefficientModule mod;
};

PData p_data(const ReductivePair& pair, const SplitCoords& sc, const GKModule& v) {
  const std::size_t q = pair.q();
  PData out;
  out.alg.name = pair.name + ".p";
  out.alg.dim = q;
  for (std::size_t i = 0; i < q; ++i) out.alg.basis.push_back("p" + std::to_string(i + 1));
  out.alg.c.assign(q * q * q, Scalar(0));
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j) {
      const Vec br = sc.p_part(pair.g.bracket(pair.p_basis[i], pair.p_basis[j]));
      for (std::size_t k = 0; k < q; ++k) out.alg.c[(i * q + j) * q + k] = br[k];
    }
  out.mod.name = v.name;
  out.mod.dim = v.coefficient.dim;
  for (std::size_t i = 0; i < q; ++i)
    out.mod.rho.push_back(module_action(v.coefficient, pair.p_basis[i]));
  return out;
}

// Conditions cutting out the invariant cochains in degree r, stacked rows.
Matrix invariance_conditions(const ReductivePair& pair, const SplitCoords& sc, const GKModule& v,
                             std::size_t r) {
  const std::size_t m = v.coefficient.dim;
  const std::size_t lam = binomial(pair.q(), r);
  Matrix cond(0, lam * m);
  for (const Vec& x : pair.k_basis) {
    const Matrix der = derivation_power(ad_on_p(pair, sc, x), r);
    const Matrix rho = module_action(v.coefficient, x);
    cond = vstack(cond, kron(Matrix::identity(lam), rho) - kron(der.transpose(), Matrix::identity(m)));
  }
  for (std::size_t gi = 0; gi < pair.generators.size(); ++gi) {
    const Matrix pw = multiplicative_power(generator_on_p(pair, sc, pair.generators[gi]), r);
    cond = vstack(cond, kron(Matrix::identity(lam), v.component_action[gi]) -
                            kron(pw.transpose(), Matrix::identity(m)));
  }
  return cond;
}

std::vector<Vec> standard_basis(std::size_t n) {
  std::vector<Vec> out;
  for (std::size_t i = 0; i < n; ++i) {
    Vec e(n);
    e[i] = 1;
    out.push_back(std::move(e));
  }
  return out;
}

// Shared tail of the betti computations: ranks plus optional representative
// selection, for a complex whose maps lower the listed degree by one step in
// the direction given by down (chain case) or raise it (handled by the caller
// through complex_betti).
BettiTable chain_table(const std::vector<std::size_t>& dims, const std::vector<Matrix>& bnd,
                       bool want_reps) {
  // bnd[r]: degree r+1 -> degree r, so cycles in degree r are ker bnd[r-1]
  BettiTable out;
  out.b.resize(dims.size());
  if (want_reps) out.reps.resize(dims.size());
  for (std::size_t r = 0; r < dims.size(); ++r) {
    std::vector<Vec> cycles =
        r > 0 ? bnd[r - 1].kernel_basis() : standard_basis(dims[0]);
    const std::size_t next_rank = r < bnd.size() ? bnd[r].rank() : 0;
    out.b[r] = cycles.size() - next_rank;
    if (!want_reps) continue;
    std::vector<Vec> cols;
    const std::size_t boundary_cols = r < bnd.size() ? bnd[r].cols() : 0;
    for (std::size_t j = 0; j < boundary_cols; ++j) cols.push_back(bnd[r].col(j));
    cols.insert(cols.end(), cycles.begin(), cycles.end());
    std::vector<std::size_t> pivots;
    Matrix::from_columns(dims[r], cols).rref(&pivots);
    std::vector<Vec> chosen;
    for (const std::size_t p : pivots)
      if (p >= boundary_cols) chosen.push_back(cols[p]);
    out.reps[r] = echelon_basis(dims[r], chosen);
  }
  return out;
}

} // namespace

GKModule trivial_gk(const ReductivePair& pair, std::size_t m) {
  GKModule v;
  v.name = "trivial";
  v.coefficient = trivial_module(pair.g.dim, m);
  v.component_action.assign(pair.generators.size(), Matrix::identity(m));
  return v;
}

GKModule dual_gk(const GKModule& v) {
  GKModule out;
  out.name = v.name + "^*";
  out.coefficient.name = v.coefficient.name + "^*";
  out.coefficient.dim = v.coefficient.dim;
  for (const Matrix& m : v.coefficient.rho)
    out.coefficient.rho.push_back(m.transpose().scaled(Scalar(-1)));
  for (const Matrix& a : v.component_action) {
    const auto inv = a.inverse();
    if (!inv) throw ValidationError("NotInvertible", "component action is singular");
    out.component_action.push_back(inv->transpose());
  }
  return out;
}

void validate_gk_module(const ReductivePair& pair, const GKModule& v) {
  validate_module(pair.g, v.coefficient);
  if (v.component_action.size() != pair.generators.size())
    throw ValidationError("DimensionMismatch",
                          "module lists " + std::to_string(v.component_action.size()) +
                              " component actions for " + std::to_string(pair.generators.size()) +
                              " generators");
  for (std::size_t gi = 0; gi < pair.generators.size(); ++gi) {
    const Matrix& a = v.component_action[gi];
    if (a.rows() != v.coefficient.dim || a.cols() != v.coefficient.dim)
      throw ValidationError("DimensionMismatch", "component action has the wrong shape");
    const auto inv = a.inverse();
    if (!inv)
      throw ValidationError("NotInvertible",
                            "component action " + std::to_string(gi) + " is singular");
    for (std::size_t i = 0; i < pair.g.dim; ++i) {
      const Matrix lhs = a * v.coefficient.rho[i] * *inv;
      const Matrix rhs = module_action(v.coefficient, pair.generators[gi].col(i));
      if (!(lhs == rhs))
        throw ValidationError("NotEquivariant",
                              "component action " + std::to_string(gi) +
                                  " does not intertwine the action of " + pair.g.basis[i]);
    }
  }
}

GKModule hazewinkel_twist(const ReductivePair& pair, const GKModule& v) {
  const SplitCoords sc = split_coords(pair);
  // the isotropy algebra itself must be unimodular for the twist to make sense
  for (const Vec& x : pair.k_basis) {
    Matrix ad_k(pair.k_basis.size(), pair.k_basis.size());
    for (std::size_t b = 0; b < pair.k_basis.size(); ++b)
      ad_k.set_col(b, sc.k_part(pair.g.bracket(x, pair.k_basis[b])));
    Scalar tr = 0;
    for (std::size_t i = 0; i < ad_k.rows(); ++i) tr += ad_k(i, i);
    if (tr != 0)
      throw ValidationError("KNotUnimodular",
                            "isotropy algebra has a nonzero modular character");
  }

  const ModularCharacter mc = modular_character(pair.g);
  GKModule out;
  out.name = v.name + "^tw";
  out.coefficient.name = v.coefficient.name + "^tw";
  out.coefficient.dim = v.coefficient.dim;
  const Matrix id = Matrix::identity(v.coefficient.dim);
  for (std::size_t i = 0; i < pair.g.dim; ++i)
    out.coefficient.rho.push_back(v.coefficient.rho[i] - id.scaled(mc.chi[i]));
  for (std::size_t gi = 0; gi < pair.generators.size(); ++gi) {
    const Scalar det = generator_on_p(pair, sc, pair.generators[gi]).determinant();
    if (det == 0) throw ValidationError("NotInvertible", "generator is singular on p");
    out.component_action.push_back(v.component_action[gi].scaled(Scalar(1) / det));
  }
  validate_gk_module(pair, out);
  return out;
}

std::vector<Vec> invariant_cochains(const ReductivePair& pair, const GKModule& v, std::size_t r) {
  const SplitCoords sc = split_coords(pair);
  const std::size_t n = binomial(pair.q(), r) * v.coefficient.dim;
  const Matrix cond = invariance_conditions(pair, sc, v, r);
  if (cond.rows() == 0) return standard_basis(n);
  return echelon_basis(n, cond.kernel_basis());
}

Matrix relative_differential(const ReductivePair& pair, const GKModule& v, std::size_t r) {
  const SplitCoords sc = split_coords(pair);
  const PData pd = p_data(pair, sc, v);
  return ce_differential(pd.alg, pd.mod, r);
}

Matrix chain_boundary(const ReductivePair& pair, const GKModule& v, std::size_t r) {
  const std::size_t q = pair.q();
  if (r == 0 || r > q)
    throw ValidationError("DegreeOutOfRange",
                          "boundary defined for degrees 1.." + std::to_string(q) + ", got " +
                              std::to_string(r));
  const SplitCoords sc = split_coords(pair);
  const std::size_t m = v.coefficient.dim;
  const auto rows_idx = multi_indices(q, r - 1);
  const auto cols_idx = multi_indices(q, r);
  std::vector<Matrix> act;
  for (std::size_t i = 0; i < q; ++i) act.push_back(module_action(v.coefficient, pair.p_basis[i]));
  Matrix out(rows_idx.size() * m, cols_idx.size() * m);
  for (std::size_t c = 0; c < cols_idx.size(); ++c) {
    const MultiIndex& full = cols_idx[c];
    for (std::size_t s = 0; s < r; ++s) {
      MultiIndex omit = full;
      omit.erase(omit.begin() + s);
      const std::size_t p = multi_index_position(q, omit);
      const Matrix& a = act[full[s]];
      const bool neg = s % 2 == 0; // one-based alternation starts negative
      for (std::size_t row = 0; row < m; ++row)
        for (std::size_t colc = 0; colc < m; ++colc) {
          if (a(row, colc) == 0) continue;
          out(p * m + row, c * m + colc) += neg ? Scalar(-a(row, colc)) : a(row, colc);
        }
    }
    for (std::size_t s = 0; s < r; ++s)
      for (std::size_t t = s + 1; t < r; ++t) {
        MultiIndex rest = full;
        rest.erase(rest.begin() + t);
        rest.erase(rest.begin() + s);
        const Vec br = sc.p_part(pair.g.bracket(pair.p_basis[full[s]], pair.p_basis[full[t]]));
        for (std::size_t k = 0; k < q; ++k) {
          if (br[k] == 0) continue;
          MultiIndex merged = rest;
          merged.insert(merged.begin(), k);
          const int sign = sort_with_sign(merged);
          if (sign == 0) continue;
          const std::size_t p = multi_index_position(q, merged);
          Scalar coeff = br[k];
          if ((s + t) % 2 == 1) coeff = -coeff;
          if (sign < 0) coeff = -coeff;
          for (std::size_t a2 = 0; a2 < m; ++a2) out(p * m + a2, c * m + a2) += coeff;
        }
      }
  }
  return out;
}

CochainComplex relative_complex(const ReductivePair& pair, const GKModule& v) {
  const std::size_t q = pair.q();
  std::vector<std::vector<Vec>> inv;
  for (std::size_t r = 0; r <= q; ++r) inv.push_back(invariant_cochains(pair, v, r));
  CochainComplex c;
  for (std::size_t r = 0; r <= q; ++r) c.dims.push_back(inv[r].size());
  const std::size_t m = v.coefficient.dim;
  for (std::size_t r = 0; r < q; ++r) {
    const Matrix full = relative_differential(pair, v, r);
    Matrix restricted(inv[r + 1].size(), inv[r].size());
    for (std::size_t j = 0; j < inv[r].size(); ++j) {
      const auto coords =
          express_in_span(binomial(q, r + 1) * m, inv[r + 1], full.apply(inv[r][j]));
      if (!coords)
        throw ValidationError("InvariantsNotPreserved",
                              "differential leaves the invariant subspace in degree " +
                                  std::to_string(r));
      restricted.set_col(j, *coords);
    }
    c.d.push_back(std::move(restricted));
  }
  return c;
}

BettiTable relative_betti(const ReductivePair& pair, const GKModule& v, bool want_reps) {
  const CochainComplex c = relative_complex(pair, v);
  BettiTable table = complex_betti(c, want_reps);
  if (!want_reps) return table;
  // report representatives as cochains in the ambient coordinates
  const std::size_t m = v.coefficient.dim;
  for (std::size_t r = 0; r < table.reps.size(); ++r) {
    const auto inv = invariant_cochains(pair, v, r);
    const std::size_t full_dim = binomial(pair.q(), r) * m;
    std::vector<Vec> mapped;
    for (const Vec& rep : table.reps[r]) {
      Vec full(full_dim);
      for (std::size_t i = 0; i < inv.size(); ++i)
        if (rep[i] != 0) full = vec_add(full, vec_scale(rep[i], inv[i]));
      mapped.push_back(std::move(full));
    }
    table.reps[r] = echelon_basis(full_dim, mapped);
  }
  return table;
}

BettiTable relative_homology_betti(const ReductivePair& pair, const GKModule& v, bool want_reps) {
  const SplitCoords sc = split_coords(pair);
  const std::size_t q = pair.q();
  const std::size_t m = v.coefficient.dim;

  std::vector<QuotientSpace> quo;
  std::vector<std::vector<Vec>> rels(q + 1);
  for (std::size_t r = 0; r <= q; ++r) {
    const std::size_t lam = binomial(q, r);
    for (const Vec& x : pair.k_basis) {
      const Matrix op = kron(derivation_power(ad_on_p(pair, sc, x), r), Matrix::identity(m)) +
                        kron(Matrix::identity(lam), module_action(v.coefficient, x));
      for (std::size_t j = 0; j < op.cols(); ++j) rels[r].push_back(op.col(j));
    }
    for (std::size_t gi = 0; gi < pair.generators.size(); ++gi) {
      const Matrix op =
          kron(multiplicative_power(generator_on_p(pair, sc, pair.generators[gi]), r),
               v.component_action[gi]) -
          Matrix::identity(lam * m);
      for (std::size_t j = 0; j < op.cols(); ++j) rels[r].push_back(op.col(j));
    }
    quo.push_back(make_quotient(lam * m, rels[r]));
  }

  std::vector<std::size_t> dims;
  for (std::size_t r = 0; r <= q; ++r) dims.push_back(quo[r].dim());

  std::vector<Matrix> bnd; // bnd[r]: quotient degree r+1 -> quotient degree r
  for (std::size_t r = 0; r + 1 <= q; ++r) {
    const Matrix full = chain_boundary(pair, v, r + 1);
    // the boundary must descend to the coinvariant quotient
    for (const Vec& u : rels[r + 1])
      if (!vec_is_zero(quo[r].reduce(full.apply(u))))
        throw Error("chain boundary does not descend to the coinvariants in degree " +
                    std::to_string(r + 1));
    Matrix desc(quo[r].dim(), quo[r + 1].dim());
    for (std::size_t j = 0; j < quo[r + 1].dim(); ++j) {
      Vec e(quo[r + 1].ambient);
      e[quo[r + 1].free_coords[j]] = 1;
      desc.set_col(j, quo[r].coords(full.apply(e)));
    }
    bnd.push_back(std::move(desc));
  }

  BettiTable table = chain_table(dims, bnd, want_reps);
  if (!want_reps) return table;
  for (std::size_t r = 0; r < table.reps.size(); ++r) {
    std::vector<Vec> mapped;
    for (const Vec& rep : table.reps[r]) mapped.push_back(quo[r].lift(rep));
    table.reps[r] = echelon_basis(quo[r].ambient, mapped);
  }
  return table;
}

FixedPoints h0_fixed_points(const ReductivePair& pair, const GKModule& v) {
  const std::size_t m = v.coefficient.dim;
  Matrix cond(0, m);
  for (const Vec& x : pair.k_basis) cond = vstack(cond, module_action(v.coefficient, x));
  for (const Vec& x : pair.p_basis) cond = vstack(cond, module_action(v.coefficient, x));
  for (const Matrix& a : v.component_action) cond = vstack(cond, a - Matrix::identity(m));
  FixedPoints out;
  out.basis = cond.rows() == 0 ? standard_basis(m) : echelon_basis(m, cond.kernel_basis());
  out.dim = out.basis.size();
  return out;
}

DualityReport duality_check(const ReductivePair& pair, const GKModule& v) {
  const std::size_t q = pair.q();
  const GKModule twisted = hazewinkel_twist(pair, v);
  DualityReport rep;
  rep.cochain_dims = relative_betti(pair, v).b;
  rep.twisted_chain_dims = relative_homology_betti(pair, twisted).b;
  rep.all_degrees_match = true;
  for (std::size_t r = 0; r <= q; ++r) {
    const bool ok = rep.cochain_dims[r] == rep.twisted_chain_dims[q - r];
    rep.degree_match.push_back(ok);
    if (!ok) rep.all_degrees_match = false;
  }
  rep.top_cochain_dim = rep.cochain_dims[q];
  rep.fixed_dual_twist_dim = h0_fixed_points(pair, dual_gk(twisted)).dim;
  rep.corollary_match = rep.top_cochain_dim == rep.fixed_dual_twist_dim;
  return rep;
}

} // namespace folcoh
