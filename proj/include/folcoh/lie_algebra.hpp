#pragma once

#include <string>
#include <vector>

#include "folcoh/matrix.hpp"
#include "folcoh/rational.hpp"

namespace folcoh {

/// Finite-dimensional Lie algebra over Q given by structure constants:
/// [e_i, e_j] = sum_k c(i,j,k) e_k. Values are immutable after validation.
struct LieAlgebra {
  std::string name;
  std::size_t dim = 0;
  std::vector<std::string> basis;
  std::vector<Scalar> c; // flattened (i*dim + j)*dim + k

  const Scalar& structure(std::size_t i, std::size_t j, std::size_t k) const {
    return c[(i * dim + j) * dim + k];
  }

  /// Coordinates of [e_i, e_j].
  Vec bracket_basis(std::size_t i, std::size_t j) const;

  /// Bilinear extension of the bracket to coordinate vectors.
  Vec bracket(const Vec& x, const Vec& y) const;

  /// ad_X as a matrix: column j holds the coordinates of [X, e_j].
  Matrix ad(const Vec& x) const;
  Matrix ad_basis(std::size_t i) const;

  bool operator==(const LieAlgebra&) const = default;
};

/// Builder: start from the zero bracket and set [e_i, e_j] = v pairwise
/// (the (j,i) entry is filled by antisymmetry).
LieAlgebra make_algebra(std::string name, std::vector<std::string> basis);
void set_bracket(LieAlgebra& g, std::size_t i, std::size_t j, const Vec& v);

/// Checks antisymmetry and the Jacobi identity.
/// Throws ValidationError kinds AntisymmetryViolation / JacobiViolation.
void validate_algebra(const LieAlgebra& g);

/// chi(X) = trace ad_X on the basis; the algebra is unimodular iff chi = 0.
struct ModularCharacter {
  Vec chi;
  bool unimodular = false;
};
ModularCharacter modular_character(const LieAlgebra& g);

/// Splitting g = k (+) p with p stable under ad(k) and under the finite list of
/// component generators (Ad matrices of the isotropy's component group).
struct ReductivePair {
  std::string name;
  LieAlgebra g;
  std::vector<Vec> k_basis;
  std::vector<Vec> p_basis;
  std::vector<Matrix> generators;

  std::size_t q() const { return p_basis.size(); }

  bool operator==(const ReductivePair&) const = default;
};

/// Checks: bases split g, k is a subalgebra, [k,p] subset p, and each generator
/// is an invertible algebra automorphism preserving both k and p.
/// ValidationError kinds: NotComplement, NotSubalgebra, NotAdInvariant,
/// NotAutomorphism.
void validate_reductive_pair(const ReductivePair& pair);

/// Solves the linear invariance constraints for a complement p of k that is
/// stable under ad(k) and the generators, deterministically (echelon-normal
/// output, free parameters pinned to zero). Throws NoComplement if none exists.
std::vector<Vec> find_reductive_complement(const LieAlgebra& g, const std::vector<Vec>& k_basis,
                                           const std::vector<Matrix>& generators);

/// Throws NotAutomorphism unless a is invertible and a[X,Y] = [aX,aY] on the basis.
void require_automorphism(const LieAlgebra& g, const Matrix& a, const std::string& what);

/// Change-of-basis helpers for a validated pair.
struct SplitCoords {
  Matrix basis;     // columns: k_basis then p_basis
  Matrix basis_inv; // ambient -> split coordinates
  std::size_t k_dim, p_dim;

  Vec k_part(const Vec& ambient) const;
  Vec p_part(const Vec& ambient) const;
};
SplitCoords split_coords(const ReductivePair& pair);

/// ad of an ambient vector X restricted to p in p-coordinates, with the bracket
/// projected back to p along k. For X in k no projection is needed.
Matrix ad_on_p(const ReductivePair& pair, const SplitCoords& sc, const Vec& x);

/// The p-block of a generator in split coordinates.
Matrix generator_on_p(const ReductivePair& pair, const SplitCoords& sc, const Matrix& gen);

} // namespace folcoh
