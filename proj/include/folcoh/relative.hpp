#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "folcoh/cohomology.hpp"
#include "folcoh/lie_algebra.hpp"
#include "folcoh/matrix.hpp"

namespace folcoh {

/// Module over a reductive pair: the ambient algebra acts through
/// coefficient.rho, and the isotropy's component generators act through
/// component_action, matched to pair.generators by position.
struct GKModule {
  std::string name;
  CoefficientModule coefficient;
  std::vector<Matrix> component_action;

  bool operator==(const GKModule&) const = default;
};

GKModule trivial_gk(const ReductivePair& pair, std::size_t m = 1);

/// Contragredient module: actions -rho(X)^T and (alpha(k)^-1)^T.
GKModule dual_gk(const GKModule& v);

/// Checks the representation property of rho, invertibility of each component
/// action, and the compatibility alpha(k) rho(X) alpha(k)^-1 = rho(Ad(k)X).
/// ValidationError kinds: DimensionMismatch, NotInvertible, NotEquivariant.
void validate_gk_module(const ReductivePair& pair, const GKModule& v);

/// Twisted module: rho'(X) = rho(X) - trace(ad_X) Id and
/// alpha'(k) = det(Ad_p(k))^-1 alpha(k). Requires the isotropy algebra to be
/// unimodular (ValidationError kind KNotUnimodular); the result is
/// revalidated.
GKModule hazewinkel_twist(const ReductivePair& pair, const GKModule& v);

/// Echelon basis of the forms on the r-th exterior power of p with values in
/// V that are infinitesimally k-equivariant and fixed by every component
/// generator. Coordinates are multi-index major: slot(I, a) = pos(I) * dim V + a.
std::vector<Vec> invariant_cochains(const ReductivePair& pair, const GKModule& v, std::size_t r);

/// Differential on all degree-r forms on p (invariance not yet imposed); the
/// bracket is projected back to p along k.
Matrix relative_differential(const ReductivePair& pair, const GKModule& v, std::size_t r);

/// Boundary of the chain spaces (r-th exterior power of p) tensor V, degree r
/// to r-1, defined for 1 <= r <= dim p. In degree one it sends X (x) v to -X.v.
Matrix chain_boundary(const ReductivePair& pair, const GKModule& v, std::size_t r);

/// The invariant subcomplex: graded dimensions are the invariant cochain
/// counts and the differentials are expressed in the invariant bases. Throws
/// ValidationError kind InvariantsNotPreserved if a differential leaves the
/// invariant subspace (impossible for validated input).
CochainComplex relative_complex(const ReductivePair& pair, const GKModule& v);

BettiTable relative_betti(const ReductivePair& pair, const GKModule& v, bool want_reps = false);

/// Homology of the coinvariant chain complex (quotient by the k-action images
/// and the generator fixed-point defects).
BettiTable relative_homology_betti(const ReductivePair& pair, const GKModule& v,
                                   bool want_reps = false);

/// Simultaneous fixed points: rho(X) v = 0 for X in the isotropy algebra and
/// in p, and alpha(k) v = v for every component generator. Matches the
/// degree-zero cohomology of the invariant complex.
struct FixedPoints {
  std::size_t dim = 0;
  std::vector<Vec> basis;
};
FixedPoints h0_fixed_points(const ReductivePair& pair, const GKModule& v);

/// Compares cohomology of V in degree r with homology of the twisted module
/// in degree q - r, plus the corollary identification of the top cohomology
/// with the fixed points of the dual of the twist.
struct DualityReport {
  std::vector<std::size_t> cochain_dims;
  std::vector<std::size_t> twisted_chain_dims;
  std::vector<bool> degree_match;
  bool all_degrees_match = false;
  std::size_t top_cochain_dim = 0;
  std::size_t fixed_dual_twist_dim = 0;
  bool corollary_match = false;
};
DualityReport duality_check(const ReductivePair& pair, const GKModule& v);

} // namespace folcoh
