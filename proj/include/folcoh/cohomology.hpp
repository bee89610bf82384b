#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "folcoh/lie_algebra.hpp"
#include "folcoh/matrix.hpp"

namespace folcoh {

// Module over a Lie algebra: rho[i] is the action of the i-th basis vector.
struct CoefficientModule {
  std::string name;
  std::size_t dim = 0;
  std::vector<Matrix> rho;
  bool operator==(const CoefficientModule&) const = default;
};

CoefficientModule trivial_module(std::size_t n, std::size_t m = 1);
CoefficientModule adjoint_module(const LieAlgebra& g);
// Action of an arbitrary element, sum of x[i] * rho[i].
Matrix module_action(const CoefficientModule& v, const Vec& x);
void validate_module(const LieAlgebra& g, const CoefficientModule& v);

struct CochainComplex {
  std::vector<std::size_t> dims; // graded dimensions, degree 0..q
  std::vector<Matrix> d;         // d[r] maps degree r to degree r+1
};

void validate_complex(const CochainComplex& c);

struct BettiTable {
  std::vector<std::size_t> b;
  // per degree, echelon-normalized cocycles spanning a complement of the
  // coboundaries; filled only on request
  std::vector<std::vector<Vec>> reps;
  bool operator==(const BettiTable&) const = default;
};

// Differential on degree-r cochains with values in v. Cochain coordinates are
// indexed multi-index major: slot(I, a) = position(I) * dim V + a.
Matrix ce_differential(const LieAlgebra& g, const CoefficientModule& v, std::size_t r);

CochainComplex ce_complex(const LieAlgebra& g, const CoefficientModule& v);
BettiTable complex_betti(const CochainComplex& c, bool want_reps = false);
BettiTable betti(const LieAlgebra& g, const CoefficientModule& v, bool want_reps = false);

} // namespace folcoh
