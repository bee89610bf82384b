#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "folcoh/lie_algebra.hpp"
#include "folcoh/matrix.hpp"

namespace folcoh {

/// Group element presented through its adjoint matrix on an ambient algebra.
struct GroupElementAd {
  std::string label;
  Matrix ad_matrix;
};

struct DetAdReport {
  Scalar det;
  Scalar modular_value;          // |det|
  bool strongly_unimodular = false; // det == 1
  bool unimodular = false;          // |det| == 1
};

/// Exact det of the adjoint matrix after checking it is an automorphism of g.
/// Throws ValidationError kind NotAutomorphism.
DetAdReport det_ad(const LieAlgebra& g, const GroupElementAd& e);

struct DetAdDecomposition {
  Scalar det_k;
  Scalar det_p;
  Scalar det_full;
  bool product_ok = false;
};

/// Block determinants of an automorphism preserving the pair's split, with the
/// product identity det = det_k * det_p checked exactly.
/// ValidationError kinds: NotAutomorphism, NotBlockPreserving.
DetAdDecomposition det_ad_decomposition(const ReductivePair& pair, const GroupElementAd& e);

/// Finite group by multiplication table: table[i][j] is the index of g_i g_j.
/// Optionally carries one action matrix per element on a fixed vector space.
struct FiniteGroup {
  std::string name;
  std::size_t order = 0;
  std::vector<std::vector<std::size_t>> table;
  std::size_t identity = 0;
  std::vector<Matrix> action;

  std::size_t inverse(std::size_t i) const;

  bool operator==(const FiniteGroup&) const = default;
};

/// Checks shape, the group axioms, the identity index, and the action list
/// shape when present. ValidationError kind NotAGroup.
void validate_group(const FiniteGroup& g);

/// Largest normal subgroup of g inside the subgroup spanned by the index set
/// k, by brute force over all conjugations. Throws NotASubgroup if k is not
/// closed under the table. Output is sorted ascending.
std::vector<std::size_t> normal_core(const FiniteGroup& g, std::vector<std::size_t> k);

/// Exact averaging projector (1/N) sum of the action matrices. Verifies the
/// action is a representation of the table first (ValidationError kind
/// NotARepresentation).
Matrix average_projector(const FiniteGroup& g);

} // namespace folcoh
