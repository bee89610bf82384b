#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "folcoh/matrix.hpp"
#include "folcoh/rational.hpp"

namespace folcoh {

// Basis labels for an exterior power: strictly increasing index lists.
using MultiIndex = std::vector<std::size_t>;

std::size_t binomial(std::size_t n, std::size_t r);

// All r-element multi-indices over {0..n-1} in lexicographic order.
std::vector<MultiIndex> multi_indices(std::size_t n, std::size_t r);

// Lexicographic rank of idx among the r-element multi-indices over {0..n-1}.
std::size_t multi_index_position(std::size_t n, const MultiIndex& idx);

// Sorts idx ascending in place; returns the permutation sign, or 0 when an
// index repeats.
int sort_with_sign(std::vector<std::size_t>& idx);

struct ExteriorElement {
  std::size_t ambient = 0;
  std::size_t degree = 0;
  std::map<MultiIndex, Scalar> terms; // canonical: only nonzero coefficients

  bool is_zero() const { return terms.empty(); }
  bool operator==(const ExteriorElement&) const = default;
};

ExteriorElement ext_zero(std::size_t ambient, std::size_t degree);
// c * e_idx; idx may arrive unsorted and is normalized with the alternation
// sign. A repeated index collapses the term to zero.
ExteriorElement ext_term(std::size_t ambient, std::vector<std::size_t> idx, const Scalar& c);
ExteriorElement ext_basis(std::size_t ambient, std::size_t i);
ExteriorElement ext_add(const ExteriorElement& a, const ExteriorElement& b);
ExteriorElement ext_scale(const Scalar& c, const ExteriorElement& a);

ExteriorElement wedge(const ExteriorElement& a, const ExteriorElement& b);

// Coefficient of the orientation multi-index in a top-degree element.
Scalar eval_top(const MultiIndex& epsilon_orientation, const ExteriorElement& a);

// Matrix on the degree-r multi-index basis of the derivation induced by a
// (Leibniz rule, one slot at a time).
Matrix derivation_power(const Matrix& a, std::size_t r);

// Matrix of the r-th multiplicative exterior power of a.
Matrix multiplicative_power(const Matrix& a, std::size_t r);

} // namespace folcoh
