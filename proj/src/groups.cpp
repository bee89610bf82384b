#include "folcoh/groups.hpp"

#include <algorithm>
#include <string>

#include "folcoh/errors.hpp"

namespace folcoh {

DetAdReport det_ad(const LieAlgebra& g, const GroupElementAd& e) {
  require_automorphism(g, e.ad_matrix, e.label.empty() ? "element" : e.label);
  DetAdReport out;
  out.det = e.ad_matrix.determinant();
  out.modular_value = out.det < 0 ? Scalar(-out.det) : out.det;
  out.strongly_unimodular = out.det == 1;
  out.unimodular = out.modular_value == 1;
  return out;
}

DetAdDecomposition det_ad_decomposition(const ReductivePair& pair, const GroupElementAd& e) {
  const DetAdReport full = det_ad(pair.g, e);
  const SplitCoords sc = split_coords(pair);
  const std::size_t kd = pair.k_basis.size(), pd = pair.p_basis.size();
  Matrix on_k(kd, kd), on_p(pd, pd);
  for (std::size_t b = 0; b < kd; ++b) {
    const Vec img = e.ad_matrix.apply(pair.k_basis[b]);
    if (!vec_is_zero(sc.p_part(img)))
      throw ValidationError("NotBlockPreserving",
                            "element maps the isotropy summand outside itself");
    on_k.set_col(b, sc.k_part(img));
  }
  for (std::size_t b = 0; b < pd; ++b) {
    const Vec img = e.ad_matrix.apply(pair.p_basis[b]);
    if (!vec_is_zero(sc.k_part(img)))
      throw ValidationError("NotBlockPreserving",
                            "element maps the transverse summand outside itself");
    on_p.set_col(b, sc.p_part(img));
  }
  DetAdDecomposition out;
  out.det_k = on_k.determinant();
  out.det_p = on_p.determinant();
  out.det_full = full.det;
  out.product_ok = out.det_k * out.det_p == out.det_full;
  return out;
}

std::size_t FiniteGroup::inverse(std::size_t i) const {
  for (std::size_t j = 0; j < order; ++j)
    if (table[i][j] == identity && table[j][i] == identity) return j;
  throw ValidationError("NotAGroup", "element " + std::to_string(i) + " has no inverse");
}

void validate_group(const FiniteGroup& g) {
  if (g.order == 0) throw ValidationError("NotAGroup", "empty group table");
  if (g.table.size() != g.order)
    throw ValidationError("NotAGroup", "table has the wrong number of rows");
  for (const auto& row : g.table) {
    if (row.size() != g.order) throw ValidationError("NotAGroup", "ragged table row");
    for (const std::size_t v : row)
      if (v >= g.order) throw ValidationError("NotAGroup", "table entry out of range");
  }
  if (g.identity >= g.order) throw ValidationError("NotAGroup", "identity index out of range");
  for (std::size_t j = 0; j < g.order; ++j)
    if (g.table[g.identity][j] != j || g.table[j][g.identity] != j)
      throw ValidationError("NotAGroup", "designated identity is not neutral");
  for (std::size_t i = 0; i < g.order; ++i) g.inverse(i);
  for (std::size_t i = 0; i < g.order; ++i)
    for (std::size_t j = 0; j < g.order; ++j)
      for (std::size_t k = 0; k < g.order; ++k)
        if (g.table[g.table[i][j]][k] != g.table[i][g.table[j][k]])
          throw ValidationError("NotAGroup", "multiplication is not associative");
  if (!g.action.empty()) {
    if (g.action.size() != g.order)
      throw ValidationError("NotAGroup", "action list does not cover the group");
    const std::size_t d = g.action.front().rows();
    for (const Matrix& m : g.action)
      if (m.rows() != d || m.cols() != d)
        throw ValidationError("NotAGroup", "action matrices have mixed shapes");
  }
}

std::vector<std::size_t> normal_core(const FiniteGroup& g, std::vector<std::size_t> k) {
  std::sort(k.begin(), k.end());
  k.erase(std::unique(k.begin(), k.end()), k.end());
  if (k.empty()) throw ValidationError("NotASubgroup", "empty index set");
  std::vector<bool> in_k(g.order, false);
  for (const std::size_t i : k) {
    if (i >= g.order) throw ValidationError("NotASubgroup", "index out of range");
    in_k[i] = true;
  }
  for (const std::size_t a : k)
    for (const std::size_t b : k)
      if (!in_k[g.table[a][b]])
        throw ValidationError("NotASubgroup", "index set is not closed under the table");

  std::vector<std::size_t> core;
  for (const std::size_t cand : k) {
    bool stays = true;
    for (std::size_t gi = 0; gi < g.order && stays; ++gi)
      if (!in_k[g.table[g.table[gi][cand]][g.inverse(gi)]]) stays = false;
    if (stays) core.push_back(cand);
  }
  return core;
}

Matrix average_projector(const FiniteGroup& g) {
  if (g.action.size() != g.order)
    throw ValidationError("NotARepresentation", "no action matrix for every element");
  const std::size_t d = g.action.front().rows();
  if (!(g.action[g.identity] == Matrix::identity(d)))
    throw ValidationError("NotARepresentation", "identity does not act as the identity matrix");
  for (std::size_t i = 0; i < g.order; ++i)
    for (std::size_t j = 0; j < g.order; ++j)
      if (!(g.action[i] * g.action[j] == g.action[g.table[i][j]]))
        throw ValidationError("NotARepresentation",
                              "action of a product differs from the product of actions");
  Matrix sum(d, d);
  for (const Matrix& m : g.action) sum = sum + m;
  return sum.scaled(Scalar(Int(1), Int(g.order)));
}

} // namespace folcoh
