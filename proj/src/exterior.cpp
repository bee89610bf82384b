#include "folcoh/exterior.hpp"

#include <string>
#include <utility>

#include "folcoh/errors.hpp"

namespace folcoh {

std::size_t binomial(std::size_t n, std::size_t r) {
  if (r > n) return 0;
  std::size_t out = 1;
  for (std::size_t k = 0; k < r; ++k) out = out * (n - k) / (k + 1);
  return out;
}

std::vector<MultiIndex> multi_indices(std::size_t n, std::size_t r) {
  std::vector<MultiIndex> out;
  if (r > n) return out;
  MultiIndex cur(r);
  for (std::size_t i = 0; i < r; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    if (r == 0) break;
    std::size_t s = r;
    while (s > 0 && cur[s - 1] == n - r + (s - 1)) --s;
    if (s == 0) break;
    ++cur[s - 1];
    for (std::size_t t = s; t < r; ++t) cur[t] = cur[t - 1] + 1;
  }
  return out;
}

std::size_t multi_index_position(std::size_t n, const MultiIndex& idx) {
  const std::size_t r = idx.size();
  std::size_t rank = 0, lo = 0;
  for (std::size_t k = 0; k < r; ++k) {
    if (idx[k] >= n || (k > 0 && idx[k] <= idx[k - 1]))
      throw Error("multi_index_position: not a strictly increasing index list");
    for (std::size_t j = lo; j < idx[k]; ++j) rank += binomial(n - 1 - j, r - 1 - k);
    lo = idx[k] + 1;
  }
  return rank;
}

int sort_with_sign(std::vector<std::size_t>& idx) {
  int sign = 1;
  for (std::size_t i = 1; i < idx.size(); ++i)
    for (std::size_t j = i; j > 0 && idx[j] < idx[j - 1]; --j) {
      std::swap(idx[j], idx[j - 1]);
      sign = -sign;
    }
  for (std::size_t i = 1; i < idx.size(); ++i)
    if (idx[i] == idx[i - 1]) return 0;
  return sign;
}

ExteriorElement ext_zero(std::size_t ambient, std::size_t degree) {
  ExteriorElement out;
  out.ambient = ambient;
  out.degree = degree;
  return out;
}

ExteriorElement ext_term(std::size_t ambient, std::vector<std::size_t> idx, const Scalar& c) {
  ExteriorElement out = ext_zero(ambient, idx.size());
  for (const std::size_t i : idx)
    if (i >= ambient) throw Error("ext_term: index out of range");
  const int sign = sort_with_sign(idx);
  if (sign != 0 && c != 0) out.terms[idx] = sign > 0 ? c : -c;
  return out;
}

ExteriorElement ext_basis(std::size_t ambient, std::size_t i) {
  return ext_term(ambient, {i}, Scalar(1));
}

ExteriorElement ext_add(const ExteriorElement& a, const ExteriorElement& b) {
  if (a.ambient != b.ambient || a.degree != b.degree)
    throw Error("ext_add: shape mismatch");
  ExteriorElement out = a;
  for (const auto& [idx, c] : b.terms) {
    Scalar& slot = out.terms[idx];
    slot += c;
    if (slot == 0) out.terms.erase(idx);
  }
  return out;
}

ExteriorElement ext_scale(const Scalar& c, const ExteriorElement& a) {
  ExteriorElement out = ext_zero(a.ambient, a.degree);
  if (c == 0) return out;
  for (const auto& [idx, x] : a.terms) out.terms[idx] = c * x;
  return out;
}

ExteriorElement wedge(const ExteriorElement& a, const ExteriorElement& b) {
  if (a.ambient != b.ambient) throw Error("wedge: ambient dimension mismatch");
  if (a.degree + b.degree > a.ambient)
    throw ValidationError("DegreeOverflow",
                          "wedge degree " + std::to_string(a.degree + b.degree) +
                              " exceeds ambient dimension " + std::to_string(a.ambient));
  ExteriorElement out = ext_zero(a.ambient, a.degree + b.degree);
  for (const auto& [ia, ca] : a.terms)
    for (const auto& [ib, cb] : b.terms) {
      std::vector<std::size_t> joined = ia;
      joined.insert(joined.end(), ib.begin(), ib.end());
      const int sign = sort_with_sign(joined);
      if (sign == 0) continue;
      Scalar& slot = out.terms[joined];
      slot += sign > 0 ? ca * cb : Scalar(-(ca * cb));
      if (slot == 0) out.terms.erase(joined);
    }
  return out;
}

Scalar eval_top(const MultiIndex& epsilon_orientation, const ExteriorElement& a) {
  if (a.degree != a.ambient)
    throw ValidationError("WrongDegree", "top evaluation needs degree " +
                                             std::to_string(a.ambient) + ", got " +
                                             std::to_string(a.degree));
  if (epsilon_orientation.size() != a.ambient)
    throw ValidationError("WrongDegree", "orientation has degree " +
                                             std::to_string(epsilon_orientation.size()) +
                                             ", ambient dimension is " +
                                             std::to_string(a.ambient));
  multi_index_position(a.ambient, epsilon_orientation);
  const auto it = a.terms.find(epsilon_orientation);
  return it == a.terms.end() ? Scalar(0) : it->second;
}

Matrix derivation_power(const Matrix& a, std::size_t r) {
  if (a.rows() != a.cols()) throw Error("derivation_power: square matrix required");
  const std::size_t n = a.rows();
  if (r > n) throw Error("derivation_power: degree exceeds dimension");
  const auto basis = multi_indices(n, r);
  Matrix out(basis.size(), basis.size());
  for (std::size_t col = 0; col < basis.size(); ++col)
    for (std::size_t slot = 0; slot < r; ++slot)
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar& c = a(k, basis[col][slot]);
        if (c == 0) continue;
        MultiIndex replaced = basis[col];
        replaced[slot] = k;
        const int sign = sort_with_sign(replaced);
        if (sign == 0) continue;
        const std::size_t row = multi_index_position(n, replaced);
        out(row, col) += sign > 0 ? c : Scalar(-c);
      }
  return out;
}

Matrix multiplicative_power(const Matrix& a, std::size_t r) {
  if (a.rows() != a.cols()) throw Error("multiplicative_power: square matrix required");
  const std::size_t n = a.rows();
  if (r > n) throw Error("multiplicative_power: degree exceeds dimension");
  const auto basis = multi_indices(n, r);
  Matrix out(basis.size(), basis.size());
  for (std::size_t col = 0; col < basis.size(); ++col) {
    ExteriorElement img = ext_term(n, {}, Scalar(1));
    for (const std::size_t i : basis[col]) {
      ExteriorElement v = ext_zero(n, 1);
      for (std::size_t k = 0; k < n; ++k)
        if (a(k, i) != 0) v.terms[{k}] = a(k, i);
      img = wedge(img, v);
    }
    for (const auto& [idx, c] : img.terms) out(multi_index_position(n, idx), col) = c;
  }
  return out;
}

} // namespace folcoh
