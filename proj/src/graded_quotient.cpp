#include "lefschetz/graded_quotient.hpp"

#include <numeric>
#include <string>

#include "lefschetz/error.hpp"

namespace lefschetz {

std::uint64_t ExponentVector::degree() const noexcept {
  return std::accumulate(exponents.begin(), exponents.end(), std::uint64_t{0});
}

MonomialCI::MonomialCI(PrimeField field, std::vector<std::uint32_t> bounds)
    : field_(field), bounds_(std::move(bounds)) {
  if (bounds_.empty()) throw Error("a monomial complete intersection needs at least one variable");
  std::size_t box = 1;
  for (std::uint32_t d : bounds_) {
    if (d == 0) throw Error("exponent bounds must be positive");
    top_degree_ += d - 1;
    box *= d;
  }

  // Mixed radix with the last variable fastest, so increasing box index is
  // increasing lexicographic order; basis order wants the reverse.
  stride_.assign(bounds_.size(), 1);
  for (std::size_t j = bounds_.size() - 1; j > 0; --j) stride_[j - 1] = stride_[j] * bounds_[j];

  box_degree_.resize(box);
  box_position_.resize(box);
  basis_boxes_.assign(top_degree_ + 1, {});
  for (std::size_t idx = box; idx-- > 0;) {
    std::uint32_t deg = 0;
    std::size_t rest = idx;
    for (std::size_t j = 0; j < bounds_.size(); ++j) {
      deg += static_cast<std::uint32_t>(rest / stride_[j]);
      rest %= stride_[j];
    }
    box_degree_[idx] = deg;
    box_position_[idx] = basis_boxes_[deg].size();
    basis_boxes_[deg].push_back(idx);
  }
  hilbert_.reserve(basis_boxes_.size());
  for (const auto& b : basis_boxes_) hilbert_.push_back(b.size());
}

std::size_t MonomialCI::box_index(std::span<const std::uint32_t> exponents) const noexcept {
  std::size_t idx = 0;
  for (std::size_t j = 0; j < exponents.size(); ++j) idx += exponents[j] * stride_[j];
  return idx;
}

std::vector<ExponentVector> MonomialCI::graded_basis(std::uint64_t degree) const {
  std::vector<ExponentVector> out;
  if (degree > top_degree_) return out;
  out.reserve(basis_boxes_[degree].size());
  for (std::size_t idx : basis_boxes_[degree]) {
    ExponentVector e;
    e.exponents.resize(bounds_.size());
    for (std::size_t j = 0; j < bounds_.size(); ++j) {
      e.exponents[j] = static_cast<std::uint32_t>(idx / stride_[j]);
      idx %= stride_[j];
    }
    out.push_back(std::move(e));
  }
  return out;
}

std::size_t MonomialCI::hilbert_function(std::uint64_t degree) const noexcept {
  return degree > top_degree_ ? 0 : hilbert_[degree];
}

bool MonomialCI::is_nonzero(const ExponentVector& monomial) const noexcept {
  if (monomial.exponents.size() != bounds_.size()) return false;
  for (std::size_t j = 0; j < bounds_.size(); ++j) {
    if (monomial.exponents[j] >= bounds_[j]) return false;
  }
  return true;
}

std::size_t MonomialCI::basis_position(const ExponentVector& monomial) const {
  if (!is_nonzero(monomial)) throw Error("monomial is zero in the quotient");
  return box_position_[box_index(monomial.exponents)];
}

GradedElement MonomialCI::multiply_by_power(const ExponentVector& monomial, std::uint64_t m) const {
  GradedElement out;
  if (!is_nonzero(monomial)) return out;
  const std::size_t n = bounds_.size();

  // Distribute m over the variables as (k_1, ..., k_n); the coefficient is
  // the multinomial m!/(k_1!...k_n!) = prod_j C(m - k_1 - ... - k_{j-1}, k_j).
  std::vector<std::uint32_t> target(monomial.exponents);
  auto recurse = [&](auto&& self, std::size_t j, std::uint64_t remaining, Residue coeff) -> void {
    const std::uint64_t room = bounds_[j] - 1 - monomial.exponents[j];
    if (j + 1 == n) {
      if (remaining > room) return;
      target[j] = monomial.exponents[j] + static_cast<std::uint32_t>(remaining);
      out.emplace_back(box_position_[box_index(target)], coeff);
      return;
    }
    const std::uint64_t hi = remaining < room ? remaining : room;
    for (std::uint64_t k = 0; k <= hi; ++k) {
      const Residue c = field_.mul(coeff, field_.binomial(remaining, k));
      if (c == 0) continue;
      target[j] = monomial.exponents[j] + static_cast<std::uint32_t>(k);
      self(self, j + 1, remaining - k, c);
    }
  };
  recurse(recurse, 0, m, 1 % field_.characteristic());
  return out;
}

std::vector<ExponentVector> graded_basis(const MonomialCI& a, std::uint64_t degree) {
  return a.graded_basis(degree);
}

std::size_t hilbert_function(const MonomialCI& a, std::uint64_t degree) noexcept {
  return a.hilbert_function(degree);
}

GradedMap mult_matrix(const MonomialCI& a, std::uint64_t m, std::uint64_t source_degree) {
  if (m == 0) throw Error("multiplication exponent must be at least 1");
  const std::size_t cols = a.hilbert_function(source_degree);
  const std::size_t rows = a.hilbert_function(source_degree + m);
  GradedMap map{source_degree, m, MatrixGFp(rows, cols)};
  if (rows == 0 || cols == 0) return map;
  const auto basis = a.graded_basis(source_degree);
  for (std::size_t c = 0; c < cols; ++c) {
    for (const auto& [row, coeff] : a.multiply_by_power(basis[c], m)) map.matrix(row, c) = coeff;
  }
  return map;
}

}  // namespace lefschetz
