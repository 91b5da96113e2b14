#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "lefschetz/prime_field.hpp"

namespace lefschetz {

/// A monomial x_1^{e_1} ... x_n^{e_n} of the quotient, stored by exponents.
struct ExponentVector {
  std::vector<std::uint32_t> exponents;

  [[nodiscard]] std::uint64_t degree() const noexcept;
  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
};

/// Sparse element of a single graded piece: (basis position, coefficient) pairs.
using GradedElement = std::vector<std::pair<std::size_t, Residue>>;

/// A = K[x_1..x_n]/(x_1^{d_1}, ..., x_n^{d_n}) over a prime field.
///
/// Each graded piece A_i has the monic monomials of degree i as its basis,
/// ordered lexicographically with the larger exponent of x_1 first, so for
/// d = (3,3) the basis of A_2 is x^2, xy, y^2.
///
/// Exponents d_j >= 1 are accepted; a bound of 1 makes the variable vanish.
/// The Lefschetz criteria themselves require d_j >= 2 and check that on
/// their own.
class MonomialCI {
 public:
  /// Throws lefschetz::Error if `bounds` is empty or has a zero entry.
  MonomialCI(PrimeField field, std::vector<std::uint32_t> bounds);

  [[nodiscard]] const PrimeField& field() const noexcept { return field_; }
  [[nodiscard]] std::span<const std::uint32_t> bounds() const noexcept { return bounds_; }
  [[nodiscard]] std::size_t variables() const noexcept { return bounds_.size(); }
  /// t = sum (d_j - 1), the socle degree.
  [[nodiscard]] std::uint64_t top_degree() const noexcept { return top_degree_; }
  /// prod d_j.
  [[nodiscard]] std::size_t dimension() const noexcept { return box_degree_.size(); }

  [[nodiscard]] std::vector<ExponentVector> graded_basis(std::uint64_t degree) const;
  [[nodiscard]] std::size_t hilbert_function(std::uint64_t degree) const noexcept;

  /// True iff every exponent is below its bound (the monomial is nonzero in A).
  [[nodiscard]] bool is_nonzero(const ExponentVector& monomial) const noexcept;
  /// Position of a nonzero monomial inside the basis of its graded piece.
  [[nodiscard]] std::size_t basis_position(const ExponentVector& monomial) const;

  /// (x_1 + ... + x_n)^m * monomial, expanded by multinomial coefficients
  /// mod p, as a sparse vector over the basis of degree deg(monomial) + m.
  [[nodiscard]] GradedElement multiply_by_power(const ExponentVector& monomial, std::uint64_t m) const;

 private:
  [[nodiscard]] std::size_t box_index(std::span<const std::uint32_t> exponents) const noexcept;

  PrimeField field_;
  std::vector<std::uint32_t> bounds_;
  std::uint64_t top_degree_ = 0;
  std::vector<std::size_t> stride_;
  // Per box index (mixed radix over the bounds): its degree and its basis position.
  std::vector<std::uint32_t> box_degree_;
  std::vector<std::size_t> box_position_;
  std::vector<std::size_t> hilbert_;
  // Box indices of each graded basis, in basis order.
  std::vector<std::vector<std::size_t>> basis_boxes_;
};

/// Multiplication by l^m: A_i -> A_{i+m} with l = x_1 + ... + x_n, as a
/// HF(i+m) x HF(i) matrix over the monomial bases.
struct GradedMap {
  std::uint64_t source_degree = 0;
  std::uint64_t exponent = 0;
  MatrixGFp matrix;
};

[[nodiscard]] std::vector<ExponentVector> graded_basis(const MonomialCI& a, std::uint64_t degree);
[[nodiscard]] std::size_t hilbert_function(const MonomialCI& a, std::uint64_t degree) noexcept;
/// Throws lefschetz::Error for m == 0.
[[nodiscard]] GradedMap mult_matrix(const MonomialCI& a, std::uint64_t m, std::uint64_t source_degree);

}  // namespace lefschetz
