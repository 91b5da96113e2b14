#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace lefschetz {

using Residue = std::uint32_t;

/// The field GF(p). Residues are plain machine integers in [0, p); the
/// characteristic is capped so that a product of two residues fits in
/// 64 bits.
class PrimeField {
 public:
  static constexpr std::uint64_t kMaxCharacteristic = 0xFFFFFFFFull;

  /// Throws lefschetz::Error if p is not a prime in [2, kMaxCharacteristic].
  explicit PrimeField(std::uint64_t p);

  [[nodiscard]] Residue characteristic() const noexcept { return p_; }

  [[nodiscard]] Residue reduce(std::uint64_t v) const noexcept {
    return static_cast<Residue>(v % p_);
  }
  [[nodiscard]] Residue add(Residue a, Residue b) const noexcept {
    const std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<Residue>(s >= p_ ? s - p_ : s);
  }
  [[nodiscard]] Residue sub(Residue a, Residue b) const noexcept {
    return a >= b ? a - b : static_cast<Residue>(std::uint64_t{a} + p_ - b);
  }
  [[nodiscard]] Residue neg(Residue a) const noexcept { return a == 0 ? 0 : p_ - a; }
  [[nodiscard]] Residue mul(Residue a, Residue b) const noexcept {
    return static_cast<Residue>(std::uint64_t{a} * b % p_);
  }
  [[nodiscard]] Residue pow(Residue base, std::uint64_t e) const noexcept;

  /// Multiplicative inverse via Fermat. Throws lefschetz::Error("not invertible") for 0.
  [[nodiscard]] Residue inverse(Residue a) const;

  /// C(n, k) mod p as a product of base-p digit binomials; 0 when k > n.
  [[nodiscard]] Residue binomial(std::uint64_t n, std::uint64_t k) const noexcept;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  Residue p_;
};

[[nodiscard]] bool is_prime(std::uint64_t n) noexcept;

/// Free-function spelling of PrimeField::binomial.
[[nodiscard]] inline Residue binomial_mod_p(std::uint64_t n, std::uint64_t k,
                                            const PrimeField& field) noexcept {
  return field.binomial(n, k);
}

/// Dense row-major matrix over GF(p).
class MatrixGFp {
 public:
  MatrixGFp() = default;
  MatrixGFp(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  /// Throws lefschetz::Error on a size mismatch or an entry outside [0, p).
  MatrixGFp(std::size_t rows, std::size_t cols, std::vector<Residue> entries, const PrimeField& field);

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }

  [[nodiscard]] Residue operator()(std::size_t r, std::size_t c) const noexcept {
    return data_[r * cols_ + c];
  }
  Residue& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }

  [[nodiscard]] std::span<const Residue> row(std::size_t r) const noexcept {
    return {data_.data() + r * cols_, cols_};
  }
  [[nodiscard]] std::span<const Residue> entries() const noexcept { return data_; }

  [[nodiscard]] MatrixGFp transposed() const;

  friend bool operator==(const MatrixGFp&, const MatrixGFp&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Residue> data_;
};

/// Exact rank by Gaussian elimination; pivots are the first nonzero entry
/// found scanning columns left to right.
[[nodiscard]] std::size_t rank(MatrixGFp m, const PrimeField& field);

/// Matrix product lhs * rhs over GF(p). Throws lefschetz::Error on a shape mismatch.
[[nodiscard]] MatrixGFp multiply(const MatrixGFp& lhs, const MatrixGFp& rhs, const PrimeField& field);

}  // namespace lefschetz
