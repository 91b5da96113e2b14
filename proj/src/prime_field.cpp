#include "lefschetz/prime_field.hpp"

#include <string>
#include <utility>

#include "lefschetz/error.hpp"

namespace lefschetz {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t p) {
  if (p > kMaxCharacteristic) {
    throw Error(std::to_string(p) + " exceeds the supported characteristic bound");
  }
  if (!is_prime(p)) throw Error(std::to_string(p) + " is not prime");
  p_ = static_cast<Residue>(p);
}

Residue PrimeField::pow(Residue base, std::uint64_t e) const noexcept {
  Residue result = reduce(1);
  base = reduce(base);
  while (e != 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Residue PrimeField::inverse(Residue a) const {
  if (reduce(a) == 0) throw Error("not invertible");
  return pow(a, p_ - 2);
}

Residue PrimeField::binomial(std::uint64_t n, std::uint64_t k) const noexcept {
  if (k > n) return 0;
  // Product of digitwise binomials.
  Residue result = 1;
  while (n != 0 || k != 0) {
    const std::uint64_t nd = n % p_;
    const std::uint64_t kd = k % p_;
    if (kd > nd) return 0;
    // Small digit binomial C(nd, kd) mod p with nd < p, computed multiplicatively.
    const std::uint64_t r = kd < nd - kd ? kd : nd - kd;
    Residue num = 1;
    Residue den = 1;
    for (std::uint64_t i = 0; i < r; ++i) {
      num = mul(num, reduce(nd - i));
      den = mul(den, reduce(i + 1));
    }
    result = mul(result, mul(num, inverse(den)));
    n /= p_;
    k /= p_;
  }
  return result;
}

MatrixGFp::MatrixGFp(std::size_t rows, std::size_t cols, std::vector<Residue> entries,
                     const PrimeField& field)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_) {
    throw Error("matrix entry count " + std::to_string(data_.size()) + " does not match shape " +
                std::to_string(rows_) + "x" + std::to_string(cols_));
  }
  for (Residue v : data_) {
    if (v >= field.characteristic()) throw Error("matrix entry outside [0, p)");
  }
}

MatrixGFp MatrixGFp::transposed() const {
  MatrixGFp t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

std::size_t rank(MatrixGFp m, const PrimeField& field) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r) {
      for (std::size_t j = c; j < cols; ++j) std::swap(m(pivot, j), m(r, j));
    }
    const Residue inv = field.inverse(m(r, c));
    for (std::size_t j = c; j < cols; ++j) m(r, j) = field.mul(m(r, j), inv);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const Residue factor = m(i, c);
      if (factor == 0) continue;
      for (std::size_t j = c; j < cols; ++j) {
        m(i, j) = field.sub(m(i, j), field.mul(factor, m(r, j)));
      }
    }
    ++r;
  }
  return r;
}

MatrixGFp multiply(const MatrixGFp& lhs, const MatrixGFp& rhs, const PrimeField& field) {
  if (lhs.cols() != rhs.rows()) throw Error("matrix shapes do not compose");
  MatrixGFp out(lhs.rows(), rhs.cols());
  for (std::size_t i = 0; i < lhs.rows(); ++i) {
    for (std::size_t k = 0; k < lhs.cols(); ++k) {
      const Residue a = lhs(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols(); ++j) {
        out(i, j) = field.add(out(i, j), field.mul(a, rhs(k, j)));
      }
    }
  }
  return out;
}

}  // namespace lefschetz
