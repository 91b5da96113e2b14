#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lefschetz/prime_field.hpp"
#include "lefschetz/verdict.hpp"

namespace lefschetz {

/// Base-p digits, least significant first; the last digit is nonzero.
struct DigitExpansion {
  std::uint64_t base = 0;
  std::vector<std::uint64_t> digits;

  [[nodiscard]] std::uint64_t value() const noexcept;
  /// Digit at position j, 0 past the end.
  [[nodiscard]] std::uint64_t digit(std::size_t j) const noexcept {
    return j < digits.size() ? digits[j] : 0;
  }
};

/// a = m_i p^i + r_i and b = n_i p^i + s_i with 0 <= r_i, s_i < p^i.
struct DigitDecomposition {
  unsigned level = 0;
  std::uint64_t power = 0;  // p^i
  std::uint64_t m = 0, r = 0;
  std::uint64_t n = 0, s = 0;
};

struct ConditionViolation {
  unsigned level = 0;
  int condition = 0;  // 1..4
  friend bool operator==(const ConditionViolation&, const ConditionViolation&) = default;
};

struct ConditionReport {
  std::vector<ConditionViolation> violations;
  [[nodiscard]] bool satisfied() const noexcept { return violations.empty(); }
};

/// Candidate range for the lattice searches of manhattan_check and
/// delta_zero_criterion. kBracketing looks only at the quotient and
/// quotient + 1 per coordinate, which is provably enough; kWide scans
/// quotient - 2 .. quotient + 3 and one extra level as a cross-check.
enum class SearchWindow { kBracketing, kWide };

/// Throws lefschetz::Error for n == 0.
[[nodiscard]] DigitExpansion base_p_digits(std::uint64_t n, const PrimeField& field);

[[nodiscard]] DigitDecomposition decompose(std::uint64_t a, std::uint64_t b, unsigned level,
                                           const PrimeField& field);

/// Least i >= 1 with p^i >= a + b - 1. Past it every digit condition holds.
[[nodiscard]] unsigned step_level_bound(std::uint64_t a, std::uint64_t b, const PrimeField& field);

/// The four per-level digit conditions for K[x,y]/(x^a, y^b):
///   1. m_i > 0  implies  r_i >= s_i - 1
///   2. n_i > 0  implies  s_i >= r_i - 1
///   3. m_i, n_i > 0  implies  r_i + s_i >= p^i - 1
///   4. r_i + s_i <= p^i + 1
/// All violations for i = 1 .. step_level_bound are listed, ordered by
/// level and then condition. Throws lefschetz::Error if a or b < 2.
[[nodiscard]] ConditionReport slp_step_check(const PrimeField& field, std::uint64_t a, std::uint64_t b);

/// |a - u p^i| + |b - v p^i| + |a + b - 2c - w p^i| >= p^i for every
/// i >= 1, 1 <= c < min(a, b) and u + v + w odd. Throws lefschetz::Error
/// if a or b < 2.
[[nodiscard]] bool manhattan_check(const PrimeField& field, std::uint64_t a, std::uint64_t b,
                                   SearchWindow window = SearchWindow::kBracketing);

/// Two variables, odd p. Cases by base-p size: both below p; a below p
/// and b not; both at least p (digit conditions (a), (b), (c)). Inputs are
/// swapped so that a has no more digits than b.
[[nodiscard]] SlpVerdict classify_two_p_odd(const PrimeField& field, std::uint64_t a, std::uint64_t b);

/// Two variables, p = 2: SLP iff min = 2 and max odd, or min = 3 and max = 2 mod 4.
[[nodiscard]] SlpVerdict classify_two_p2(std::uint64_t a, std::uint64_t b);

/// Three or more variables: SLP iff t < p, or the largest exponent d_1 is
/// at least p, all others are below p, and sum_{i>=2}(d_i - 1) <= min(r, p - r)
/// where r = d_1 mod p.
[[nodiscard]] SlpVerdict classify_n_ge_3(const PrimeField& field, std::span<const std::uint32_t> exponents);

/// Combined closed-form classification for any n >= 1.
[[nodiscard]] SlpVerdict classify(const PrimeField& field, std::span<const std::uint32_t> exponents);

/// delta(d1, d2, d3) = 0 test by the lattice inequality
/// |d1 - u p^s| + |d2 - v p^s| + |d3 - w p^s| >= p^s over s >= 0 and odd-sum
/// (u, v, w). Requires 1 <= d1 <= d2 <= d3 < d1 + d2, else throws
/// lefschetz::Error.
[[nodiscard]] bool delta_zero_criterion(const PrimeField& field, std::uint64_t d1, std::uint64_t d2,
                                        std::uint64_t d3, SearchWindow window = SearchWindow::kBracketing);

}  // namespace lefschetz
