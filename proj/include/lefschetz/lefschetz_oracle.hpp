#pragma once

#include <cstdint>
#include <vector>

#include "lefschetz/graded_quotient.hpp"
#include "lefschetz/verdict.hpp"

namespace lefschetz {

/// Whether multiplication by (x_1+...+x_n)^m has maximal rank in every
/// degree. Only the degrees i <= (t - m)/2 are checked, for injectivity;
/// maximal rank elsewhere follows.
[[nodiscard]] bool max_rank_in_every_degree(const MonomialCI& a, std::uint64_t m);

/// SLP by exact rank computation.
///
/// Two variables: only the powers m = d_1 + d_2 - 2c, 1 <= c < min(d_1, d_2)
/// are tested, in that order. Otherwise the powers t, t-2, t-4, ... >= 1 are
/// tested; a power of the other parity inherits maximal rank from the
/// one just below it. The first failing power is reported.
[[nodiscard]] SlpVerdict is_slp_oracle(const MonomialCI& a);

/// Tests every power 1..t, without either reduction. Slow; kept as a cross-check.
[[nodiscard]] SlpVerdict is_slp_exhaustive(const MonomialCI& a);

[[nodiscard]] bool is_wlp_oracle(const MonomialCI& a);

/// Powers the oracle examines, in examination order.
[[nodiscard]] std::vector<std::uint64_t> oracle_powers(const MonomialCI& a);

/// Monomial kernel element for a two-variable algebra without SLP.
///
/// Scans levels i = 1, 2, ... and, at each level, the four base-p digit
/// conditions in order; the first violation picks the witness
///   1: x^{r_i},        m = (m_i + n_i) p^i
///   2: y^{s_i},        m = (m_i + n_i) p^i
///   3: x^{r_i} y^{s_i}, m = (m_i + n_i - 1) p^i
///   4: 1,              m = (m_i + n_i + 1) p^i
/// The witness is checked by direct expansion before it is returned.
///
/// Throws lefschetz::Error if n != 2, if an exponent is below 2, if the
/// algebra has SLP, or if the constructed witness fails verification.
[[nodiscard]] KernelWitness kernel_witness(const MonomialCI& a);

/// Checks the three witness invariants: monomial nonzero, l^power * monomial
/// zero, HF(deg) <= HF(deg + power).
[[nodiscard]] bool verify_witness(const MonomialCI& a, const KernelWitness& w);

}  // namespace lefschetz
