#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "lefschetz/prime_field.hpp"

namespace lefschetz {

/// Degrees alpha <= beta of the two generators of Syz(x^d1, y^d2, (x+y)^d3),
/// and their gap.
struct SyzygyProfile {
  std::uint64_t alpha = 0;
  std::uint64_t beta = 0;
  std::uint64_t delta = 0;

  friend bool operator==(const SyzygyProfile&, const SyzygyProfile&) = default;
};

/// Position of (d1, d2, d3) relative to L = { 2 max <= sum }.
enum class RegionTag { kLEqual, kLStrict, kOutsideL };

[[nodiscard]] std::string_view to_string(RegionTag tag) noexcept;

/// Matrix of (g1, g2, g3) -> g1 x^d1 + g2 y^d2 + g3 (x+y)^d3 in degree tau.
///
/// Columns run over the monomials of g1, then g2, then g3 (each x^k y^{deg-k},
/// k ascending); rows over x^k y^{tau-k}, k ascending. Degrees may be 0.
[[nodiscard]] MatrixGFp presentation_matrix(const PrimeField& field, std::uint64_t d1, std::uint64_t d2,
                                            std::uint64_t d3, std::uint64_t tau);

/// Dimension of the degree-tau syzygies: domain dimension minus rank.
[[nodiscard]] std::uint64_t syzygy_dimension(const PrimeField& field, std::uint64_t d1, std::uint64_t d2,
                                             std::uint64_t d3, std::uint64_t tau);

/// alpha is the least degree carrying a nonzero syzygy; beta follows from
/// alpha + beta = d1 + d2 + d3. Throws lefschetz::Error for a zero degree.
[[nodiscard]] SyzygyProfile syzygy_profile(const PrimeField& field, std::uint64_t d1, std::uint64_t d2,
                                           std::uint64_t d3);

[[nodiscard]] std::uint64_t delta_value(const PrimeField& field, std::uint64_t d1, std::uint64_t d2,
                                        std::uint64_t d3);

[[nodiscard]] RegionTag region(std::uint64_t d1, std::uint64_t d2, std::uint64_t d3);

/// Hilbert function of K[x,y]/(x^d1, y^d2, (x+y)^d3) in degrees 0..max_degree,
/// each entry (tau + 1) - rank of the degree-tau presentation map.
[[nodiscard]] std::vector<std::int64_t> quotient_hilbert_function(const PrimeField& field, std::uint64_t d1,
                                                                  std::uint64_t d2, std::uint64_t d3,
                                                                  std::uint64_t max_degree);

/// Whether (1 - t)^2 HS(t) = 1 - t^d1 - t^d2 - t^d3 + t^alpha + t^beta holds
/// exactly, with HS computed degree by degree.
[[nodiscard]] bool hilbert_series_identity(const PrimeField& field, std::uint64_t d1, std::uint64_t d2,
                                           std::uint64_t d3);

/// SLP of K[x,y]/(x^d1, y^d2) read off the syzygy gap:
/// delta(d1, d2, d1 + d2 - 2c) = 0 for every 1 <= c < min(d1, d2).
/// Throws lefschetz::Error if d1 or d2 < 2.
[[nodiscard]] bool slp_via_delta(const PrimeField& field, std::uint64_t d1, std::uint64_t d2);

}  // namespace lefschetz
