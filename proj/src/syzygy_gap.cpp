#include "lefschetz/syzygy_gap.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "lefschetz/error.hpp"

namespace lefschetz {
namespace {

std::uint64_t piece_dimension(std::uint64_t tau, std::uint64_t d) { return tau >= d ? tau - d + 1 : 0; }

void require_positive(std::uint64_t d1, std::uint64_t d2, std::uint64_t d3) {
  if (d1 == 0 || d2 == 0 || d3 == 0) throw Error("syzygy gap degrees must be positive");
}

}  // namespace

std::string_view to_string(RegionTag tag) noexcept {
  switch (tag) {
    case RegionTag::kLEqual:
      return "L_equal";
    case RegionTag::kLStrict:
      return "L_strict";
    case RegionTag::kOutsideL:
      break;
  }
  return "outside_L";
}

MatrixGFp presentation_matrix(const PrimeField& field, std::uint64_t d1, std::uint64_t d2, std::uint64_t d3,
                              std::uint64_t tau) {
  const std::uint64_t n1 = piece_dimension(tau, d1);
  const std::uint64_t n2 = piece_dimension(tau, d2);
  const std::uint64_t n3 = piece_dimension(tau, d3);
  MatrixGFp m(tau + 1, n1 + n2 + n3);
  std::size_t col = 0;
  for (std::uint64_t k = 0; k < n1; ++k) m(k + d1, col++) = 1 % field.characteristic();
  for (std::uint64_t k = 0; k < n2; ++k) m(k, col++) = 1 % field.characteristic();
  if (n3 != 0) {
    std::vector<Residue> binom(d3 + 1);
    for (std::uint64_t l = 0; l <= d3; ++l) binom[l] = field.binomial(d3, l);
    for (std::uint64_t k = 0; k < n3; ++k, ++col) {
      for (std::uint64_t l = 0; l <= d3; ++l) m(k + l, col) = binom[l];
    }
  }
  return m;
}

std::uint64_t syzygy_dimension(const PrimeField& field, std::uint64_t d1, std::uint64_t d2, std::uint64_t d3,
                               std::uint64_t tau) {
  auto m = presentation_matrix(field, d1, d2, d3, tau);
  const std::uint64_t domain = m.cols();
  return domain - rank(std::move(m), field);
}

SyzygyProfile syzygy_profile(const PrimeField& field, std::uint64_t d1, std::uint64_t d2, std::uint64_t d3) {
  require_positive(d1, d2, d3);
  std::array<std::uint64_t, 3> d{d1, d2, d3};
  std::sort(d.begin(), d.end());
  const std::uint64_t sum = d1 + d2 + d3;
  // A syzygy touching all three generators lives in degree >= max; one
  // touching only two is a multiple of a Koszul relation, degree >= the two smallest.
  const std::uint64_t start = std::min(d[2], d[0] + d[1]);
  const std::uint64_t bound = sum / 2;
  for (std::uint64_t tau = start; tau <= bound; ++tau) {
    const std::uint64_t domain =
        piece_dimension(tau, d1) + piece_dimension(tau, d2) + piece_dimension(tau, d3);
    if (domain == 0) continue;
    if (domain > tau + 1 || syzygy_dimension(field, d1, d2, d3, tau) > 0) {
      return {tau, sum - tau, sum - 2 * tau};
    }
  }
  throw Error("no syzygy found up to degree " + std::to_string(bound) + " for (" + std::to_string(d1) + "," +
              std::to_string(d2) + "," + std::to_string(d3) + ")");
}

std::uint64_t delta_value(const PrimeField& field, std::uint64_t d1, std::uint64_t d2, std::uint64_t d3) {
  return syzygy_profile(field, d1, d2, d3).delta;
}

RegionTag region(std::uint64_t d1, std::uint64_t d2, std::uint64_t d3) {
  require_positive(d1, d2, d3);
  const std::uint64_t twice_max = 2 * std::max({d1, d2, d3});
  const std::uint64_t sum = d1 + d2 + d3;
  if (twice_max == sum) return RegionTag::kLEqual;
  return twice_max < sum ? RegionTag::kLStrict : RegionTag::kOutsideL;
}

std::vector<std::int64_t> quotient_hilbert_function(const PrimeField& field, std::uint64_t d1, std::uint64_t d2,
                                                    std::uint64_t d3, std::uint64_t max_degree) {
  std::vector<std::int64_t> hf;
  hf.reserve(max_degree + 1);
  for (std::uint64_t tau = 0; tau <= max_degree; ++tau) {
    const auto r = rank(presentation_matrix(field, d1, d2, d3, tau), field);
    hf.push_back(static_cast<std::int64_t>(tau + 1) - static_cast<std::int64_t>(r));
  }
  return hf;
}

bool hilbert_series_identity(const PrimeField& field, std::uint64_t d1, std::uint64_t d2, std::uint64_t d3) {
  const auto profile = syzygy_profile(field, d1, d2, d3);
  const std::uint64_t sum = d1 + d2 + d3;
  const auto hf = quotient_hilbert_function(field, d1, d2, d3, sum + 2);

  std::vector<std::int64_t> lhs(hf.size() + 2, 0);
  for (std::size_t k = 0; k < hf.size(); ++k) {
    lhs[k] += hf[k];
    lhs[k + 1] -= 2 * hf[k];
    lhs[k + 2] += hf[k];
  }
  std::vector<std::int64_t> rhs(lhs.size(), 0);
  rhs[0] += 1;
  rhs[d1] -= 1;
  rhs[d2] -= 1;
  rhs[d3] -= 1;
  rhs[profile.alpha] += 1;
  rhs[profile.beta] += 1;
  return lhs == rhs;
}

bool slp_via_delta(const PrimeField& field, std::uint64_t d1, std::uint64_t d2) {
  if (d1 < 2 || d2 < 2) throw Error("exponents must be at least 2");
  const std::uint64_t lo = std::min(d1, d2);
  for (std::uint64_t c = 1; c < lo; ++c) {
    if (delta_value(field, d1, d2, d1 + d2 - 2 * c) != 0) return false;
  }
  return true;
}

}  // namespace lefschetz
