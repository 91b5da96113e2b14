#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "lefschetz/graded_quotient.hpp"

namespace lefschetz {

/// A nonzero monomial killed by l^power, sitting in a degree where the
/// multiplication map should have been injective.
struct KernelWitness {
  ExponentVector monomial;
  std::uint64_t power = 0;
  std::uint64_t target_degree = 0;

  friend bool operator==(const KernelWitness&, const KernelWitness&) = default;
};

enum class VerdictMethod { kOracle, kClassification };

/// Outcome of an SLP decision.
///
/// `condition` is the numbered condition of the combined classification
/// that made the algebra SLP (1: one variable, 2: characteristic two pair,
/// 3: odd-characteristic digit pattern, 4: small socle degree, 5: one
/// dominant exponent). `rule` is a short human-readable account of which
/// case or subcondition decided the verdict.
struct SlpVerdict {
  bool has_slp = true;
  VerdictMethod method = VerdictMethod::kOracle;
  std::optional<int> condition;
  std::string rule;
  std::optional<std::uint64_t> failing_exponent;
  std::optional<KernelWitness> witness;
};

}  // namespace lefschetz
