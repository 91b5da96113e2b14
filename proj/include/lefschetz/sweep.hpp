#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lefschetz/prime_field.hpp"
#include "lefschetz/verdict.hpp"

namespace lefschetz {

/// Decision routes a sweep can compare.
///   oracle     exact rank computation
///   digits     closed-form base-p classification
///   manhattan  lattice inequality (two variables)
///   delta      vanishing syzygy gaps (two variables)
enum class Mode { kOracle = 0, kDigits = 1, kManhattan = 2, kDelta = 3 };
inline constexpr std::array<Mode, 4> kAllModes{Mode::kOracle, Mode::kDigits, Mode::kManhattan, Mode::kDelta};

enum class OutputFormat { kJson, kCsv, kText };

[[nodiscard]] std::string_view to_string(Mode mode) noexcept;
[[nodiscard]] std::string_view to_string(OutputFormat format) noexcept;
/// Throw lefschetz::Error on unknown names.
[[nodiscard]] Mode parse_mode(std::string_view name);
[[nodiscard]] OutputFormat parse_format(std::string_view name);
/// Comma-separated list; empty items are rejected.
[[nodiscard]] std::vector<std::string> split_list(std::string_view text);
[[nodiscard]] std::vector<std::uint64_t> parse_uint_list(std::string_view text);

struct SweepConfig {
  std::vector<std::uint64_t> primes;
  unsigned n = 2;
  std::uint32_t max_exponent = 10;
  std::vector<Mode> modes;
  OutputFormat format = OutputFormat::kText;

  friend bool operator==(const SweepConfig&, const SweepConfig&) = default;
};

/// Throws lefschetz::Error describing the first problem found.
void validate(const SweepConfig& config);

/// Splits `key = value` lines, trimming whitespace; blank lines and '#'
/// comments are skipped. Throws lefschetz::Error on a line without '=' or
/// with an empty key.
using ConfigEntries = std::vector<std::pair<std::string, std::string>>;
[[nodiscard]] ConfigEntries parse_config_text(std::string_view text);

struct SweepEntry {
  std::uint64_t p = 0;
  std::vector<std::uint32_t> exponents;
  /// Indexed by Mode; empty when the mode was not requested.
  std::array<std::optional<bool>, 4> verdicts{};
  bool agree = true;
  std::optional<KernelWitness> witness;

  friend bool operator==(const SweepEntry&, const SweepEntry&) = default;
};

struct SweepSummary {
  std::uint64_t total = 0;
  std::uint64_t slp = 0;
  std::uint64_t non_slp = 0;
  std::uint64_t disagreements = 0;

  friend bool operator==(const SweepSummary&, const SweepSummary&) = default;
};

struct SweepReport {
  SweepConfig config;
  std::vector<SweepEntry> entries;
  SweepSummary summary;
  std::chrono::milliseconds elapsed{0};
};

/// Nondecreasing exponent tuples 2 <= d_1 <= ... <= d_n <= max, in lexicographic order.
[[nodiscard]] std::vector<std::vector<std::uint32_t>> enumerate_exponents(unsigned n, std::uint32_t max_exponent);

/// Runs every requested mode on one tuple. A two-variable tuple on which
/// all modes agree on "no SLP" also gets a kernel witness.
[[nodiscard]] SweepEntry evaluate_entry(const PrimeField& field, std::vector<std::uint32_t> exponents,
                                        const std::vector<Mode>& modes);

/// OpenMP sweep over (p, exponents); jobs <= 0 uses every available thread.
/// Entries come out in lexicographic (p, exponents) order regardless of scheduling.
[[nodiscard]] SweepReport run_sweep(const SweepConfig& config, int jobs = 0);
/// Single-threaded reference implementation of run_sweep.
[[nodiscard]] SweepReport run_sweep_serial(const SweepConfig& config);

[[nodiscard]] SweepSummary summarize(const std::vector<SweepEntry>& entries);

[[nodiscard]] std::string render_json(const SweepReport& report);
[[nodiscard]] std::string render_csv(const SweepReport& report);
/// Text rendering; the elapsed-time footer is appended only on request.
[[nodiscard]] std::string render_text(const SweepReport& report, bool with_footer = false);
/// Renders in report.config.format (no footer).
[[nodiscard]] std::string render(const SweepReport& report);

/// Inverse of render_json. Throws lefschetz::Error on schema violations.
[[nodiscard]] SweepReport parse_json_report(std::string_view json);

}  // namespace lefschetz
