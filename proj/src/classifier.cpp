#include "lefschetz/classifier.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <string>
#include <utility>

#include "lefschetz/error.hpp"

namespace lefschetz {
namespace {

void require_exponent(std::uint64_t d) {
  if (d < 2) throw Error("exponent " + std::to_string(d) + " is below 2");
}

std::int64_t signed_abs_diff(std::int64_t x, std::int64_t y) { return x > y ? x - y : y - x; }

// Candidate multipliers u with |value - u * unit| < unit, plus a margin in wide mode.
std::pair<std::int64_t, std::int64_t> candidate_range(std::uint64_t value, std::uint64_t unit,
                                                      SearchWindow window) {
  const auto q = static_cast<std::int64_t>(value / unit);
  return window == SearchWindow::kBracketing ? std::pair{q, q + 1} : std::pair{q - 2, q + 3};
}

// Does some odd-sum (u, v, w) bring the three coordinates within distance < unit?
bool lattice_violation(const std::uint64_t (&coords)[3], std::uint64_t unit, SearchWindow window) {
  const auto [u0, u1] = candidate_range(coords[0], unit, window);
  const auto [v0, v1] = candidate_range(coords[1], unit, window);
  const auto [w0, w1] = candidate_range(coords[2], unit, window);
  const auto step = static_cast<std::int64_t>(unit);
  for (std::int64_t u = u0; u <= u1; ++u) {
    const std::int64_t du = signed_abs_diff(static_cast<std::int64_t>(coords[0]), u * step);
    for (std::int64_t v = v0; v <= v1; ++v) {
      const std::int64_t dv = signed_abs_diff(static_cast<std::int64_t>(coords[1]), v * step);
      for (std::int64_t w = w0; w <= w1; ++w) {
        if (((u + v + w) & 1) == 0) continue;
        const std::int64_t dw = signed_abs_diff(static_cast<std::int64_t>(coords[2]), w * step);
        if (du + dv + dw < step) return true;
      }
    }
  }
  return false;
}

SlpVerdict make_verdict(bool has_slp, std::optional<int> condition, std::string rule) {
  SlpVerdict v;
  v.has_slp = has_slp;
  v.method = VerdictMethod::kClassification;
  v.condition = has_slp ? condition : std::nullopt;
  v.rule = std::move(rule);
  return v;
}

}  // namespace

std::uint64_t DigitExpansion::value() const noexcept {
  std::uint64_t v = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) v = v * base + *it;
  return v;
}

DigitExpansion base_p_digits(std::uint64_t n, const PrimeField& field) {
  if (n == 0) throw Error("base-p digits need a positive integer");
  DigitExpansion e{field.characteristic(), {}};
  while (n != 0) {
    e.digits.push_back(n % e.base);
    n /= e.base;
  }
  return e;
}

DigitDecomposition decompose(std::uint64_t a, std::uint64_t b, unsigned level, const PrimeField& field) {
  std::uint64_t pw = 1;
  for (unsigned i = 0; i < level; ++i) pw *= field.characteristic();
  return {level, pw, a / pw, a % pw, b / pw, b % pw};
}

unsigned step_level_bound(std::uint64_t a, std::uint64_t b, const PrimeField& field) {
  const std::uint64_t p = field.characteristic();
  unsigned i = 1;
  std::uint64_t pw = p;
  while (pw + 1 < a + b) {
    pw *= p;
    ++i;
  }
  return i;
}

ConditionReport slp_step_check(const PrimeField& field, std::uint64_t a, std::uint64_t b) {
  require_exponent(a);
  require_exponent(b);
  ConditionReport report;
  const unsigned top = step_level_bound(a, b, field);
  for (unsigned i = 1; i <= top; ++i) {
    const auto d = decompose(a, b, i, field);
    if (d.m > 0 && d.r + 1 < d.s) report.violations.push_back({i, 1});
    if (d.n > 0 && d.s + 1 < d.r) report.violations.push_back({i, 2});
    if (d.m > 0 && d.n > 0 && d.r + d.s + 1 < d.power) report.violations.push_back({i, 3});
    if (d.r + d.s > d.power + 1) report.violations.push_back({i, 4});
  }
  return report;
}

bool manhattan_check(const PrimeField& field, std::uint64_t a, std::uint64_t b, SearchWindow window) {
  require_exponent(a);
  require_exponent(b);
  const std::uint64_t p = field.characteristic();
  const unsigned top = step_level_bound(a, b, field) + (window == SearchWindow::kWide ? 1 : 0);
  const std::uint64_t c_end = std::min(a, b);
  std::uint64_t pw = 1;
  // Level 0 never fails: (a, b, a + b - 2c) has even coordinate sum.
  for (unsigned i = 1; i <= top; ++i) {
    pw *= p;
    for (std::uint64_t c = 1; c < c_end; ++c) {
      const std::uint64_t coords[3] = {a, b, a + b - 2 * c};
      if (lattice_violation(coords, pw, window)) return false;
    }
  }
  return true;
}

SlpVerdict classify_two_p_odd(const PrimeField& field, std::uint64_t a, std::uint64_t b) {
  const std::uint64_t p = field.characteristic();
  if (p == 2) throw Error("odd-characteristic classification called with p = 2");
  require_exponent(a);
  require_exponent(b);
  auto da = base_p_digits(a, field);
  auto db = base_p_digits(b, field);
  if (da.digits.size() > db.digits.size()) {
    std::swap(a, b);
    std::swap(da, db);
  }

  if (b < p) {
    const bool ok = a + b <= p + 1;
    return make_verdict(ok, 4, ok ? "case 1: a + b <= p + 1" : "case 1: a + b > p + 1");
  }
  if (a < p) {
    const std::uint64_t b0 = db.digits[0];
    const bool ok = a <= std::min(b0, p - b0) + 1;
    return make_verdict(ok, 5,
                        ok ? "case 2: a <= min(b_0, p - b_0) + 1" : "case 2: a > min(b_0, p - b_0) + 1");
  }

  const std::size_t k = da.digits.size() - 1;
  const std::size_t l = db.digits.size() - 1;
  const std::uint64_t lo = (p - 1) / 2;
  const std::uint64_t hi = (p + 1) / 2;
  auto near_half = [&](std::uint64_t digit) { return digit == lo || digit == hi; };
  if (!near_half(da.digits[0]) || !near_half(db.digits[0])) {
    return make_verdict(false, 3, "case 3(a): a_0 or b_0 not (p +- 1)/2");
  }
  for (std::size_t j = 1; j < k; ++j) {
    if (da.digits[j] != lo || db.digits[j] != lo) {
      return make_verdict(false, 3, "case 3(b): middle digit " + std::to_string(j) + " not (p - 1)/2");
    }
  }
  if (da.digits[k] + db.digits[k] > p - 1) {
    return make_verdict(false, 3, "case 3(c): a_k + b_k > p - 1");
  }
  if (l > k && db.digits[k] < da.digits[k]) {
    return make_verdict(false, 3, "case 3(c): b_k < a_k");
  }
  return make_verdict(true, 3, "case 3: digit conditions (a), (b), (c) hold");
}

SlpVerdict classify_two_p2(std::uint64_t a, std::uint64_t b) {
  require_exponent(a);
  require_exponent(b);
  if (a > b) std::swap(a, b);
  if (a == 2 && b % 2 == 1) return make_verdict(true, 2, "a=2, b odd");
  if (a == 3 && b % 4 == 2) return make_verdict(true, 2, "a=3, b = 2 mod 4");
  return make_verdict(false, 2, "neither a=2 with b odd nor a=3 with b = 2 mod 4");
}

SlpVerdict classify_n_ge_3(const PrimeField& field, std::span<const std::uint32_t> exponents) {
  if (exponents.size() < 3) throw Error("classify_n_ge_3 needs at least three exponents");
  std::vector<std::uint64_t> d(exponents.begin(), exponents.end());
  for (auto v : d) require_exponent(v);
  std::sort(d.begin(), d.end(), std::greater<>());
  const std::uint64_t p = field.characteristic();
  const std::uint64_t t = std::accumulate(d.begin(), d.end(), std::uint64_t{0}) - d.size();
  if (t < p) return make_verdict(true, 4, "t < p");
  if (d[0] < p) return make_verdict(false, std::nullopt, "t >= p and every exponent < p");
  if (d[1] >= p) return make_verdict(false, std::nullopt, "t >= p and two exponents >= p");
  const std::uint64_t r = d[0] % p;
  const std::uint64_t rest = t - (d[0] - 1);
  if (rest <= std::min(r, p - r)) {
    return make_verdict(true, 5, "d_1 >= p, others < p, sum (d_i - 1) <= min(r_1, p - r_1)");
  }
  return make_verdict(false, std::nullopt, "t >= p and sum (d_i - 1) > min(r_1, p - r_1)");
}

SlpVerdict classify(const PrimeField& field, std::span<const std::uint32_t> exponents) {
  if (exponents.empty()) throw Error("classify needs at least one exponent");
  for (auto v : exponents) require_exponent(v);
  if (exponents.size() == 1) return make_verdict(true, 1, "one variable");
  if (exponents.size() == 2) {
    return field.characteristic() == 2 ? classify_two_p2(exponents[0], exponents[1])
                                       : classify_two_p_odd(field, exponents[0], exponents[1]);
  }
  return classify_n_ge_3(field, exponents);
}

bool delta_zero_criterion(const PrimeField& field, std::uint64_t d1, std::uint64_t d2, std::uint64_t d3,
                          SearchWindow window) {
  if (!(1 <= d1 && d1 <= d2 && d2 <= d3 && d3 < d1 + d2)) {
    throw Error("delta_zero_criterion needs 1 <= d1 <= d2 <= d3 < d1 + d2");
  }
  const std::uint64_t p = field.characteristic();
  const std::uint64_t sum = d1 + d2 + d3;
  const std::uint64_t coords[3] = {d1, d2, d3};
  std::uint64_t pw = 1;
  bool past_bound = false;
  for (;;) {
    if (lattice_violation(coords, pw, window)) return false;
    if (pw >= sum) {
      if (window == SearchWindow::kBracketing || past_bound) break;
      past_bound = true;
    }
    pw *= p;
  }
  return true;
}

}  // namespace lefschetz
