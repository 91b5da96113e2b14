#include "lefschetz/lefschetz_oracle.hpp"

#include <algorithm>
#include <string>

#include "lefschetz/classifier.hpp"
#include "lefschetz/error.hpp"

namespace lefschetz {
namespace {

SlpVerdict verdict_from_powers(const MonomialCI& a, const std::vector<std::uint64_t>& powers) {
  SlpVerdict v;
  v.method = VerdictMethod::kOracle;
  for (std::uint64_t m : powers) {
    if (!max_rank_in_every_degree(a, m)) {
      v.has_slp = false;
      v.failing_exponent = m;
      v.rule = "multiplication by l^" + std::to_string(m) + " is not of maximal rank";
      return v;
    }
  }
  v.has_slp = true;
  v.rule = "every l^m has maximal rank";
  return v;
}

}  // namespace

bool max_rank_in_every_degree(const MonomialCI& a, std::uint64_t m) {
  const std::uint64_t t = a.top_degree();
  if (m > t) return true;
  const std::uint64_t last = (t - m) / 2;
  for (std::uint64_t i = 0; i <= last; ++i) {
    const auto map = mult_matrix(a, m, i);
    if (rank(map.matrix, a.field()) != map.matrix.cols()) return false;
  }
  return true;
}

std::vector<std::uint64_t> oracle_powers(const MonomialCI& a) {
  std::vector<std::uint64_t> powers;
  const auto bounds = a.bounds();
  if (bounds.size() == 2) {
    const std::uint64_t lo = std::min(bounds[0], bounds[1]);
    for (std::uint64_t c = 1; c < lo; ++c) powers.push_back(std::uint64_t{bounds[0]} + bounds[1] - 2 * c);
    return powers;
  }
  for (std::uint64_t m = a.top_degree(); m >= 1; m = m >= 2 ? m - 2 : 0) powers.push_back(m);
  return powers;
}

SlpVerdict is_slp_oracle(const MonomialCI& a) { return verdict_from_powers(a, oracle_powers(a)); }

SlpVerdict is_slp_exhaustive(const MonomialCI& a) {
  std::vector<std::uint64_t> powers;
  for (std::uint64_t m = 1; m <= a.top_degree(); ++m) powers.push_back(m);
  return verdict_from_powers(a, powers);
}

bool is_wlp_oracle(const MonomialCI& a) { return max_rank_in_every_degree(a, 1); }

bool verify_witness(const MonomialCI& a, const KernelWitness& w) {
  if (!a.is_nonzero(w.monomial)) return false;
  const std::uint64_t deg = w.monomial.degree();
  if (w.target_degree != deg + w.power) return false;
  if (a.hilbert_function(deg) > a.hilbert_function(w.target_degree)) return false;
  const auto product = a.multiply_by_power(w.monomial, w.power);
  return std::all_of(product.begin(), product.end(), [](const auto& term) { return term.second == 0; });
}

KernelWitness kernel_witness(const MonomialCI& a) {
  if (a.variables() != 2) throw Error("kernel witnesses are only constructed for two variables");
  const std::uint64_t da = a.bounds()[0];
  const std::uint64_t db = a.bounds()[1];
  const auto report = slp_step_check(a.field(), da, db);
  if (report.satisfied()) throw Error("the algebra has the SLP; no kernel witness exists");

  const auto [level, condition] = report.violations.front();
  const auto d = decompose(da, db, level, a.field());
  KernelWitness w;
  w.monomial.exponents = {0, 0};
  switch (condition) {
    case 1:
      w.monomial.exponents[0] = static_cast<std::uint32_t>(d.r);
      w.power = (d.m + d.n) * d.power;
      break;
    case 2:
      w.monomial.exponents[1] = static_cast<std::uint32_t>(d.s);
      w.power = (d.m + d.n) * d.power;
      break;
    case 3:
      w.monomial.exponents = {static_cast<std::uint32_t>(d.r), static_cast<std::uint32_t>(d.s)};
      w.power = (d.m + d.n - 1) * d.power;
      break;
    default:
      w.power = (d.m + d.n + 1) * d.power;
      break;
  }
  w.target_degree = w.monomial.degree() + w.power;
  if (!verify_witness(a, w)) {
    throw Error("constructed kernel witness failed verification (level " + std::to_string(level) +
                ", condition " + std::to_string(condition) + ")");
  }
  return w;
}

}  // namespace lefschetz
