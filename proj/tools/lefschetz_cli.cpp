// lefschetz: decide the strong/weak Lefschetz property of monomial complete
// intersections K[x_1..x_n]/(x_1^d_1, ..., x_n^d_n) over GF(p).
//
// Subcommands
//   check    --p P --d D1,D2,... [--mode oracle|digits|manhattan|delta]
//   classify --p P --d D1,D2,...
//   wlp      --p P --d D1,D2,...
//   syzgap   --p P --d D1,D2,D3
//   verify   --primes P1,P2 --n N --max M --modes m1,m2 [--format json|csv|text]
//            [--out FILE] [--jobs N] [--config FILE]
//
// Exit codes: 0 SLP (or WLP, or a clean sweep), 1 no SLP (or a sweep with
// disagreements), 2 usage or input error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "lefschetz/classifier.hpp"
#include "lefschetz/error.hpp"
#include "lefschetz/graded_quotient.hpp"
#include "lefschetz/lefschetz_oracle.hpp"
#include "lefschetz/sweep.hpp"
#include "lefschetz/syzygy_gap.hpp"

namespace {

using namespace lefschetz;

enum ExitCode : int { kSlp = 0, kNoSlp = 1, kUsage = 2 };

constexpr std::uint64_t kCharacteristicZero = 0;

std::vector<std::uint32_t> parse_exponents(const std::string& text, std::uint32_t minimum) {
  std::vector<std::uint32_t> out;
  for (auto v : parse_uint_list(text)) {
    if (v < minimum) throw Error("exponent " + std::to_string(v) + " is below " + std::to_string(minimum));
    if (v > 0xFFFFFFFFull) throw Error("exponent " + std::to_string(v) + " is too large");
    out.push_back(static_cast<std::uint32_t>(v));
  }
  if (out.empty()) throw Error("no exponents given");
  return out;
}

std::string monomial_text(const ExponentVector& e) {
  static constexpr const char* kNames[] = {"x", "y"};
  std::string out;
  for (std::size_t j = 0; j < e.exponents.size(); ++j) {
    if (e.exponents[j] == 0) continue;
    if (!out.empty()) out += '*';
    out += e.exponents.size() == 2 ? kNames[j] : "x" + std::to_string(j + 1);
    if (e.exponents[j] != 1) out += "^" + std::to_string(e.exponents[j]);
  }
  return out.empty() ? "1" : out;
}

void print_verdict(const SlpVerdict& v) {
  if (v.has_slp) {
    std::cout << "SLP";
    if (v.condition) {
      std::cout << " (condition " << *v.condition << ": " << v.rule << ")";
    } else if (!v.rule.empty()) {
      std::cout << " (" << v.rule << ")";
    }
  } else {
    std::cout << "no SLP";
    if (!v.rule.empty()) std::cout << " (" << v.rule << ")";
  }
  std::cout << '\n';
}

bool print_characteristic_zero(std::uint64_t p) {
  if (p != kCharacteristicZero) return false;
  std::cout << "SLP (characteristic 0: every monomial complete intersection has the SLP)\n";
  return true;
}

int cmd_check(std::uint64_t p, const std::string& d_text, const std::string& mode_name) {
  if (print_characteristic_zero(p)) return kSlp;
  const PrimeField field(p);
  const auto d = parse_exponents(d_text, 2);
  const Mode mode = parse_mode(mode_name);
  if ((mode == Mode::kManhattan || mode == Mode::kDelta) && d.size() != 2) {
    throw Error("mode '" + mode_name + "' needs exactly two exponents");
  }

  SlpVerdict verdict;
  switch (mode) {
    case Mode::kOracle:
      verdict = is_slp_oracle(MonomialCI(field, d));
      break;
    case Mode::kDigits:
      verdict = classify(field, d);
      break;
    case Mode::kManhattan:
      verdict.has_slp = manhattan_check(field, d[0], d[1]);
      verdict.rule = verdict.has_slp ? "lattice inequality holds" : "lattice inequality fails";
      break;
    case Mode::kDelta:
      verdict.has_slp = slp_via_delta(field, d[0], d[1]);
      verdict.rule = verdict.has_slp ? "all syzygy gaps vanish" : "a syzygy gap is nonzero";
      break;
  }
  print_verdict(verdict);
  if (!verdict.has_slp && d.size() == 2) {
    const auto w = kernel_witness(MonomialCI(field, d));
    std::cout << "witness: " << monomial_text(w.monomial) << ", m=" << w.power << " (degree "
              << w.monomial.degree() << " -> " << w.target_degree << ")\n";
  }
  return verdict.has_slp ? kSlp : kNoSlp;
}

int cmd_classify(std::uint64_t p, const std::string& d_text) {
  if (print_characteristic_zero(p)) return kSlp;
  const PrimeField field(p);
  const auto verdict = classify(field, parse_exponents(d_text, 2));
  print_verdict(verdict);
  return verdict.has_slp ? kSlp : kNoSlp;
}

int cmd_wlp(std::uint64_t p, const std::string& d_text) {
  const PrimeField field(p);
  const bool wlp = is_wlp_oracle(MonomialCI(field, parse_exponents(d_text, 2)));
  std::cout << (wlp ? "WLP" : "no WLP") << '\n';
  return wlp ? kSlp : kNoSlp;
}

int cmd_syzgap(std::uint64_t p, const std::string& d_text) {
  const PrimeField field(p);
  const auto d = parse_exponents(d_text, 1);
  if (d.size() != 3) throw Error("syzgap needs exactly three degrees");
  const auto prof = syzygy_profile(field, d[0], d[1], d[2]);
  std::cout << "alpha=" << prof.alpha << " beta=" << prof.beta << " delta=" << prof.delta
            << " region=" << to_string(region(d[0], d[1], d[2])) << '\n';
  return kSlp;
}

struct VerifyFlags {
  std::string primes;
  unsigned n = 2;
  std::uint32_t max = 10;
  std::string modes;
  std::string format = "text";
  std::string out;
  int jobs = 0;
  std::string config_path;
};

int cmd_verify(VerifyFlags flags, const CLI::App& sub) {
  if (!flags.config_path.empty()) {
    std::ifstream in(flags.config_path);
    if (!in) throw Error("cannot read config file " + flags.config_path);
    std::stringstream buf;
    buf << in.rdbuf();
    for (const auto& [key, value] : parse_config_text(buf.str())) {
      const CLI::Option* flag = sub.get_option_no_throw("--" + key);
      if (flag != nullptr && flag->count() > 0) continue;
      if (key == "primes") flags.primes = value;
      else if (key == "n") flags.n = static_cast<unsigned>(parse_uint_list(value).at(0));
      else if (key == "max") flags.max = static_cast<std::uint32_t>(parse_uint_list(value).at(0));
      else if (key == "modes") flags.modes = value;
      else if (key == "format") flags.format = value;
      else if (key == "out") flags.out = value;
      else if (key == "jobs") flags.jobs = static_cast<int>(parse_uint_list(value).at(0));
      else throw Error("unknown config key '" + key + "'");
    }
  }

  SweepConfig config;
  config.primes = parse_uint_list(flags.primes);
  config.n = flags.n;
  config.max_exponent = flags.max;
  for (const auto& m : split_list(flags.modes)) config.modes.push_back(parse_mode(m));
  config.format = parse_format(flags.format);
  validate(config);

  const auto report = run_sweep(config, flags.jobs);
  const std::string body =
      config.format == OutputFormat::kText ? render_text(report, true) : render(report);
  if (flags.out.empty()) {
    std::cout << body;
  } else {
    std::ofstream out(flags.out, std::ios::binary);
    if (!out) throw Error("cannot write " + flags.out);
    out << body;
  }
  if (config.format != OutputFormat::kText) std::cerr << "elapsed " << report.elapsed.count() << " ms\n";
  return report.summary.disagreements == 0 ? kSlp : kNoSlp;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Strong and weak Lefschetz property of monomial complete intersections over GF(p)", "lefschetz"};
  app.require_subcommand(1);

  std::uint64_t p = 0;
  std::string d_text;
  std::string mode = "digits";

  auto* check = app.add_subcommand("check", "Decide SLP for one algebra; prints a kernel witness when n = 2");
  check->add_option("--p", p, "Characteristic (0 prints the characteristic-zero note)")->required();
  check->add_option("--d", d_text, "Exponents, comma separated")->required();
  check->add_option("--mode", mode, "oracle | digits | manhattan | delta")->capture_default_str();

  auto* classify_cmd = app.add_subcommand("classify", "Closed-form SLP classification");
  classify_cmd->add_option("--p", p, "Characteristic")->required();
  classify_cmd->add_option("--d", d_text, "Exponents, comma separated")->required();

  auto* wlp = app.add_subcommand("wlp", "Decide WLP by rank computation");
  wlp->add_option("--p", p, "Characteristic")->required();
  wlp->add_option("--d", d_text, "Exponents, comma separated")->required();

  auto* syzgap = app.add_subcommand("syzgap", "Syzygy gap of x^d1, y^d2, (x+y)^d3");
  syzgap->add_option("--p", p, "Characteristic")->required();
  syzgap->add_option("--d", d_text, "Three positive degrees")->required();

  VerifyFlags vf;
  auto* verify = app.add_subcommand("verify", "Sweep exponent tuples and cross-check decision routes");
  verify->add_option("--primes", vf.primes, "Primes, comma separated");
  verify->add_option("--n", vf.n, "Number of variables");
  verify->add_option("--max", vf.max, "Largest exponent");
  verify->add_option("--modes", vf.modes, "Subset of oracle,digits,manhattan,delta");
  verify->add_option("--format", vf.format, "json | csv | text");
  verify->add_option("--out", vf.out, "Write the report to FILE");
  verify->add_option("--jobs", vf.jobs, "Worker threads (default: all available)");
  verify->add_option("--config", vf.config_path, "key = value file; flags override it");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (check->parsed()) return cmd_check(p, d_text, mode);
    if (classify_cmd->parsed()) return cmd_classify(p, d_text);
    if (wlp->parsed()) return cmd_wlp(p, d_text);
    if (syzgap->parsed()) return cmd_syzgap(p, d_text);
    if (verify->parsed()) return cmd_verify(vf, *verify);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
