#include "lefschetz/sweep.hpp"

#include <algorithm>
#include <charconv>
#include <nlohmann/json.hpp>
#include <sstream>

#include "lefschetz/classifier.hpp"
#include "lefschetz/error.hpp"
#include "lefschetz/graded_quotient.hpp"
#include "lefschetz/lefschetz_oracle.hpp"
#include "lefschetz/parallel.hpp"
#include "lefschetz/syzygy_gap.hpp"

namespace lefschetz {
namespace {

using ordered_json = nlohmann::ordered_json;

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::string join(const std::vector<std::uint32_t>& values, char sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i != 0) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

bool mode_verdict(Mode mode, const PrimeField& field, const std::vector<std::uint32_t>& d) {
  switch (mode) {
    case Mode::kOracle:
      return is_slp_oracle(MonomialCI(field, d)).has_slp;
    case Mode::kDigits:
      return classify(field, d).has_slp;
    case Mode::kManhattan:
      return manhattan_check(field, d.at(0), d.at(1));
    case Mode::kDelta:
      break;
  }
  return slp_via_delta(field, d.at(0), d.at(1));
}

// The verdict representative of an entry: its first requested mode in canonical order.
std::optional<bool> leading_verdict(const SweepEntry& e) {
  for (const auto& v : e.verdicts) {
    if (v) return v;
  }
  return std::nullopt;
}

SweepReport run_with(const SweepConfig& config, int jobs, bool parallel) {
  validate(config);
  const auto start = std::chrono::steady_clock::now();
  auto primes = config.primes;
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  const auto tuples = enumerate_exponents(config.n, config.max_exponent);

  SweepReport report;
  report.config = config;
  report.entries.resize(primes.size() * tuples.size());
  auto body = [&](std::size_t idx) {
    const PrimeField field(primes[idx / tuples.size()]);
    report.entries[idx] = evaluate_entry(field, tuples[idx % tuples.size()], config.modes);
  };
  if (parallel) {
    parallel_for_index(report.entries.size(), jobs, body);
  } else {
    serial_for_index(report.entries.size(), body);
  }
  report.summary = summarize(report.entries);
  report.elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  return report;
}

ordered_json witness_json(const std::optional<KernelWitness>& w) {
  if (!w) return nullptr;
  return ordered_json{{"monomial", w->monomial.exponents}, {"power", w->power}, {"degree", w->monomial.degree()}};
}

std::string monomial_text(const ExponentVector& e) {
  std::string out;
  for (std::size_t j = 0; j < e.exponents.size(); ++j) {
    if (e.exponents[j] == 0) continue;
    if (!out.empty()) out += '*';
    out += "x" + std::to_string(j + 1);
    if (e.exponents[j] != 1) out += "^" + std::to_string(e.exponents[j]);
  }
  return out.empty() ? "1" : out;
}

}  // namespace

std::string_view to_string(Mode mode) noexcept {
  switch (mode) {
    case Mode::kOracle:
      return "oracle";
    case Mode::kDigits:
      return "digits";
    case Mode::kManhattan:
      return "manhattan";
    case Mode::kDelta:
      break;
  }
  return "delta";
}

std::string_view to_string(OutputFormat format) noexcept {
  switch (format) {
    case OutputFormat::kJson:
      return "json";
    case OutputFormat::kCsv:
      return "csv";
    case OutputFormat::kText:
      break;
  }
  return "text";
}

Mode parse_mode(std::string_view name) {
  for (Mode m : kAllModes) {
    if (to_string(m) == name) return m;
  }
  throw Error("unknown mode '" + std::string(name) + "'");
}

OutputFormat parse_format(std::string_view name) {
  for (OutputFormat f : {OutputFormat::kJson, OutputFormat::kCsv, OutputFormat::kText}) {
    if (to_string(f) == name) return f;
  }
  throw Error("unknown format '" + std::string(name) + "'");
}

std::vector<std::string> split_list(std::string_view text) {
  std::vector<std::string> out;
  text = trim(text);
  if (text.empty()) return out;
  std::size_t pos = 0;
  for (;;) {
    const auto comma = text.find(',', pos);
    const auto item = trim(text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
    if (item.empty()) throw Error("empty item in list '" + std::string(text) + "'");
    out.emplace_back(item);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::vector<std::uint64_t> parse_uint_list(std::string_view text) {
  std::vector<std::uint64_t> out;
  for (const auto& item : split_list(text)) {
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc{} || ptr != item.data() + item.size()) {
      throw Error("'" + item + "' is not a nonnegative integer");
    }
    out.push_back(v);
  }
  return out;
}

void validate(const SweepConfig& config) {
  if (config.primes.empty()) throw Error("no primes given");
  for (auto p : config.primes) {
    if (!is_prime(p)) throw Error(std::to_string(p) + " is not prime");
    if (p > PrimeField::kMaxCharacteristic) throw Error(std::to_string(p) + " is too large");
  }
  if (config.n < 1) throw Error("n must be at least 1");
  if (config.max_exponent < 2) throw Error("max must be at least 2");
  if (config.modes.empty()) throw Error("no modes given");
  for (Mode m : config.modes) {
    if ((m == Mode::kManhattan || m == Mode::kDelta) && config.n != 2) {
      throw Error("mode '" + std::string(to_string(m)) + "' needs n = 2");
    }
  }
}

ConfigEntries parse_config_text(std::string_view text) {
  ConfigEntries out;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    const auto body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    const auto eq = body.find('=');
    if (eq == std::string_view::npos) {
      throw Error("config line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    const auto key = trim(body.substr(0, eq));
    if (key.empty()) throw Error("config line " + std::to_string(line_no) + ": empty key");
    out.emplace_back(std::string(key), std::string(trim(body.substr(eq + 1))));
  }
  return out;
}

std::vector<std::vector<std::uint32_t>> enumerate_exponents(unsigned n, std::uint32_t max_exponent) {
  std::vector<std::vector<std::uint32_t>> out;
  if (n == 0 || max_exponent < 2) return out;
  std::vector<std::uint32_t> cur(n, 2);
  for (;;) {
    out.push_back(cur);
    std::size_t j = n;
    while (j > 0 && cur[j - 1] == max_exponent) --j;
    if (j == 0) break;
    ++cur[j - 1];
    std::fill(cur.begin() + static_cast<std::ptrdiff_t>(j), cur.end(), cur[j - 1]);
  }
  return out;
}

SweepEntry evaluate_entry(const PrimeField& field, std::vector<std::uint32_t> exponents,
                          const std::vector<Mode>& modes) {
  SweepEntry e;
  e.p = field.characteristic();
  e.exponents = std::move(exponents);
  for (Mode m : modes) e.verdicts[static_cast<std::size_t>(m)] = mode_verdict(m, field, e.exponents);

  const auto first = leading_verdict(e);
  e.agree = std::all_of(e.verdicts.begin(), e.verdicts.end(), [&](const auto& v) { return !v || v == first; });
  if (e.agree && first == false && e.exponents.size() == 2) {
    try {
      e.witness = kernel_witness(MonomialCI(field, e.exponents));
    } catch (const Error&) {
      // The digit conditions see an SLP algebra; leave the witness empty.
    }
  }
  return e;
}

SweepSummary summarize(const std::vector<SweepEntry>& entries) {
  SweepSummary s;
  for (const auto& e : entries) {
    ++s.total;
    if (!e.agree) ++s.disagreements;
    if (leading_verdict(e).value_or(false)) {
      ++s.slp;
    } else {
      ++s.non_slp;
    }
  }
  return s;
}

SweepReport run_sweep(const SweepConfig& config, int jobs) { return run_with(config, jobs, true); }

SweepReport run_sweep_serial(const SweepConfig& config) { return run_with(config, 1, false); }

std::string render_json(const SweepReport& report) {
  const auto& c = report.config;
  ordered_json modes = ordered_json::array();
  for (Mode m : c.modes) modes.push_back(to_string(m));
  ordered_json doc;
  doc["config"] = ordered_json{{"primes", c.primes},
                               {"n", c.n},
                               {"max", c.max_exponent},
                               {"modes", modes},
                               {"format", to_string(c.format)}};
  ordered_json entries = ordered_json::array();
  for (const auto& e : report.entries) {
    ordered_json verdicts = ordered_json::object();
    for (Mode m : kAllModes) {
      if (const auto& v = e.verdicts[static_cast<std::size_t>(m)]) verdicts[std::string(to_string(m))] = *v;
    }
    entries.push_back(ordered_json{{"p", e.p},
                                   {"d", e.exponents},
                                   {"verdicts", verdicts},
                                   {"agree", e.agree},
                                   {"witness", witness_json(e.witness)}});
  }
  doc["entries"] = std::move(entries);
  const auto& s = report.summary;
  doc["summary"] = ordered_json{
      {"total", s.total}, {"slp", s.slp}, {"non_slp", s.non_slp}, {"disagreements", s.disagreements}};
  return doc.dump(2) + "\n";
}

std::string render_csv(const SweepReport& report) {
  std::string out =
      "p,d,verdict_oracle,verdict_digits,verdict_manhattan,verdict_delta,agree,witness_monomial,witness_power\n";
  for (const auto& e : report.entries) {
    out += std::to_string(e.p) + "," + join(e.exponents, ';');
    for (const auto& v : e.verdicts) {
      out += ",";
      if (v) out += *v ? "slp" : "no_slp";
    }
    out += e.agree ? ",true," : ",false,";
    if (e.witness) out += join(e.witness->monomial.exponents, ';') + "," + std::to_string(e.witness->power);
    else out += ",";
    out += "\n";
  }
  return out;
}

std::string render_text(const SweepReport& report, bool with_footer) {
  std::ostringstream out;
  for (const auto& e : report.entries) {
    out << "p=" << e.p << " d=" << join(e.exponents, ',');
    for (Mode m : kAllModes) {
      if (const auto& v = e.verdicts[static_cast<std::size_t>(m)]) {
        out << ' ' << to_string(m) << '=' << (*v ? "SLP" : "no-SLP");
      }
    }
    out << (e.agree ? " agree" : " DISAGREE");
    if (e.witness) {
      out << " witness=" << monomial_text(e.witness->monomial) << " m=" << e.witness->power;
    }
    out << '\n';
  }
  const auto& s = report.summary;
  out << "total " << s.total << ", SLP " << s.slp << ", no SLP " << s.non_slp << ", disagreements "
      << s.disagreements << '\n';
  if (with_footer) out << "elapsed " << report.elapsed.count() << " ms\n";
  return out.str();
}

std::string render(const SweepReport& report) {
  switch (report.config.format) {
    case OutputFormat::kJson:
      return render_json(report);
    case OutputFormat::kCsv:
      return render_csv(report);
    case OutputFormat::kText:
      break;
  }
  return render_text(report);
}

SweepReport parse_json_report(std::string_view json) {
  SweepReport r;
  try {
    const auto doc = ordered_json::parse(json);
    const auto& c = doc.at("config");
    r.config.primes = c.at("primes").get<std::vector<std::uint64_t>>();
    r.config.n = c.at("n").get<unsigned>();
    r.config.max_exponent = c.at("max").get<std::uint32_t>();
    for (const auto& m : c.at("modes")) r.config.modes.push_back(parse_mode(m.get<std::string>()));
    r.config.format = parse_format(c.at("format").get<std::string>());
    for (const auto& je : doc.at("entries")) {
      SweepEntry e;
      e.p = je.at("p").get<std::uint64_t>();
      e.exponents = je.at("d").get<std::vector<std::uint32_t>>();
      for (const auto& [name, v] : je.at("verdicts").items()) {
        e.verdicts[static_cast<std::size_t>(parse_mode(name))] = v.get<bool>();
      }
      e.agree = je.at("agree").get<bool>();
      if (const auto& w = je.at("witness"); !w.is_null()) {
        KernelWitness kw;
        kw.monomial.exponents = w.at("monomial").get<std::vector<std::uint32_t>>();
        kw.power = w.at("power").get<std::uint64_t>();
        kw.target_degree = kw.monomial.degree() + kw.power;
        e.witness = std::move(kw);
      }
      r.entries.push_back(std::move(e));
    }
    const auto& s = doc.at("summary");
    r.summary = {s.at("total").get<std::uint64_t>(), s.at("slp").get<std::uint64_t>(),
                 s.at("non_slp").get<std::uint64_t>(), s.at("disagreements").get<std::uint64_t>()};
  } catch (const nlohmann::json::exception& ex) {
    throw Error(std::string("malformed report: ") + ex.what());
  }
  return r;
}

}  // namespace lefschetz
