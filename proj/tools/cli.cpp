// Copyright 2026 The exsim Authors
// SPDX-License-Identifier: Apache-2.0

#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <numbers>
#include <sstream>

#include <CLI11.hpp>

#include "exsim/experiment.hpp"
#include "exsim/labeled_pair.hpp"
#include "exsim/oracle.hpp"

namespace exsim::cli {

namespace {

constexpr const char* kAllStats = "boson,fermion,distinguishable";
constexpr const char* kFullTurn = "0:6.283185307179586:64";

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

double parse_number(std::string_view token) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size() ||
      !std::isfinite(value)) {
    throw UsageError("malformed number '" + std::string(token) + "'");
  }
  return value;
}

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt_amp(Amplitude a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%+.12f %+.12fi", a.real(), a.imag());
  return buf;
}

std::string column_label(const DetectorPair& pair) {
  auto name = [](Detector d) {
    std::string s(label(d));
    if (s.back() == '\'') s.back() = 'p';
    return s;
  };
  return "p_" + name(pair.first) + "_" + name(pair.second);
}

double max_map_difference(const std::map<DetectorPair, double>& a,
                          const std::map<DetectorPair, double>& b) {
  double worst = 0.0;
  for (const DetectorPair& pair : all_detector_pairs()) {
    auto lookup = [&](const std::map<DetectorPair, double>& m) {
      auto it = m.find(pair);
      return it == m.end() ? 0.0 : it->second;
    };
    worst = std::max(worst, std::abs(lookup(a) - lookup(b)));
  }
  return worst;
}

}  // namespace

std::vector<double> parse_phi(std::string_view text) {
  const auto grid = split(text, ':');
  if (grid.size() == 3) {
    const double start = parse_number(grid[0]);
    const double stop = parse_number(grid[1]);
    long long count = 0;
    const auto [ptr, ec] = std::from_chars(grid[2].data(), grid[2].data() + grid[2].size(), count);
    if (grid[2].empty() || ec != std::errc{} || ptr != grid[2].data() + grid[2].size()) {
      throw UsageError("malformed grid count '" + std::string(grid[2]) + "'");
    }
    if (count < 1) throw UsageError("empty phase grid '" + std::string(text) + "'");
    std::vector<double> phis;
    phis.reserve(static_cast<std::size_t>(count));
    for (long long i = 0; i < count; ++i) {
      phis.push_back(start + (stop - start) * static_cast<double>(i) / static_cast<double>(count));
    }
    return phis;
  }
  if (grid.size() != 1) throw UsageError("phase grid must look like start:stop:count");
  std::vector<double> phis;
  for (std::string_view token : split(text, ',')) phis.push_back(parse_number(token));
  return phis;
}

std::vector<Statistics> parse_stats(std::string_view text) {
  std::vector<Statistics> out;
  for (std::string_view token : split(text, ',')) {
    const auto s = parse_statistics(token);
    if (!s) throw UsageError("unknown statistics '" + std::string(token) + "'");
    if (std::find(out.begin(), out.end(), *s) == out.end()) out.push_back(*s);
  }
  return out;
}

RunSpec parse_args(std::span<const std::string> args) {
  CLI::App app{"Two-source identical-particle interferometer simulator", "exsim"};
  app.require_subcommand(1);

  struct Options {
    std::string stats = kAllStats;
    std::string phi;
    std::string out;
    double tol = 1e-12;
    bool verify = false;
    bool raw = false;
    bool labeled = false;
  } opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--stats", opt.stats, "Comma list of boson, fermion, distinguishable");
    sub->add_option("--phi", opt.phi, "Phase: value, comma list, or start:stop:count");
    sub->add_option("--out", opt.out, "CSV output path (default: standard output)");
    sub->add_option("--tol", opt.tol, "Verification tolerance");
    sub->add_flag("--raw", opt.raw, "Append per-pattern probabilities to the CSV");
    sub->add_flag("--labeled", opt.labeled, "Cross-check against the source-labeled picture");
  };

  CLI::App* run = app.add_subcommand("run", "Evaluate the interferometer at given phases");
  CLI::App* sweep = app.add_subcommand("sweep", "Sweep the phase (default: 64 points over a full turn)");
  CLI::App* verify = app.add_subcommand("verify", "Sweep and verify against closed form and oracle");
  CLI::App* decompose = app.add_subcommand("decompose", "Print the source-labeled term tables");
  for (CLI::App* sub : {run, sweep, verify}) add_common(sub);
  run->add_flag("--verify", opt.verify, "Verify rows and set the exit status");
  sweep->add_flag("--verify", opt.verify, "Verify rows and set the exit status");
  decompose->add_option("--phi", opt.phi, "Phase value");

  std::vector<std::string> argv_store;
  argv_store.emplace_back("exsim");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    std::ostringstream out;
    std::ostringstream err;
    if (app.exit(e, out, err) == 0) throw HelpRequested{out.str()};
    std::string message = err.str();
    while (!message.empty() && message.back() == '\n') message.pop_back();
    throw UsageError(message);
  }

  RunSpec spec;
  if (run->parsed()) {
    spec.command = Command::Run;
  } else if (sweep->parsed()) {
    spec.command = Command::Sweep;
  } else if (verify->parsed()) {
    spec.command = Command::Verify;
  } else {
    spec.command = Command::Decompose;
  }

  const bool grid_default = spec.command == Command::Sweep || spec.command == Command::Verify;
  spec.phis = parse_phi(opt.phi.empty() ? (grid_default ? kFullTurn : "0") : opt.phi);
  spec.stats = parse_stats(opt.stats);
  if (!opt.out.empty()) spec.out = opt.out;
  if (!(opt.tol > 0.0) || !std::isfinite(opt.tol)) throw UsageError("tolerance must be positive");
  spec.tolerance = opt.tol;
  spec.verify = opt.verify || spec.command == Command::Verify;
  spec.raw = opt.raw;
  spec.labeled = opt.labeled;
  if (spec.command == Command::Decompose && spec.phis.size() != 1) {
    throw UsageError("decompose takes a single phase");
  }
  return spec;
}

double Row::worst_deviation() const {
  if (std::isnan(p_same_cond) || std::isnan(p_cross_cond)) {
    return std::numeric_limits<double>::infinity();
  }
  double worst = std::max({std::abs(p_same_cond - p_same_closed),
                           std::abs(p_cross_cond - p_cross_closed), max_pattern_dev});
  if (labeled_dev) worst = std::max(worst, *labeled_dev);
  return worst;
}

std::vector<Row> compute_rows(const RunSpec& spec) {
  std::vector<Row> rows;
  rows.reserve(spec.stats.size() * spec.phis.size());
  for (Statistics stats : spec.stats) {
    for (double phi : spec.phis) {
      ExperimentConfig cfg;
      cfg.phi = phi;
      cfg.statistics = stats;
      const CoincidenceTable table = run_experiment(cfg);
      const ConditionalPair closed = closed_form(phi, stats);
      const oracle::OracleReport check = oracle::verify(table, phi, stats, spec.tolerance);
      Row row{
          .stats = stats,
          .phi = phi,
          .w_both_v = table.weight(CoincidenceClass::BothV),
          .w_both_e = table.weight(CoincidenceClass::BothE),
          .w_one_each = table.weight(CoincidenceClass::OneEach),
          .p_same_cond = table.p_same_cond.value_or(std::nan("")),
          .p_cross_cond = table.p_cross_cond.value_or(std::nan("")),
          .p_same_closed = closed.p_same,
          .p_cross_closed = closed.p_cross,
          .max_pattern_dev = check.max_deviation,
          .labeled_dev = std::nullopt,
          .raw = {},
      };
      if (spec.labeled) {
        row.labeled_dev = max_map_difference(one_each_conditional(table),
                                             labeled_one_each_distribution(phi, stats));
      }
      if (spec.raw) {
        for (const DetectorPair& pair : all_detector_pairs()) {
          row.raw.push_back(table.per_pattern.at(pair));
        }
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

void write_csv(std::ostream& os, const RunSpec& spec, const std::vector<Row>& rows) {
  os << "stats,phi,w_both_v,w_both_e,w_one_each,p_same_cond,p_cross_cond,"
        "p_same_closed,p_cross_closed,max_pattern_dev";
  if (spec.labeled) os << ",labeled_dev";
  if (spec.raw) {
    for (const DetectorPair& pair : all_detector_pairs()) os << ',' << column_label(pair);
  }
  os << '\n';
  for (const Row& r : rows) {
    os << to_string(r.stats) << ',' << fmt17(r.phi) << ',' << fmt17(r.w_both_v) << ','
       << fmt17(r.w_both_e) << ',' << fmt17(r.w_one_each) << ',' << fmt17(r.p_same_cond) << ','
       << fmt17(r.p_cross_cond) << ',' << fmt17(r.p_same_closed) << ','
       << fmt17(r.p_cross_closed) << ',' << fmt17(r.max_pattern_dev);
    if (spec.labeled) os << ',' << fmt17(r.labeled_dev.value_or(0.0));
    for (double p : r.raw) os << ',' << fmt17(p);
    os << '\n';
  }
}

void write_report(std::ostream& os, const RunSpec& spec, const std::vector<Row>& rows) {
  char line[256];
  std::snprintf(line, sizeof line, "verification: %zu statistics x %zu phase points, tolerance %.3g\n",
                spec.stats.size(), spec.phis.size(), spec.tolerance);
  os << line;
  bool all_pass = true;
  for (Statistics stats : spec.stats) {
    double closed_dev = 0.0;
    double pattern_dev = 0.0;
    double labeled_dev = 0.0;
    std::size_t passed = 0;
    std::size_t total = 0;
    for (const Row& r : rows) {
      if (r.stats != stats) continue;
      ++total;
      closed_dev = std::max({closed_dev, std::abs(r.p_same_cond - r.p_same_closed),
                             std::abs(r.p_cross_cond - r.p_cross_closed)});
      pattern_dev = std::max(pattern_dev, r.max_pattern_dev);
      if (r.labeled_dev) labeled_dev = std::max(labeled_dev, *r.labeled_dev);
      if (r.worst_deviation() < spec.tolerance) ++passed;
    }
    all_pass = all_pass && passed == total;
    std::snprintf(line, sizeof line,
                  "  %-16s max|simulated - closed_form| = %.3e  max|simulated - oracle| = %.3e",
                  std::string(to_string(stats)).c_str(), closed_dev, pattern_dev);
    os << line;
    if (spec.labeled) {
      std::snprintf(line, sizeof line, "  max|simulated - labeled| = %.3e", labeled_dev);
      os << line;
    }
    std::snprintf(line, sizeof line, "  [%zu/%zu pass]\n", passed, total);
    os << line;
  }
  os << "overall: " << (all_pass ? "PASS" : "FAIL") << '\n';
}

void write_decomposition(std::ostream& os, double phi) {
  auto table = [&os](const std::string& title, const LabeledState& s) {
    os << title << '\n';
    for (const auto& [pair, amp] : s.terms) {
      const Amplitude swapped = s.amplitude(pair.second, pair.first);
      const char* parity = std::abs(amp - swapped) < kCompareTolerance   ? "sym"
                           : std::abs(amp + swapped) < kCompareTolerance ? "anti"
                                                                         : "-";
      char line[128];
      std::snprintf(line, sizeof line, "  %-4s %-4s %s  %s\n", pair.first.label.c_str(),
                    pair.second.label.c_str(), fmt_amp(amp).c_str(), parity);
      os << line;
    }
    os << '\n';
  };
  auto distribution = [&os](const std::string& title, const LabeledState& s) {
    os << title << '\n';
    for (const auto& [pair, p] : detection_distribution(s)) {
      os << "  " << to_string(pair) << "  " << fmt17(p) << '\n';
    }
    os << '\n';
  };

  const LabeledState initial = build_initial(phi);
  const RegionSplit split = split_regions(initial);
  const LabeledState same_at_detectors = evolve_labeled(split.same_region);
  const LabeledState one_each_at_detectors = evolve_labeled(split.one_each);
  const LabeledState sym = project(one_each_at_detectors, Parity::Symmetric);
  const LabeledState anti = project(one_each_at_detectors, Parity::Antisymmetric);

  os << "phi = " << fmt17(phi) << "\n";
  os << "terms are (L-particle path, R-particle path)  amplitude  exchange parity\n\n";
  table("initial state", initial);
  os << "initial = (" << fmt_amp(split.same_coeff) << ") * same-region + ("
     << fmt_amp(split.one_each_coeff) << ") * one-each\n\n";
  table("same-region component", split.same_region);
  table("one-each component", split.one_each);
  table("same-region component at the detectors", same_at_detectors);
  table("one-each component at the detectors", one_each_at_detectors);
  table("symmetric part of the one-each component", sym);
  table("antisymmetric part of the one-each component", anti);
  distribution("symmetric part: detection probabilities", sym);
  distribution("antisymmetric part: detection probabilities", anti);
}

int execute(const RunSpec& spec, std::ostream& out, std::ostream& err) {
  if (spec.command == Command::Decompose) {
    write_decomposition(out, spec.phis.front());
    return kExitOk;
  }

  const std::vector<Row> rows = compute_rows(spec);

  std::ostream* report_stream = &out;
  if (spec.out) {
    std::ofstream file(*spec.out, std::ios::binary | std::ios::trunc);
    if (file) write_csv(file, spec, rows);
    if (!file) {
      err << "exsim: cannot write '" << *spec.out << "'\n";
      return kExitIo;
    }
  } else if (spec.command != Command::Verify) {
    write_csv(out, spec, rows);
    report_stream = &err;  // keep stdout a clean CSV
  }

  if (!spec.verify) return kExitOk;
  write_report(*report_stream, spec, rows);
  const bool all_pass = std::all_of(rows.begin(), rows.end(), [&](const Row& r) {
    return r.worst_deviation() < spec.tolerance;
  });
  return all_pass ? kExitOk : kExitDeviation;
}

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    return execute(parse_args(args), std::cout, std::cerr);
  } catch (const HelpRequested& help) {
    std::cout << help.text;
    return kExitOk;
  } catch (const UsageError& e) {
    std::cerr << "exsim: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "exsim: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace exsim::cli
