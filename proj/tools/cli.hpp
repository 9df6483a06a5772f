// Copyright 2026 The exsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "exsim/statistics.hpp"

namespace exsim::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDeviation = 1;
inline constexpr int kExitIo = 2;
inline constexpr int kExitInternal = 3;
inline constexpr int kExitUsage = 64;

enum class Command { Run, Sweep, Verify, Decompose };

struct RunSpec {
  Command command = Command::Run;
  std::vector<Statistics> stats;
  std::vector<double> phis;
  std::optional<std::string> out;
  double tolerance = 1e-12;
  bool verify = false;
  bool raw = false;
  bool labeled = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown by parse_args for --help; carries the help text.
struct HelpRequested {
  std::string text;
};

/// `a:b:n` (n points from a, excluding b), a comma list, or one value.
std::vector<double> parse_phi(std::string_view text);

std::vector<Statistics> parse_stats(std::string_view text);

/// `args` excludes the program name.
RunSpec parse_args(std::span<const std::string> args);

struct Row {
  Statistics stats;
  double phi;
  double w_both_v;
  double w_both_e;
  double w_one_each;
  double p_same_cond;
  double p_cross_cond;
  double p_same_closed;
  double p_cross_closed;
  double max_pattern_dev;
  std::optional<double> labeled_dev;
  std::vector<double> raw;  // per-pattern probabilities when requested

  /// Largest deviation this row is judged on.
  double worst_deviation() const;
};

/// Rows ordered by (statistics as listed, phase index).
std::vector<Row> compute_rows(const RunSpec& spec);

void write_csv(std::ostream& os, const RunSpec& spec, const std::vector<Row>& rows);
void write_report(std::ostream& os, const RunSpec& spec, const std::vector<Row>& rows);
void write_decomposition(std::ostream& os, double phi);

/// Returns the process exit status.
int execute(const RunSpec& spec, std::ostream& out, std::ostream& err);

int main(int argc, char** argv);

}  // namespace exsim::cli
