#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ppk/synth.hpp"

namespace ppk {

enum class Command { poly, theta, rw, coeffs, verify, terms, classify, tildetheta, columns };
enum class Format { text, json, csv };

struct CommandConfig {
  Command command = Command::poly;
  unsigned p = 2;
  Format format = Format::text;
  unsigned j = 2;
  std::uint64_t n = 0;
  std::string word;
  std::string monomial;
  int order = -1;  ///< -1: the monomial's weight
  std::uint64_t n_max = 512;
  unsigned j_max = 11;
  unsigned k_max = 9;
  std::uint64_t t_max = 64;
  std::uint64_t m_max = 1u << 20;
  unsigned max_len = 10;
  double tol = 1e-6;
  int jobs = 0;
  bool cumulative = false;
  bool force = false;
  bool product = false;
};

enum ExitCode : int { exit_ok = 0, exit_failure = 1, exit_usage = 2 };

/// Runs a validated config; writes results to out and diagnostics to err.
int dispatch(const CommandConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv (argv[0] is the program name) and dispatches.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "X[10]^2*X[110]" or "1".
Monomial parse_monomial(const std::string& text, unsigned p);

/// Two comma-separated lines: N_0..N_jmax, then B_0..B_jmax.
std::string emit_terms_table(unsigned p, unsigned j_max);

}  // namespace ppk
