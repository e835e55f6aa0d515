#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "monoconj/arith.hpp"
#include "monoconj/oracle.hpp"

namespace monoconj::cli {

enum class Command { Analyze, Zeta, Graph, Conjecture, Fuzz, Oracle };

struct CliConfig {
  Command command = Command::Analyze;
  std::vector<BigInt> gens;
  std::string format;  // empty selects the command's default
  std::uint64_t seed = 1;
  std::uint64_t count = 1000;
  int max_g = 5;
  std::uint64_t max_gen = 1'000'000;
  std::uint64_t dense_mu_limit = 5000;
  std::uint64_t draws = 3;
  EnumerationBudget budget;
  std::string output;  // empty means standard output
};

enum ExitStatus { kOk = 0, kVerificationFailed = 1, kInvalidInput = 2 };

struct RunResult {
  int status = kOk;
  std::string document;
  std::string error;
};

RunResult run(const CliConfig& config);

// Parses argv, runs, and writes the document (or error) to the given streams.
int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace monoconj::cli
