#pragma once

#include "towercalc/cli/report.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace towercalc::cli {

struct Options {
  std::vector<std::string> files;
  std::optional<long> k, n;
  std::optional<std::uint64_t> seed;
  long count = 1;
  std::optional<std::vector<long>> primes_j, primes_k;
  /// generate: where to write the document.
  std::optional<std::string> output;
};

const std::vector<std::string>& subcommands();

/// Runs one subcommand. Input problems surface as exceptions (ParseError,
/// ValidationError, PartitionTooSmall, NotCofibrant, TorsionSource,
/// std::invalid_argument); certified failures are reported, not thrown.
RunReport run(const std::string& command, const Options& options);

}  // namespace towercalc::cli
