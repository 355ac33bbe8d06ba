#pragma once

#include "towercalc/certificate.hpp"
#include "towercalc/cli/document.hpp"

#include <string>
#include <vector>

namespace towercalc::cli {

struct RunReport {
  std::string command;
  /// sha256 of the inputs and flags, hex.
  std::string inputs_digest;
  Json results = Json::object();
  std::vector<Certificate> certificates;
  double seconds = 0;

  bool passed() const;
  int exit_code() const { return passed() ? 0 : 1; }

  /// Structured text, including timing.
  std::string text() const;
  /// Machine-readable JSON without timing, byte-identical for identical inputs.
  std::string machine() const;
};

Json certificate_to_json(const Certificate& c);

std::string sha256_hex(const std::string& bytes);

}  // namespace towercalc::cli
