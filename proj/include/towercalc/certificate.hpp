#pragma once

#include <optional>
#include <string>
#include <vector>

namespace towercalc {

/// Structured pass/fail verdict of a decision procedure.
///
/// Failures carry the first witness (level and/or degree) so they can be
/// reproduced; composite checks keep their sub-verdicts in `children`.
struct Certificate {
  std::string check;
  bool passed = true;
  std::optional<long> level;
  std::optional<long> degree;
  std::string detail;
  std::vector<Certificate> children;

  static Certificate pass(std::string check, std::string detail = {});
  static Certificate fail(std::string check, std::string detail = {});

  Certificate& at_level(long l) {
    level = l;
    return *this;
  }
  Certificate& at_degree(long d) {
    degree = d;
    return *this;
  }

  /// Appends a child; a failing child fails the parent and, if the parent has
  /// no witness yet, lends it its witness.
  Certificate& add(Certificate child);

  explicit operator bool() const noexcept { return passed; }

  /// The first failing leaf, depth-first, if any.
  const Certificate* first_failure() const;

  /// Indented human-readable rendering.
  std::string render(int indent = 0) const;
};

}  // namespace towercalc
