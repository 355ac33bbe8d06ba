#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace towercalc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A group or chain map does not carry source relations into target relations,
/// or does not commute with differentials.
class IllFormedMap : public Error {
 public:
  using Error::Error;
};

/// A tower declared stable from some index has a non-isomorphism above it.
class StabilizationViolated : public Error {
 public:
  StabilizationViolated(std::size_t index, const std::string& what)
      : Error(what), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

/// Hom-complexes are only formed out of degreewise free sources.
class TorsionSource : public Error {
 public:
  TorsionSource(int degree, const std::string& what) : Error(what), degree_(degree) {}
  int degree() const noexcept { return degree_; }

 private:
  int degree_;
};

/// An operation that needs a cofibrant (degreewise free) complex got one with relations.
class NotCofibrant : public Error {
 public:
  NotCofibrant(int degree, const std::string& what) : Error(what), degree_(degree) {}
  int degree() const noexcept { return degree_; }

 private:
  int degree_;
};

/// The prime partition does not cover the torsion primes of the input.
class PartitionTooSmall : public Error {
 public:
  using Error::Error;
};

/// Two characterizations that must agree returned different verdicts.
/// Signals an implementation bug, never expected on valid input.
class CharacterizationMismatch : public Error {
 public:
  using Error::Error;
};

/// Malformed input document.
class ParseError : public Error {
 public:
  ParseError(std::string location, const std::string& what)
      : Error(location + ": " + what), location_(std::move(location)) {}
  const std::string& location() const noexcept { return location_; }

 private:
  std::string location_;
};

/// Well-formed document whose content fails mathematical validation (d^2 != 0, ...).
class ValidationError : public Error {
 public:
  ValidationError(std::string location, const std::string& what)
      : Error(location + ": " + what), location_(std::move(location)) {}
  const std::string& location() const noexcept { return location_; }

 private:
  std::string location_;
};

}  // namespace towercalc
