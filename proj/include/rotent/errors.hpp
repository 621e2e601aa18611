#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace rotent {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Invalid physical input. field() names the offending ParameterSet member.
class ParameterError : public Error {
public:
  ParameterError(std::string field, const std::string& what)
      : Error(field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

private:
  std::string field_;
};

// Malformed configuration document. line() is 1-based, 0 when not tied to a line.
class ConfigError : public Error {
public:
  ConfigError(std::string key, int line, const std::string& what)
      : Error(describe(key, line, what)), key_(std::move(key)), line_(line) {}
  const std::string& key() const noexcept { return key_; }
  int line() const noexcept { return line_; }

private:
  static std::string describe(const std::string& key, int line, const std::string& what) {
    std::string out = "config";
    if (line > 0) out += " line " + std::to_string(line);
    if (!key.empty()) out += " key '" + key + "'";
    return out + ": " + what;
  }

  std::string key_;
  int line_;
};

// Any failure of a numerical stage: singular systems, non-convergence,
// broken solver assumptions.
class NumericalError : public Error {
public:
  using Error::Error;
};

class EigenSolverError : public NumericalError {
public:
  using NumericalError::NumericalError;
};

class ConvergenceError : public NumericalError {
public:
  ConvergenceError(const std::string& what, double last_iterate)
      : NumericalError(what), last_iterate_(last_iterate) {}
  double last_iterate() const noexcept { return last_iterate_; }

private:
  double last_iterate_;
};

}  // namespace rotent
