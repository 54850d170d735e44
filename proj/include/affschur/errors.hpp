#pragma once

#include <stdexcept>
#include <string>

namespace affschur {

// Every error carries a stable machine-readable code, surfaced by the CLI.
class AlgebraError : public std::runtime_error {
 public:
  AlgebraError(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

class DomainError : public AlgebraError {
 public:
  explicit DomainError(const std::string& message) : AlgebraError("domain_error", message) {}
};

class SchemaError : public AlgebraError {
 public:
  explicit SchemaError(const std::string& message) : AlgebraError("schema_error", message) {}
};

class TriangularityViolation : public AlgebraError {
 public:
  explicit TriangularityViolation(const std::string& message)
      : AlgebraError("triangularity_violation", message) {}
};

class OracleInconsistency : public AlgebraError {
 public:
  explicit OracleInconsistency(const std::string& message)
      : AlgebraError("oracle_inconsistency", message) {}
};

}  // namespace affschur
