#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace knotconc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ZeroPolynomial : public Error {
 public:
  explicit ZeroPolynomial(const std::string& where)
      : Error(where + ": zero polynomial") {}
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by the zero polynomial") {}
};

class EvalAtZero : public Error {
 public:
  EvalAtZero() : Error("Laurent polynomial with negative exponents evaluated at 0") {}
};

class NotPalindromic : public Error {
 public:
  NotPalindromic() : Error("polynomial is not palindromic") {}
};

class OddDegree : public Error {
 public:
  OddDegree() : Error("palindromic polynomial has odd degree") {}
};

class ConvergenceFailure : public Error {
 public:
  explicit ConvergenceFailure(std::size_t iterations)
      : Error("root iteration did not converge after " + std::to_string(iterations) +
              " iterations"),
        iterations_(iterations) {}
  std::size_t iterations() const noexcept { return iterations_; }

 private:
  std::size_t iterations_;
};

class InvalidN : public Error {
 public:
  explicit InvalidN(long long n) : Error("invalid family parameter n = " + std::to_string(n)) {}
};

class WrongDegree : public Error {
 public:
  WrongDegree(long expected, long actual)
      : Error("expected degree " + std::to_string(expected) + ", got " + std::to_string(actual)) {}
};

/// Raised when a certified property of P_n fails to verify. `flag` names the
/// first property that failed.
class VerificationFailure : public Error {
 public:
  explicit VerificationFailure(std::string flag)
      : Error("verification failed: " + flag), flag_(std::move(flag)) {}
  const std::string& flag() const noexcept { return flag_; }

 private:
  std::string flag_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& expected)
      : Error("parse error at offset " + std::to_string(offset) + ": expected " + expected),
        offset_(offset),
        expected_(expected) {}
  std::size_t offset() const noexcept { return offset_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::string expected_;
};

class FileNotFound : public Error {
 public:
  explicit FileNotFound(const std::string& path) : Error("file not found: " + path) {}
};

class HeaderMismatch : public Error {
 public:
  explicit HeaderMismatch(const std::string& got)
      : Error("expected CSV header 'name,alexander', got '" + got + "'") {}
};

}  // namespace knotconc
