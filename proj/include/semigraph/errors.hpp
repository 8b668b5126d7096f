#pragma once

#include <cstddef>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace semigraph {

// Input data violates the semigraph axioms or an operation's precondition.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Validation failure anchored to a position in an input file.
// line/column are 1-based; line == 0 means the error concerns the file as
// a whole (e.g. too few vertices) rather than a specific line.
class ParseError : public ValidationError {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& msg)
      : ValidationError(format(line, column, msg)), line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  static std::string format(std::size_t line, std::size_t column, const std::string& msg) {
    if (line == 0) return msg;
    std::string where = "line " + std::to_string(line);
    if (column > 0) where += ", column " + std::to_string(column);
    return where + ": " + msg;
  }

  std::size_t line_;
  std::size_t column_;
};

// File could not be read or written.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

// Iterative eigensolver did not reach its tolerance within the sweep budget.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(double residual, int sweeps)
      : std::runtime_error("eigensolver did not converge: relative off-diagonal residual " +
                           format_residual(residual) + " after " + std::to_string(sweeps) +
                           " sweeps"),
        residual_(residual),
        sweeps_(sweeps) {}

  double residual() const { return residual_; }
  int sweeps() const { return sweeps_; }

 private:
  static std::string format_residual(double r) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", r);
    return buf;
  }

  double residual_;
  int sweeps_;
};

}  // namespace semigraph
