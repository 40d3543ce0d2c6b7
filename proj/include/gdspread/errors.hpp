#ifndef GDSPREAD_ERRORS_HPP
#define GDSPREAD_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gdspread {

/// Malformed textual input (graph6, edge list, family spec, corpus line).
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string &what, std::size_t offset)
      : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

private:
  std::size_t offset_;
};

/// Structurally invalid graph: self-loop, duplicate edge, endpoint out of range.
class GraphError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// An operation's precondition is unmet: disconnected graph, alpha outside
/// [0,1], invalid partition, reducible matrix for a Perron vector, ...
class PreconditionError : public std::domain_error {
  using std::domain_error::domain_error;
};

/// Jacobi sweeps exhausted before the off-diagonal mass dropped below tolerance.
class ConvergenceError : public std::runtime_error {
public:
  ConvergenceError(const std::string &what, double residual)
      : std::runtime_error(what), residual_(residual) {}

  double residual() const noexcept { return residual_; }

private:
  double residual_;
};

/// A file could not be opened or read.
class IoError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

} // namespace gdspread

#endif // GDSPREAD_ERRORS_HPP
