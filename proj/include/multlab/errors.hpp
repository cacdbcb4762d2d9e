#ifndef MULTLAB_ERRORS_HPP
#define MULTLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace multlab {

// Range/size limits exceeded (global ceiling, segment caps).
struct CapacityError : std::runtime_error {
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// Argument outside the domain an operation supports (n not in sieve, lo < e, ...).
struct RangeError : std::runtime_error {
  explicit RangeError(const std::string& what) : std::runtime_error(what) {}
};

// Dirichlet-series evaluation requested where the defining sum diverges.
struct DivergenceError : std::runtime_error {
  explicit DivergenceError(const std::string& what) : std::runtime_error(what) {}
};

// Continuation evaluated too close to its abscissa of convergence.
struct MarginError : std::runtime_error {
  explicit MarginError(const std::string& what) : std::runtime_error(what) {}
};

// |L| vanished on a contour and retries with perturbed radius were exhausted.
struct ContourError : std::runtime_error {
  explicit ContourError(const std::string& what) : std::runtime_error(what) {}
};

// Winding number failed to stabilize to an integer.
struct WindingError : std::runtime_error {
  explicit WindingError(const std::string& what) : std::runtime_error(what) {}
};

// A theorem-backed assertion failed (e.g. more zeros than D in the ball).
struct InternalCheckError : std::runtime_error {
  explicit InternalCheckError(const std::string& what) : std::runtime_error(what) {}
};

// Function-spec mini-language parse failure; position is a byte offset.
struct ParseError : std::runtime_error {
  std::size_t position;
  ParseError(const std::string& what, std::size_t pos)
      : std::runtime_error(what), position(pos) {}
};

}  // namespace multlab

#endif
