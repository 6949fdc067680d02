#ifndef COSETCONN_ERROR_HPP
#define COSETCONN_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cosetconn {

// Malformed or out-of-contract input (bad cycle text, degree mismatch,
// element outside the parent group, ...). CLI exit code 1.
class InputError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// An enumeration or brute-force limit was hit. Carries how far it got.
class CapExceeded : public std::runtime_error {
public:
  CapExceeded(const std::string& what, std::size_t cap, std::size_t reached)
  : std::runtime_error(what + " (cap " + std::to_string(cap) + ", reached " +
                       std::to_string(reached) + ")"),
    cap_(cap), reached_(reached)
  {}

  std::size_t cap() const noexcept { return cap_; }
  std::size_t reached() const noexcept { return reached_; }

private:
  std::size_t cap_;
  std::size_t reached_;
};

// Two independent computations disagreed. Always a bug somewhere; CLI exit code 2.
class InconsistencyError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

// The operation is undefined for this graph (disconnected input, complete
// digraph asked for atoms, ...).
class PreconditionError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

} // namespace cosetconn

#endif // COSETCONN_ERROR_HPP
