#ifndef GAIFMAN_ERROR_HPP
#define GAIFMAN_ERROR_HPP

#include <stdexcept>
#include <string>

namespace gaifman {

/// Malformed or out-of-contract input (bad files, bad parameters).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The operation is not defined for this kind of input, e.g. the
/// complement of a structure with three or more edge classes.
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exhaustive enumeration refused because the universe exceeds its guard.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal invariant was violated; indicates a bug, not bad input.
class LogicError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace gaifman

#endif  // GAIFMAN_ERROR_HPP
