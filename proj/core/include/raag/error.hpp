#pragma once

#include <stdexcept>
#include <string>

namespace raag {

/// Bad user input: malformed files, unknown vertices, violated preconditions.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A well-definedness guard failed. This means the library's reading of the
/// underlying mathematics is wrong for some input, not that the input is bad.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

namespace detail {

[[noreturn]] inline void invariant_failed(const std::string& what) {
  throw InvariantError("invariant violated: " + what);
}

}  // namespace detail

#define RAAG_INVARIANT(cond, msg)                \
  do {                                           \
    if (!(cond)) ::raag::detail::invariant_failed(msg); \
  } while (false)

}  // namespace raag
