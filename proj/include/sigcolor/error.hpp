#pragma once

#include <stdexcept>
#include <string>

namespace sigcolor {

/// Malformed input document (graph, certificate or trace JSON).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called outside its precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An enumeration or construction exceeded its configured size guard.
class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The coloring composer could not extend its running coloring (template
/// mismatch or an infeasible apex profile).
class CompositionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sigcolor
