#pragma once

#include <stdexcept>
#include <string>

namespace vnum {

// Malformed graph, permutation, polynomial or report text.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An operation was called outside its domain (disconnected graph, S not a
// minimal cut, empty dominating candidate, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A Groebner computation exceeded its polynomial-count, degree or time cap.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace vnum
