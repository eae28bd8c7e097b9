#pragma once

#include <stdexcept>
#include <string>

namespace ihg {

/// Input that violates an operation's precondition (bad genus, wrong vector
/// length, intersecting curves where disjointness is required, ...).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An internal consistency check failed. Raised instead of returning a guess.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A bounded search (clique, pool search) refused to run or came up empty.
class SearchFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ihg
