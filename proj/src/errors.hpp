#ifndef CYCPERM_ERRORS_HPP
#define CYCPERM_ERRORS_HPP

#include <stdexcept>
#include <string>

#include "cycperm/cycperm.h"

namespace cycperm {

// Core exceptions carry the status code surfaced at the C boundary.
class Error : public std::runtime_error {
 public:
  Error(cycperm_status code, const std::string &msg)
      : std::runtime_error(msg), code_(code) {}
  cycperm_status code() const noexcept { return code_; }

 private:
  cycperm_status code_;
};

struct ParseError : Error {
  explicit ParseError(const std::string &msg)
      : Error(CYCPERM_ERR_PARSE, msg) {}
};

struct NotCyclicError : Error {
  explicit NotCyclicError(const std::string &msg)
      : Error(CYCPERM_ERR_NOT_CYCLIC, msg) {}
};

struct OutOfRangeError : Error {
  explicit OutOfRangeError(const std::string &msg)
      : Error(CYCPERM_ERR_OUT_OF_RANGE, msg) {}
};

struct InvalidArgumentError : Error {
  explicit InvalidArgumentError(const std::string &msg)
      : Error(CYCPERM_ERR_INVALID_ARGUMENT, msg) {}
};

struct ResourceLimitError : Error {
  explicit ResourceLimitError(const std::string &msg)
      : Error(CYCPERM_ERR_RESOURCE_LIMIT, msg) {}
};

struct OverflowError : Error {
  explicit OverflowError(const std::string &msg)
      : Error(CYCPERM_ERR_OVERFLOW, msg) {}
};

struct NoRecurrenceError : Error {
  explicit NoRecurrenceError(const std::string &msg)
      : Error(CYCPERM_ERR_NO_RECURRENCE, msg) {}
};

struct NotAMemberError : Error {
  explicit NotAMemberError(const std::string &msg)
      : Error(CYCPERM_ERR_NOT_A_MEMBER, msg) {}
};

struct OeisUnavailableError : Error {
  explicit OeisUnavailableError(const std::string &msg)
      : Error(CYCPERM_ERR_OEIS_UNAVAILABLE, msg) {}
};

}  // namespace cycperm

#endif
