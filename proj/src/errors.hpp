#pragma once

#include <stdexcept>
#include <string>

namespace w123 {

// Error codes shared by the C++ core and the C API. Keep in sync with
// w123_status in include/w123/w123.h.
enum class ErrorCode : int {
  invalid_argument = 1,
  cap_exceeded = 2,
  timeout = 3,
  insufficient_terms = 4,
  not_available = 5,
  singular_recurrence = 6,
  non_integral = 7,
  non_divisible = 8,
  degenerate = 9,
  defect = 10,
  io = 11,
  parse = 12,
  internal = 13,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

#define W123_DEFINE_ERROR(Name, Code)                                         \
  class Name : public Error {                                                 \
   public:                                                                    \
    explicit Name(const std::string& what) : Error(ErrorCode::Code, what) {}  \
  };

W123_DEFINE_ERROR(InvalidArgument, invalid_argument)
W123_DEFINE_ERROR(CapExceeded, cap_exceeded)
W123_DEFINE_ERROR(TimeoutError, timeout)
W123_DEFINE_ERROR(InsufficientTerms, insufficient_terms)
W123_DEFINE_ERROR(NotAvailable, not_available)
W123_DEFINE_ERROR(SingularRecurrence, singular_recurrence)
W123_DEFINE_ERROR(NonIntegral, non_integral)
W123_DEFINE_ERROR(NonDivisible, non_divisible)
W123_DEFINE_ERROR(DegenerateInput, degenerate)
W123_DEFINE_ERROR(DefectError, defect)
W123_DEFINE_ERROR(IoError, io)
W123_DEFINE_ERROR(ParseError, parse)

#undef W123_DEFINE_ERROR

}  // namespace w123
