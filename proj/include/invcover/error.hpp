#ifndef INVCOVER_ERROR_HPP
#define INVCOVER_ERROR_HPP

#include <stdexcept>
#include <string>

namespace invcover {

enum class ErrorCode {
  InvalidArgument,
  Uncoverable,
  CapExceeded,
  InvalidAction,
  InvariantViolation,
};

const char *to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string &what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string &what) {
  throw Error(code, what);
}

}  // namespace invcover

#endif
