#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace prefixgroup {

enum class ErrorKind {
  ArityMismatch,
  InfeasibleSize,
  IncompleteCode,
  Overlap,
  NoMovedPoint,
  DegenerateRegion,
  Precondition,
  Parse,
};

const char *to_string(ErrorKind kind);

// Every domain failure surfaces as this exception; callers dispatch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string &what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string &what)
      : Error(ErrorKind::Parse,
              what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace prefixgroup
