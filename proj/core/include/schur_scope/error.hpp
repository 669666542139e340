#pragma once

#include <stdexcept>
#include <string>

namespace schur_scope {

enum class ErrorKind {
  Parse,
  Diagonal,
  Sign,
  Symmetrizability,
  Irreducibility,
  IndexOutOfRange,
  RankMismatch,
  NotFinite,
  NotAffine,
  NotReflection,
  NotRealRoot,
  NotPermutation,
  Precondition,
  Overflow,
  UnknownName,
  Internal,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace schur_scope
