#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qf {

enum class Errc {
  // ring layer
  SpecMismatch,
  NotQuotient,
  NotDivisible,
  FactorMismatch,
  BadModulus,
  // free quandle layer
  ContextMismatch,
  NotInImage,
  NotInModel,
  WrongContext,
  UnsupportedIdeal,
  // term layer
  SyntaxError,
  // finite tables
  NotLeftQuasigroup,
  ClosureLimitExceeded,
  NotMedial,
  NotGenerating,
  NotAutomorphism,
  SizeLimit,
  NotCancellative,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// Syntax errors carry the byte offset of the offending character.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& message);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

[[noreturn]] void raise(Errc code, const std::string& message);

}  // namespace qf
