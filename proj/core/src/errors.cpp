#include "qf/errors.hpp"

namespace qf {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::SpecMismatch: return "SpecMismatch";
    case Errc::NotQuotient: return "NotQuotient";
    case Errc::NotDivisible: return "NotDivisible";
    case Errc::FactorMismatch: return "FactorMismatch";
    case Errc::BadModulus: return "BadModulus";
    case Errc::ContextMismatch: return "ContextMismatch";
    case Errc::NotInImage: return "NotInImage";
    case Errc::NotInModel: return "NotInModel";
    case Errc::WrongContext: return "WrongContext";
    case Errc::UnsupportedIdeal: return "UnsupportedIdeal";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::NotLeftQuasigroup: return "NotLeftQuasigroup";
    case Errc::ClosureLimitExceeded: return "ClosureLimitExceeded";
    case Errc::NotMedial: return "NotMedial";
    case Errc::NotGenerating: return "NotGenerating";
    case Errc::NotAutomorphism: return "NotAutomorphism";
    case Errc::SizeLimit: return "SizeLimit";
    case Errc::NotCancellative: return "NotCancellative";
  }
  return "UnknownError";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

SyntaxError::SyntaxError(std::size_t position, const std::string& message)
    : Error(Errc::SyntaxError, message + " (at position " + std::to_string(position) + ")"),
      position_(position) {}

void raise(Errc code, const std::string& message) { throw Error(code, message); }

}  // namespace qf
