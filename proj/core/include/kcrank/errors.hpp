#ifndef KCRANK_ERRORS_HPP
#define KCRANK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace kcrank {

// Machine-readable failure categories.  Every exception thrown by the
// library carries one of these codes so that callers (and the command line
// tool) can map failures to stable identifiers and exit codes without
// parsing message text.
enum class errc {
  squarefree,          // group order is not a square-free integer >= 2
  unimodular,          // matrix is not invertible over the integers
  order,               // matrix order does not divide the declared group order
  dimension,           // shape mismatch between declared rank and matrix
  syntax,              // malformed input document
  provenance,          // expected values lack a provenance tag
  duplicate_name,      // two catalog entries share a name
  family,              // unknown generator family or bad family parameters
  kl_undefined,        // the multiplicity k_l does not exist for this split
  noncommuting,        // endomorphism does not commute with the presentation
  not_order_d,         // matrix is not of the exact multiplicative order asked
  nonintegral,         // an average that must be an integer failed to divide
  io,                  // file could not be read or written
  internal,            // an internal invariant failed; always a bug
};

const char* errc_name(errc code);

class kcrank_error : public std::runtime_error {
 public:
  kcrank_error(errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

// Thrown when a hard internal invariant is violated.  Reaching this is a
// bug in the library, never a property of user input.
class internal_error : public kcrank_error {
 public:
  explicit internal_error(const std::string& message)
      : kcrank_error(errc::internal, message) {}
};

inline const char* errc_name(errc code) {
  switch (code) {
    case errc::squarefree: return "E_SQUAREFREE";
    case errc::unimodular: return "E_UNIMODULAR";
    case errc::order: return "E_ORDER";
    case errc::dimension: return "E_DIMENSION";
    case errc::syntax: return "E_SYNTAX";
    case errc::provenance: return "E_PROVENANCE";
    case errc::duplicate_name: return "E_DUPLICATE_NAME";
    case errc::family: return "E_FAMILY";
    case errc::kl_undefined: return "E_KL_UNDEFINED";
    case errc::noncommuting: return "E_NONCOMMUTING";
    case errc::not_order_d: return "E_NOT_ORDER_D";
    case errc::nonintegral: return "E_NONINTEGRAL";
    case errc::io: return "E_IO";
    case errc::internal: return "E_INTERNAL";
  }
  return "E_UNKNOWN";
}

}  // namespace kcrank

#endif  // KCRANK_ERRORS_HPP
