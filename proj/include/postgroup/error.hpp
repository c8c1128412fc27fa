#pragma once

#include <stdexcept>
#include <string>

namespace postgroup {

enum class ErrorKind {
  kParse,             // malformed token or document
  kUnknownName,       // generator / element name not in the alphabet
  kShape,             // non-square table, wrong row length
  kOutOfRange,        // table entry out of range
  kAlphabetMismatch,  // operands built over different alphabets
  kLeftRegularity,    // some L_m is not a bijection
  kDiagonality,       // m -> L_m^{-1}(m) is not a bijection
  kGroupAxiom,        // associativity / unit / inverse failure
  kAutomorphism,      // some L_a is not a group automorphism
  kPostGroupAxiom,    // (a*b)|>c != a|>(b|>c)
  kBraidedGroup,      // braided-group axiom failure
  kSkewBrace,         // skew-brace identity failure
  kActionLaw,         // right action unit or composition failure
  kSizeCap,           // construction exceeds a configured cap
  kInvalidArgument,
};

// All library failures are reported through this exception. `kind` lets
// callers (and the CLI exit-code mapping) distinguish input errors from
// failed verifications without parsing the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace postgroup
