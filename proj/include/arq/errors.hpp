#ifndef ARQ_ERRORS_HPP
#define ARQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace arq {

enum class Err {
  RelationTooShort,
  RelationOutOfRange,
  RedundantRelation,
  IndexOutOfRange,
  QuotientTooLong,
  InvalidModule,
  NonComposable,
  ZeroModule,
  KindMismatch,
  WrongKind,
  HomViolation,
  NotSquareZero,
  InconsistentRep,
  NotIndecomposable,
  SocleDimensionError,
  DecompositionFailure,
  ZeroMap,
  NotApplicable,
  BudgetExceeded,
  ComponentOpen,
  ParseError,
  Internal,
};

class Error : public std::runtime_error {
public:
  Error(Err code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  Err code() const { return code_; }

private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& msg) { throw Error(code, msg); }

// Engine self-checks; a failure here is a bug, not a user error.
inline void engine_check(bool ok, const std::string& msg) {
  if (!ok) throw Error(Err::Internal, "engine invariant violated: " + msg);
}

} // namespace arq

#endif
