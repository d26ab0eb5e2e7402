#pragma once

#include <stdexcept>
#include <string>

namespace schurpos {

// Error kinds surfaced by the library. Callers that care about the cause
// inspect Error::code(); everything derives from std::runtime_error so the
// CLI can also just print what().
enum class errc {
  sum_mismatch,
  size_mismatch,
  empty_partition,
  bad_arity,
  bad_input,
  bad_interleaving,
  not_distinct,
  precondition_violated,
  bound_exceeded,
  bad_rank,
  overflow,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::sum_mismatch: return "SUM_MISMATCH";
    case errc::size_mismatch: return "SIZE_MISMATCH";
    case errc::empty_partition: return "EMPTY_PARTITION";
    case errc::bad_arity: return "BAD_ARITY";
    case errc::bad_input: return "BAD_INPUT";
    case errc::bad_interleaving: return "BAD_INTERLEAVING";
    case errc::not_distinct: return "NOT_DISTINCT";
    case errc::precondition_violated: return "PRECONDITION_VIOLATED";
    case errc::bound_exceeded: return "BOUND_EXCEEDED";
    case errc::bad_rank: return "BAD_RANK";
    case errc::overflow: return "OVERFLOW";
  }
  return "UNKNOWN";
}

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
  throw Error(code, what);
}

// Coefficients are exact machine integers; arithmetic refuses to wrap.
using coeff_t = long long;

inline coeff_t checked_add(coeff_t a, coeff_t b) {
  coeff_t r;
  if (__builtin_add_overflow(a, b, &r))
    fail(errc::overflow, "coefficient addition overflowed");
  return r;
}

inline coeff_t checked_mul(coeff_t a, coeff_t b) {
  coeff_t r;
  if (__builtin_mul_overflow(a, b, &r))
    fail(errc::overflow, "coefficient multiplication overflowed");
  return r;
}

}  // namespace schurpos
