#ifndef DFINITE_ERRORS_HPP
#define DFINITE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dfinite {

// Raised when a truncation is too short for a sound decision. `needed` is the
// smallest truncation order that would allow the computation, 0 if unknown.
struct PrecisionTooLow : std::runtime_error {
  long needed;
  PrecisionTooLow(const std::string& what, long needed_ = 0)
      : std::runtime_error(what), needed(needed_) {}
};

struct InsufficientInitialConditions : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct Inconsistent : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IrregularPoint : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InvalidFactorization : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotSquarefree : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct RootNotSeparable : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace dfinite

#endif
