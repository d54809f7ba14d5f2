#ifndef STIELTJES_ERRORS_HPP
#define STIELTJES_ERRORS_HPP

#include <stdexcept>
#include <string>

#include "stieltjes/real.hpp"

namespace stieltjes {

class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define STIELTJES_ERROR(Name)            \
  class Name : public error {            \
   public:                               \
    using error::error;                  \
  };

STIELTJES_ERROR(InvalidSpec)
STIELTJES_ERROR(InvalidParameters)
STIELTJES_ERROR(NonConvergence)
STIELTJES_ERROR(UnsupportedFamily)
STIELTJES_ERROR(OrderUnavailable)
STIELTJES_ERROR(DomainError)
STIELTJES_ERROR(RecursionDepthExceeded)
STIELTJES_ERROR(ConstantDeterminationFailure)
STIELTJES_ERROR(IllConditionedFit)

#undef STIELTJES_ERROR

/// Raised when a computation finishes but misses its accuracy target. The
/// best available value and the achieved error travel with the exception.
class ToleranceNotMet : public error {
 public:
  ToleranceNotMet(const std::string& what, Real best, Real achieved)
      : error(what), best_(std::move(best)), achieved_(std::move(achieved)) {}
  const Real& best_value() const noexcept { return best_; }
  const Real& achieved_error() const noexcept { return achieved_; }

 private:
  Real best_;
  Real achieved_;
};

}  // namespace stieltjes

#endif  // STIELTJES_ERRORS_HPP
