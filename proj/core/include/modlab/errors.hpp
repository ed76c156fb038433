#ifndef MODLAB_ERRORS_HPP
#define MODLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace modlab {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error { using Error::Error; };
struct SingularOperator : Error { using Error::Error; };
struct NotPositive : Error { using Error::Error; };
struct NotCyclic : Error { using Error::Error; };
struct NotSeparating : Error { using Error::Error; };
struct NotMeasurePreserving : Error { using Error::Error; };
struct NotHomomorphism : Error { using Error::Error; };
struct NotInAlgebra : Error { using Error::Error; };
struct NotGenericPosition : Error { using Error::Error; };
struct NotGammaCommuting : Error { using Error::Error; };
struct NotInParticleSpace : Error { using Error::Error; };
struct LimitExceeded : Error { using Error::Error; };
struct VerificationFailure : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct ValidationError : Error { using Error::Error; };

}  // namespace modlab

#endif
