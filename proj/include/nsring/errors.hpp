#ifndef NSRING_ERRORS_HPP_
#define NSRING_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace nsring {

// Base class for all input/precondition failures raised by this library.
// Internal mathematical cross-checks (identities the theory guarantees)
// throw std::logic_error instead: tripping one means a bug, not bad input.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct EmptyGenerators : Error {
  EmptyGenerators() : Error("generator list is empty") {}
};

struct NonPositiveGenerator : Error {
  explicit NonPositiveGenerator(long long g)
      : Error("generator must be positive, got " + std::to_string(g)) {}
};

struct NotCoprime : Error {
  explicit NotCoprime(long long g)
      : Error("generators have gcd " + std::to_string(g) + ", expected 1") {}
};

struct NegativeBound : Error {
  explicit NegativeBound(long long b)
      : Error("bound must be nonnegative, got " + std::to_string(b)) {}
};

struct NotIntegral : Error {
  NotIntegral() : Error("ideal is not integral (E is not contained in H)") {}
};

struct NotContained : Error {
  NotContained() : Error("second ideal is not contained in the first") {}
};

struct NotPrimary : Error {
  NotPrimary() : Error("ideal is not m-primary") {}
};

struct UnsupportedExponent : Error {
  explicit UnsupportedExponent(long long e)
      : Error("series support contains exponent " + std::to_string(e) +
              " outside the ambient semigroup") {}
};

struct PrecisionMismatch : Error {
  PrecisionMismatch() : Error("operands have incompatible field or ambient data") {}
};

struct PrecisionTooLow : Error {
  explicit PrecisionTooLow(const std::string& why)
      : Error("precision too low: " + why) {}
};

struct HypothesisNotSatisfied : Error {
  explicit HypothesisNotSatisfied(const std::string& why)
      : Error("hypothesis not satisfied: " + why) {}
};

struct NotSettingIdeal : Error {
  explicit NotSettingIdeal(const std::string& literal)
      : Error("not a regular reflexive trace ideal: " + literal) {}
};

}  // namespace nsring

#endif  // NSRING_ERRORS_HPP_
