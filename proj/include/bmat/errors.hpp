#ifndef BMAT_ERRORS_HPP
#define BMAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bmat {

/// Bad caller input: unknown labels, indices out of range, malformed vectors.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The matrix does not have the shape a matroid representation needs
/// (for instance it is rank deficient).
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A separation argument was not actually a k-separation.
class NotASeparationError : public InputError {
 public:
  using InputError::InputError;
};

enum class HypothesisKind {
  NotSimple,
  NotCosimple,
  NotExact,
  NotUnionOfCircuits,
  NotUnionOfCocircuits,
  NotSelfDual,
  NotThreeConnected,
  NotInClass,
};

inline const char* to_string(HypothesisKind kind) {
  switch (kind) {
    case HypothesisKind::NotSimple: return "not-simple";
    case HypothesisKind::NotCosimple: return "not-cosimple";
    case HypothesisKind::NotExact: return "not-exact";
    case HypothesisKind::NotUnionOfCircuits: return "not-union-of-circuits";
    case HypothesisKind::NotUnionOfCocircuits: return "not-union-of-cocircuits";
    case HypothesisKind::NotSelfDual: return "not-self-dual";
    case HypothesisKind::NotThreeConnected: return "not-3-connected";
    case HypothesisKind::NotInClass: return "not-in-class";
  }
  return "unknown";
}

/// A structural check was asked to run on an input that does not meet the
/// hypotheses the check relies on.
class HypothesisError : public std::logic_error {
 public:
  HypothesisError(HypothesisKind kind, const std::string& what)
      : std::logic_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  HypothesisKind kind() const noexcept { return kind_; }

 private:
  HypothesisKind kind_;
};

}  // namespace bmat

#endif  // BMAT_ERRORS_HPP
