#ifndef RNFF_ERRORS_HPP
#define RNFF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rnff {

struct NonHermitianInput : std::runtime_error {
  explicit NonHermitianInput(const std::string& what) : std::runtime_error(what) {}
};

struct IndefiniteInput : std::runtime_error {
  explicit IndefiniteInput(const std::string& what) : std::runtime_error(what) {}
};

struct SingularInnerSystem : std::runtime_error {
  explicit SingularInnerSystem(const std::string& what) : std::runtime_error(what) {}
};

struct AliasingViolation : std::runtime_error {
  explicit AliasingViolation(const std::string& what) : std::runtime_error(what) {}
};

struct NonRealKernel : std::runtime_error {
  explicit NonRealKernel(const std::string& what) : std::runtime_error(what) {}
};

struct ZeroReference : std::runtime_error {
  explicit ZeroReference(const std::string& what) : std::runtime_error(what) {}
};

struct DivergedLoss : std::runtime_error {
  DivergedLoss(const std::string& what, long iteration)
      : std::runtime_error(what), iteration(iteration) {}
  long iteration;
};

struct IoError : std::runtime_error {
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace rnff

#endif  // RNFF_ERRORS_HPP
