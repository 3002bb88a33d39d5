#pragma once

#include <stdexcept>
#include <string>

namespace stm {

enum class Err {
  BadInput,
  NotABijection,
  Disconnected,
  UnknownName,
  OrbitTooLarge,
  WordDoesNotStabilize,
  NonCycleInput,
  NotInSpan,
  NotAnAutomorphism,
  NonCommutingGenerators,
  IrrationalEigenvalue,
  NotIrreducible,
  DecompositionIncomplete,
  UnsupportedAlgebraType,
  NotUnipotent,
  NotCertified,
};

const char* err_name(Err e);

class Error : public std::runtime_error {
 public:
  Error(Err kind, const std::string& what)
      : std::runtime_error(std::string(err_name(kind)) + ": " + what), kind_(kind) {}
  Err kind() const { return kind_; }

 private:
  Err kind_;
};

}  // namespace stm
