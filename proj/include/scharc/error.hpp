#pragma once

#include <stdexcept>
#include <string>

namespace scharc {

enum class Errc {
  NonPrime,
  ReducibleModulus,
  NoDefaultModulus,
  BadArgument,
  CapExceeded,
  BadIndex,
  NotAnIdeal,
  SideMismatch,
  GroupMismatch,
  NotSubgroup,
  NotQuotient,
  NotNormal,
  NotInvariant,
  NotInInertia,
  ValidationFailed,
  UnsupportedLattice,
  EvenCharacteristic,
  SpaceNotClosed,
  SchemaError,
  IOFailure,
  AssertionFailed,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace scharc
