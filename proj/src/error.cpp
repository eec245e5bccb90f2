#include "scharc/error.hpp"

namespace scharc {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::NonPrime: return "NonPrime";
    case Errc::ReducibleModulus: return "ReducibleModulus";
    case Errc::NoDefaultModulus: return "NoDefaultModulus";
    case Errc::BadArgument: return "BadArgument";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::BadIndex: return "BadIndex";
    case Errc::NotAnIdeal: return "NotAnIdeal";
    case Errc::SideMismatch: return "SideMismatch";
    case Errc::GroupMismatch: return "GroupMismatch";
    case Errc::NotSubgroup: return "NotSubgroup";
    case Errc::NotQuotient: return "NotQuotient";
    case Errc::NotNormal: return "NotNormal";
    case Errc::NotInvariant: return "NotInvariant";
    case Errc::NotInInertia: return "NotInInertia";
    case Errc::ValidationFailed: return "ValidationFailed";
    case Errc::UnsupportedLattice: return "UnsupportedLattice";
    case Errc::EvenCharacteristic: return "EvenCharacteristic";
    case Errc::SpaceNotClosed: return "SpaceNotClosed";
    case Errc::SchemaError: return "SchemaError";
    case Errc::IOFailure: return "IOFailure";
    case Errc::AssertionFailed: return "AssertionFailed";
  }
  return "Unknown";
}

}  // namespace scharc
