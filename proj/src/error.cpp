#include "fgl/error.hpp"

namespace fgl {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NonIrreducibleModulus: return "NonIrreducibleModulus";
    case Errc::DegreeMismatch: return "DegreeMismatch";
    case Errc::UnsupportedDegree: return "UnsupportedDegree";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::InvalidQ: return "InvalidQ";
    case Errc::SzEvenExponent: return "SzEvenExponent";
    case Errc::GeneratorValidationFailed: return "GeneratorValidationFailed";
    case Errc::NotInGroupForm: return "NotInGroupForm";
    case Errc::OrderCapExceeded: return "OrderCapExceeded";
    case Errc::ClassSizeMismatch: return "ClassSizeMismatch";
    case Errc::SeedNotInvolution: return "SeedNotInvolution";
    case Errc::NotAnEquivalence: return "NotAnEquivalence";
    case Errc::Gamma2Mismatch: return "Gamma2Mismatch";
    case Errc::PhiIdentityMismatch: return "PhiIdentityMismatch";
    case Errc::Disconnected: return "Disconnected";
    case Errc::NotDistanceRegular: return "NotDistanceRegular";
    case Errc::NotAntipodal: return "NotAntipodal";
    case Errc::InvalidDistanceSet: return "InvalidDistanceSet";
    case Errc::NotRegular: return "NotRegular";
    case Errc::MoreThanTwoValues: return "MoreThanTwoValues";
    case Errc::PartitionNotUniform: return "PartitionNotUniform";
    case Errc::NotVertexTransitive: return "NotVertexTransitive";
    case Errc::HypothesisViolated: return "HypothesisViolated";
    case Errc::ParseError: return "ParseError";
    case Errc::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace fgl
