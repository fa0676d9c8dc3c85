#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fgl {

enum class Errc {
  // finite field
  NonIrreducibleModulus,
  DegreeMismatch,
  UnsupportedDegree,
  DivisionByZero,
  // group model
  InvalidQ,
  SzEvenExponent,
  GeneratorValidationFailed,
  NotInGroupForm,
  OrderCapExceeded,
  ClassSizeMismatch,
  SeedNotInvolution,
  NotAnEquivalence,
  // fusion graphs
  Gamma2Mismatch,
  PhiIdentityMismatch,
  // graph analysis
  Disconnected,
  NotDistanceRegular,
  NotAntipodal,
  InvalidDistanceSet,
  NotRegular,
  MoreThanTwoValues,
  PartitionNotUniform,
  NotVertexTransitive,
  // closed forms
  HypothesisViolated,
  // io / cli
  ParseError,
  IoError,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace fgl
