#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fgl/closed_form.hpp"
#include "fgl/fusion_graphs.hpp"
#include "fgl/graph_analysis.hpp"
#include "fgl/group_model.hpp"

namespace fgl {

inline constexpr const char* kCertSchema = "fgl-cert-1";
inline constexpr const char* kCodeVersion = "1";

struct VerifyOptions {
  OrderVerification orders = OrderVerification::Sampled;
  std::uint64_t samples = kDefaultOrderSamples;
  std::uint64_t seed = 0x5eed;
};

struct OmegaCheck {
  std::uint64_t c = 0;
  Lemma2Structure predicted;
  std::optional<EqualBlocks> multipartite;
  std::optional<EqualBlocks> clique_union;
  bool match = false;
};

struct StageTiming {
  std::string stage;
  double seconds = 0;
};

/// Outcome of the end-to-end pipeline for one group. Fields after the failing
/// stage are left at their defaults.
struct VerificationReport {
  GroupSpec spec;
  VerifyOptions options;
  bool transitive_scope = false;

  std::uint64_t class_size = 0;
  OrderCensus census;

  CoverParams cover;
  std::optional<IntersectionArray> chi_array;
  IntersectionArray predicted_array;
  std::optional<DezaCert> chi_deza;
  std::map<std::uint64_t, std::uint64_t> chi_spectrum;

  std::uint32_t sylow_classes = 0;
  std::uint32_t sylow_size = 0;
  bool sylow_is_equivalence = false;
  std::optional<Partition> antipodal;
  bool antipodal_matches_sylow = false;

  bool pi_is_distance2 = false;
  bool phi_is_distance13 = false;
  bool phi_is_complement = false;

  std::optional<DezaCert> pi_deza;
  Theorem1Params predicted_pi;
  DezaParams lemma1_pi;
  std::optional<DdgCert> ddg;
  std::optional<PNumbers> p_numbers;
  PNumbers predicted_p;
  bool predicted_strict = false;

  bool omega_applicable = false;
  std::vector<OmegaCheck> omega;

  std::vector<StageTiming> timings;
  std::optional<std::string> failed_stage;
  std::string failure;

  bool passed() const noexcept { return !failed_stage.has_value(); }
};

/// class -> product orders -> chi array -> chi Deza and spectrum -> Sylow
/// equivalence -> antipodal classes -> distance-2 and {1,3} identities -> pi
/// Deza -> DDG -> p-numbers -> Omega structures. Stops at the first failing
/// stage. Classes above kExhaustiveOrderLimit use a transitive pair scope.
VerificationReport verify_group(const GroupSpec& spec, const VerifyOptions& options = {});

nlohmann::ordered_json array_json(const IntersectionArray& ia);
nlohmann::ordered_json deza_json(const DezaCert& cert);
nlohmann::ordered_json ddg_json(const DdgCert& cert);
nlohmann::ordered_json spectrum_json(const std::map<std::uint64_t, std::uint64_t>& spectrum);
nlohmann::ordered_json blocks_json(const std::optional<EqualBlocks>& blocks);
nlohmann::ordered_json params_json(const DezaParams& p);

nlohmann::ordered_json report_json(const VerificationReport& report);

/// Fixed-width tables of predicted parameters for q = 2^2 .. 2^max_n (odd n
/// for Sz). Rows whose (family, n) is in `verified` are marked.
std::string parameter_tables(unsigned max_n, const std::map<std::pair<Family, unsigned>, bool>& verified);

}  // namespace fgl
