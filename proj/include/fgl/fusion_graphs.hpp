#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>

#include "fgl/graph.hpp"
#include "fgl/group_model.hpp"

namespace fgl {

enum class PiMode { ChiOnly, OddComplement, ExplicitSet };

/// The set pi of admissible product orders.
///
/// ChiOnly is {chi}. OddComplement is every odd order other than 1 and chi;
/// since only orders realised by involution pairs are ever tested, this is
/// the odd part of omega(G) - {2, chi}. ExplicitSet carries its own orders.
struct PiSpec {
  PiMode mode = PiMode::ChiOnly;
  std::set<unsigned> orders;

  static PiSpec chi_only() { return {PiMode::ChiOnly, {}}; }
  static PiSpec odd_complement() { return {PiMode::OddComplement, {}}; }
  static PiSpec explicit_set(std::set<unsigned> orders) { return {PiMode::ExplicitSet, std::move(orders)}; }

  bool admits(unsigned order, unsigned chi) const {
    switch (mode) {
      case PiMode::ChiOnly: return order == chi;
      case PiMode::OddComplement: return order % 2 == 1 && order != 1 && order != chi;
      case PiMode::ExplicitSet: return orders.contains(order);
    }
    return false;
  }
  /// "chi", "odd-complement" or a comma-separated order list.
  std::string name() const;
};

/// Inverse of PiSpec::name(). Throws ParseError.
PiSpec parse_pi(std::string_view text);

/// x ~ y iff x != y and |xy| is admitted by pi; every pair is computed.
Graph build_fusion_graph(const InvolutionClass& cls, const PiSpec& pi);
Graph chi_graph(const InvolutionClass& cls);
/// The odd-complement graph, checked equal to the distance-2 graph of the
/// chi-graph. Throws Gamma2Mismatch.
Graph pi_graph(const InvolutionClass& cls);

/// chi-graph plus a clique on every class of `classes`.
Graph clique_augment(const Graph& chi, const Partition& classes);
/// clique_augment() checked against the {1,3}-distance graph of `chi` and
/// against the complement of its distance-2 graph. Throws PhiIdentityMismatch.
Graph phi_graph(const Graph& chi, const Partition& sylow);
/// Pairs with exactly c common neighbours in `phi2`.
Graph omega_graph(const Graph& phi2, std::uint64_t c);

enum class OrderVerification { Full, Sampled, Off };

std::string_view verification_name(OrderVerification mode) noexcept;
/// "full", "sampled", "off". Throws ParseError.
OrderVerification parse_verification(std::string_view text);

/// Classes up to this size always get every pair order computed.
inline constexpr Vertex kExhaustiveOrderLimit = 4000;
inline constexpr std::uint64_t kDefaultOrderSamples = 1'000'000;

struct OrderCensus {
  OrderVerification mode = OrderVerification::Full;
  std::uint64_t pairs_checked = 0;
  std::map<unsigned, std::uint64_t> histogram;  // product order -> unordered pairs
  std::uint64_t even_noncommuting = 0;          // pairs with even order other than 2
  std::optional<std::pair<Vertex, Vertex>> even_witness;
  std::uint64_t propagation_mismatches = 0;     // sampled pairs disagreeing with propagated rows

  bool passed() const noexcept { return even_noncommuting == 0 && propagation_mismatches == 0; }
};

/// The chi-graph, the odd-complement graph and the commuting relation built
/// in one pass over product orders.
///
/// Full computes every pair. Sampled and Off compute the row of vertex 0 and
/// carry it along the conjugation action; Sampled then recomputes `samples`
/// uniformly drawn pairs directly. Classes of at most kExhaustiveOrderLimit
/// vertices always run Full.
struct FusionGraphs {
  Graph chi;
  Graph pi;
  Graph commuting;
  OrderCensus census;
};

FusionGraphs build_fusion_graphs(const InvolutionClass& cls, OrderVerification requested,
                                 std::uint64_t samples = kDefaultOrderSamples, std::uint64_t seed = 0x5eed);

}  // namespace fgl
