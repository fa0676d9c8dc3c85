#include <doctest.h>

#include <map>

#include "fgl/error.hpp"
#include "fgl/fusion_graphs.hpp"
#include "fgl/graph_analysis.hpp"

using namespace fgl;

namespace {

bool regular_of(const Graph& g, std::size_t k) {
  for (Vertex x = 0; x < g.order(); ++x)
    if (g.degree(x) != k) return false;
  return true;
}

const InvolutionClass& klass(Family family, unsigned n) {
  static std::map<std::pair<Family, unsigned>, InvolutionClass> cache;
  auto it = cache.find({family, n});
  if (it == cache.end()) it = cache.emplace(std::pair{family, n}, involution_class(make_group(family, n))).first;
  return it->second;
}

}  // namespace

TEST_CASE("valencies of fusion graphs") {
  const auto& psl4 = klass(Family::PSL2, 2);
  CHECK(regular_of(chi_graph(psl4), 4));
  CHECK(regular_of(build_fusion_graph(psl4, PiSpec::odd_complement()), 8));
  CHECK(regular_of(chi_graph(klass(Family::PSL2, 3)), 8));
  CHECK(regular_of(chi_graph(klass(Family::Sz, 3)), 64));
  CHECK(regular_of(pi_graph(klass(Family::Sz, 3)), 384));
  const Graph psu_chi = chi_graph(klass(Family::PSU3, 2));
  CHECK(psu_chi.order() == 195);
  CHECK(psu_chi.edge_count() == 6240);
  CHECK(regular_of(pi_graph(klass(Family::PSU3, 2)), 128));
  CHECK(build_fusion_graph(psl4, PiSpec::explicit_set({3})) == chi_graph(psl4));
  CHECK(build_fusion_graph(psl4, PiSpec::explicit_set({3, 5})) ==
        chi_graph(psl4).united_with(build_fusion_graph(psl4, PiSpec::odd_complement())));
}

TEST_CASE("distance identities") {
  for (const auto& [f, n] : {std::pair{Family::PSL2, 2u}, std::pair{Family::Sz, 3u}}) {
    const auto& cls = klass(f, n);
    const Graph chi = chi_graph(cls);
    const Graph pi = pi_graph(cls);
    CHECK(pi == distance_power(chi, {2}));
    const Graph phi = phi_graph(chi, cls.sylow);
    CHECK(phi == pi.complement());
    CHECK(regular_of(phi, f == Family::PSL2 ? 6 : 70));
  }
  // A partition that is not the antipodal one breaks the {1,3} identity.
  const auto& cls = klass(Family::PSL2, 2);
  std::vector<std::uint32_t> labels(cls.size());
  for (Vertex x = 0; x < cls.size(); ++x) labels[x] = x / 3;
  const Partition wrong = Partition::from_labels(labels);
  if (!(wrong == cls.sylow)) {
    bool threw = false;
    try {
      phi_graph(chi_graph(cls), wrong);
    } catch (const Error& e) {
      threw = e.code() == Errc::PhiIdentityMismatch;
    }
    CHECK(threw);
  }
}

TEST_CASE("common-count graphs of the distance-2 graph") {
  const Graph psu_pi = pi_graph(klass(Family::PSU3, 2));
  CHECK(recognize_complete_multipartite(omega_graph(psu_pi, 84)) == EqualBlocks{65, 3});
  CHECK(recognize_clique_union(omega_graph(psu_pi, 64)) == EqualBlocks{65, 3});
  CHECK(recognize_complete_multipartite(omega_graph(pi_graph(klass(Family::Sz, 3)), 324)) == EqualBlocks{65, 7});
  CHECK(omega_graph(psu_pi, 1000).edge_count() == 0);
}

TEST_CASE("pi specifications") {
  CHECK(parse_pi("chi").mode == PiMode::ChiOnly);
  CHECK(parse_pi("odd-complement").mode == PiMode::OddComplement);
  const PiSpec set = parse_pi("5,3");
  CHECK(set.orders == std::set<unsigned>{3, 5});
  CHECK(set.name() == "3,5");
  CHECK(parse_pi(set.name()).orders == set.orders);
  CHECK(PiSpec::odd_complement().admits(5, 3));
  CHECK(!PiSpec::odd_complement().admits(3, 3));
  CHECK(!PiSpec::odd_complement().admits(4, 3));
  for (const char* bad : {"", "3,,5", "x", "0", "3;5"}) {
    bool threw = false;
    try {
      parse_pi(bad);
    } catch (const Error& e) {
      threw = e.code() == Errc::ParseError;
    }
    CHECK_MESSAGE(threw, bad);
  }
  CHECK(parse_verification("sampled") == OrderVerification::Sampled);
  CHECK(verification_name(OrderVerification::Off) == "off");
}

TEST_CASE("order census covers every pair and finds no even non-commuting product") {
  const auto& cls = klass(Family::PSL2, 3);
  const auto graphs = build_fusion_graphs(cls, OrderVerification::Off);
  CHECK(graphs.census.mode == OrderVerification::Full);
  CHECK(graphs.census.pairs_checked == 63 * 62 / 2);
  std::map<unsigned, std::uint64_t> direct;
  for (Vertex x = 0; x < cls.size(); ++x)
    for (Vertex y = x + 1; y < cls.size(); ++y) ++direct[product_order(cls, x, y)];
  CHECK(graphs.census.histogram == direct);
  CHECK(graphs.census.even_noncommuting == 0);
  CHECK(graphs.census.passed());
  CHECK(graphs.chi == chi_graph(cls));
  CHECK(graphs.commuting == commuting_graph(cls));
  for (const auto& [order, pairs] : direct) CHECK((order % 2 == 1 || order == 2));
}
