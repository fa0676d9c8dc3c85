#include "fgl/fusion_graphs.hpp"

#include <charconv>
#include <random>
#include <vector>

#include "fgl/error.hpp"
#include "fgl/graph_analysis.hpp"
#include "fgl/parallel.hpp"

namespace fgl {

std::string PiSpec::name() const {
  switch (mode) {
    case PiMode::ChiOnly: return "chi";
    case PiMode::OddComplement: return "odd-complement";
    case PiMode::ExplicitSet: break;
  }
  std::string out;
  for (unsigned o : orders) out += (out.empty() ? "" : ",") + std::to_string(o);
  return out;
}

PiSpec parse_pi(std::string_view text) {
  if (text == "chi") return PiSpec::chi_only();
  if (text == "odd-complement") return PiSpec::odd_complement();
  std::set<unsigned> orders;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto item = text.substr(0, comma);
    unsigned value = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (ec != std::errc{} || ptr != item.data() + item.size() || value == 0) {
      throw Error(Errc::ParseError, "pi must be chi, odd-complement or a list of positive orders");
    }
    orders.insert(value);
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
  }
  if (orders.empty()) throw Error(Errc::ParseError, "empty pi set");
  return PiSpec::explicit_set(std::move(orders));
}

std::string_view verification_name(OrderVerification mode) noexcept {
  switch (mode) {
    case OrderVerification::Full: return "full";
    case OrderVerification::Sampled: return "sampled";
    case OrderVerification::Off: return "off";
  }
  return "?";
}

OrderVerification parse_verification(std::string_view text) {
  if (text == "full") return OrderVerification::Full;
  if (text == "sampled") return OrderVerification::Sampled;
  if (text == "off") return OrderVerification::Off;
  throw Error(Errc::ParseError, "order verification must be full, sampled or off");
}

Graph build_fusion_graph(const InvolutionClass& cls, const PiSpec& pi) {
  const Vertex v = cls.size();
  Graph g(v);
  parallel_for(v, [&](std::size_t xi, unsigned) {
    const auto x = static_cast<Vertex>(xi);
    for (Vertex y = x + 1; y < v; ++y)
      if (pi.admits(product_order(cls, x, y), cls.spec.chi)) g.add_arc(x, y);
  });
  g.symmetrize_from_upper();
  return g;
}

Graph chi_graph(const InvolutionClass& cls) { return build_fusion_graph(cls, PiSpec::chi_only()); }

Graph pi_graph(const InvolutionClass& cls) {
  Graph pi = build_fusion_graph(cls, PiSpec::odd_complement());
  if (!(pi == distance_power(chi_graph(cls), {2}))) {
    throw Error(Errc::Gamma2Mismatch, "odd-complement graph of " + cls.spec.label() +
                                          " differs from the distance-2 graph of its chi-graph");
  }
  return pi;
}

Graph clique_augment(const Graph& chi, const Partition& classes) {
  Graph out = chi;
  for (const auto& members : classes.classes())
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j) out.add_edge(members[i], members[j]);
  return out;
}

Graph phi_graph(const Graph& chi, const Partition& sylow) {
  Graph phi = clique_augment(chi, sylow);
  if (!(phi == distance_power(chi, {1, 3}))) {
    throw Error(Errc::PhiIdentityMismatch, "clique-augmented graph differs from the {1,3}-distance graph");
  }
  if (!(phi.complement() == distance_power(chi, {2}))) {
    throw Error(Errc::PhiIdentityMismatch, "clique-augmented graph is not the complement of the distance-2 graph");
  }
  return phi;
}

Graph omega_graph(const Graph& phi2, std::uint64_t c) { return common_count_graph(phi2, c); }

namespace {

struct WorkerCensus {
  std::map<unsigned, std::uint64_t> histogram;
  std::uint64_t pairs = 0;
  std::uint64_t even = 0;
  std::optional<std::pair<Vertex, Vertex>> witness;
  std::uint64_t mismatches = 0;
};

void record(WorkerCensus& w, Vertex x, Vertex y, unsigned order) {
  ++w.pairs;
  ++w.histogram[order];
  if (order % 2 == 0 && order != 2) {
    ++w.even;
    const auto pair = std::make_pair(std::min(x, y), std::max(x, y));
    if (!w.witness || pair < *w.witness) w.witness = pair;
  }
}

OrderCensus merge(OrderVerification mode, const std::vector<WorkerCensus>& workers) {
  OrderCensus out;
  out.mode = mode;
  for (const auto& w : workers) {
    out.pairs_checked += w.pairs;
    for (const auto& [o, n] : w.histogram) out.histogram[o] += n;
    out.even_noncommuting += w.even;
    out.propagation_mismatches += w.mismatches;
    if (w.witness && (!out.even_witness || *w.witness < *out.even_witness)) out.even_witness = w.witness;
  }
  return out;
}

}  // namespace

FusionGraphs build_fusion_graphs(const InvolutionClass& cls, OrderVerification requested, std::uint64_t samples,
                                 std::uint64_t seed) {
  const Vertex v = cls.size();
  const unsigned chi = cls.spec.chi;
  const PiSpec odd = PiSpec::odd_complement();
  const OrderVerification mode = v <= kExhaustiveOrderLimit ? OrderVerification::Full : requested;
  std::vector<WorkerCensus> workers(thread_count());

  FusionGraphs out;
  if (mode == OrderVerification::Full) {
    out.chi = Graph(v);
    out.pi = Graph(v);
    out.commuting = Graph(v);
    parallel_for(v, [&](std::size_t xi, unsigned w) {
      const auto x = static_cast<Vertex>(xi);
      for (Vertex y = x + 1; y < v; ++y) {
        const unsigned order = product_order(cls, x, y);
        record(workers[w], x, y, order);
        if (order == chi) out.chi.add_arc(x, y);
        if (odd.admits(order, chi)) out.pi.add_arc(x, y);
        if (order == 2) out.commuting.add_arc(x, y);
      }
    });
    out.chi.symmetrize_from_upper();
    out.pi.symmetrize_from_upper();
    out.commuting.symmetrize_from_upper();
    out.census = merge(mode, workers);
    return out;
  }

  // Row of vertex 0, then the conjugation action.
  const std::size_t words = words_for(v);
  std::vector<Word> chi_row(words, 0), pi_row(words, 0), comm_row(words, 0);
  for (Vertex y = 1; y < v; ++y) {
    const unsigned order = product_order(cls, 0, y);
    record(workers[0], 0, y, order);
    if (order == chi) set_bit(chi_row, y);
    if (odd.admits(order, chi)) set_bit(pi_row, y);
    if (order == 2) set_bit(comm_row, y);
  }
  out.chi = propagate_invariant_graph(cls, chi_row);
  out.pi = propagate_invariant_graph(cls, pi_row);
  out.commuting = propagate_invariant_graph(cls, comm_row);

  if (mode == OrderVerification::Sampled && v > 1) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Vertex> pick(0, v - 1);
    std::vector<std::pair<Vertex, Vertex>> pairs;
    pairs.reserve(samples);
    while (pairs.size() < samples) {
      const Vertex x = pick(rng);
      const Vertex y = pick(rng);
      if (x != y) pairs.emplace_back(x, y);
    }
    parallel_for(pairs.size(), [&](std::size_t i, unsigned w) {
      const auto [x, y] = pairs[i];
      const unsigned order = product_order(cls, x, y);
      record(workers[w], x, y, order);
      const bool agrees = out.chi.adjacent(x, y) == (order == chi) && out.pi.adjacent(x, y) == odd.admits(order, chi) &&
                          out.commuting.adjacent(x, y) == (order == 2);
      if (!agrees) ++workers[w].mismatches;
    }, 256);
  }
  out.census = merge(mode, workers);
  return out;
}

}  // namespace fgl
