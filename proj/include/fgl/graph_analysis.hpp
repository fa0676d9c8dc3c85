#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fgl/graph.hpp"

namespace fgl {

/// Which vertex pairs the all-pairs certificates examine.
///
/// all_pairs() visits every pair. transitive() visits only pairs (base, y); it
/// is built from permutations that are checked to be automorphisms of the graph
/// generating a transitive group, so every pair is the image of a visited one.
/// Certificates computed under a transitive scope are valid for any graph and
/// partition that the same permutations preserve; transitive() re-checks the
/// graph it is given.
class PairScope {
 public:
  static PairScope all_pairs() { return PairScope{}; }
  /// Throws NotVertexTransitive.
  static PairScope transitive(const Graph& g, std::span<const std::vector<Vertex>> automorphisms, Vertex base = 0);

  bool is_all_pairs() const noexcept { return !base_.has_value(); }
  Vertex base() const noexcept { return base_.value_or(0); }
  /// Sources to scan from: every vertex, or just the base.
  std::vector<Vertex> sources(Vertex order) const;

 private:
  std::optional<Vertex> base_;
};

/// True iff every permutation maps edges to edges.
bool are_automorphisms(const Graph& g, std::span<const std::vector<Vertex>> perms);

/// Breadth-first distances from `source`; -1 marks unreachable vertices.
std::vector<int> distances_from(const Graph& g, Vertex source);
/// Distance layers from `source` as bit rows: layers[i] holds the vertices at
/// distance i. Expands each layer by pushing from the frontier or pulling
/// into the unvisited set, whichever touches fewer rows.
std::vector<std::vector<Word>> distance_layers(const Graph& g, Vertex source);
/// Largest eccentricity, or nullopt when g is disconnected (or empty).
std::optional<unsigned> diameter(const Graph& g);

struct IntersectionArray {
  unsigned d = 0;
  std::vector<std::uint64_t> b;  // b_0 .. b_{d-1}
  std::vector<std::uint64_t> c;  // c_1 .. c_d
  std::vector<std::uint64_t> a;  // a_0 .. a_d

  /// Builds a from b and c: a_i = b_0 - b_i - c_i.
  static IntersectionArray from_bc(std::vector<std::uint64_t> b, std::vector<std::uint64_t> c);
  /// "{b0,b1,...;c1,c2,...}".
  std::string to_string() const;

  friend bool operator==(const IntersectionArray&, const IntersectionArray&) = default;
};

/// Checks that c_i, a_i, b_i are constant over every pair at distance i.
/// Throws Disconnected or NotDistanceRegular (message names a witness pair).
IntersectionArray intersection_array(const Graph& g, const PairScope& scope = PairScope::all_pairs());

/// p^t_{ij}: number of z with d(x,z) = i and d(z,y) = j for d(x,y) = t, checked
/// constant over pairs; keyed by t for every realised distance t.
std::map<unsigned, std::uint64_t> intersection_numbers(const Graph& g, unsigned i, unsigned j,
                                                       const PairScope& scope = PairScope::all_pairs());

/// Classes of "distance 0 or d". Throws NotAntipodal with a witness triple.
Partition antipodal_classes(const Graph& g);
/// Same, from precomputed rows: row x of `antipodes` is {x} together with the
/// vertices at distance d from x.
Partition antipodal_partition(const Graph& antipodes, unsigned d);

/// True iff each permutation maps classes of p onto classes of p.
bool preserves_partition(const Partition& p, std::span<const std::vector<Vertex>> perms);

/// x ~ y iff d(x,y) in `distances`. Rejects 0 and values above the diameter
/// with InvalidDistanceSet; throws Disconnected.
Graph distance_power(const Graph& g, std::span<const unsigned> distances);
inline Graph distance_power(const Graph& g, std::initializer_list<unsigned> distances) {
  return distance_power(g, std::span<const unsigned>(distances.begin(), distances.size()));
}

/// Number of unordered pairs of distinct vertices with each common-neighbour
/// count. Under a transitive scope the counts are scaled from the base row.
std::map<std::uint64_t, std::uint64_t> common_neighbor_spectrum(const Graph& g,
                                                                const PairScope& scope = PairScope::all_pairs());

struct DezaCert {
  std::uint64_t v = 0;
  std::uint64_t k = 0;
  std::uint64_t b = 0;  // larger common-neighbour count
  std::uint64_t a = 0;  // smaller; a == b when only one value occurs
  bool is_strict = false;
  bool is_edge_regular = false;
  bool is_strongly_regular = false;
  std::optional<std::uint64_t> lambda;  // common count on edges, when constant
  std::optional<std::uint64_t> mu;      // common count on non-edges, when constant
  std::optional<unsigned> diameter;

  friend bool operator==(const DezaCert&, const DezaCert&) = default;
};

struct DdgCert {
  Partition partition;
  std::uint32_t m = 0;  // classes
  std::uint32_t r = 0;  // class size
  std::uint64_t lambda_within = 0;
  std::uint64_t lambda_cross = 0;

  friend bool operator==(const DdgCert&, const DdgCert&) = default;
};

/// Throws NotRegular or MoreThanTwoValues.
DezaCert deza_check(const Graph& g, const PairScope& scope = PairScope::all_pairs());
/// Throws NotRegular, PartitionNotUniform or MoreThanTwoValues (the counts
/// within or across classes are not constant).
DdgCert ddg_check(const Graph& g, const Partition& partition, const PairScope& scope = PairScope::all_pairs());
/// Common-neighbour count shared by all adjacent pairs, or nullopt when it
/// varies. Throws NotRegular.
std::optional<std::uint64_t> edge_regular_lambda(const Graph& g, const PairScope& scope = PairScope::all_pairs());

/// Pairs of distinct vertices with exactly c common neighbours in g.
Graph common_count_graph(const Graph& g, std::uint64_t c);
std::vector<Word> common_count_row(const Graph& g, std::uint64_t c, Vertex x);

struct EqualBlocks {
  std::uint32_t count = 0;
  std::uint32_t size = 0;
  friend bool operator==(const EqualBlocks&, const EqualBlocks&) = default;
};

/// Complete multipartite with equal parts: the complement is a disjoint
/// union of equal cliques.
std::optional<EqualBlocks> recognize_complete_multipartite(const Graph& g);
/// Every connected component is a clique, all of the same size.
std::optional<EqualBlocks> recognize_clique_union(const Graph& g);

/// Connected components as a partition.
Partition connected_components(const Graph& g);

}  // namespace fgl
