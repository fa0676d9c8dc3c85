#include "fgl/graph_analysis.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "fgl/error.hpp"
#include "fgl/parallel.hpp"

namespace fgl {

namespace {

std::string pair_text(Vertex x, Vertex y) { return "(" + std::to_string(x) + ", " + std::to_string(y) + ")"; }

bool any_common(std::span<const Word> a, std::span<const Word> b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if ((a[i] & b[i]) != 0) return true;
  return false;
}

void require_regular(const Graph& g) {
  if (g.order() == 0) return;
  const std::size_t k = g.degree(0);
  for (Vertex x = 1; x < g.order(); ++x) {
    if (g.degree(x) != k) {
      throw Error(Errc::NotRegular, "vertex 0 has degree " + std::to_string(k) + " but vertex " + std::to_string(x) +
                                        " has degree " + std::to_string(g.degree(x)));
    }
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Scope

PairScope PairScope::transitive(const Graph& g, std::span<const std::vector<Vertex>> automorphisms, Vertex base) {
  const Vertex v = g.order();
  if (base >= v) throw Error(Errc::NotVertexTransitive, "base vertex out of range");
  for (const auto& perm : automorphisms) {
    if (perm.size() != v) throw Error(Errc::NotVertexTransitive, "permutation has the wrong length");
    std::vector<bool> hit(v, false);
    for (Vertex y : perm) {
      if (y >= v || hit[y]) throw Error(Errc::NotVertexTransitive, "map is not a permutation");
      hit[y] = true;
    }
  }
  if (!are_automorphisms(g, automorphisms)) {
    throw Error(Errc::NotVertexTransitive, "a permutation does not preserve the edge set");
  }
  std::vector<bool> seen(v, false);
  std::vector<Vertex> queue{base};
  seen[base] = true;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const auto& perm : automorphisms) {
      const Vertex y = perm[queue[i]];
      if (!seen[y]) {
        seen[y] = true;
        queue.push_back(y);
      }
    }
  }
  if (queue.size() != v) {
    throw Error(Errc::NotVertexTransitive, "orbit of the base has " + std::to_string(queue.size()) + " of " +
                                               std::to_string(v) + " vertices");
  }
  PairScope scope;
  scope.base_ = base;
  return scope;
}

std::vector<Vertex> PairScope::sources(Vertex order) const {
  if (base_) return {*base_};
  std::vector<Vertex> out(order);
  std::iota(out.begin(), out.end(), Vertex{0});
  return out;
}

bool are_automorphisms(const Graph& g, std::span<const std::vector<Vertex>> perms) {
  for (const auto& perm : perms) {
    for (Vertex x = 0; x < g.order(); ++x) {
      bool ok = true;
      const Vertex px = perm[x];
      for_each_bit(g.row(x), [&](Vertex y) {
        if (ok && !g.adjacent(px, perm[y])) ok = false;
      });
      if (!ok) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Distances

std::vector<std::vector<Word>> distance_layers(const Graph& g, Vertex source) {
  const Vertex v = g.order();
  const std::size_t words = g.words_per_row();
  std::vector<Word> visited(words, 0);
  std::vector<Word> frontier(words, 0);
  set_bit(visited, source);
  set_bit(frontier, source);
  std::size_t frontier_size = 1;
  std::size_t reached = 1;

  std::vector<std::vector<Word>> layers;
  layers.push_back(frontier);
  std::vector<Word> next(words);
  while (frontier_size > 0 && reached < v) {
    std::fill(next.begin(), next.end(), 0);
    if (frontier_size <= v - reached) {
      for_each_bit(frontier, [&](Vertex u) {
        auto r = g.row(u);
        for (std::size_t w = 0; w < words; ++w) next[w] |= r[w];
      });
      for (std::size_t w = 0; w < words; ++w) next[w] &= ~visited[w];
    } else {
      for (Vertex y = 0; y < v; ++y) {
        if (!test_bit(visited, y) && any_common(g.row(y), frontier)) set_bit(next, y);
      }
    }
    frontier_size = popcount(next);
    if (frontier_size == 0) break;
    reached += frontier_size;
    for (std::size_t w = 0; w < words; ++w) visited[w] |= next[w];
    frontier.swap(next);
    layers.push_back(frontier);
  }
  return layers;
}

std::vector<int> distances_from(const Graph& g, Vertex source) {
  std::vector<int> dist(g.order(), -1);
  const auto layers = distance_layers(g, source);
  for (std::size_t i = 0; i < layers.size(); ++i) {
    for_each_bit(layers[i], [&](Vertex y) { dist[y] = static_cast<int>(i); });
  }
  return dist;
}

namespace {

std::size_t reached_count(const std::vector<std::vector<Word>>& layers) {
  std::size_t n = 0;
  for (const auto& layer : layers) n += popcount(layer);
  return n;
}

}  // namespace

std::optional<unsigned> diameter(const Graph& g) {
  const Vertex v = g.order();
  if (v == 0) return std::nullopt;
  std::vector<unsigned> ecc(v, 0);
  std::vector<char> connected(v, 1);
  parallel_for(v, [&](std::size_t x, unsigned) {
    const auto layers = distance_layers(g, static_cast<Vertex>(x));
    ecc[x] = static_cast<unsigned>(layers.size() - 1);
    connected[x] = reached_count(layers) == v;
  });
  if (std::find(connected.begin(), connected.end(), 0) != connected.end()) return std::nullopt;
  return *std::max_element(ecc.begin(), ecc.end());
}

// ---------------------------------------------------------------------------
// Intersection arrays

IntersectionArray IntersectionArray::from_bc(std::vector<std::uint64_t> b, std::vector<std::uint64_t> c) {
  IntersectionArray ia;
  ia.d = static_cast<unsigned>(b.size());
  ia.b = std::move(b);
  ia.c = std::move(c);
  const std::uint64_t k = ia.b.empty() ? 0 : ia.b[0];
  for (unsigned i = 0; i <= ia.d; ++i) {
    const std::uint64_t bi = i < ia.d ? ia.b[i] : 0;
    const std::uint64_t ci = i == 0 ? 0 : ia.c[i - 1];
    ia.a.push_back(k - bi - ci);
  }
  return ia;
}

std::string IntersectionArray::to_string() const {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < b.size(); ++i) out << (i ? "," : "") << b[i];
  out << ';';
  for (std::size_t i = 0; i < c.size(); ++i) out << (i ? "," : "") << c[i];
  out << '}';
  return out.str();
}

namespace {

struct Triple {
  std::uint64_t c = 0, a = 0, b = 0;
  friend bool operator==(const Triple&, const Triple&) = default;
};

std::string triple_text(const Triple& t) {
  return "(c,a,b) = (" + std::to_string(t.c) + "," + std::to_string(t.a) + "," + std::to_string(t.b) + ")";
}

struct SourceSummary {
  bool connected = true;
  std::vector<Triple> triples;       // per distance
  std::vector<Vertex> representative;  // first vertex seen at each distance
  std::optional<std::pair<Vertex, unsigned>> internal_mismatch;  // (y, distance)
  Triple mismatch_value;
};

SourceSummary summarize_source(const Graph& g, Vertex x) {
  SourceSummary s;
  const auto layers = distance_layers(g, x);
  if (reached_count(layers) != g.order()) {
    s.connected = false;
    return s;
  }
  const std::size_t d = layers.size() - 1;
  s.triples.resize(d + 1);
  s.representative.resize(d + 1);
  for (std::size_t i = 0; i <= d; ++i) {
    bool first = true;
    for_each_bit(layers[i], [&](Vertex y) {
      if (s.internal_mismatch) return;
      const auto r = g.row(y);
      Triple t;
      t.c = i == 0 ? 0 : popcount_and(r, layers[i - 1]);
      t.a = popcount_and(r, layers[i]);
      t.b = i == d ? 0 : popcount_and(r, layers[i + 1]);
      if (first) {
        s.triples[i] = t;
        s.representative[i] = y;
        first = false;
      } else if (!(t == s.triples[i])) {
        s.internal_mismatch = std::make_pair(y, static_cast<unsigned>(i));
        s.mismatch_value = t;
      }
    });
  }
  return s;
}

}  // namespace

IntersectionArray intersection_array(const Graph& g, const PairScope& scope) {
  const Vertex v = g.order();
  if (v == 0) throw Error(Errc::Disconnected, "empty graph");
  const auto sources = scope.sources(v);
  std::vector<SourceSummary> summaries(sources.size());
  parallel_for(sources.size(), [&](std::size_t i, unsigned) { summaries[i] = summarize_source(g, sources[i]); });

  const SourceSummary* reference = nullptr;
  Vertex reference_source = 0;
  for (std::size_t i = 0; i < sources.size(); ++i) {
    const auto& s = summaries[i];
    const Vertex x = sources[i];
    if (!s.connected) throw Error(Errc::Disconnected, "vertex " + std::to_string(x) + " does not reach every vertex");
    if (s.internal_mismatch) {
      const auto [y, dist] = *s.internal_mismatch;
      throw Error(Errc::NotDistanceRegular,
                  "pairs " + pair_text(x, s.representative[dist]) + " and " + pair_text(x, y) + " at distance " +
                      std::to_string(dist) + " have " + triple_text(s.triples[dist]) + " vs " +
                      triple_text(s.mismatch_value));
    }
    if (reference == nullptr) {
      reference = &s;
      reference_source = x;
      continue;
    }
    const std::size_t common = std::min(s.triples.size(), reference->triples.size());
    for (std::size_t dist = 0; dist < std::max(s.triples.size(), reference->triples.size()); ++dist) {
      if (dist < common && s.triples[dist] == reference->triples[dist]) continue;
      if (dist >= common) {
        throw Error(Errc::NotDistanceRegular, "vertices " + std::to_string(reference_source) + " and " +
                                                  std::to_string(x) + " have different eccentricities");
      }
      throw Error(Errc::NotDistanceRegular,
                  "pairs " + pair_text(reference_source, reference->representative[dist]) + " and " +
                      pair_text(x, s.representative[dist]) + " at distance " + std::to_string(dist) + " have " +
                      triple_text(reference->triples[dist]) + " vs " + triple_text(s.triples[dist]));
    }
  }

  const auto& t = reference->triples;
  const unsigned d = static_cast<unsigned>(t.size() - 1);
  IntersectionArray ia;
  ia.d = d;
  for (unsigned i = 0; i < d; ++i) ia.b.push_back(t[i].b);
  for (unsigned i = 1; i <= d; ++i) ia.c.push_back(t[i].c);
  for (unsigned i = 0; i <= d; ++i) ia.a.push_back(t[i].a);
  return ia;
}

std::map<unsigned, std::uint64_t> intersection_numbers(const Graph& g, unsigned i, unsigned j, const PairScope& scope) {
  const Vertex v = g.order();
  // Row y of `layer_j` is the set of vertices at distance j from y.
  Graph layer_j(v);
  parallel_for(v, [&](std::size_t y, unsigned) {
    const auto layers = distance_layers(g, static_cast<Vertex>(y));
    if (reached_count(layers) != v) throw Error(Errc::Disconnected, "graph is disconnected");
    if (j < layers.size()) std::copy(layers[j].begin(), layers[j].end(), layer_j.row(static_cast<Vertex>(y)).begin());
  });

  const auto sources = scope.sources(v);
  struct Seen {
    std::uint64_t value;
    Vertex x, y;
  };
  std::vector<std::map<unsigned, Seen>> per_source(sources.size());
  std::vector<std::string> failures(sources.size());
  parallel_for(sources.size(), [&](std::size_t s, unsigned) {
    const Vertex x = sources[s];
    const auto layers = distance_layers(g, x);
    const std::vector<Word> empty(g.words_per_row(), 0);
    const auto& li = i < layers.size() ? layers[i] : empty;
    for (std::size_t t = 0; t < layers.size() && failures[s].empty(); ++t) {
      for_each_bit(layers[t], [&](Vertex y) {
        if (!failures[s].empty()) return;
        const std::uint64_t p = popcount_and(li, layer_j.row(y));
        auto [it, inserted] = per_source[s].try_emplace(static_cast<unsigned>(t), Seen{p, x, y});
        if (!inserted && it->second.value != p) {
          failures[s] = "p^" + std::to_string(t) + "_" + std::to_string(i) + std::to_string(j) + " is " +
                        std::to_string(it->second.value) + " at " + pair_text(x, it->second.y) + " but " +
                        std::to_string(p) + " at " + pair_text(x, y);
        }
      });
    }
  });

  std::map<unsigned, Seen> merged;
  for (std::size_t s = 0; s < sources.size(); ++s) {
    if (!failures[s].empty()) throw Error(Errc::NotDistanceRegular, failures[s]);
    for (const auto& [t, seen] : per_source[s]) {
      auto [it, inserted] = merged.try_emplace(t, seen);
      if (!inserted && it->second.value != seen.value) {
        throw Error(Errc::NotDistanceRegular, "p^" + std::to_string(t) + "_" + std::to_string(i) + std::to_string(j) +
                                                  " differs between " + pair_text(it->second.x, it->second.y) +
                                                  " and " + pair_text(seen.x, seen.y));
      }
    }
  }
  std::map<unsigned, std::uint64_t> out;
  for (const auto& [t, seen] : merged) out[t] = seen.value;
  return out;
}

// ---------------------------------------------------------------------------
// Antipodality and distance powers

Partition antipodal_classes(const Graph& g) {
  const Vertex v = g.order();
  const auto d = diameter(g);
  if (!d) throw Error(Errc::Disconnected, "antipodality needs a connected graph");
  Graph antipodes(v);
  parallel_for(v, [&](std::size_t x, unsigned) {
    const auto layers = distance_layers(g, static_cast<Vertex>(x));
    auto row = antipodes.row(static_cast<Vertex>(x));
    if (*d < layers.size()) std::copy(layers[*d].begin(), layers[*d].end(), row.begin());
    set_bit(row, x);
  });
  return antipodal_partition(antipodes, *d);
}

Partition antipodal_partition(const Graph& antipodes, unsigned d) {
  const Vertex v = antipodes.order();
  for (Vertex x = 0; x < v; ++x) {
    const auto mine = antipodes.row(x);
    std::string failure;
    for_each_bit(mine, [&](Vertex y) {
      if (!failure.empty() || y == x) return;
      const auto theirs = antipodes.row(y);
      if (std::equal(mine.begin(), mine.end(), theirs.begin())) return;
      for (Vertex z = 0; z < v; ++z) {
        if (test_bit(mine, z) == test_bit(theirs, z)) continue;
        // z is an antipode of exactly one of x, y.
        const Vertex a = test_bit(theirs, z) ? x : y;
        const Vertex b = a == x ? y : x;
        failure = "vertices " + std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(z) +
                  ": d(" + std::to_string(a) + "," + std::to_string(b) + ") and d(" + std::to_string(b) + "," +
                  std::to_string(z) + ") are 0 or " + std::to_string(d) + " but d(" + std::to_string(a) + "," +
                  std::to_string(z) + ") is not";
        return;
      }
    });
    if (!failure.empty()) throw Error(Errc::NotAntipodal, failure);
  }
  std::vector<std::uint32_t> label(v, ~std::uint32_t{0});
  std::uint32_t next = 0;
  for (Vertex x = 0; x < v; ++x) {
    if (label[x] != ~std::uint32_t{0}) continue;
    for_each_bit(antipodes.row(x), [&](Vertex y) { label[y] = next; });
    ++next;
  }
  return Partition::from_labels(label);
}

bool preserves_partition(const Partition& p, std::span<const std::vector<Vertex>> perms) {
  for (const auto& perm : perms) {
    if (perm.size() != p.label.size()) return false;
    std::vector<std::uint32_t> image(p.count, ~std::uint32_t{0});
    for (Vertex x = 0; x < perm.size(); ++x) {
      auto& slot = image[p.label[x]];
      if (slot == ~std::uint32_t{0}) slot = p.label[perm[x]];
      else if (slot != p.label[perm[x]]) return false;
    }
  }
  return true;
}

Graph distance_power(const Graph& g, std::span<const unsigned> distances) {
  const Vertex v = g.order();
  const auto d = diameter(g);
  if (!d) throw Error(Errc::Disconnected, "distance powers need a connected graph");
  for (unsigned i : distances) {
    if (i == 0 || i > *d) {
      throw Error(Errc::InvalidDistanceSet, "distance " + std::to_string(i) + " outside 1.." + std::to_string(*d));
    }
  }
  Graph out(v);
  parallel_for(v, [&](std::size_t x, unsigned) {
    const auto layers = distance_layers(g, static_cast<Vertex>(x));
    auto row = out.row(static_cast<Vertex>(x));
    for (unsigned i : distances) {
      if (i >= layers.size()) continue;
      for (std::size_t w = 0; w < row.size(); ++w) row[w] |= layers[i][w];
    }
  });
  return out;
}

// ---------------------------------------------------------------------------
// Common-neighbour certificates

namespace {

// Common-neighbour counts over the pairs in scope, split by adjacency and by
// whether the pair lies inside one partition class.
struct PairCensus {
  std::map<std::uint64_t, std::uint64_t> counts[2][2];  // [adjacent][same class]
  bool full = true;                                      // all pairs, else pairs (base, y)
};

PairCensus pair_census(const Graph& g, const PairScope& scope, const Partition* partition) {
  const Vertex v = g.order();
  const unsigned workers = thread_count();
  std::vector<PairCensus> local(workers);
  auto scan = [&](Vertex x, Vertex from, PairCensus& into) {
    const auto rx = g.row(x);
    for (Vertex y = from; y < v; ++y) {
      if (y == x) continue;
      const std::uint64_t c = popcount_and(rx, g.row(y));
      const bool same = partition != nullptr && partition->label[x] == partition->label[y];
      ++into.counts[g.adjacent(x, y)][same][c];
    }
  };
  if (scope.is_all_pairs()) {
    parallel_for(v, [&](std::size_t x, unsigned w) { scan(static_cast<Vertex>(x), static_cast<Vertex>(x) + 1, local[w]); });
  } else {
    scan(scope.base(), 0, local[0]);
  }
  PairCensus out;
  out.full = scope.is_all_pairs();
  for (const auto& part : local)
    for (int a = 0; a < 2; ++a)
      for (int s = 0; s < 2; ++s)
        for (const auto& [c, n] : part.counts[a][s]) out.counts[a][s][c] += n;
  return out;
}

std::set<std::uint64_t> values_of(std::initializer_list<const std::map<std::uint64_t, std::uint64_t>*> maps) {
  std::set<std::uint64_t> out;
  for (const auto* m : maps)
    for (const auto& [c, n] : *m) out.insert(c);
  return out;
}

std::string values_text(const std::set<std::uint64_t>& values) {
  std::string out = "{";
  for (auto c : values) out += (out.size() > 1 ? "," : "") + std::to_string(c);
  return out + "}";
}

}  // namespace

std::map<std::uint64_t, std::uint64_t> common_neighbor_spectrum(const Graph& g, const PairScope& scope) {
  const auto census = pair_census(g, scope, nullptr);
  std::map<std::uint64_t, std::uint64_t> out;
  for (int a = 0; a < 2; ++a)
    for (const auto& [c, n] : census.counts[a][0]) out[c] += n;
  if (!census.full) {
    // Every vertex sees the same row profile; each pair is counted from both ends.
    for (auto& [c, n] : out) n = n * g.order() / 2;
  }
  return out;
}

DezaCert deza_check(const Graph& g, const PairScope& scope) {
  require_regular(g);
  const auto census = pair_census(g, scope, nullptr);
  const auto& on_edges = census.counts[1][0];
  const auto& off_edges = census.counts[0][0];
  const auto values = values_of({&on_edges, &off_edges});
  if (values.size() > 2) {
    throw Error(Errc::MoreThanTwoValues, "common-neighbour counts take values " + values_text(values));
  }
  DezaCert cert;
  cert.v = g.order();
  cert.k = g.order() == 0 ? 0 : g.degree(0);
  if (!values.empty()) {
    cert.a = *values.begin();
    cert.b = *values.rbegin();
  }
  if (on_edges.size() == 1) cert.lambda = on_edges.begin()->first;
  if (off_edges.size() == 1) cert.mu = off_edges.begin()->first;
  if (scope.is_all_pairs()) {
    cert.diameter = diameter(g);
  } else {
    const auto layers = distance_layers(g, scope.base());
    if (reached_count(layers) == g.order()) cert.diameter = static_cast<unsigned>(layers.size() - 1);
  }
  cert.is_edge_regular = cert.lambda.has_value();
  cert.is_strongly_regular = cert.lambda.has_value() && cert.mu.has_value();
  cert.is_strict = cert.diameter == 2u && cert.a != cert.b;
  return cert;
}

DdgCert ddg_check(const Graph& g, const Partition& partition, const PairScope& scope) {
  require_regular(g);
  if (partition.label.size() != g.order()) {
    throw Error(Errc::PartitionNotUniform, "partition covers " + std::to_string(partition.label.size()) + " of " +
                                               std::to_string(g.order()) + " vertices");
  }
  const std::uint32_t r = partition.uniform_size();
  if (r == 0) throw Error(Errc::PartitionNotUniform, "partition classes differ in size");
  const auto census = pair_census(g, scope, &partition);
  const auto within = values_of({&census.counts[0][1], &census.counts[1][1]});
  const auto cross = values_of({&census.counts[0][0], &census.counts[1][0]});
  if (within.size() > 1) {
    throw Error(Errc::MoreThanTwoValues, "pairs inside a class have counts " + values_text(within));
  }
  if (cross.size() > 1) {
    throw Error(Errc::MoreThanTwoValues, "pairs across classes have counts " + values_text(cross));
  }
  DdgCert cert;
  cert.partition = partition;
  cert.m = partition.count;
  cert.r = r;
  cert.lambda_within = within.empty() ? 0 : *within.begin();
  cert.lambda_cross = cross.empty() ? 0 : *cross.begin();
  return cert;
}

std::optional<std::uint64_t> edge_regular_lambda(const Graph& g, const PairScope& scope) {
  require_regular(g);
  const auto census = pair_census(g, scope, nullptr);
  if (census.counts[1][0].size() != 1) return std::nullopt;
  return census.counts[1][0].begin()->first;
}

std::vector<Word> common_count_row(const Graph& g, std::uint64_t c, Vertex x) {
  std::vector<Word> row(g.words_per_row(), 0);
  const auto rx = g.row(x);
  for (Vertex y = 0; y < g.order(); ++y) {
    if (y != x && popcount_and(rx, g.row(y)) == c) set_bit(row, y);
  }
  return row;
}

Graph common_count_graph(const Graph& g, std::uint64_t c) {
  const Vertex v = g.order();
  Graph out(v);
  parallel_for(v, [&](std::size_t x, unsigned) {
    const auto rx = g.row(static_cast<Vertex>(x));
    for (Vertex y = static_cast<Vertex>(x) + 1; y < v; ++y) {
      if (popcount_and(rx, g.row(y)) == c) out.add_arc(static_cast<Vertex>(x), y);
    }
  });
  out.symmetrize_from_upper();
  return out;
}

// ---------------------------------------------------------------------------
// Recognizers

Partition connected_components(const Graph& g) {
  const Vertex v = g.order();
  std::vector<std::uint32_t> label(v, ~std::uint32_t{0});
  std::uint32_t next = 0;
  for (Vertex x = 0; x < v; ++x) {
    if (label[x] != ~std::uint32_t{0}) continue;
    for (const auto& layer : distance_layers(g, x)) for_each_bit(layer, [&](Vertex y) { label[y] = next; });
    ++next;
  }
  return Partition::from_labels(label);
}

std::optional<EqualBlocks> recognize_clique_union(const Graph& g) {
  if (g.order() == 0) return std::nullopt;
  const Partition comps = connected_components(g);
  const std::uint32_t size = comps.uniform_size();
  if (size == 0) return std::nullopt;
  for (Vertex x = 0; x < g.order(); ++x) {
    if (g.degree(x) != size - 1) return std::nullopt;
  }
  return EqualBlocks{comps.count, size};
}

std::optional<EqualBlocks> recognize_complete_multipartite(const Graph& g) {
  return recognize_clique_union(g.complement());
}

}  // namespace fgl
