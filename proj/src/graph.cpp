#include "fgl/graph.hpp"

#include <unordered_map>

namespace fgl {

std::uint64_t Graph::edge_count() const noexcept {
  std::uint64_t twice = 0;
  for (Vertex x = 0; x < v_; ++x) twice += degree(x);
  return twice / 2;
}

std::vector<Vertex> Graph::neighbors(Vertex x) const {
  std::vector<Vertex> out;
  for_each_bit(row(x), [&](Vertex y) { out.push_back(y); });
  return out;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(edge_count());
  for (Vertex x = 0; x < v_; ++x) {
    for_each_bit(row(x), [&](Vertex y) {
      if (x < y) out.emplace_back(x, y);
    });
  }
  return out;
}

void Graph::symmetrize_from_upper() {
  for (Vertex x = 0; x < v_; ++x) {
    for_each_bit(row(x), [&](Vertex y) {
      if (x < y) set_bit(row(y), x);
    });
  }
}

bool Graph::is_simple() const noexcept {
  for (Vertex x = 0; x < v_; ++x) {
    if (adjacent(x, x)) return false;
    bool symmetric = true;
    for_each_bit(row(x), [&](Vertex y) {
      if (!adjacent(y, x)) symmetric = false;
    });
    if (!symmetric) return false;
  }
  return true;
}

Graph Graph::complement() const {
  Graph out(v_);
  const std::size_t tail = v_ % 64;
  const Word last_mask = tail == 0 ? ~Word{0} : (Word{1} << tail) - 1;
  for (Vertex x = 0; x < v_; ++x) {
    auto src = row(x);
    auto dst = out.row(x);
    for (std::size_t w = 0; w < words_; ++w) dst[w] = ~src[w];
    if (words_ > 0) dst[words_ - 1] &= last_mask;
    dst[x >> 6] &= ~(Word{1} << (x & 63));
  }
  return out;
}

Graph Graph::united_with(const Graph& other) const {
  Graph out = *this;
  for (std::size_t i = 0; i < bits_.size(); ++i) out.bits_[i] |= other.bits_[i];
  return out;
}

Graph complete_graph(Vertex n) {
  Graph g(n);
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = x + 1; y < n; ++y) g.add_edge(x, y);
  return g;
}

Graph cycle_graph(Vertex n) {
  Graph g(n);
  for (Vertex x = 0; x < n; ++x) g.add_edge(x, (x + 1) % n);
  return g;
}

Graph petersen_graph() {
  Graph g(10);
  for (Vertex i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);          // outer pentagon
    g.add_edge(i, i + 5);                // spokes
    g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  return g;
}

Partition Partition::from_labels(std::span<const std::uint32_t> labels) {
  Partition p;
  p.label.resize(labels.size());
  std::unordered_map<std::uint32_t, std::uint32_t> canonical;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto [it, inserted] = canonical.try_emplace(labels[i], p.count);
    if (inserted) ++p.count;
    p.label[i] = it->second;
  }
  return p;
}

std::vector<std::uint32_t> Partition::class_sizes() const {
  std::vector<std::uint32_t> sizes(count, 0);
  for (auto l : label) ++sizes[l];
  return sizes;
}

std::uint32_t Partition::uniform_size() const {
  const auto sizes = class_sizes();
  if (sizes.empty()) return 0;
  for (auto s : sizes)
    if (s != sizes.front()) return 0;
  return sizes.front();
}

std::vector<std::vector<Vertex>> Partition::classes() const {
  std::vector<std::vector<Vertex>> out(count);
  for (Vertex x = 0; x < label.size(); ++x) out[label[x]].push_back(x);
  return out;
}

}  // namespace fgl
