#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace fgl {

using Vertex = std::uint32_t;
using Word = std::uint64_t;

inline std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

inline std::size_t popcount_and(std::span<const Word> a, std::span<const Word> b) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < a.size(); ++i) total += std::popcount(a[i] & b[i]);
  return total;
}

inline std::size_t popcount(std::span<const Word> a) {
  std::size_t total = 0;
  for (Word w : a) total += std::popcount(w);
  return total;
}

inline bool test_bit(std::span<const Word> row, std::size_t i) { return (row[i >> 6] >> (i & 63)) & 1u; }
inline void set_bit(std::span<Word> row, std::size_t i) { row[i >> 6] |= Word{1} << (i & 63); }

/// Calls fn(index) for every set bit, in increasing order.
template <class Fn>
void for_each_bit(std::span<const Word> row, Fn&& fn) {
  for (std::size_t w = 0; w < row.size(); ++w) {
    Word bits = row[w];
    while (bits != 0) {
      fn(static_cast<Vertex>(w * 64 + std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
}

/// Simple undirected graph as v rows of v-bit vectors. Callers keep the
/// adjacency symmetric and loop-free; is_simple() checks it.
class Graph {
 public:
  Graph() = default;
  explicit Graph(Vertex v) : v_(v), words_(words_for(v)), bits_(static_cast<std::size_t>(v) * words_, 0) {}

  Vertex order() const noexcept { return v_; }
  std::size_t words_per_row() const noexcept { return words_; }

  std::span<const Word> row(Vertex x) const noexcept {
    return {bits_.data() + static_cast<std::size_t>(x) * words_, words_};
  }
  std::span<Word> row(Vertex x) noexcept { return {bits_.data() + static_cast<std::size_t>(x) * words_, words_}; }

  bool adjacent(Vertex x, Vertex y) const noexcept { return test_bit(row(x), y); }
  void add_edge(Vertex x, Vertex y) noexcept {
    set_bit(row(x), y);
    set_bit(row(y), x);
  }
  /// Sets only row x; pair with symmetrize_from_upper().
  void add_arc(Vertex x, Vertex y) noexcept { set_bit(row(x), y); }

  std::size_t degree(Vertex x) const noexcept { return popcount(row(x)); }
  std::uint64_t edge_count() const noexcept;
  std::vector<Vertex> neighbors(Vertex x) const;
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  /// Mirrors every arc x->y with x < y into row y.
  void symmetrize_from_upper();
  bool is_simple() const noexcept;
  Graph complement() const;
  /// Edge set union; both graphs must have the same order.
  Graph united_with(const Graph& other) const;

  friend bool operator==(const Graph& a, const Graph& b) noexcept { return a.v_ == b.v_ && a.bits_ == b.bits_; }

 private:
  Vertex v_ = 0;
  std::size_t words_ = 0;
  std::vector<Word> bits_;
};

/// Vertex partition by class label; labels are 0..count-1 in order of first
/// appearance.
struct Partition {
  std::vector<std::uint32_t> label;
  std::uint32_t count = 0;

  /// Relabels arbitrary labels into first-appearance order.
  static Partition from_labels(std::span<const std::uint32_t> labels);
  std::vector<std::uint32_t> class_sizes() const;
  /// Common class size, or 0 when sizes differ.
  std::uint32_t uniform_size() const;
  std::vector<std::vector<Vertex>> classes() const;

  friend bool operator==(const Partition&, const Partition&) = default;
};

/// Complete graph, cycle and the Petersen graph; used by tests and examples.
Graph complete_graph(Vertex n);
Graph cycle_graph(Vertex n);
Graph petersen_graph();

}  // namespace fgl
