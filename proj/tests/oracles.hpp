// Naive reference implementations used to cross-check the library.
#pragma once

#include <cstdint>
#include <map>
#include <queue>
#include <set>
#include <vector>

#include "fgl/graph.hpp"

namespace oracle {

// Shift-and-add multiplication in GF(2)[x]/(modulus).
inline std::uint32_t gf_mul(std::uint32_t a, std::uint32_t b, std::uint32_t modulus, unsigned degree) {
  std::uint32_t result = 0;
  while (b != 0) {
    if (b & 1u) result ^= a;
    b >>= 1;
    a <<= 1;
    if (a & (1u << degree)) a ^= modulus;
  }
  return result;
}

inline int degree_of(std::uint64_t p) {
  int d = -1;
  while (p != 0) {
    ++d;
    p >>= 1;
  }
  return d;
}

inline std::uint64_t poly_rem(std::uint64_t a, std::uint64_t b) {
  const int db = degree_of(b);
  for (int da = degree_of(a); da >= db; da = degree_of(a)) a ^= b << (da - db);
  return a;
}

inline bool irreducible(std::uint32_t p) {
  const int d = degree_of(p);
  if (d < 1) return false;
  for (std::uint64_t f = 2; degree_of(f) <= d / 2; ++f)
    if (poly_rem(p, f) == 0) return false;
  return true;
}

using Adjacency = std::vector<std::vector<bool>>;

inline Adjacency adjacency(const fgl::Graph& g) {
  Adjacency a(g.order(), std::vector<bool>(g.order(), false));
  for (fgl::Vertex x = 0; x < g.order(); ++x)
    for (fgl::Vertex y = 0; y < g.order(); ++y) a[x][y] = g.adjacent(x, y);
  return a;
}

// All-pairs distances by a plain queue BFS; -1 when unreachable.
inline std::vector<std::vector<int>> distances(const Adjacency& a) {
  const std::size_t n = a.size();
  std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
  for (std::size_t s = 0; s < n; ++s) {
    std::queue<std::size_t> queue;
    dist[s][s] = 0;
    queue.push(s);
    while (!queue.empty()) {
      const std::size_t x = queue.front();
      queue.pop();
      for (std::size_t y = 0; y < n; ++y) {
        if (a[x][y] && dist[s][y] < 0) {
          dist[s][y] = dist[s][x] + 1;
          queue.push(y);
        }
      }
    }
  }
  return dist;
}

inline std::uint64_t common(const Adjacency& a, std::size_t x, std::size_t y) {
  std::uint64_t c = 0;
  for (std::size_t z = 0; z < a.size(); ++z) c += a[x][z] && a[y][z];
  return c;
}

// Distinct common-neighbour counts over unordered pairs of distinct vertices.
inline std::map<std::uint64_t, std::uint64_t> spectrum(const Adjacency& a) {
  std::map<std::uint64_t, std::uint64_t> out;
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t y = x + 1; y < a.size(); ++y) ++out[common(a, x, y)];
  return out;
}

// For every t, the set of values |{z : d(x,z) = i, d(z,y) = j}| over pairs
// with d(x,y) = t.
inline std::map<int, std::set<std::uint64_t>> p_census(const std::vector<std::vector<int>>& dist, int i, int j) {
  std::map<int, std::set<std::uint64_t>> out;
  const std::size_t n = dist.size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      std::uint64_t count = 0;
      for (std::size_t z = 0; z < n; ++z) count += dist[x][z] == i && dist[z][y] == j;
      out[dist[x][y]].insert(count);
    }
  }
  return out;
}

// b_i and c_i read off every pair; each set must be a singleton for a
// distance-regular graph.
struct ArrayCensus {
  std::map<int, std::set<std::uint64_t>> b, c;
};

inline ArrayCensus array_census(const Adjacency& a) {
  const auto dist = distances(a);
  ArrayCensus out;
  const std::size_t n = a.size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const int d = dist[x][y];
      std::uint64_t up = 0, down = 0;
      for (std::size_t z = 0; z < n; ++z) {
        if (!a[y][z]) continue;
        if (dist[x][z] == d + 1) ++up;
        if (dist[x][z] == d - 1) ++down;
      }
      out.b[d].insert(up);
      if (d > 0) out.c[d].insert(down);
    }
  }
  return out;
}

}  // namespace oracle
