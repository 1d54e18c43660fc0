#pragma once

// The incomparability graph on all subsets of an m-element ground set:
// X ~ Y iff neither contains the other.

#include <cutbetti/common.hpp>
#include <cutbetti/small_graph.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace cutbetti {

constexpr bool incomparable(std::uint64_t x, std::uint64_t y) {
  const std::uint64_t meet = x & y;
  return meet != x && meet != y;
}

/// (4^m - 2*3^m + 2^m) / 2, the number of unordered incomparable pairs.
inline BigInt incomparable_pair_count(unsigned m) {
  return (pow_big(4, m) - 2 * pow_big(3, m) + pow_big(2, m)) / 2;
}

class IncGraph {
 public:
  static constexpr int kMaxGroundSize = 20;
  static constexpr int kMaxMaterialized = 14;

  /// Adjacency is answered from bit operations; rows are materialised as
  /// bitsets when m <= kMaxMaterialized.
  static IncGraph build(int m, int max_m = kMaxGroundSize) {
    if (m < 0) throw InvalidInput("ground size must be nonnegative");
    if (m > max_m || m > kMaxGroundSize)
      throw SizeLimitExceeded("incomparability graph: ground size " + std::to_string(m) +
                              " exceeds the limit of " + std::to_string(std::min(max_m, kMaxGroundSize)));
    IncGraph g(m);
    if (m <= kMaxMaterialized) g.materialize();
    return g;
  }

  int ground_size() const { return m_; }
  std::uint64_t vertex_count() const { return std::uint64_t{1} << m_; }
  bool materialized() const { return !rows_.empty(); }

  bool adjacent(std::uint64_t x, std::uint64_t y) const {
    if (materialized()) {
      const auto& r = rows_[x];
      return (r[y / 64] >> (y % 64)) & 1U;
    }
    return incomparable(x, y);
  }

  /// Number of incomparable subsets; equals the weight of r_X.
  std::uint64_t degree(std::uint64_t x) const {
    const int k = std::popcount(x);
    return vertex_count() - (std::uint64_t{1} << k) - (std::uint64_t{1} << (m_ - k)) + 1;
  }

  /// Edge count by direct pair enumeration.
  std::uint64_t count_edges() const {
    std::uint64_t c = 0;
    const std::uint64_t n = vertex_count();
    for (std::uint64_t x = 0; x < n; ++x)
      for (std::uint64_t y = x + 1; y < n; ++y) c += adjacent(x, y) ? 1 : 0;
    return c;
  }

  std::vector<std::pair<std::uint64_t, std::uint64_t>> edges() const {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    const std::uint64_t n = vertex_count();
    for (std::uint64_t x = 0; x < n; ++x)
      for (std::uint64_t y = x + 1; y < n; ++y)
        if (adjacent(x, y)) out.emplace_back(x, y);
    return out;
  }

 private:
  explicit IncGraph(int m) : m_(m) {}

  void materialize() {
    const std::uint64_t n = vertex_count();
    const std::size_t words = static_cast<std::size_t>((n + 63) / 64);
    rows_.assign(static_cast<std::size_t>(n), std::vector<std::uint64_t>(words, 0));
    for (std::uint64_t x = 0; x < n; ++x)
      for (std::uint64_t y = 0; y < n; ++y)
        if (incomparable(x, y)) rows_[x][y / 64] |= std::uint64_t{1} << (y % 64);
  }

  int m_;
  std::vector<std::vector<std::uint64_t>> rows_;
};

/// Induced subgraph on the listed subsets, vertex i of the result being F[i].
inline SmallGraph induced(const IncGraph& g, std::span<const std::uint64_t> subset) {
  if (subset.size() > static_cast<std::size_t>(SmallGraph::kMaxVertices))
    throw SizeLimitExceeded("induced: at most " + std::to_string(SmallGraph::kMaxVertices) +
                            " vertices");
  const int k = static_cast<int>(subset.size());
  SmallGraph h(k);
  for (int a = 0; a < k; ++a) {
    if (subset[static_cast<std::size_t>(a)] >= g.vertex_count())
      throw InvalidInput("induced: vertex " + std::to_string(subset[static_cast<std::size_t>(a)]) +
                         " is not a subset of the ground set");
    for (int b = a + 1; b < k; ++b) {
      const auto x = subset[static_cast<std::size_t>(a)];
      const auto y = subset[static_cast<std::size_t>(b)];
      if (x == y) throw InvalidInput("induced: duplicate vertex " + std::to_string(x));
      if (g.adjacent(x, y)) h.add_edge(a, b);
    }
  }
  return h;
}

}  // namespace cutbetti
