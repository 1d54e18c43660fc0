#pragma once

// Trees, their cuts, and the bijection between cuts of a tree and subsets of
// its edge set.

#include <cutbetti/common.hpp>

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <istream>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace cutbetti {

/// A subset of the edges of a tree on `width` edges, bit i <=> edge i.
class EdgeSubset {
 public:
  static constexpr int kMaxWidth = 63;

  constexpr EdgeSubset() = default;
  EdgeSubset(std::uint64_t bits, int width) : bits_(bits), width_(width) {
    if (width < 0 || width > kMaxWidth)
      throw InvalidInput("edge subset width out of range: " + std::to_string(width));
    if ((bits & ~full_mask(width)) != 0)
      throw InvalidInput("edge subset has bits above its width");
  }

  static constexpr std::uint64_t full_mask(int width) {
    return width >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
  }
  static EdgeSubset empty(int width) { return {0, width}; }
  static EdgeSubset full(int width) { return {full_mask(width), width}; }

  /// Parses a binary string with the character for edge 0 first.
  static EdgeSubset parse(const std::string& s) {
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '1')
        bits |= std::uint64_t{1} << i;
      else if (s[i] != '0')
        throw InvalidInput("edge subset string must contain only 0/1: '" + s + "'");
    }
    return {bits, static_cast<int>(s.size())};
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int width() const { return width_; }
  int size() const { return std::popcount(bits_); }
  bool contains(int edge) const { return (bits_ >> edge) & 1U; }

  bool is_subset_of(const EdgeSubset& o) const { return (bits_ & o.bits_) == bits_; }
  bool comparable(const EdgeSubset& o) const {
    return is_subset_of(o) || o.is_subset_of(*this);
  }

  EdgeSubset operator|(const EdgeSubset& o) const { return {bits_ | o.bits_, width_}; }
  EdgeSubset operator&(const EdgeSubset& o) const { return {bits_ & o.bits_, width_}; }
  EdgeSubset complement() const { return {~bits_ & full_mask(width_), width_}; }

  /// Binary string, least significant bit (edge 0) first.
  std::string to_string() const {
    std::string s(static_cast<std::size_t>(width_), '0');
    for (int i = 0; i < width_; ++i)
      if (contains(i)) s[static_cast<std::size_t>(i)] = '1';
    return s;
  }

  friend constexpr bool operator==(const EdgeSubset&, const EdgeSubset&) = default;
  friend constexpr std::strong_ordering operator<=>(const EdgeSubset& a, const EdgeSubset& b) {
    if (auto c = a.width_ <=> b.width_; c != 0) return c;
    return a.bits_ <=> b.bits_;
  }

 private:
  std::uint64_t bits_ = 0;
  int width_ = 0;
};

/// An unordered two-block partition of the vertices, stored with the block
/// containing vertex 0 as A (side == false).
class VertexPartition {
 public:
  VertexPartition() = default;
  explicit VertexPartition(std::vector<bool> side) : side_(std::move(side)) {
    if (!side_.empty() && side_[0]) side_.flip();
  }

  /// Builds the partition whose block B is `part_b`.
  static VertexPartition from_block(int vertex_count, const std::vector<int>& part_b) {
    std::vector<bool> side(static_cast<std::size_t>(vertex_count), false);
    for (int v : part_b) {
      if (v < 0 || v >= vertex_count)
        throw InvalidInput("partition vertex out of range: " + std::to_string(v));
      side[static_cast<std::size_t>(v)] = true;
    }
    return VertexPartition(std::move(side));
  }

  int vertex_count() const { return static_cast<int>(side_.size()); }
  bool in_b(int v) const { return side_[static_cast<std::size_t>(v)]; }
  const std::vector<bool>& sides() const { return side_; }

  std::vector<int> block_a() const { return block(false); }
  std::vector<int> block_b() const { return block(true); }

  friend bool operator==(const VertexPartition&, const VertexPartition&) = default;

 private:
  std::vector<int> block(bool which) const {
    std::vector<int> out;
    for (std::size_t v = 0; v < side_.size(); ++v)
      if (side_[v] == which) out.push_back(static_cast<int>(v));
    return out;
  }

  std::vector<bool> side_;
};

/// A tree with vertices 0..n-1 and edges indexed by input order.
class Tree {
 public:
  using Edge = std::pair<int, int>;

  Tree(int vertex_count, std::vector<Edge> edges)
      : vertex_count_(vertex_count), edges_(std::move(edges)) {
    validate();
  }

  static Tree path(int vertex_count) {
    std::vector<Edge> e;
    for (int v = 0; v + 1 < vertex_count; ++v) e.emplace_back(v, v + 1);
    return {vertex_count, std::move(e)};
  }

  static Tree star(int vertex_count) {
    std::vector<Edge> e;
    for (int v = 1; v < vertex_count; ++v) e.emplace_back(0, v);
    return {vertex_count, std::move(e)};
  }

  /// Reads the "vertices N" header followed by one "u v" edge per line.
  /// Text after '#' is a comment; blank lines are ignored.
  static Tree parse(std::istream& in) {
    std::string line;
    int n = -1;
    std::vector<Edge> edges;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      line = line.substr(0, line.find('#'));
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      std::istringstream ls(line);
      if (n < 0) {
        std::string word;
        if (!(ls >> word >> n) || word != "vertices" || n <= 0)
          throw InvalidInput("line " + std::to_string(lineno) + ": expected 'vertices N' header");
        continue;
      }
      int u = 0;
      int v = 0;
      std::string rest;
      if (!(ls >> u >> v) || (ls >> rest))
        throw InvalidInput("line " + std::to_string(lineno) + ": expected 'u v'");
      edges.emplace_back(u, v);
    }
    if (n < 0) throw InvalidInput("tree file has no 'vertices N' header");
    return {n, std::move(edges)};
  }

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

 private:
  void validate() const {
    if (vertex_count_ <= 0) throw InvalidInput("tree must have at least one vertex");
    if (edge_count() != vertex_count_ - 1)
      throw InvalidInput("a tree on " + std::to_string(vertex_count_) + " vertices needs " +
                         std::to_string(vertex_count_ - 1) + " edges, got " +
                         std::to_string(edge_count()));
    if (edge_count() > EdgeSubset::kMaxWidth) throw SizeLimitExceeded("too many tree edges");
    std::vector<int> parent(static_cast<std::size_t>(vertex_count_));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) {
        auto& p = parent[static_cast<std::size_t>(x)];
        p = parent[static_cast<std::size_t>(p)];
        x = p;
      }
      return x;
    };
    for (auto [u, v] : edges_) {
      if (u < 0 || v < 0 || u >= vertex_count_ || v >= vertex_count_)
        throw InvalidInput("edge endpoint out of range");
      if (u == v) throw InvalidInput("self-loop at vertex " + std::to_string(u));
      int ru = find(u);
      int rv = find(v);
      if (ru == rv)
        throw InvalidInput("edge " + std::to_string(u) + "-" + std::to_string(v) +
                           " closes a cycle or duplicates an edge");
      parent[static_cast<std::size_t>(ru)] = rv;
    }
  }

  int vertex_count_;
  std::vector<Edge> edges_;
};

/// The set of edges whose endpoints lie in different blocks.
inline EdgeSubset cut_edges(const Tree& tree, const VertexPartition& partition) {
  if (partition.vertex_count() != tree.vertex_count())
    throw InvalidInput("partition covers " + std::to_string(partition.vertex_count()) +
                       " vertices, tree has " + std::to_string(tree.vertex_count()));
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < tree.edges().size(); ++i) {
    auto [u, v] = tree.edges()[i];
    if (partition.in_b(u) != partition.in_b(v)) bits |= std::uint64_t{1} << i;
  }
  return {bits, tree.edge_count()};
}

/// Inverse of cut_edges: two-colours the tree from vertex 0, switching colour
/// exactly across cut edges.
inline VertexPartition partition_from_cut(const Tree& tree, const EdgeSubset& cut) {
  if (cut.width() != tree.edge_count())
    throw InvalidInput("cut width " + std::to_string(cut.width()) + " does not match " +
                       std::to_string(tree.edge_count()) + " tree edges");
  const auto n = static_cast<std::size_t>(tree.vertex_count());
  std::vector<std::vector<std::pair<int, int>>> adj(n);
  for (std::size_t i = 0; i < tree.edges().size(); ++i) {
    auto [u, v] = tree.edges()[i];
    adj[static_cast<std::size_t>(u)].emplace_back(v, static_cast<int>(i));
    adj[static_cast<std::size_t>(v)].emplace_back(u, static_cast<int>(i));
  }
  std::vector<bool> side(n, false);
  std::vector<bool> seen(n, false);
  std::vector<int> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (auto [v, e] : adj[static_cast<std::size_t>(u)]) {
      if (seen[static_cast<std::size_t>(v)]) continue;
      seen[static_cast<std::size_t>(v)] = true;
      side[static_cast<std::size_t>(v)] = side[static_cast<std::size_t>(u)] != cut.contains(e);
      stack.push_back(v);
    }
  }
  return VertexPartition(std::move(side));
}

/// All 2^m cut labels in increasing numeric order.
inline std::vector<EdgeSubset> all_cuts(const Tree& tree, int max_vertices = 24) {
  if (tree.vertex_count() > max_vertices)
    throw SizeLimitExceeded("all_cuts: " + std::to_string(tree.vertex_count()) +
                            " vertices exceeds the limit of " + std::to_string(max_vertices));
  const int m = tree.edge_count();
  std::vector<EdgeSubset> out;
  out.reserve(std::size_t{1} << m);
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << m); ++b) out.emplace_back(b, m);
  return out;
}

}  // namespace cutbetti
