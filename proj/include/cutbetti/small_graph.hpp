#pragma once

// Small simple graphs stored as adjacency bit rows, with a brute-force
// canonical labelling for graphs on at most eight vertices.

#include <cutbetti/common.hpp>

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>
#include <compare>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace cutbetti {

class SmallGraph {
 public:
  static constexpr int kMaxVertices = 32;

  explicit SmallGraph(int vertex_count = 0) : k_(vertex_count) {
    if (vertex_count < 0 || vertex_count > kMaxVertices)
      throw SizeLimitExceeded("SmallGraph supports at most " + std::to_string(kMaxVertices) +
                              " vertices");
  }

  SmallGraph(int vertex_count, const std::vector<std::pair<int, int>>& edges)
      : SmallGraph(vertex_count) {
    for (auto [u, v] : edges) add_edge(u, v);
  }

  /// Labelled graph on k vertices from its upper-triangle code (see code()).
  static SmallGraph from_code(int k, std::uint64_t code) {
    SmallGraph g(k);
    int bit = 0;
    for (int u = 0; u < k; ++u)
      for (int v = u + 1; v < k; ++v, ++bit)
        if ((code >> pair_shift(k, bit)) & 1U) g.add_edge(u, v);
    return g;
  }

  /// Parses "k; u-v,u-v,..." (the edge list may be empty).
  static SmallGraph parse(const std::string& text) {
    auto semi = text.find(';');
    std::string head = semi == std::string::npos ? text : text.substr(0, semi);
    int k = 0;
    {
      std::istringstream hs(head);
      std::string rest;
      if (!(hs >> k) || (hs >> rest) || k < 0)
        throw InvalidInput("pattern must start with a vertex count: '" + text + "'");
    }
    SmallGraph g(k);
    if (semi == std::string::npos) return g;
    std::string body = text.substr(semi + 1);
    std::istringstream bs(body);
    std::string tok;
    while (std::getline(bs, tok, ',')) {
      tok.erase(std::remove_if(tok.begin(), tok.end(), [](unsigned char c) { return std::isspace(c); }),
                tok.end());
      if (tok.empty()) continue;
      auto dash = tok.find('-');
      if (dash == std::string::npos) throw InvalidInput("bad edge token '" + tok + "'");
      try {
        g.add_edge(std::stoi(tok.substr(0, dash)), std::stoi(tok.substr(dash + 1)));
      } catch (const std::logic_error&) {
        throw InvalidInput("bad edge token '" + tok + "'");
      }
    }
    return g;
  }

  int vertex_count() const { return k_; }

  void add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= k_ || v >= k_) throw InvalidInput("edge endpoint out of range");
    if (u == v) throw InvalidInput("self-loop in pattern");
    rows_[static_cast<std::size_t>(u)] |= std::uint32_t{1} << v;
    rows_[static_cast<std::size_t>(v)] |= std::uint32_t{1} << u;
  }

  bool adjacent(int u, int v) const { return (rows_[static_cast<std::size_t>(u)] >> v) & 1U; }
  std::uint32_t row(int u) const { return rows_[static_cast<std::size_t>(u)]; }

  int edge_count() const {
    int c = 0;
    for (int u = 0; u < k_; ++u) c += std::popcount(row(u));
    return c / 2;
  }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < k_; ++u)
      for (int v = u + 1; v < k_; ++v)
        if (adjacent(u, v)) e.emplace_back(u, v);
    return e;
  }

  SmallGraph complement() const {
    SmallGraph g(k_);
    for (int u = 0; u < k_; ++u)
      for (int v = u + 1; v < k_; ++v)
        if (!adjacent(u, v)) g.add_edge(u, v);
    return g;
  }

  /// Upper-triangle adjacency string read as an integer, pair (0,1) most
  /// significant. Defined for k <= 11.
  std::uint64_t code() const {
    std::uint64_t c = 0;
    int bit = 0;
    for (int u = 0; u < k_; ++u)
      for (int v = u + 1; v < k_; ++v, ++bit)
        if (adjacent(u, v)) c |= std::uint64_t{1} << pair_shift(k_, bit);
    return c;
  }

  /// "k; u-v,..." as accepted by parse().
  std::string to_string() const {
    std::string s = std::to_string(k_) + ";";
    bool first = true;
    for (auto [u, v] : edges()) {
      s += first ? " " : ",";
      s += std::to_string(u) + "-" + std::to_string(v);
      first = false;
    }
    return s;
  }

  friend bool operator==(const SmallGraph&, const SmallGraph&) = default;

  static int pair_shift(int k, int pair_index) { return k * (k - 1) / 2 - 1 - pair_index; }

 private:
  int k_;
  std::array<std::uint32_t, kMaxVertices> rows_{};
};

/// Isomorphism-class key: vertex count plus the minimal code over all
/// relabellings.
struct CanonicalKey {
  int vertex_count = 0;
  std::uint64_t code = 0;

  friend constexpr bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
  friend constexpr auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;

  std::string to_string() const { return std::to_string(vertex_count) + ":" + std::to_string(code); }
};

struct CanonicalForm {
  CanonicalKey key;
  std::uint64_t automorphisms = 0;
  SmallGraph representative;  // the graph whose code() is key.code
};

inline constexpr int kMaxCanonicalVertices = 8;

inline CanonicalForm canonical_form(const SmallGraph& g) {
  const int k = g.vertex_count();
  if (k > kMaxCanonicalVertices)
    throw SizeLimitExceeded("canonical_form supports at most 8 vertices, got " + std::to_string(k));
  std::array<int, kMaxCanonicalVertices> perm{};
  std::iota(perm.begin(), perm.begin() + k, 0);
  std::uint64_t best = ~std::uint64_t{0};
  std::uint64_t hits = 0;
  do {
    // Vertex perm[a] of g becomes vertex a.
    std::uint64_t c = 0;
    int bit = 0;
    for (int a = 0; a < k; ++a)
      for (int b = a + 1; b < k; ++b, ++bit)
        if (g.adjacent(perm[static_cast<std::size_t>(a)], perm[static_cast<std::size_t>(b)]))
          c |= std::uint64_t{1} << SmallGraph::pair_shift(k, bit);
    if (c < best) {
      best = c;
      hits = 1;
    } else if (c == best) {
      ++hits;
    }
  } while (std::next_permutation(perm.begin(), perm.begin() + k));
  if (k == 0) best = 0;
  return {{k, best}, hits, SmallGraph::from_code(k, best)};
}

/// One canonical representative per isomorphism class on k vertices, in
/// increasing key order.
inline std::vector<CanonicalForm> isomorphism_classes(int k) {
  if (k < 0 || k > 6) throw SizeLimitExceeded("isomorphism_classes supports k <= 6");
  const int pairs = k * (k - 1) / 2;
  std::vector<CanonicalForm> out;
  std::vector<bool> seen(std::size_t{1} << pairs, false);
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << pairs); ++code) {
    auto cf = canonical_form(SmallGraph::from_code(k, code));
    if (seen[cf.key.code]) continue;
    seen[cf.key.code] = true;
    out.push_back(std::move(cf));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.key < b.key; });
  return out;
}

}  // namespace cutbetti
