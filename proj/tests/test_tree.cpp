#include <cutbetti/tree.hpp>

#include <catch_amalgamated.hpp>

#include <random>
#include <set>
#include <sstream>

using namespace cutbetti;

namespace {

// Random labelled tree: vertex v > 0 attaches to a uniformly chosen earlier vertex.
Tree random_tree(int n, std::mt19937_64& rng) {
  std::vector<Tree::Edge> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(std::uniform_int_distribution<int>(0, v - 1)(rng), v);
  std::shuffle(edges.begin(), edges.end(), rng);
  return Tree(n, edges);
}

}  // namespace

TEST_CASE("edge subsets print and parse edge 0 first") {
  const EdgeSubset x(0b011, 3);
  CHECK(x.to_string() == "110");
  CHECK(EdgeSubset::parse("110") == x);
  CHECK(x.size() == 2);
  CHECK(x.complement() == EdgeSubset(0b100, 3));
  CHECK(EdgeSubset::full(3).bits() == 0b111);
  CHECK(EdgeSubset::empty(3).size() == 0);
  CHECK_THROWS_AS(EdgeSubset::parse("10x"), InvalidInput);
}

TEST_CASE("comparability is containment in either direction") {
  const EdgeSubset a(0b001, 3), b(0b011, 3), c(0b110, 3);
  CHECK(a.comparable(b));
  CHECK(b.comparable(a));
  CHECK_FALSE(a.comparable(c));
  CHECK_FALSE(b.comparable(c));
  CHECK((b | c) == EdgeSubset::full(3));
  CHECK((b & c) == EdgeSubset(0b010, 3));
}

TEST_CASE("tree validation rejects non-trees") {
  CHECK_NOTHROW(Tree(1, {}));
  CHECK_THROWS_AS(Tree(0, {}), InvalidInput);
  CHECK_THROWS_AS(Tree(3, {{0, 1}}), InvalidInput);
  CHECK_THROWS_AS(Tree(3, {{0, 1}, {1, 0}}), InvalidInput);
  CHECK_THROWS_AS(Tree(3, {{0, 0}, {1, 2}}), InvalidInput);
  CHECK_THROWS_AS(Tree(3, {{0, 1}, {1, 3}}), InvalidInput);
  CHECK_THROWS_AS(Tree(4, {{0, 1}, {1, 2}, {2, 0}}), InvalidInput);
}

TEST_CASE("tree files") {
  std::istringstream ok("# a path\nvertices 3\n0 1\n\n1 2  # second edge\n");
  const auto t = Tree::parse(ok);
  CHECK(t.vertex_count() == 3);
  CHECK(t.edge_count() == 2);

  std::istringstream no_header("0 1\n");
  CHECK_THROWS_AS(Tree::parse(no_header), InvalidInput);
  std::istringstream garbage("vertices 2\n0 one\n");
  CHECK_THROWS_AS(Tree::parse(garbage), InvalidInput);
  std::istringstream cycle("vertices 3\n0 1\n1 2\n2 0\n");
  CHECK_THROWS_AS(Tree::parse(cycle), InvalidInput);
}

TEST_CASE("cuts of a path") {
  const auto p = Tree::path(4);
  // Splitting {0,1} from {2,3} cuts only the middle edge.
  const auto part = VertexPartition::from_block(4, {2, 3});
  CHECK(cut_edges(p, part) == EdgeSubset(0b010, 3));
  // {1} alone cuts both edges at vertex 1.
  CHECK(cut_edges(p, VertexPartition::from_block(4, {1})) == EdgeSubset(0b011, 3));
  CHECK(cut_edges(p, VertexPartition::from_block(4, {})) == EdgeSubset::empty(3));
}

TEST_CASE("partitions are normalised with vertex 0 in block A") {
  const auto a = VertexPartition::from_block(3, {0});
  const auto b = VertexPartition::from_block(3, {1, 2});
  CHECK(a.sides() == b.sides());
  CHECK(a.block_a() == std::vector<int>{0});
  CHECK(a.block_b() == std::vector<int>{1, 2});
}

TEST_CASE("cut_edges and partition_from_cut are inverse on random trees") {
  std::mt19937_64 rng(7);
  for (int n = 1; n <= 8; ++n)
    for (int trial = 0; trial < 10; ++trial) {
      const auto t = random_tree(n, rng);
      const int m = t.edge_count();
      REQUIRE(m == n - 1);
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) {
        const EdgeSubset cut(bits, m);
        const auto part = partition_from_cut(t, cut);
        CHECK(part.in_b(0) == false);
        CHECK(cut_edges(t, part) == cut);
      }
      std::set<std::uint64_t> seen;
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
        std::vector<int> block;
        for (int v = 1; v < n; ++v)
          if ((mask >> (v - 1)) & 1U) block.push_back(v);
        const auto part = VertexPartition::from_block(n, block);
        const auto cut = cut_edges(t, part);
        seen.insert(cut.bits());
        CHECK(partition_from_cut(t, cut).sides() == part.sides());
      }
      CHECK(seen.size() == (std::size_t{1} << m));
    }
}

TEST_CASE("every edge subset is a cut") {
  const auto s = Tree::star(5);
  const auto cuts = all_cuts(s);
  CHECK(cuts.size() == 16);
  std::set<std::uint64_t> distinct;
  for (const auto& c : cuts) distinct.insert(c.bits());
  CHECK(distinct.size() == 16);
  CHECK_THROWS_AS(all_cuts(Tree::path(30)), SizeLimitExceeded);
}

TEST_CASE("cut examples on small trees") {
  const auto p = Tree::path(3);
  CHECK(partition_from_cut(p, EdgeSubset(0b01, 2)).block_a() == std::vector<int>{0});
  CHECK(partition_from_cut(p, EdgeSubset(0b01, 2)).block_b() == std::vector<int>{1, 2});
  // Cut labels depend only on the edge count.
  const auto star = all_cuts(Tree::star(4));
  const auto path = all_cuts(Tree::path(4));
  CHECK(star.size() == 8);
  std::set<std::uint64_t> a, b;
  for (const auto& c : star) a.insert(c.bits());
  for (const auto& c : path) b.insert(c.bits());
  CHECK(a == b);
}
