#include <cutbetti/hochster.hpp>

#include <catch_amalgamated.hpp>

#include <bit>

using namespace cutbetti;

namespace {

// Coefficients of the K-polynomial of S/I(G): sum over independent sets F of
// t^|F| (1-t)^(N-|F|). Computed from the graph alone, without homology.
std::vector<BigInt> k_polynomial(int m) {
  const auto g = IncGraph::build(m);
  const int n = static_cast<int>(g.vertex_count());
  std::vector<BigInt> by_size(static_cast<std::size_t>(n) + 1);
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    bool independent = true;
    for (int a = 0; a < n && independent; ++a)
      if ((s >> a) & 1U)
        for (int b = a + 1; b < n && independent; ++b)
          if (((s >> b) & 1U) && g.adjacent(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b)))
            independent = false;
    if (independent) by_size[static_cast<std::size_t>(std::popcount(s))] += 1;
  }
  std::vector<BigInt> k(static_cast<std::size_t>(n) + 1);
  for (int f = 0; f <= n; ++f)
    for (int e = 0; e <= n - f; ++e)
      k[static_cast<std::size_t>(f + e)] +=
          by_size[static_cast<std::size_t>(f)] * binomial(static_cast<unsigned>(n - f), static_cast<unsigned>(e)) *
          (e % 2 == 0 ? 1 : -1);
  return k;
}

}  // namespace

TEST_CASE("known Betti numbers for m = 3 and m = 4") {
  CHECK(betti_pair(3, 0, 2) == 9);
  CHECK(betti_pair(3, 1, 3) == 16);
  CHECK(betti_pair(3, 2, 4) == 9);
  CHECK(betti_pair(3, 1, 4) == 0);
  CHECK(betti_pair(4, 0, 2) == 55);
  CHECK(betti_pair(4, 1, 4) == 6);
  CHECK(betti_pair(4, 2, 5) == 54);
  CHECK(betti_pair(4, 3, 5) == 1462);
  CHECK(betti_pair(2, 0, 2) == 1);
  CHECK(betti_pair(4, 2, 3) == 0);
}

TEST_CASE("full diagrams") {
  const auto t3 = betti_full(3);
  CHECK(t3.to_m2() ==
        "total: 1 9 16 9 1\n"
        "    0: 1 .  . . .\n"
        "    1: . 9 16 9 .\n"
        "    2: . .  . . 1\n");
  const auto t4 = betti_full(4);
  const std::vector<BigInt> totals{55, 326, 951, 1744, 2273, 2273, 1744, 951, 326, 55, 1};
  CHECK(t4.totals() == totals);
  CHECK(t4.get(10, 14) == 1);
  CHECK_THROWS_AS(betti_full(5), SizeLimitExceeded);
}

TEST_CASE("alternating sums match the K-polynomial") {
  for (int m = 2; m <= 4; ++m) {
    const auto table = betti_full(m);
    const auto k = k_polynomial(m);
    std::vector<BigInt> from_betti(k.size());
    from_betti[0] = 1;
    for (const auto& [ij, v] : table.entries())
      from_betti[static_cast<std::size_t>(ij.second)] += (ij.first % 2 == 0 ? -1 : 1) * v;
    INFO("m = " << m);
    CHECK(from_betti == k);
  }
}

TEST_CASE("Hochster enumeration agrees with the census routes") {
  for (int m = 0; m <= 4; ++m)
    for (int j = 2; j <= 5; ++j)
      for (int i = 0; i <= j - 2; ++i) {
        INFO("m = " << m << " i = " << i << " j = " << j);
        const auto direct = betti_pair(m, i, j);
        CHECK(betti_via_census(m, i, j, Coefficients::rationals(), CensusSource::ClosedForms) == direct);
        CHECK(betti_via_census(m, i, j, Coefficients::rationals(), CensusSource::BruteForce) == direct);
        CHECK(betti_full(m).get(i, j) == direct);
      }
}

TEST_CASE("field independence for m = 3") {
  const auto q = betti_full(3, Coefficients::rationals());
  CHECK(betti_full(3, Coefficients::prime(2)) == q);
  CHECK(betti_full(3, Coefficients::prime(3)) == q);
  CHECK(betti_full(3, Coefficients::integers()) == q);
}

TEST_CASE("worker threads give the same answer") {
  Budget b;
  b.threads = 4;
  for (int j = 2; j <= 6; ++j)
    for (int i = 0; i <= j - 2; ++i) CHECK(betti_pair(4, i, j, Coefficients::rationals(), b) == betti_pair(4, i, j));
  CHECK(betti_pair(5, 3, 5, Coefficients::rationals(), b) == betti_pair(5, 3, 5));
}

TEST_CASE("budgets and invalid indices") {
  Budget tiny;
  tiny.max_subsets = 100;
  CHECK_THROWS_AS(betti_pair(4, 3, 5, Coefficients::rationals(), tiny), SizeLimitExceeded);
  CHECK_THROWS_AS(betti_pair(3, -1, 2), InvalidInput);
  CHECK_THROWS_AS(betti_via_census(4, 0, 6), SizeLimitExceeded);
}

TEST_CASE("Boolean lattice symmetries preserve incomparability") {
  for (int m = 1; m <= 4; ++m) {
    const auto syms = detail::boolean_lattice_symmetries(m);
    std::uint64_t fact = 1;
    for (int i = 2; i <= m; ++i) fact *= static_cast<std::uint64_t>(i);
    CHECK(syms.size() == 2 * fact);
    const std::uint64_t n = std::uint64_t{1} << m;
    for (const auto& s : syms)
      for (std::uint64_t x = 0; x < n; ++x)
        for (std::uint64_t y = 0; y < n; ++y) CHECK(incomparable(x, y) == incomparable(s[x], s[y]));
  }
}

TEST_CASE("degenerate ground sets") {
  CHECK(betti_full(1).entries().empty());
  CHECK(betti_full(0).entries().empty());
  CHECK(betti_pair(1, 0, 2) == 0);
}

TEST_CASE("beta_{1,3} from the three-vertex census") {
  const auto counts = census_bruteforce(3, 3);
  const auto p3 = counts.at(canonical_form(SmallGraph::parse("3; 0-1,1-2")).key);
  const auto k3 = counts.at(canonical_form(SmallGraph::parse("3; 0-1,0-2,1-2")).key);
  CHECK(p3 == 12);
  CHECK(k3 == 2);
  CHECK(p3 * 1 + k3 * 2 == betti_pair(3, 1, 3));
}
