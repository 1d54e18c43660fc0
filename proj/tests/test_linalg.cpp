#include <cutbetti/linalg.hpp>

#include <catch_amalgamated.hpp>

#include <random>

using namespace cutbetti;

namespace {

Matrix<std::int64_t> from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  Matrix<std::int64_t> a(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) a(r, c) = rows[r][c];
  return a;
}

Matrix<std::int64_t> random_matrix(std::size_t r, std::size_t c, std::int64_t lo, std::int64_t hi,
                                   std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> d(lo, hi);
  Matrix<std::int64_t> a(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) a(i, j) = d(rng);
  return a;
}

// A square integer matrix is unimodular iff its Smith form is the identity.
template <class T>
bool unimodular(const Matrix<T>& u) {
  if (u.rows() != u.cols()) return false;
  const auto s = smith_normal_form(u);
  if (s.invariants.size() != u.rows()) return false;
  for (const auto& v : s.invariants)
    if (v != T(1)) return false;
  return true;
}

}  // namespace

TEST_CASE("Smith form of a textbook example") {
  const auto a = from_rows({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
  const auto s = smith_normal_form(a);
  CHECK(s.invariants == std::vector<std::int64_t>{2, 6, 12});
  CHECK(invariant_factors(a) == std::vector<BigInt>{2, 6, 12});
}

TEST_CASE("Smith decomposition U A V = D on random matrices") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = 1 + trial % 6;
    const std::size_t c = 1 + (trial / 6) % 6;
    const auto a = random_matrix(r, c, -4, 4, rng);
    const auto s = smith_normal_form(a, true);
    CHECK(s.left * a * s.right == s.diagonal);
    CHECK(unimodular(s.left));
    CHECK(unimodular(s.right));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (i != j) CHECK(s.diagonal(i, j) == 0);
    for (std::size_t i = 0; i < s.invariants.size(); ++i) {
      CHECK(s.invariants[i] > 0);
      CHECK(s.diagonal(i, i) == s.invariants[i]);
      if (i + 1 < s.invariants.size()) CHECK(s.invariants[i + 1] % s.invariants[i] == 0);
    }
    CHECK(rank_rational(a) == s.invariants.size());
  }
}

TEST_CASE("overflowing entries fall back to big integers") {
  const std::int64_t big = std::int64_t{1} << 40;
  const auto a = from_rows({{big, big + 1, 3}, {big - 1, big, 5}, {7, big + 3, big}});
  const auto exact = smith_normal_form(a.cast<BigInt>());
  CHECK(invariant_factors(a) == exact.invariants);
  CHECK(rank_rational(a) == exact.invariants.size());
}

TEST_CASE("ranks over Q and F_p") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = 1 + trial % 7;
    const std::size_t c = 1 + (trial / 7) % 7;
    // Low-rank products exercise dependent rows.
    const auto a = random_matrix(r, 2, -3, 3, rng) * random_matrix(2, c, -3, 3, rng);
    const auto inv = invariant_factors(a);
    CHECK(rank_rational(a) == inv.size());
    CHECK(rank_bareiss(a.cast<BigInt>()) == inv.size());
    for (std::int64_t p : {2, 3, 5, 7}) {
      std::size_t expected = 0;
      for (const auto& v : inv)
        if (v % p != 0) ++expected;
      CHECK(rank_mod_p(a, p) == expected);
    }
  }
}

TEST_CASE("empty matrices") {
  Matrix<std::int64_t> a(0, 3);
  CHECK(smith_normal_form(a).invariants.empty());
  CHECK(rank_rational(Matrix<std::int64_t>(3, 0)) == 0);
  CHECK(rank_mod_p(Matrix<std::int64_t>(2, 2), 2) == 0);
}
