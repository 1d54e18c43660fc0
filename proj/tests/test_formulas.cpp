#include <cutbetti/formulas.hpp>
#include <cutbetti/hochster.hpp>

#include <catch_amalgamated.hpp>

using namespace cutbetti;

TEST_CASE("first two closed forms on small trees") {
  CHECK(theorem1(3, {0, 2}) == 9);
  CHECK(theorem1(3, {1, 3}) == 16);
  CHECK(theorem1(4, {0, 2}) == 55);
  CHECK(theorem1(4, {1, 4}) == 6);
  for (unsigned n = 1; n <= 20; ++n) CHECK(theorem1(n, {0, 2}) == incomparable_pair_count(n));
  CHECK(theorem1(4, {2, 5}) == 54);
  for (auto t : kTheorem1Targets) CHECK(theorem1(2, t) == (t.i == 0 ? 1 : 0));
  CHECK_THROWS_AS(theorem1(3, {0, 3}), InvalidInput);
  CHECK_THROWS_AS(theorem1(0, {0, 2}), InvalidInput);
}

TEST_CASE("transcribed values of the published forms") {
  const auto rows = table5(7);
  REQUIRE(rows.size() == 5);
  CHECK(rows[0].vertices == 3);
  const std::vector<BigInt> n7{1351, 44800, 810255, 2280, 115950, 9798758};
  CHECK(std::vector<BigInt>(rows[4].values.begin(), rows[4].values.end()) == n7);
  CHECK(table5(8)[5].values[3] == 27300);
  // The published beta_{3,5} form gives 1450 on five-vertex trees.
  CHECK(theorem1(4, {3, 5}) == 1450);
  CHECK(theorem1(8, {3, 5}) == BigInt("19911502842"));
  CHECK(theorem1(7, {1, 3}) == 435456);
  CHECK_THROWS_AS(table5(65), SizeLimitExceeded);
}

TEST_CASE("published forms are integral") {
  for (auto t : kTheorem1Targets)
    for (unsigned n = 1; n <= 40; ++n) CHECK_NOTHROW(theorem1(n, t));
}

TEST_CASE("derived forms equal Hochster enumeration") {
  for (auto t : kTheorem1Targets) {
    const auto form = derived_form(t);
    for (int m = 0; m <= 5; ++m) {
      INFO(t.to_string() << " m = " << m);
      CHECK(form.evaluate_integer(static_cast<unsigned>(m)) == betti_pair(m, t.i, t.j));
    }
  }
}

TEST_CASE("derivation reports its class contributions") {
  const auto d = formula_from_census({1, 3});
  CHECK(d.class_terms.size() == 2);
  CHECK(d.derived == ClosedForm::from_integers({{1, 8}, {-3, 6}, {3, 4}, {-1, 2}}, 3));
  CHECK(formula_from_census({0, 2}).class_terms.size() == 1);
}

TEST_CASE("derived table") {
  const auto rows = formula_table(9, true);
  REQUIRE(rows.size() == 7);
  CHECK(rows[2].values[5] == 1462);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t k = 0; k < 5; ++k) CHECK(rows[r].values[k] == table5(9)[r].values[k]);
}
