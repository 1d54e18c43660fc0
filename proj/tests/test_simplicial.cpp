#include <cutbetti/simplicial.hpp>

#include <catch_amalgamated.hpp>

#include <bit>

using namespace cutbetti;

namespace {

HomologyProfile ind_homology(const std::string& pattern, const Coefficients& coeff = Coefficients::integers()) {
  return reduced_homology(independence_complex(SmallGraph::parse(pattern)), coeff);
}

// Sum over independent sets S (including the empty set) of (-1)^(|S|-1).
long long euler_by_enumeration(const SmallGraph& g) {
  long long chi = 0;
  const int k = g.vertex_count();
  for (std::uint32_t s = 0; s < (std::uint32_t{1} << k); ++s) {
    bool independent = true;
    for (int v = 0; v < k && independent; ++v)
      if ((s >> v) & 1U) independent = (g.row(v) & s) == 0;
    if (independent) chi += std::popcount(s) % 2 == 1 ? 1 : -1;
  }
  return chi;
}

// Six-vertex triangulation of the real projective plane.
SimplicialComplex rp2() {
  const std::vector<std::vector<int>> tri{{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 1},
                                          {1, 2, 4}, {2, 3, 5}, {3, 4, 1}, {4, 5, 2}, {5, 1, 3}};
  std::vector<std::uint32_t> facets;
  for (const auto& t : tri) {
    std::uint32_t f = 0;
    for (int v : t) f |= 1U << v;
    facets.push_back(f);
  }
  return SimplicialComplex::from_facets(6, facets);
}

}  // namespace

TEST_CASE("coefficient parsing") {
  CHECK(Coefficients::parse("z").kind() == Coefficients::Kind::Integers);
  CHECK(Coefficients::parse("Q").kind() == Coefficients::Kind::Rationals);
  CHECK(Coefficients::parse("3").characteristic() == 3);
  CHECK_THROWS_AS(Coefficients::parse("4"), InvalidInput);
  CHECK_THROWS_AS(Coefficients::parse("1"), InvalidInput);
  CHECK_THROWS_AS(Coefficients::parse("r"), InvalidInput);
}

TEST_CASE("independence complexes of familiar graphs") {
  // The empty graph gives a simplex, which is acyclic.
  CHECK(ind_homology("3").top_dimension() == -2);
  // Graph on no vertices: {empty face}, so reduced H_{-1} is one-dimensional.
  CHECK(ind_homology("0").rank(-1) == 1);
  // K_n: n isolated points.
  CHECK(ind_homology("4; 0-1,0-2,0-3,1-2,1-3,2-3").rank(0) == 3);
  // C_5: its independence complex is again a 5-cycle.
  const auto c5 = ind_homology("5; 0-1,1-2,2-3,3-4,4-0");
  CHECK(c5.rank(1) == 1);
  CHECK(c5.rank(0) == 0);
  // A perfect matching on 4 vertices: the join of two 0-spheres.
  CHECK(ind_homology("4; 0-1,2-3").rank(1) == 1);
  // P_4 is contractible.
  CHECK(ind_homology("4; 0-1,1-2,2-3").top_dimension() == -2);
  // C_6: a wedge of two circles.
  CHECK(ind_homology("6; 0-1,1-2,2-3,3-4,4-5,5-0").rank(1) == 2);
}

TEST_CASE("torsion is detected over Z and depends on the field") {
  const auto c = rp2();
  const auto z = reduced_homology(c, Coefficients::integers());
  CHECK(z.rank(1) == 0);
  CHECK(z.rank(2) == 0);
  CHECK(z.torsion(1) == std::vector<BigInt>{2});
  CHECK_FALSE(z.torsion_free());
  const auto f2 = reduced_homology(c, Coefficients::prime(2));
  CHECK(f2.rank(1) == 1);
  CHECK(f2.rank(2) == 1);
  const auto q = reduced_homology(c, Coefficients::rationals());
  CHECK(q.top_dimension() == -2);
  CHECK(reduced_homology(c, Coefficients::prime(3)) == q);
}

TEST_CASE("faces and boundaries") {
  const auto c = SimplicialComplex::from_facets(4, {0b0111, 0b1100});
  CHECK(c.is_downward_closed());
  CHECK(c.face_count() == 1 + 4 + 4 + 1);
  CHECK(c.contains(0b0011));
  CHECK_FALSE(c.contains(0b1001));
  CHECK(boundaries_compose_to_zero(c));
  CHECK(SimplicialComplex(3).is_void());
  CHECK_THROWS_AS(SimplicialComplex::from_facets(3, {0b1000}), InvalidInput);
  CHECK_THROWS_AS(SimplicialComplex::from_facets(20, {0xFFFFF}, 1000), SizeLimitExceeded);
}

TEST_CASE("all graphs on at most five vertices") {
  for (int k = 1; k <= 5; ++k)
    for (const auto& cls : isomorphism_classes(k)) {
      const auto c = independence_complex(cls.representative);
      INFO(cls.representative.to_string());
      CHECK(c.is_downward_closed());
      CHECK(boundaries_compose_to_zero(c));
      const auto h = reduced_homology(c);
      CHECK(h.torsion_free());
      CHECK(h.euler_characteristic() == reduced_euler_characteristic(c));
      CHECK(h.euler_characteristic() == euler_by_enumeration(cls.representative));
    }
}

TEST_CASE("homology table is field independent for k <= 5") {
  const auto z = homology_table(5);
  CHECK(z.size() == 1 + 2 + 4 + 11 + 34);
  for (const auto& c : {Coefficients::rationals(), Coefficients::prime(2), Coefficients::prime(3)}) {
    const auto other = homology_table(5, c);
    REQUIRE(other.size() == z.size());
    for (const auto& [key, entry] : z) CHECK(other.at(key).profile == entry.profile);
  }
  CHECK(homology_table(3).size() == 7);
  CHECK_THROWS_AS(homology_table(7), SizeLimitExceeded);
}

TEST_CASE("independence complex examples") {
  CHECK(independence_complex(SmallGraph(4)).face_count() == 16);
  const auto k3 = independence_complex(SmallGraph::parse("3; 0-1,0-2,1-2"));
  CHECK(k3.face_count() == 4);
  CHECK(reduced_homology(k3).rank(0) == 2);
  // P_3 with middle vertex 1: the edge {0,2} and the isolated vertex 1.
  const auto p3 = independence_complex(SmallGraph::parse("3; 0-1,1-2"));
  CHECK(p3.contains(0b101));
  CHECK_FALSE(p3.contains(0b011));
  CHECK(p3.face_count() == 5);
  CHECK(reduced_homology(p3).rank(0) == 1);
  CHECK(ind_homology("4").top_dimension() == -2);
}
