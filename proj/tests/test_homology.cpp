#include <doctest.h>

#include <numeric>
#include <vector>

#include "phasesphere/covector.hpp"
#include "phasesphere/homology.hpp"

using namespace phasesphere;

namespace {

using B = std::vector<std::size_t>;

SimplicialComplex simplex_boundary(std::uint32_t d) {
  std::vector<Simplex> faces;
  for (std::uint32_t skip = 0; skip <= d; ++skip) {
    Simplex s;
    for (std::uint32_t v = 0; v <= d; ++v) {
      if (v != skip) s.push_back(v);
    }
    faces.push_back(s);
  }
  return SimplicialComplex::from_simplices(d + 1, faces);
}

// Six-vertex projective plane.
SimplicialComplex projective_plane() {
  return SimplicialComplex::from_simplices(
      6, {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5}, {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {1, 3, 5}, {2, 4, 5}});
}

std::int64_t alternating(const B& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < b.size(); ++i) s += (i % 2 ? -1 : 1) * static_cast<std::int64_t>(b[i]);
  return s;
}

}  // namespace

TEST_CASE("small complexes") {
  CHECK(betti(simplex_boundary(2), Field::Rationals).betti == B{1, 1});
  CHECK(betti(SimplicialComplex::from_simplices(1, {{0}}), Field::GF2).betti == B{1});
  const auto chain = order_complex_of_poset(3, [](std::size_t a, std::size_t b) { return a <= b; });
  CHECK(chain.facets().size() == 1);
  CHECK(chain.dim() == 2);
  CHECK(betti(chain, Field::Rationals).betti == B{1, 0, 0});
  const auto two_points = SimplicialComplex::from_simplices(2, {{0}, {1}});
  CHECK(betti(two_points, Field::Rationals).betti == B{2});
}

TEST_CASE("boundary ranks of a triangle") {
  const auto tri = SimplicialComplex::from_simplices(3, {{0, 1, 2}});
  CHECK(boundary_rank(tri, 0, Field::Rationals) == 0);
  CHECK(boundary_rank(tri, 1, Field::Rationals) == 2);
  CHECK(boundary_rank(tri, 2, Field::GF2) == 1);
}

TEST_CASE("sphere boundaries and euler characteristic") {
  for (std::uint32_t d = 1; d <= 6; ++d) {
    const auto k = simplex_boundary(d);
    B expected(d, 0);
    expected.front() = 1;
    expected.back() += 1;
    for (Field f : {Field::Rationals, Field::GF2}) {
      const BettiReport r = betti(k, f);
      CHECK(r.betti == expected);
      CHECK(r.euler == alternating(r.betti));
      CHECK(r.euler == euler_characteristic(k));
    }
  }
}

TEST_CASE("torsion separates the two fields") {
  const auto rp2 = projective_plane();
  CHECK(betti(rp2, Field::Rationals).betti == B{1, 0, 0});
  CHECK(betti(rp2, Field::GF2).betti == B{1, 1, 1});
  CHECK(euler_characteristic(rp2) == 1);
}

TEST_CASE("face poset order complex of a simplex boundary") {
  for (std::uint32_t d = 2; d <= 5; ++d) {
    const auto sd = face_poset_order_complex(simplex_boundary(d));
    B expected(d, 0);
    expected.front() = 1;
    expected.back() += 1;
    CHECK(betti(sd, Field::Rationals).betti == expected);
    CHECK(sd.num_vertices() == (std::size_t{1} << (d + 1)) - 2);
  }
}

TEST_CASE("sign covector order complexes are spheres") {
  for (std::size_t n = 3; n <= 5; ++n) {
    const auto cov = enumerate_sign_covectors(n);
    const auto k = order_complex_of_poset(cov.size(), [&](std::size_t a, std::size_t b) { return leq(cov[a], cov[b]); });
    B expected(n - 1, 0);
    expected.front() = 1;
    expected.back() += 1;
    CHECK(betti(k, Field::Rationals).betti == expected);
    CHECK(betti(k, Field::GF2).betti == expected);
  }
}

TEST_CASE("non-posets are rejected") {
  CHECK_THROWS_AS(order_complex_of_poset(2, [](std::size_t, std::size_t) { return true; }), std::invalid_argument);
  CHECK_THROWS_AS(order_complex_of_poset(2, [](std::size_t a, std::size_t b) { return a != b; }), std::invalid_argument);
  // 0 < 1 < 2 without 0 < 2
  CHECK_THROWS_AS(order_complex_of_poset(3,
                                         [](std::size_t a, std::size_t b) {
                                           return a == b || (a == 0 && b == 1) || (a == 1 && b == 2);
                                         }),
                  std::invalid_argument);
}

TEST_CASE("Mayer-Vietoris: two discs along a circle") {
  // Cones over the triangle 0,1,2 with apexes 3.
  const auto disc = SimplicialComplex::from_simplices(4, {{0, 1, 3}, {1, 2, 3}, {0, 2, 3}});
  const auto circle = simplex_boundary(2);
  const std::vector<std::uint32_t> id{0, 1, 2};
  for (Field f : {Field::Rationals, Field::GF2}) {
    const auto r = mayer_vietoris_assemble(disc, disc, circle, id, id, f);
    CHECK(r.betti == B{1, 0, 1});
  }
}

TEST_CASE("Mayer-Vietoris: identical pieces") {
  const auto a = simplex_boundary(3);
  std::vector<std::uint32_t> id(a.num_vertices());
  std::iota(id.begin(), id.end(), 0U);
  CHECK(mayer_vietoris_assemble(a, a, a, id, id, Field::Rationals).betti == betti(a, Field::Rationals).betti);
}

TEST_CASE("Mayer-Vietoris rejects maps that are not simplicial") {
  const auto edge = SimplicialComplex::from_simplices(2, {{0, 1}});
  const auto points = SimplicialComplex::from_simplices(2, {{0}, {1}});
  const std::vector<std::uint32_t> id{0, 1};
  CHECK_THROWS_AS(mayer_vietoris_assemble(points, points, edge, id, id, Field::Rationals), std::invalid_argument);
  const std::vector<std::uint32_t> collapse{0, 0};
  CHECK_THROWS_AS(mayer_vietoris_assemble(edge, edge, points, collapse, id, Field::Rationals), std::invalid_argument);
}

TEST_CASE("fields parse") {
  CHECK(parse_field("q") == Field::Rationals);
  CHECK(parse_field("f2") == Field::GF2);
  CHECK_THROWS(parse_field("z"));
}
