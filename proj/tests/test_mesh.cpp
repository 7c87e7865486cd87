#include <doctest.h>

#include <vector>

#include "phasesphere/homology.hpp"
#include "phasesphere/mesh.hpp"

using namespace phasesphere;

namespace {

std::vector<std::size_t> fv(std::initializer_list<std::size_t> xs) { return xs; }

}  // namespace

TEST_CASE("vertex pool shares equal points") {
  VertexPool pool;
  const ModelPoint a{{DiscPoint::on_circle(Angle(1, 4))}};
  const ModelPoint b{{DiscPoint(Rational(1, 2), Angle(1, 4))}};
  CHECK(pool.id(a) == 0);
  CHECK(pool.id(b) == 1);
  CHECK(pool.id(a) == 0);
  CHECK(pool.points().size() == 2);
}

TEST_CASE("barycenter averages radii and unwrapped angles") {
  const ModelPoint p{{DiscPoint::on_circle(Angle(7, 8))}};
  const ModelPoint q{{DiscPoint::on_circle(Angle(1, 8))}};
  const ModelPoint c{{DiscPoint()}};
  CHECK(barycenter({p, q}) == ModelPoint{{DiscPoint::on_circle(Angle(0, 1))}});
  CHECK(barycenter({p, q, c}) == ModelPoint{{DiscPoint(Rational(2, 3), Angle(0, 1))}});
}

TEST_CASE("cell mesh counts") {
  const SimplicialComplex k = mesh_cell(parse_cell_label("U,L,1"), 2);
  CHECK(k.f_vector() == fv({6, 9, 4}));
  CHECK(k.euler_characteristic() == 1);
  CHECK(is_pseudomanifold(k, false));

  const SimplicialComplex fan = disc_fan(8);
  CHECK(fan.f_vector() == fv({17, 32, 16}));
  CHECK(fan.euler_characteristic() == 1);
}

TEST_CASE("cell meshes are balls of dimension nu") {
  for (std::size_t n = 3; n <= 4; ++n) {
    for (const CellLabel& x : enumerate_Pn(n)) {
      const SimplicialComplex k = mesh_cell(x, 2);
      CHECK(k.dim() == nu(x));
      CHECK(k.is_pure());
      const BettiReport b = betti(k, Field::Rationals);
      CHECK(b.betti[0] == 1);
      CHECK(b.euler == 1);
      for (const Simplex& s : k.facets()) {
        CHECK(bx_member(x, barycenter(k, s), nu(x) == 0 ? BallMode::Closed : BallMode::Interior));
      }
      for (const ModelPoint& v : k.coords()) CHECK(bx_member(x, v, BallMode::Closed));
    }
  }
}

TEST_CASE("cell mesh rejects bad input") {
  CHECK_THROWS_AS(mesh_cell(parse_cell_label("U,U,F,1"), 2), std::invalid_argument);
  CHECK_THROWS_AS(mesh_cell(parse_cell_label("U,L,1"), 3), std::invalid_argument);
  CHECK_THROWS_AS(mesh_cell(parse_cell_label("U,L,1"), 0), std::invalid_argument);
}

TEST_CASE("slice n = 3") {
  for (int m : {2, 4}) {
    const SliceAssembly s = assemble_slice_charts(3, m);
    CHECK(s.charts.size() == 4);
    CHECK(s.complex.dim() == 2);
    CHECK(s.complex.euler_characteristic() == 1);
    CHECK(is_pseudomanifold(s.complex, false));
  }
  CHECK(assemble_slice(3, 2).f_vector() == fv({11, 26, 16}));
}

TEST_CASE("slice n = 3 boundary lies on the antipodal circle") {
  const SimplicialComplex b = boundary_subcomplex(assemble_slice(3, 2));
  CHECK(b.dim() == 1);
  CHECK(is_pseudomanifold(b, true));
  CHECK(betti(b, Field::Rationals).betti == fv({1, 1}));
  for (const ModelPoint& z : b.coords()) {
    CHECK(z[0].on_circle());
    CHECK(z[1].on_circle());
    CHECK(z[1].angle() == z[0].angle().antipode());
    CHECK(z[2] == DiscPoint::on_circle(Angle()));
  }
}

TEST_CASE("slice boundary matches the n = 2 sphere") {
  for (int m : {2, 4}) {
    const SimplicialComplex b = boundary_subcomplex(assemble_slice(3, m));
    const FullAssembly f = assemble_full(2, m);
    REQUIRE(f.glued);
    CHECK(f.complex.f_vector() == fv({static_cast<std::size_t>(2 * m), static_cast<std::size_t>(2 * m)}));
    CHECK(complex_isomorphic(b, f.complex, drop_last).isomorphic);
    CHECK(complex_isomorphic(f.complex, f.complex, [](const ModelPoint& z) { return z; }).isomorphic);
  }
  const auto different = complex_isomorphic(assemble_full(2, 2).complex, assemble_full(2, 4).complex,
                                            [](const ModelPoint& z) { return z; });
  CHECK_FALSE(different.isomorphic);
  CHECK_FALSE(different.mismatch.empty());
}

TEST_CASE("full n = 2 is a circle") {
  const FullAssembly f = assemble_full(2, 4);
  CHECK(betti(f.complex, Field::Rationals).betti == fv({1, 1}));
  CHECK(f.carrier_points.size() == f.complex.facets().size());
  for (const ModelPoint& z : f.complex.coords()) CHECK(delta_member(ones(2), z));
}

TEST_CASE("full n = 3 at m = 2") {
  const FullAssembly f = assemble_full(3, 2);
  REQUIRE(f.glued);
  CHECK(f.complex.f_vector() == fv({48, 288, 480, 240}));
  CHECK(is_pseudomanifold(f.complex, true));
  for (const ModelPoint& z : f.complex.coords()) CHECK(delta_member(ones(3), z));
  REQUIRE(f.carrier_points.size() == f.complex.facets().size());
  for (const ModelPoint& z : f.carrier_points) CHECK(delta_member(ones(3), z));
  CHECK(f.interface.euler_characteristic() == 0);
}

TEST_CASE("full assembly rejects unsupported n and odd m") {
  CHECK_THROWS_AS(assemble_full(4, 2), std::invalid_argument);
  CHECK_THROWS_AS(assemble_full(3, 3), std::invalid_argument);
}
