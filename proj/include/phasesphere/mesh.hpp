#pragma once

// Exact triangulations of the balls B(X), of the slice {z_n = 1} of the order
// complex, and of the whole order complex for n = 2, 3.
//
// Every factor is meshed with an ordered vertex list per top simplex (intervals
// ascending in t, disc fans as centre < a < a + 1/(2m)) and products use the
// staircase triangulation: one simplex per shuffle of the factors' steps. On a
// product of intervals this is the Kuhn triangulation, which respects every
// hyperplane t_a = t_b, so order-polytope constraints and shared chart faces are
// unions of simplices.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "phasesphere/cell_lattice.hpp"
#include "phasesphere/complex.hpp"

namespace phasesphere {

/// Raised when two charts disagree on a shared region; carries a witness.
class MeshValidityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact-coordinate vertex table: equal points share one id.
class VertexPool {
 public:
  std::uint32_t id(const ModelPoint& p);
  const std::vector<ModelPoint>& points() const { return points_; }

 private:
  std::map<ModelPoint, std::uint32_t> index_;
  std::vector<ModelPoint> points_;
};

/// Barycenter in the disc parametrization: radii are averaged, and the angles of
/// the vertices off the centre are averaged after unwrapping around the first.
ModelPoint barycenter(const std::vector<ModelPoint>& points);
ModelPoint barycenter(const SimplicialComplex& k, const Simplex& s);

/// Top simplices of the chart B(X) at resolution m, as ids into `pool`.
std::vector<Simplex> mesh_cell_simplices(const CellLabel& x, int m, VertexPool& pool);

/// B(X) on its own. Throws std::invalid_argument unless in_Pn(X) and m >= 2 is even.
SimplicialComplex mesh_cell(const CellLabel& x, int m);

/// The 2m-triangle fan over the 2m-gon, as a complex with abstract vertices
/// (0 is the centre).
SimplicialComplex disc_fan(int m);

struct SliceAssembly {
  SimplicialComplex complex;
  std::vector<CellLabel> charts;
  std::vector<std::size_t> chart_facets;  // top simplices contributed per chart
};

/// Union of B(X^(j,k)) over every ordered pair j, k in [n-1], glued by exact
/// coordinates. Throws MeshValidityError if a top simplex is produced twice or a
/// face of one chart lying in another chart is not a face of that chart.
SliceAssembly assemble_slice_charts(std::size_t n, int m);
SimplicialComplex assemble_slice(std::size_t n, int m);

struct FullAssembly {
  SimplicialComplex complex;   // the glued union (empty when gluing failed)
  bool glued = false;
  std::string failure;         // why gluing failed
  // One point per top simplex: its barycenter taken in the chart parameters
  // (slice point and rotation angle, or circle angle and disc point).
  std::vector<ModelPoint> carrier_points;
  // Decomposition used for n = 3: region_a = {|z_3| = 1}, region_b = {z_2 = -z_1},
  // meeting in the torus `interface`.
  SimplicialComplex region_a;
  SimplicialComplex region_b;
  SimplicialComplex interface;
  std::vector<std::uint32_t> interface_to_a;
  std::vector<std::uint32_t> interface_to_b;
};

/// n = 2: the 2m-gon on ((1,a),(1,a+1/2)). n = 3: the slice times a circle (by
/// rotation) glued to a circle times a disc along a torus. Throws
/// std::invalid_argument for other n or odd m.
FullAssembly assemble_full(std::size_t n, int m);

}  // namespace phasesphere
