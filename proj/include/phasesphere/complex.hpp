#pragma once

// Finite simplicial complexes with optional exact vertex coordinates.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "phasesphere/order_complex.hpp"

namespace phasesphere {

/// Sorted, duplicate-free vertex ids.
using Simplex = std::vector<std::uint32_t>;

class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Abstract complex on vertices 0..num_vertices-1 generated by `simplices`
  /// (any simplices; only the maximal ones are kept). Throws std::invalid_argument
  /// on out-of-range or repeated vertex ids.
  static SimplicialComplex from_simplices(std::size_t num_vertices, std::vector<Simplex> simplices);

  /// As above with coordinates; coordinates must be pairwise distinct.
  static SimplicialComplex from_simplices(std::vector<ModelPoint> coords,
                                          std::vector<Simplex> simplices);

  std::size_t num_vertices() const { return num_vertices_; }
  bool has_coords() const { return !coords_.empty() || num_vertices_ == 0; }
  const std::vector<ModelPoint>& coords() const { return coords_; }
  const ModelPoint& coord(std::uint32_t v) const { return coords_.at(v); }
  std::optional<std::uint32_t> find_vertex(const ModelPoint& p) const;

  /// Maximal simplices, sorted.
  const std::vector<Simplex>& facets() const { return facets_; }
  bool empty() const { return facets_.empty(); }

  /// -1 for the empty complex.
  int dim() const;

  /// All k-simplices, sorted lexicographically.
  const std::vector<Simplex>& faces(int k) const;
  bool contains(const Simplex& s) const;
  std::vector<std::size_t> f_vector() const;
  std::int64_t euler_characteristic() const;
  bool is_pure() const;

  /// Number of top simplices containing each codimension-1 face.
  std::map<Simplex, int> ridge_degrees() const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.num_vertices_ == b.num_vertices_ && a.facets_ == b.facets_ && a.coords_ == b.coords_;
  }

 private:
  std::size_t num_vertices_ = 0;
  std::vector<ModelPoint> coords_;
  std::vector<Simplex> facets_;
  mutable std::vector<std::vector<Simplex>> faces_;  // lazily filled by dimension
  void build_faces() const;
};

/// Pure of dimension d with every (d-1)-face in at most two top simplices (or exactly
/// two when `closed`).
bool is_pseudomanifold(const SimplicialComplex& k, bool closed);

/// Closure of the codimension-1 faces lying in exactly one top simplex. Vertices are
/// renumbered compactly, keeping coordinates. Throws std::invalid_argument on a
/// non-pure complex.
SimplicialComplex boundary_subcomplex(const SimplicialComplex& k);

/// Subcomplex generated by the given simplices of `k`, with compact renumbering.
SimplicialComplex induced_subcomplex(const SimplicialComplex& k, const std::vector<Simplex>& simplices);

struct IsomorphismResult {
  bool isomorphic = false;
  std::vector<std::uint32_t> vertex_map;  // k1 id -> k2 id
  std::string mismatch;
};

using CoordinateMap = std::function<ModelPoint(const ModelPoint&)>;

/// Maps every vertex of k1 through `hint` and looks the image up among k2's
/// coordinates; succeeds when this is a bijection carrying facets onto facets.
IsomorphismResult complex_isomorphic(const SimplicialComplex& k1, const SimplicialComplex& k2,
                                     const CoordinateMap& hint);

/// Drops the last coordinate.
ModelPoint drop_last(const ModelPoint& z);

/// {"n", "m", "vertices": [[["r","a"], ...], ...], "simplices": [[...], ...]}.
/// Abstract complexes write "vertices" as a count.
std::string complex_to_json(const SimplicialComplex& k, int n, int m);
SimplicialComplex complex_from_json(const std::string& text);

}  // namespace phasesphere
