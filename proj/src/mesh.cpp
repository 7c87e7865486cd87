#include "phasesphere/mesh.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace phasesphere {

std::uint32_t VertexPool::id(const ModelPoint& p) {
  const auto [it, inserted] = index_.emplace(p, static_cast<std::uint32_t>(points_.size()));
  if (inserted) points_.push_back(p);
  return it->second;
}

namespace {

// Signed offset of b from a in turns, in [-1/2, 1/2).
Rational centered_offset(const Angle& a, const Angle& b) {
  Rational d = (b - a).turns();
  if (d >= Rational(1, 2)) d -= 1;
  return d;
}

// A factor complex whose top simplices list their vertices in staircase order.
struct OrderedFactor {
  std::vector<std::vector<std::uint32_t>> simplices;
  std::size_t dim() const { return simplices.front().size() - 1; }
};

OrderedFactor interval_factor(int m) {
  OrderedFactor f;
  for (int i = 0; i < m; ++i) f.simplices.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i + 1)});
  return f;
}

// Vertex 0 is the centre, vertex 1 + i the ring point at angle i/(2m).
OrderedFactor fan_factor(int m) {
  OrderedFactor f;
  const std::uint32_t ring = static_cast<std::uint32_t>(2 * m);
  for (std::uint32_t i = 0; i < ring; ++i) f.simplices.push_back({0, 1 + i, 1 + (i + 1) % ring});
  return f;
}

// Directed circle with 2m edges i -> i+1.
OrderedFactor circle_factor(int m) {
  OrderedFactor f;
  const std::uint32_t ring = static_cast<std::uint32_t>(2 * m);
  for (std::uint32_t i = 0; i < ring; ++i) f.simplices.push_back({i, (i + 1) % ring});
  return f;
}

using Tuple = std::vector<std::uint32_t>;

// Calls `emit` with every staircase simplex of the product, as a chain of tuples of
// factor vertex ids.
void staircase_product(const std::vector<OrderedFactor>& factors,
                       const std::function<void(const std::vector<Tuple>&)>& emit) {
  const std::size_t r = factors.size();
  std::vector<std::size_t> choice(r, 0);
  std::vector<std::size_t> remaining(r), pos(r);
  std::vector<Tuple> chain;
  Tuple current(r);

  std::function<void()> walk = [&]() {
    bool done = true;
    for (std::size_t i = 0; i < r; ++i) {
      if (remaining[i] == 0) continue;
      done = false;
      --remaining[i];
      ++pos[i];
      current[i] = factors[i].simplices[choice[i]][pos[i]];
      chain.push_back(current);
      walk();
      chain.pop_back();
      ++remaining[i];
      --pos[i];
      current[i] = factors[i].simplices[choice[i]][pos[i]];
    }
    if (done) emit(chain);
  };

  while (true) {
    for (std::size_t i = 0; i < r; ++i) {
      remaining[i] = factors[i].dim();
      pos[i] = 0;
      current[i] = factors[i].simplices[choice[i]][0];
    }
    chain.assign(1, current);
    walk();
    std::size_t i = r;
    while (i > 0 && ++choice[i - 1] == factors[i - 1].simplices.size()) choice[--i] = 0;
    if (i == 0) break;
  }
}

Simplex normalized(const std::vector<std::uint32_t>& ids) {
  Simplex s(ids);
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

void check_resolution(int m) {
  if (m < 2 || m % 2 != 0) throw std::invalid_argument("mesh resolution m must be even and >= 2");
}

DiscPoint ring_point(std::uint32_t fan_vertex, int m) {
  if (fan_vertex == 0) return DiscPoint::center();
  return DiscPoint::on_circle(Angle(static_cast<std::int64_t>(fan_vertex - 1), 2 * m));
}

std::set<Simplex> closure(const std::vector<Simplex>& tops) {
  std::set<Simplex> out;
  for (const Simplex& s : tops) {
    const std::size_t k = s.size();
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << k); ++mask) {
      Simplex f;
      for (std::size_t i = 0; i < k; ++i) {
        if (mask >> i & 1U) f.push_back(s[i]);
      }
      out.insert(std::move(f));
    }
  }
  return out;
}

std::string simplex_string(const std::vector<ModelPoint>& pts, const Simplex& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += " | ";
    out += to_string(pts[s[i]]);
  }
  return out + "]";
}

}  // namespace

ModelPoint barycenter(const std::vector<ModelPoint>& points) {
  if (points.empty()) throw std::invalid_argument("barycenter of no points");
  const std::size_t n = points.front().size();
  const Rational count(static_cast<std::int64_t>(points.size()));
  ModelPoint out;
  for (std::size_t c = 0; c < n; ++c) {
    Rational radius(0);
    std::optional<Angle> base;
    Rational offset(0);
    std::int64_t on = 0;
    for (const ModelPoint& p : points) {
      radius += p[c].radius();
      if (p[c].is_center()) continue;
      if (!base) base = p[c].angle();
      offset += centered_offset(*base, p[c].angle());
      ++on;
    }
    radius /= count;
    out.coords.push_back(radius == 0 ? DiscPoint::center()
                                     : DiscPoint(radius, Angle(base->turns() + offset / on)));
  }
  return out;
}

ModelPoint barycenter(const SimplicialComplex& k, const Simplex& s) {
  std::vector<ModelPoint> pts;
  for (std::uint32_t v : s) pts.push_back(k.coord(v));
  return barycenter(pts);
}

std::vector<Simplex> mesh_cell_simplices(const CellLabel& x, int m, VertexPool& pool) {
  check_resolution(m);
  if (!in_Pn(x)) throw std::invalid_argument("mesh_cell: label " + to_string(x) + " is not a cell");
  const std::size_t n = x.size();
  std::vector<OrderedFactor> factors;
  std::vector<std::size_t> factor_of(n, SIZE_MAX);
  for (std::size_t a = 0; a < n; ++a) {
    if (x[a] == PLabel::U || x[a] == PLabel::L) {
      factor_of[a] = factors.size();
      factors.push_back(interval_factor(m));
    } else if (x[a] == PLabel::Phi) {
      factor_of[a] = factors.size();
      factors.push_back(fan_factor(m));
    }
  }
  const auto uppers = x.indices_of(PLabel::U);
  const auto lowers = x.indices_of(PLabel::L);
  auto embed = [&](const Tuple& t) {
    ModelPoint z;
    for (std::size_t a = 0; a < n; ++a) {
      switch (x[a]) {
        case PLabel::One: z.coords.push_back(DiscPoint::on_circle(Angle())); break;
        case PLabel::MinusOne: z.coords.push_back(DiscPoint::on_circle(Angle(1, 2))); break;
        case PLabel::U: z.coords.push_back(upper_point(Rational(t[factor_of[a]], m))); break;
        case PLabel::L: z.coords.push_back(lower_point(Rational(t[factor_of[a]], m))); break;
        case PLabel::Phi: z.coords.push_back(ring_point(t[factor_of[a]], m)); break;
      }
    }
    return z;
  };
  auto admissible = [&](const Tuple& t) {
    for (std::size_t u : uppers) {
      for (std::size_t l : lowers) {
        if (t[factor_of[l]] > t[factor_of[u]]) return false;
      }
    }
    return true;
  };

  std::vector<Simplex> out;
  if (factors.empty()) {
    out.push_back({pool.id(embed({}))});
    return out;
  }
  staircase_product(factors, [&](const std::vector<Tuple>& chain) {
    if (!std::all_of(chain.begin(), chain.end(), admissible)) return;
    std::vector<std::uint32_t> ids;
    for (const Tuple& t : chain) ids.push_back(pool.id(embed(t)));
    Simplex s = normalized(ids);
    if (s.size() == chain.size()) out.push_back(std::move(s));
  });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SimplicialComplex mesh_cell(const CellLabel& x, int m) {
  VertexPool pool;
  auto simplices = mesh_cell_simplices(x, m, pool);
  return SimplicialComplex::from_simplices(pool.points(), std::move(simplices));
}

SimplicialComplex disc_fan(int m) {
  check_resolution(m);
  std::vector<Simplex> tris;
  for (const auto& s : fan_factor(m).simplices) tris.push_back(normalized(s));
  return SimplicialComplex::from_simplices(static_cast<std::size_t>(2 * m + 1), tris);
}

SliceAssembly assemble_slice_charts(std::size_t n, int m) {
  if (n < 3) throw std::invalid_argument("assemble_slice requires n >= 3");
  check_resolution(m);
  SliceAssembly out;
  VertexPool pool;
  std::vector<std::vector<Simplex>> tops;
  for (std::size_t j = 0; j + 1 < n; ++j) {
    for (std::size_t k = 0; k + 1 < n; ++k) {
      out.charts.push_back(oriented_generator(j, k, n));
      tops.push_back(mesh_cell_simplices(out.charts.back(), m, pool));
      out.chart_facets.push_back(tops.back().size());
    }
  }
  const auto& pts = pool.points();

  std::map<Simplex, std::size_t> owner;
  std::vector<Simplex> all;
  for (std::size_t c = 0; c < tops.size(); ++c) {
    for (const Simplex& s : tops[c]) {
      const auto [it, inserted] = owner.emplace(s, c);
      if (!inserted) {
        throw MeshValidityError("top simplex " + simplex_string(pts, s) + " produced by charts " +
                                to_string(out.charts[it->second]) + " and " + to_string(out.charts[c]));
      }
      all.push_back(s);
    }
  }

  // Any face of chart B lying in B(X_A) must be a face of chart A.
  std::vector<std::set<Simplex>> faces;
  for (const auto& t : tops) faces.push_back(closure(t));
  for (std::size_t a = 0; a < tops.size(); ++a) {
    std::vector<bool> inside(pts.size());
    for (std::size_t v = 0; v < pts.size(); ++v) inside[v] = bx_member(out.charts[a], pts[v], BallMode::Closed);
    for (std::size_t b = 0; b < tops.size(); ++b) {
      if (a == b) continue;
      for (const Simplex& f : faces[b]) {
        if (!std::all_of(f.begin(), f.end(), [&](std::uint32_t v) { return inside[v]; })) continue;
        std::vector<ModelPoint> corner;
        for (std::uint32_t v : f) corner.push_back(pts[v]);
        if (!bx_member(out.charts[a], barycenter(corner), BallMode::Closed)) continue;
        if (!faces[a].count(f)) {
          throw MeshValidityError("face " + simplex_string(pts, f) + " of chart " +
                                  to_string(out.charts[b]) + " lies in chart " +
                                  to_string(out.charts[a]) + " but is not one of its faces");
        }
      }
    }
  }
  out.complex = SimplicialComplex::from_simplices(pts, std::move(all));
  return out;
}

SimplicialComplex assemble_slice(std::size_t n, int m) { return assemble_slice_charts(n, m).complex; }

namespace {

FullAssembly full_circle(int m) {
  FullAssembly out;
  std::vector<ModelPoint> pts;
  std::vector<Simplex> edges;
  const std::uint32_t ring = static_cast<std::uint32_t>(2 * m);
  for (std::uint32_t i = 0; i < ring; ++i) {
    const Angle a(static_cast<std::int64_t>(i), 2 * m);
    pts.push_back(ModelPoint{{DiscPoint::on_circle(a), DiscPoint::on_circle(a.antipode())}});
    edges.push_back(normalized({i, (i + 1) % ring}));
    const Angle mid(static_cast<std::int64_t>(2 * i + 1), 4 * m);
    out.carrier_points.push_back(ModelPoint{{DiscPoint::on_circle(mid), DiscPoint::on_circle(mid.antipode())}});
  }
  out.complex = SimplicialComplex::from_simplices(std::move(pts), std::move(edges));
  out.glued = true;
  return out;
}

bool on_torus(const ModelPoint& z) {
  return z[0].on_circle() && z[1].on_circle() && z[2].on_circle() && z[1].angle() == z[0].angle().antipode();
}

// Staircase order of a slice triangle: boundary edges run from angle a + 1/(2m) to a
// (clockwise in the first coordinate), every other edge from the lower rank to the
// higher, with all boundary vertices ranked before interior ones.
std::vector<std::uint32_t> oriented_triangle(const Simplex& tri, const SimplicialComplex& slice,
                                             const std::set<Simplex>& boundary_edges,
                                             const std::vector<std::size_t>& rank, int m) {
  const Angle step(1, 2 * m);
  auto before = [&](std::uint32_t p, std::uint32_t q) {
    if (boundary_edges.count(normalized({p, q}))) {
      return slice.coord(p)[0].angle() == slice.coord(q)[0].angle() + step;
    }
    return rank[p] < rank[q];
  };
  std::vector<std::uint32_t> order(tri.begin(), tri.end());
  std::sort(order.begin(), order.end(), [&](std::uint32_t p, std::uint32_t q) { return before(p, q); });
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t k = i + 1; k < order.size(); ++k) {
      if (!before(order[i], order[k])) {
        throw MeshValidityError("slice triangle " + simplex_string(slice.coords(), tri) +
                                " has a cyclic edge orientation");
      }
    }
  }
  return order;
}

// Mean of circle grid indices along a chain, unwrapping the edge 2m-1 -> 0.
Angle mean_circle_angle(const std::vector<Tuple>& chain, std::size_t slot, int m) {
  const std::uint32_t last = static_cast<std::uint32_t>(2 * m - 1);
  const bool wraps = std::any_of(chain.begin(), chain.end(), [&](const Tuple& t) { return t[slot] == last; });
  std::int64_t sum = 0;
  for (const Tuple& t : chain) sum += (wraps && t[slot] == 0) ? 2 * m : t[slot];
  return Angle(sum, 2 * m * static_cast<std::int64_t>(chain.size()));
}

std::vector<std::uint32_t> map_by_coords(const SimplicialComplex& from, const SimplicialComplex& to) {
  std::map<ModelPoint, std::uint32_t> index;
  for (std::uint32_t v = 0; v < to.num_vertices(); ++v) index.emplace(to.coord(v), v);
  std::vector<std::uint32_t> out;
  for (const ModelPoint& p : from.coords()) out.push_back(index.at(p));
  return out;
}

FullAssembly full_three(int m) {
  FullAssembly out;
  const SimplicialComplex slice = assemble_slice(3, m);
  std::set<Simplex> boundary_edges;
  for (const auto& [face, d] : slice.ridge_degrees()) {
    if (d == 1) boundary_edges.insert(face);
  }
  std::vector<bool> on_boundary(slice.num_vertices(), false);
  for (const Simplex& e : boundary_edges) {
    for (std::uint32_t v : e) on_boundary[v] = true;
  }
  std::vector<std::size_t> rank(slice.num_vertices());
  std::size_t next = 0;
  for (std::uint32_t v = 0; v < slice.num_vertices(); ++v) {
    if (on_boundary[v]) rank[v] = next++;
  }
  for (std::uint32_t v = 0; v < slice.num_vertices(); ++v) {
    if (!on_boundary[v]) rank[v] = next++;
  }

  OrderedFactor slice_factor;
  for (const Simplex& tri : slice.facets()) {
    slice_factor.simplices.push_back(oriented_triangle(tri, slice, boundary_edges, rank, m));
  }

  VertexPool pool_a, pool_b, pool;
  std::vector<Simplex> tops_a, tops_b;
  staircase_product({slice_factor, circle_factor(m)}, [&](const std::vector<Tuple>& chain) {
    std::vector<std::uint32_t> ids;
    for (const Tuple& t : chain) {
      ids.push_back(pool_a.id(rotate(Angle(static_cast<std::int64_t>(t[1]), 2 * m), slice.coord(t[0]))));
    }
    tops_a.push_back(normalized(ids));
    std::vector<ModelPoint> base;
    for (const Tuple& t : chain) base.push_back(slice.coord(t[0]));
    out.carrier_points.push_back(rotate(mean_circle_angle(chain, 1, m), barycenter(base)));
  });
  staircase_product({circle_factor(m), fan_factor(m)}, [&](const std::vector<Tuple>& chain) {
    std::vector<std::uint32_t> ids;
    for (const Tuple& t : chain) {
      const Angle y(static_cast<std::int64_t>(t[0]), 2 * m);
      ids.push_back(pool_b.id(ModelPoint{
          {DiscPoint::on_circle(y), DiscPoint::on_circle(y.antipode()), ring_point(t[1], m)}}));
    }
    tops_b.push_back(normalized(ids));
    std::vector<ModelPoint> disc;
    for (const Tuple& t : chain) disc.push_back(ModelPoint{{ring_point(t[1], m)}});
    const Angle y = mean_circle_angle(chain, 0, m);
    out.carrier_points.push_back(
        ModelPoint{{DiscPoint::on_circle(y), DiscPoint::on_circle(y.antipode()), barycenter(disc)[0]}});
  });
  out.region_a = SimplicialComplex::from_simplices(pool_a.points(), tops_a);
  out.region_b = SimplicialComplex::from_simplices(pool_b.points(), tops_b);

  // The torus as triangulated by each side.
  auto torus_triangles = [](const SimplicialComplex& k) {
    std::set<std::set<ModelPoint>> tris;
    for (const Simplex& s : k.faces(2)) {
      if (std::all_of(s.begin(), s.end(), [&](std::uint32_t v) { return on_torus(k.coord(v)); })) {
        std::set<ModelPoint> t;
        for (std::uint32_t v : s) t.insert(k.coord(v));
        tris.insert(std::move(t));
      }
    }
    return tris;
  };
  const auto torus_a = torus_triangles(out.region_a);
  const auto torus_b = torus_triangles(out.region_b);

  std::vector<Simplex> torus_in_a;
  for (const Simplex& s : out.region_a.faces(2)) {
    if (std::all_of(s.begin(), s.end(), [&](std::uint32_t v) { return on_torus(out.region_a.coord(v)); })) {
      torus_in_a.push_back(s);
    }
  }
  out.interface = induced_subcomplex(out.region_a, torus_in_a);
  out.interface_to_a = map_by_coords(out.interface, out.region_a);

  if (torus_a != torus_b) {
    out.glued = false;
    out.failure = "interface torus triangulations differ (" + std::to_string(torus_a.size()) +
                  " vs " + std::to_string(torus_b.size()) + " triangles)";
    return out;
  }
  out.interface_to_b = map_by_coords(out.interface, out.region_b);

  std::vector<Simplex> all;
  std::set<Simplex> seen;
  for (const auto* part : {&out.region_a, &out.region_b}) {
    for (const Simplex& s : part->facets()) {
      std::vector<std::uint32_t> ids;
      for (std::uint32_t v : s) ids.push_back(pool.id(part->coord(v)));
      Simplex merged = normalized(ids);
      if (merged.size() != s.size() || !seen.insert(merged).second) {
        out.glued = false;
        out.failure = "simplex " + simplex_string(pool.points(), merged) + " collapses or repeats";
        return out;
      }
      all.push_back(std::move(merged));
    }
  }
  out.complex = SimplicialComplex::from_simplices(pool.points(), std::move(all));
  out.glued = true;
  return out;
}

}  // namespace

FullAssembly assemble_full(std::size_t n, int m) {
  check_resolution(m);
  if (n == 2) return full_circle(m);
  if (n == 3) return full_three(m);
  throw std::invalid_argument("assemble_full supports n = 2 and n = 3 only");
}

}  // namespace phasesphere
