#include "phasesphere/complex.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include <json.hpp>

namespace phasesphere {

namespace {

std::vector<Simplex> maximal_only(std::vector<Simplex> simplices) {
  std::sort(simplices.begin(), simplices.end(),
            [](const Simplex& a, const Simplex& b) {
              return a.size() != b.size() ? a.size() > b.size() : a < b;
            });
  simplices.erase(std::unique(simplices.begin(), simplices.end()), simplices.end());
  std::set<Simplex> faces_of_kept;
  std::vector<Simplex> kept;
  for (Simplex& s : simplices) {
    if (faces_of_kept.count(s)) continue;
    // Register every proper face so smaller simplices inside it are dropped.
    const std::size_t k = s.size();
    for (std::uint32_t mask = 1; mask + 1 < (std::uint32_t{1} << k); ++mask) {
      Simplex f;
      for (std::size_t i = 0; i < k; ++i) {
        if (mask >> i & 1U) f.push_back(s[i]);
      }
      faces_of_kept.insert(std::move(f));
    }
    kept.push_back(std::move(s));
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

}  // namespace

SimplicialComplex SimplicialComplex::from_simplices(std::size_t num_vertices,
                                                    std::vector<Simplex> simplices) {
  for (Simplex& s : simplices) {
    std::sort(s.begin(), s.end());
    if (s.empty()) throw std::invalid_argument("empty simplex");
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
      throw std::invalid_argument("simplex with a repeated vertex");
    }
    if (s.back() >= num_vertices) throw std::invalid_argument("simplex vertex id out of range");
    if (s.size() > 24) throw std::invalid_argument("simplex dimension too large");
  }
  SimplicialComplex k;
  k.num_vertices_ = num_vertices;
  k.facets_ = maximal_only(std::move(simplices));
  return k;
}

SimplicialComplex SimplicialComplex::from_simplices(std::vector<ModelPoint> coords,
                                                    std::vector<Simplex> simplices) {
  std::set<ModelPoint> seen;
  for (const ModelPoint& p : coords) {
    if (!seen.insert(p).second) throw std::invalid_argument("duplicate vertex coordinates " + to_string(p));
  }
  SimplicialComplex k = from_simplices(coords.size(), std::move(simplices));
  k.coords_ = std::move(coords);
  return k;
}

std::optional<std::uint32_t> SimplicialComplex::find_vertex(const ModelPoint& p) const {
  for (std::uint32_t v = 0; v < coords_.size(); ++v) {
    if (coords_[v] == p) return v;
  }
  return std::nullopt;
}

int SimplicialComplex::dim() const {
  int d = -1;
  for (const Simplex& s : facets_) d = std::max(d, static_cast<int>(s.size()) - 1);
  return d;
}

void SimplicialComplex::build_faces() const {
  if (!faces_.empty() || facets_.empty()) return;
  std::vector<std::set<Simplex>> by_dim(static_cast<std::size_t>(dim() + 1));
  for (const Simplex& s : facets_) {
    const std::size_t k = s.size();
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << k); ++mask) {
      Simplex f;
      for (std::size_t i = 0; i < k; ++i) {
        if (mask >> i & 1U) f.push_back(s[i]);
      }
      by_dim[f.size() - 1].insert(std::move(f));
    }
  }
  for (auto& layer : by_dim) faces_.emplace_back(layer.begin(), layer.end());
}

const std::vector<Simplex>& SimplicialComplex::faces(int k) const {
  static const std::vector<Simplex> none;
  build_faces();
  if (k < 0 || k >= static_cast<int>(faces_.size())) return none;
  return faces_[static_cast<std::size_t>(k)];
}

bool SimplicialComplex::contains(const Simplex& s) const {
  const auto& layer = faces(static_cast<int>(s.size()) - 1);
  return std::binary_search(layer.begin(), layer.end(), s);
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
  std::vector<std::size_t> f;
  for (int k = 0; k <= dim(); ++k) f.push_back(faces(k).size());
  return f;
}

std::int64_t SimplicialComplex::euler_characteristic() const {
  std::int64_t chi = 0;
  const auto f = f_vector();
  for (std::size_t k = 0; k < f.size(); ++k) {
    chi += (k % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(f[k]);
  }
  return chi;
}

bool SimplicialComplex::is_pure() const {
  const int d = dim();
  return std::all_of(facets_.begin(), facets_.end(),
                     [d](const Simplex& s) { return static_cast<int>(s.size()) - 1 == d; });
}

std::map<Simplex, int> SimplicialComplex::ridge_degrees() const {
  std::map<Simplex, int> deg;
  const int d = dim();
  for (const Simplex& s : facets_) {
    if (static_cast<int>(s.size()) - 1 != d || s.size() < 2) continue;
    for (std::size_t i = 0; i < s.size(); ++i) {
      Simplex f = s;
      f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
      ++deg[f];
    }
  }
  return deg;
}

bool is_pseudomanifold(const SimplicialComplex& k, bool closed) {
  if (k.empty() || !k.is_pure()) return false;
  for (const auto& [face, d] : k.ridge_degrees()) {
    if (d > 2 || (closed && d != 2)) return false;
  }
  return true;
}

SimplicialComplex induced_subcomplex(const SimplicialComplex& k, const std::vector<Simplex>& simplices) {
  std::map<std::uint32_t, std::uint32_t> ids;
  for (const Simplex& s : simplices) {
    for (std::uint32_t v : s) ids.emplace(v, 0);
  }
  std::uint32_t next = 0;
  for (auto& [v, id] : ids) id = next++;
  std::vector<Simplex> renamed;
  for (const Simplex& s : simplices) {
    Simplex r;
    for (std::uint32_t v : s) r.push_back(ids.at(v));
    renamed.push_back(std::move(r));
  }
  if (!k.has_coords() || k.coords().empty()) return SimplicialComplex::from_simplices(ids.size(), renamed);
  std::vector<ModelPoint> coords;
  for (const auto& [v, id] : ids) coords.push_back(k.coord(v));
  return SimplicialComplex::from_simplices(std::move(coords), renamed);
}

SimplicialComplex boundary_subcomplex(const SimplicialComplex& k) {
  if (!k.is_pure()) throw std::invalid_argument("boundary of a non-pure complex");
  std::vector<Simplex> free_faces;
  for (const auto& [face, d] : k.ridge_degrees()) {
    if (d == 1) free_faces.push_back(face);
  }
  return induced_subcomplex(k, free_faces);
}

ModelPoint drop_last(const ModelPoint& z) {
  ModelPoint out = z;
  if (!out.coords.empty()) out.coords.pop_back();
  return out;
}

IsomorphismResult complex_isomorphic(const SimplicialComplex& k1, const SimplicialComplex& k2,
                                     const CoordinateMap& hint) {
  IsomorphismResult r;
  if (k1.num_vertices() != k2.num_vertices()) {
    r.mismatch = "vertex counts differ: " + std::to_string(k1.num_vertices()) + " vs " +
                 std::to_string(k2.num_vertices());
    return r;
  }
  if (k1.f_vector() != k2.f_vector()) {
    r.mismatch = "f-vectors differ";
    return r;
  }
  std::map<ModelPoint, std::uint32_t> index2;
  for (std::uint32_t v = 0; v < k2.num_vertices(); ++v) index2.emplace(k2.coord(v), v);
  std::vector<bool> hit(k2.num_vertices(), false);
  for (std::uint32_t v = 0; v < k1.num_vertices(); ++v) {
    const ModelPoint image = hint(k1.coord(v));
    const auto it = index2.find(image);
    if (it == index2.end()) {
      r.mismatch = "vertex " + to_string(k1.coord(v)) + " maps to " + to_string(image) +
                   ", which is not a vertex";
      r.vertex_map.clear();
      return r;
    }
    if (hit[it->second]) {
      r.mismatch = "vertex map is not injective at " + to_string(image);
      r.vertex_map.clear();
      return r;
    }
    hit[it->second] = true;
    r.vertex_map.push_back(it->second);
  }
  std::set<Simplex> facets2(k2.facets().begin(), k2.facets().end());
  for (const Simplex& s : k1.facets()) {
    Simplex image;
    for (std::uint32_t v : s) image.push_back(r.vertex_map[v]);
    std::sort(image.begin(), image.end());
    if (!facets2.count(image)) {
      r.mismatch = "facet image is not a facet";
      return r;
    }
  }
  r.isomorphic = k1.facets().size() == k2.facets().size();
  if (!r.isomorphic) r.mismatch = "facet counts differ";
  return r;
}

std::string complex_to_json(const SimplicialComplex& k, int n, int m) {
  nlohmann::ordered_json j;
  j["n"] = n;
  j["m"] = m;
  if (k.coords().empty()) {
    j["vertices"] = k.num_vertices();
  } else {
    nlohmann::ordered_json vs = nlohmann::ordered_json::array();
    for (const ModelPoint& p : k.coords()) {
      nlohmann::ordered_json pj = nlohmann::ordered_json::array();
      for (const DiscPoint& c : p.coords) {
        pj.push_back({to_string(c.radius()), to_string(c.angle().turns())});
      }
      vs.push_back(std::move(pj));
    }
    j["vertices"] = std::move(vs);
  }
  j["simplices"] = k.facets();
  return j.dump() + "\n";
}

SimplicialComplex complex_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("complex file: ") + e.what());
  }
  if (!j.contains("vertices") || !j.contains("simplices")) {
    throw std::invalid_argument("complex file needs \"vertices\" and \"simplices\"");
  }
  std::vector<Simplex> simplices;
  for (const auto& s : j.at("simplices")) simplices.push_back(s.get<Simplex>());
  const auto& vj = j.at("vertices");
  if (vj.is_number_unsigned()) return SimplicialComplex::from_simplices(vj.get<std::size_t>(), simplices);
  std::vector<ModelPoint> coords;
  for (const auto& pj : vj) {
    ModelPoint p;
    for (const auto& cj : pj) {
      p.coords.emplace_back(parse_rational(cj.at(0).get<std::string>()),
                            Angle(parse_rational(cj.at(1).get<std::string>())));
    }
    coords.push_back(std::move(p));
  }
  return SimplicialComplex::from_simplices(std::move(coords), simplices);
}

}  // namespace phasesphere
