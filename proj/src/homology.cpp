#include "phasesphere/homology.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>

#include <gmpxx.h>

namespace phasesphere {

std::string to_string(Field f) { return f == Field::Rationals ? "q" : "f2"; }

Field parse_field(std::string_view text) {
  if (text == "q" || text == "Q" || text == "rationals") return Field::Rationals;
  if (text == "f2" || text == "F2" || text == "gf2") return Field::GF2;
  throw std::invalid_argument("unknown field '" + std::string(text) + "' (expected q or f2)");
}

namespace {

using Entry = std::pair<std::uint32_t, mpz_class>;
using Column = std::vector<Entry>;  // sorted by row, no zero entries

// a*x - b*y, reduced mod 2 over F2.
Column combine(const Column& x, const mpz_class& a, const Column& y, const mpz_class& b, Field field) {
  Column out;
  out.reserve(x.size() + y.size());
  auto push = [&](std::uint32_t row, mpz_class v) {
    if (field == Field::GF2) v = v % 2;
    if (v != 0) out.emplace_back(row, std::move(v));
  };
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      push(x[i].first, a * x[i].second);
      ++i;
    } else if (i == x.size() || y[j].first < x[i].first) {
      push(y[j].first, -b * y[j].second);
      ++j;
    } else {
      push(x[i].first, a * x[i].second - b * y[j].second);
      ++i;
      ++j;
    }
  }
  return out;
}

void divide_content(Column& c, Column& v) {
  mpz_class g = 0;
  for (const auto& [r, x] : c) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  for (const auto& [r, x] : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g <= 1) return;
  for (auto& e : c) e.second /= g;
  for (auto& e : v) e.second /= g;
}

// Column reduction with pivots at the lowest row; fraction-free over Q.
class Reducer {
 public:
  Reducer(Field field, bool track) : field_(field), track_(track) {}

  void add(Column col, Column v = {}) {
    while (!col.empty()) {
      const auto it = owner_.find(col.back().first);
      if (it == owner_.end()) {
        owner_.emplace(col.back().first, pivots_.size());
        pivots_.push_back(std::move(col));
        if (track_) transforms_.push_back(std::move(v));
        return;
      }
      const Column& p = pivots_[it->second];
      const mpz_class a = p.back().second;
      const mpz_class b = col.back().second;
      col = combine(col, a, p, b, field_);
      if (track_) v = combine(v, a, transforms_[it->second], b, field_);
      if (field_ == Field::Rationals) divide_content(col, v);
    }
    if (track_) kernel.push_back(std::move(v));
  }

  std::size_t rank() const { return pivots_.size(); }
  std::vector<Column> kernel;

 private:
  Field field_;
  bool track_;
  std::unordered_map<std::uint32_t, std::size_t> owner_;
  std::vector<Column> pivots_;
  std::vector<Column> transforms_;
};

std::uint32_t index_of(const std::vector<Simplex>& layer, const Simplex& s) {
  const auto it = std::lower_bound(layer.begin(), layer.end(), s);
  if (it == layer.end() || *it != s) throw std::logic_error("face missing from complex");
  return static_cast<std::uint32_t>(it - layer.begin());
}

Column boundary_column(const SimplicialComplex& k, const Simplex& s) {
  Column col;
  const auto& layer = k.faces(static_cast<int>(s.size()) - 2);
  for (std::size_t i = 0; i < s.size(); ++i) {
    Simplex f = s;
    f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
    col.emplace_back(index_of(layer, f), i % 2 == 0 ? 1 : -1);
  }
  std::sort(col.begin(), col.end(), [](const Entry& x, const Entry& y) { return x.first < y.first; });
  return col;
}

Column shifted(Column c, std::uint32_t offset) {
  for (auto& e : c) e.first += offset;
  return c;
}

// Image of a chain of c's dim-simplices under the vertex map, as a chain of target's.
Column push_forward(const SimplicialComplex& c, const SimplicialComplex& target,
                    const std::vector<std::uint32_t>& map, int dim, const Column& chain, Field field) {
  std::map<std::uint32_t, mpz_class> acc;
  const auto& source_layer = c.faces(dim);
  const auto& target_layer = target.faces(dim);
  for (const auto& [row, coef] : chain) {
    std::vector<std::uint32_t> image;
    for (std::uint32_t v : source_layer[row]) image.push_back(map.at(v));
    int sign = 1;
    for (std::size_t i = 0; i < image.size(); ++i) {
      for (std::size_t j = i + 1; j < image.size(); ++j) {
        if (image[i] == image[j]) throw std::invalid_argument("inclusion map collapses a simplex");
        if (image[i] > image[j]) sign = -sign;
      }
    }
    std::sort(image.begin(), image.end());
    const auto it = std::lower_bound(target_layer.begin(), target_layer.end(), image);
    if (it == target_layer.end() || *it != image) {
      throw std::invalid_argument("inclusion map sends a simplex outside its target");
    }
    acc[static_cast<std::uint32_t>(it - target_layer.begin())] += sign * coef;
  }
  Column out;
  for (auto& [row, v] : acc) {
    if (field == Field::GF2) v = v % 2;
    if (v != 0) out.emplace_back(row, v);
  }
  return out;
}

}  // namespace

std::size_t boundary_rank(const SimplicialComplex& k, int dim, Field field) {
  if (dim <= 0) return 0;
  Reducer r(field, false);
  for (const Simplex& s : k.faces(dim)) r.add(boundary_column(k, s));
  return r.rank();
}

BettiReport betti(const SimplicialComplex& k, Field field) {
  BettiReport report;
  report.field = field;
  const int d = k.dim();
  std::vector<std::size_t> ranks(static_cast<std::size_t>(d + 2), 0);
  for (int i = 1; i <= d; ++i) ranks[static_cast<std::size_t>(i)] = boundary_rank(k, i, field);
  for (int i = 0; i <= d; ++i) {
    const std::size_t n = k.faces(i).size();
    report.betti.push_back(n - ranks[static_cast<std::size_t>(i)] - ranks[static_cast<std::size_t>(i + 1)]);
  }
  report.euler = k.euler_characteristic();
  return report;
}

std::int64_t euler_characteristic(const SimplicialComplex& k) { return k.euler_characteristic(); }

SimplicialComplex order_complex_of_poset(std::size_t count,
                                         const std::function<bool(std::size_t, std::size_t)>& leq) {
  std::vector<std::vector<bool>> le(count, std::vector<bool>(count));
  for (std::size_t x = 0; x < count; ++x) {
    for (std::size_t y = 0; y < count; ++y) le[x][y] = leq(x, y);
  }
  for (std::size_t x = 0; x < count; ++x) {
    if (!le[x][x]) throw std::invalid_argument("order oracle is not reflexive at " + std::to_string(x));
    for (std::size_t y = x + 1; y < count; ++y) {
      if (le[x][y] && le[y][x]) {
        throw std::invalid_argument("order oracle is not antisymmetric at " + std::to_string(x) + ", " +
                                    std::to_string(y));
      }
    }
  }
  for (std::size_t x = 0; x < count; ++x) {
    for (std::size_t y = 0; y < count; ++y) {
      if (!le[x][y]) continue;
      for (std::size_t z = 0; z < count; ++z) {
        if (le[y][z] && !le[x][z]) {
          throw std::invalid_argument("order oracle is not transitive at " + std::to_string(x) + ", " +
                                      std::to_string(y) + ", " + std::to_string(z));
        }
      }
    }
  }
  // Maximal chains follow cover relations from a minimal to a maximal element.
  std::vector<std::vector<std::uint32_t>> covers(count);
  std::vector<bool> minimal(count, true);
  for (std::size_t x = 0; x < count; ++x) {
    for (std::size_t y = 0; y < count; ++y) {
      if (x == y || !le[x][y]) continue;
      minimal[y] = false;
      bool cover = true;
      for (std::size_t z = 0; z < count && cover; ++z) {
        cover = z == x || z == y || !(le[x][z] && le[z][y]);
      }
      if (cover) covers[x].push_back(static_cast<std::uint32_t>(y));
    }
  }
  std::vector<Simplex> chains;
  std::vector<std::uint32_t> chain;
  std::function<void(std::uint32_t)> walk = [&](std::uint32_t x) {
    chain.push_back(x);
    if (covers[x].empty()) {
      chains.push_back(chain);
    } else {
      for (std::uint32_t y : covers[x]) walk(y);
    }
    chain.pop_back();
  };
  for (std::size_t x = 0; x < count; ++x) {
    if (minimal[x]) walk(static_cast<std::uint32_t>(x));
  }
  return SimplicialComplex::from_simplices(count, std::move(chains));
}

SimplicialComplex face_poset_order_complex(const SimplicialComplex& k) {
  std::vector<Simplex> faces;
  for (int d = 0; d <= k.dim(); ++d) {
    for (const Simplex& s : k.faces(d)) faces.push_back(s);
  }
  return order_complex_of_poset(faces.size(), [&](std::size_t x, std::size_t y) {
    return std::includes(faces[y].begin(), faces[y].end(), faces[x].begin(), faces[x].end());
  });
}

namespace {

void require_inclusion(const SimplicialComplex& c, const SimplicialComplex& target,
                       const std::vector<std::uint32_t>& map, const char* name) {
  std::vector<bool> used(target.num_vertices(), false);
  for (std::uint32_t v : map) {
    if (v >= target.num_vertices() || used[v]) {
      throw std::invalid_argument(std::string("map into ") + name + " is not injective on vertices");
    }
    used[v] = true;
  }
  for (const Simplex& s : c.facets()) {
    Simplex image;
    for (std::uint32_t v : s) image.push_back(map[v]);
    std::sort(image.begin(), image.end());
    if (!target.contains(image)) {
      throw std::invalid_argument(std::string("map into ") + name + " does not carry a simplex onto a simplex");
    }
  }
}

}  // namespace

MayerVietorisResult mayer_vietoris_assemble(const SimplicialComplex& a, const SimplicialComplex& b,
                                            const SimplicialComplex& c,
                                            const std::vector<std::uint32_t>& c_to_a,
                                            const std::vector<std::uint32_t>& c_to_b, Field field) {
  if (c_to_a.size() != c.num_vertices() || c_to_b.size() != c.num_vertices()) {
    throw std::invalid_argument("inclusion maps must cover every vertex of the intersection");
  }
  require_inclusion(c, a, c_to_a, "A");
  require_inclusion(c, b, c_to_b, "B");
  const int top = std::max(a.dim(), b.dim());
  const BettiReport ba = betti(a, field), bb = betti(b, field), bc = betti(c, field);
  auto at = [](const std::vector<std::size_t>& v, int k) {
    return k >= 0 && k < static_cast<int>(v.size()) ? v[static_cast<std::size_t>(k)] : std::size_t{0};
  };

  MayerVietorisResult out;
  for (int k = 0; k <= top; ++k) {
    if (k > c.dim()) {
      out.image_rank.push_back(0);
      continue;
    }
    // A basis of the k-cycles of C.
    Reducer cycles(field, true);
    const auto& layer = c.faces(k);
    for (std::uint32_t i = 0; i < layer.size(); ++i) {
      Column unit{{i, 1}};
      cycles.add(k == 0 ? Column{} : boundary_column(c, layer[i]), unit);
    }
    const std::uint32_t na = static_cast<std::uint32_t>(a.faces(k).size());
    Reducer joint(field, false);
    std::size_t boundary_ranks = 0;
    {
      Reducer ra(field, false), rb(field, false);
      for (const Simplex& s : a.faces(k + 1)) {
        ra.add(boundary_column(a, s));
        joint.add(boundary_column(a, s));
      }
      for (const Simplex& s : b.faces(k + 1)) {
        rb.add(boundary_column(b, s));
        joint.add(shifted(boundary_column(b, s), na));
      }
      boundary_ranks = ra.rank() + rb.rank();
    }
    for (const Column& z : cycles.kernel) {
      Column ia = push_forward(c, a, c_to_a, k, z, field);
      Column ib = push_forward(c, b, c_to_b, k, z, field);
      Column col = std::move(ia);
      for (auto& [row, v] : ib) col.emplace_back(row + na, -v);
      joint.add(std::move(col));
    }
    out.image_rank.push_back(joint.rank() - boundary_ranks);
  }
  for (int k = 0; k <= top; ++k) {
    std::size_t bk = at(ba.betti, k) + at(bb.betti, k) - out.image_rank[static_cast<std::size_t>(k)];
    if (k > 0) bk += at(bc.betti, k - 1) - out.image_rank[static_cast<std::size_t>(k - 1)];
    out.betti.push_back(bk);
  }
  return out;
}

}  // namespace phasesphere
