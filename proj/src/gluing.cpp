#include "phasesphere/gluing.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <random>
#include <stdexcept>

namespace phasesphere {

std::string to_string(const std::vector<std::size_t>& subset) {
  std::string out = "{";
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(subset[i]);
  }
  return out + "}";
}

GluingFamily<CellLabel> lattice_family(std::vector<CellLabel> cells, int ambient_dim,
                                       NuFunction nu_fn) {
  GluingFamily<CellLabel> f;
  f.cells = std::move(cells);
  f.ambient_dim = ambient_dim;
  f.dim = nu_fn ? std::move(nu_fn) : NuFunction([](const CellLabel& x) { return nu(x); });
  f.meet = [](const std::vector<CellLabel>& xs) -> std::optional<CellLabel> {
    try {
      return meet(xs);
    } catch (const std::domain_error&) {
      return std::nullopt;
    }
  };
  f.in_boundary = [](const CellLabel& inner, const CellLabel& outer) { return less(inner, outer); };
  return f;
}

bool SliceClaimsReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const ClaimCheck& c) { return c.passed; });
}

bool in_slice_family(std::size_t j, const ModelPoint& z) {
  const std::size_t n = z.size();
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (bx_member(oriented_generator(j, k, n), z, BallMode::Closed)) return true;
  }
  return false;
}

namespace {

using Mask = std::uint32_t;

std::vector<std::size_t> bits(Mask mask) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < 32; ++i) {
    if (mask >> i & 1U) out.push_back(i);
  }
  return out;
}

std::string mask_string(Mask mask) { return to_string(bits(mask)); }

// ∧_{j ∈ J} X^(j,k)
CellLabel row_meet(Mask J, std::size_t k, std::size_t n) {
  std::vector<CellLabel> xs;
  for (std::size_t j : bits(J)) xs.push_back(oriented_generator(j, k, n));
  return meet(xs);
}

// ∧_{k ∈ J} X^(j,k)
CellLabel fixed_upper_meet(std::size_t j, Mask J, std::size_t n) {
  std::vector<CellLabel> xs;
  for (std::size_t k : bits(J)) xs.push_back(oriented_generator(j, k, n));
  return meet(xs);
}

ClaimCheck named(std::string name) {
  ClaimCheck c;
  c.name = std::move(name);
  return c;
}

void fail(ClaimCheck& c, const std::string& witness) {
  if (c.passed) c.witness = witness;
  c.passed = false;
}

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

// A point of the slice ambient {z_{n-1} = 1}, each coordinate drawn from a mixture
// of the two special points, the two closed half circles, and the open disc.
ModelPoint generic_slice_point(std::size_t n, std::mt19937_64& rng) {
  ModelPoint z;
  z.coords.resize(n);
  for (std::size_t a = 0; a + 1 < n; ++a) {
    const std::int64_t den = std::int64_t{4} << draw(rng, 3);
    const Rational t(static_cast<std::int64_t>(draw(rng, static_cast<std::uint64_t>(den) + 1)), den);
    switch (draw(rng, 5)) {
      case 0: z[a] = DiscPoint::on_circle(Angle()); break;
      case 1: z[a] = DiscPoint::on_circle(Angle(1, 2)); break;
      case 2: z[a] = upper_point(t); break;
      case 3: z[a] = lower_point(t); break;
      default: {
        const Rational r(static_cast<std::int64_t>(draw(rng, static_cast<std::uint64_t>(den))), den);
        z[a] = DiscPoint(r, Angle(static_cast<std::int64_t>(draw(rng, 4 * static_cast<std::uint64_t>(den))), 4 * den));
      }
    }
  }
  z[n - 1] = DiscPoint::on_circle(Angle());
  return z;
}

// Candidates for filtered containment checks: alternately generic points and
// samples of the given cells (which bias the draw towards the region of interest).
ModelPoint candidate(const std::vector<CellLabel>& near, std::size_t n, std::mt19937_64& rng) {
  if (near.empty() || draw(rng, 2) == 0) return generic_slice_point(n, rng);
  const CellLabel& x = near[draw(rng, near.size())];
  return bx_sample(x, SampleKind::Random, BallMode::Closed, rng);
}

class SliceVerifier {
 public:
  explicit SliceVerifier(const SliceClaimsOptions& o)
      : o_(o), n_(o.n), d_(2 * static_cast<int>(o.n) - 4) {
    nu_ = o.nu_fn ? o.nu_fn : NuFunction([](const CellLabel& x) { return nu(x); });
    for (Mask J = 1; J < (Mask{1} << (n_ - 1)); ++J) {
      if (std::popcount(J) > 1) subsets_.push_back(J);
    }
  }

  SliceClaimsReport run() {
    SliceClaimsReport report;
    report.n = n_;
    if (o_.combinatorial) {
      report.checks.push_back(generator_dimension());
      report.checks.push_back(family_gluing(false));
      report.checks.push_back(family_gluing(true));
      report.checks.push_back(meet_dimension());
      report.checks.push_back(intersection_gluing());
      report.checks.push_back(nested_boundary());
      report.checks.push_back(outer_gluing());
    }
    if (o_.samples == 0) return report;
    auto wanted = [&](const std::string& name) {
      return o_.sampled_only.empty() ||
             std::find(o_.sampled_only.begin(), o_.sampled_only.end(), name) != o_.sampled_only.end();
    };
    if (wanted("slice-cover")) report.checks.push_back(slice_cover());
    if (wanted("boundary-order")) report.checks.push_back(boundary_order());
    if (wanted("row-intersection")) report.checks.push_back(row_intersection());
    if (wanted("intersection-union")) report.checks.push_back(intersection_union());
    if (wanted("overlap-routing")) report.checks.push_back(overlap_routing());
    return report;
  }

 private:
  std::mt19937_64 rng_for(std::uint64_t salt) const {
    return std::mt19937_64(o_.seed * 0x9E3779B97F4A7C15ULL + salt);
  }

  ClaimCheck generator_dimension() {
    ClaimCheck c = named("generator-dimension");
    for (std::size_t j = 0; j + 1 < n_; ++j) {
      for (std::size_t k = 0; k + 1 < n_; ++k) {
        const CellLabel x = oriented_generator(j, k, n_);
        ++c.cases;
        if (nu_(x) != d_) fail(c, to_string(x) + " has dimension " + std::to_string(nu_(x)));
      }
    }
    return c;
  }

  ClaimCheck family_gluing(bool mirror) {
    ClaimCheck c = named(mirror ? "mirror-family-gluing" : "family-gluing");
    for (std::size_t j = 0; j + 1 < n_; ++j) {
      std::vector<CellLabel> cells;
      for (std::size_t k = 0; k + 1 < n_; ++k) {
        cells.push_back(mirror ? oriented_generator(k, j, n_) : oriented_generator(j, k, n_));
      }
      const GluingReport r = check_gluing(lattice_family(cells, d_, nu_));
      ++c.cases;
      family_ok_[mirror][j] = r.passed();
      if (!r.passed()) {
        const auto& v = r.violations.front();
        fail(c, "j=" + std::to_string(j) + " " + v.hypothesis + " on " + to_string(v.subset) +
                    ": " + v.detail);
      }
    }
    return c;
  }

  ClaimCheck meet_dimension() {
    ClaimCheck c = named("meet-dimension");
    for (Mask J : subsets_) {
      const int expected = 2 * static_cast<int>(n_) - 3 - std::popcount(J);
      for (std::size_t k = 0; k + 1 < n_; ++k) {
        const CellLabel x = row_meet(J, k, n_);
        ++c.cases;
        if (nu_(x) != expected) {
          fail(c, "J=" + mask_string(J) + " k=" + std::to_string(k) + " " + to_string(x) +
                      " has dimension " + std::to_string(nu_(x)) + ", expected " +
                      std::to_string(expected));
        }
      }
    }
    return c;
  }

  ClaimCheck intersection_gluing() {
    ClaimCheck c = named("intersection-gluing");
    for (Mask J : subsets_) {
      std::vector<CellLabel> cells;
      for (std::size_t k = 0; k + 1 < n_; ++k) cells.push_back(row_meet(J, k, n_));
      const int d = 2 * static_cast<int>(n_) - 3 - std::popcount(J);
      const GluingReport r = check_gluing(lattice_family(cells, d, nu_));
      ++c.cases;
      gluing_ok_[J] = r.passed();
      if (!r.passed()) {
        const auto& v = r.violations.front();
        fail(c, "J=" + mask_string(J) + " " + v.hypothesis + " on " + to_string(v.subset) + ": " +
                    v.detail);
      }
    }
    return c;
  }

  ClaimCheck nested_boundary() {
    ClaimCheck c = named("nested-boundary");
    for (Mask J : subsets_) {
      for (std::size_t r : bits(J)) {
        const Mask rest = J & ~(Mask{1} << r);
        bool ok = true;
        for (std::size_t k = 0; k + 1 < n_; ++k) {
          ++c.cases;
          const CellLabel inner = row_meet(J, k, n_);
          const CellLabel outer = row_meet(rest, k, n_);
          if (!less(inner, outer)) {
            ok = false;
            fail(c, "J=" + mask_string(J) + " r=" + std::to_string(r) + " k=" + std::to_string(k));
          }
        }
        boundary_ok_[{J, r}] = ok;
      }
    }
    return c;
  }

  // The family {B_j} itself, with intersections certified by the checks above.
  ClaimCheck outer_gluing() {
    ClaimCheck c = named("outer-gluing");
    GluingFamily<Mask> f;
    for (std::size_t j = 0; j + 1 < n_; ++j) f.cells.push_back(Mask{1} << j);
    f.ambient_dim = d_;
    f.meet = [](const std::vector<Mask>& ms) -> std::optional<Mask> {
      Mask u = 0;
      for (Mask m : ms) u |= m;
      return u;
    };
    f.dim = [this](const Mask& J) {
      if (std::popcount(J) == 1) {
        const std::size_t j = static_cast<std::size_t>(std::countr_zero(J));
        return family_ok_[false][j] ? nu_(oriented_generator(j, j, n_)) : -1;
      }
      if (!gluing_ok_[J]) return -1;
      const int first = nu_(row_meet(J, 0, n_));
      for (std::size_t k = 1; k + 1 < n_; ++k) {
        if (nu_(row_meet(J, k, n_)) != first) return -1;
      }
      return first;
    };
    f.in_boundary = [this](const Mask& inner, const Mask& outer) {
      const Mask removed = inner & ~outer;
      if (std::popcount(removed) != 1) return false;
      return boundary_ok_[{inner, static_cast<std::size_t>(std::countr_zero(removed))}];
    };
    const GluingReport r = check_gluing(f);
    c.cases = 1;
    if (!r.passed()) {
      const auto& v = r.violations.front();
      fail(c, v.hypothesis + " on " + to_string(v.subset) + ": " + v.detail);
    }
    return c;
  }

  // Δ{x ∈ 1_n^⊥ : x_n = 1} is exactly the union of the B_j.
  ClaimCheck slice_cover() {
    ClaimCheck c = named("slice-cover");
    auto rng = rng_for(1);
    const PhaseVector one = ones(n_);
    const std::size_t target = o_.samples * 10;
    std::vector<CellLabel> gens;
    for (std::size_t j = 0; j + 1 < n_; ++j) {
      for (std::size_t k = 0; k + 1 < n_; ++k) gens.push_back(oriented_generator(j, k, n_));
    }
    for (std::size_t s = 0; s < target; ++s) {
      const ModelPoint z = candidate(gens, n_, rng);
      bool in_union = false;
      for (std::size_t j = 0; j + 1 < n_ && !in_union; ++j) in_union = in_slice_family(j, z);
      ++c.cases;
      if (in_union != delta_member(one, z)) fail(c, to_string(z));
    }
    return c;
  }

  // X < Y implies B(X) ⊆ ∂B(Y).
  ClaimCheck boundary_order() {
    ClaimCheck c = named("boundary-order");
    auto rng = rng_for(2);
    const auto cells = enumerate_Pn(n_);
    for (const CellLabel& x : cells) {
      for (const CellLabel& y : cells) {
        if (!less(x, y)) continue;
        for (std::size_t s = 0; s < o_.samples; ++s) {
          const SampleKind kind =
              s == 0 ? SampleKind::Corner : (s == 1 ? SampleKind::Center : SampleKind::Random);
          const ModelPoint z = bx_sample(x, kind, BallMode::Closed, rng);
          ++c.cases;
          if (!bx_member(x, z, BallMode::Closed)) {
            fail(c, "sample outside its own cell " + to_string(x) + ": " + to_string(z));
          } else if (!bx_member(y, z, BallMode::Closed) || bx_member(y, z, BallMode::Interior)) {
            fail(c, to_string(x) + " < " + to_string(y) + " at " + to_string(z));
          }
        }
      }
    }
    return c;
  }

  // ∩_{k∈J} B(X^(j,k)) = B(∧_{k∈J} X^(j,k)), and the same with the roles swapped.
  ClaimCheck row_intersection() {
    ClaimCheck c = named("row-intersection");
    auto rng = rng_for(3);
    for (int form = 0; form < 2; ++form) {
      for (std::size_t j = 0; j + 1 < n_; ++j) {
        for (Mask J : subsets_) {
          std::vector<CellLabel> members;
          for (std::size_t k : bits(J)) {
            members.push_back(form == 0 ? oriented_generator(j, k, n_) : oriented_generator(k, j, n_));
          }
          const CellLabel m = form == 0 ? fixed_upper_meet(j, J, n_) : row_meet(J, j, n_);
          const std::string tag = (form == 0 ? "X^(j,k) j=" : "X^(k,j) j=") + std::to_string(j) +
                                  " J=" + mask_string(J) + " ";
          // B(meet) ⊆ every member
          for (std::size_t s = 0; s < o_.samples; ++s) {
            const ModelPoint z = bx_sample(m, s == 0 ? SampleKind::Corner : SampleKind::Random,
                                           BallMode::Closed, rng);
            ++c.cases;
            for (const CellLabel& x : members) {
              if (!bx_member(x, z, BallMode::Closed)) fail(c, tag + "meet point " + to_string(z));
            }
          }
          // every common point lies in B(meet)
          std::vector<CellLabel> near = members;
          near.push_back(m);
          std::size_t accepted = 0;
          for (std::size_t tries = 0; accepted < o_.samples && tries < 400 * o_.samples; ++tries) {
            const ModelPoint z = candidate(near, n_, rng);
            const bool common = std::all_of(members.begin(), members.end(), [&](const CellLabel& x) {
              return bx_member(x, z, BallMode::Closed);
            });
            if (!common) continue;
            ++accepted;
            ++c.cases;
            if (!bx_member(m, z, BallMode::Closed)) fail(c, tag + "common point " + to_string(z));
          }
          if (accepted < o_.samples) fail(c, tag + "only " + std::to_string(accepted) + " common samples");
        }
      }
    }
    return c;
  }

  // ∩_{j∈J} B_j = ∪_k B(∧_{j∈J} X^(j,k)).
  ClaimCheck intersection_union() {
    ClaimCheck c = named("intersection-union");
    auto rng = rng_for(4);
    for (Mask J : subsets_) {
      const auto js = bits(J);
      std::vector<CellLabel> rhs;
      for (std::size_t k = 0; k + 1 < n_; ++k) rhs.push_back(row_meet(J, k, n_));
      const std::string tag = "J=" + mask_string(J) + " ";
      auto in_lhs = [&](const ModelPoint& z) {
        return std::all_of(js.begin(), js.end(), [&](std::size_t j) { return in_slice_family(j, z); });
      };
      auto in_rhs = [&](const ModelPoint& z) {
        return std::any_of(rhs.begin(), rhs.end(),
                           [&](const CellLabel& x) { return bx_member(x, z, BallMode::Closed); });
      };
      for (std::size_t s = 0; s < o_.samples; ++s) {
        const CellLabel& x = rhs[s % rhs.size()];
        const ModelPoint z = bx_sample(x, SampleKind::Random, BallMode::Closed, rng);
        ++c.cases;
        if (!in_lhs(z)) fail(c, tag + "union point outside the intersection: " + to_string(z));
      }
      std::vector<CellLabel> near = rhs;
      for (std::size_t j : js) {
        for (std::size_t k = 0; k + 1 < n_; ++k) near.push_back(oriented_generator(j, k, n_));
      }
      std::size_t accepted = 0;
      for (std::size_t tries = 0; accepted < o_.samples && tries < 400 * o_.samples; ++tries) {
        const ModelPoint z = candidate(near, n_, rng);
        if (!in_lhs(z)) continue;
        ++accepted;
        ++c.cases;
        if (!in_rhs(z)) fail(c, tag + "intersection point outside the union: " + to_string(z));
      }
      if (accepted < o_.samples) fail(c, tag + "only " + std::to_string(accepted) + " samples");
    }
    return c;
  }

  // For z ∈ B(X^(j',l)) ∩ B(∧_{j∈J} X^(j,k)) with k ≠ l outside J ∪ {j'}: z lies in
  // B(∧_{J∪{j'}} X^(j,κ)) where κ is whichever of k, l has the smaller parameter.
  ClaimCheck overlap_routing() {
    ClaimCheck c = named("overlap-routing");
    auto rng = rng_for(5);
    const std::size_t last = n_ - 1;
    for (Mask J = 1; J < (Mask{1} << last); ++J) {
      for (std::size_t jp = 0; jp < last; ++jp) {
        if (J >> jp & 1U) continue;
        const Mask Jp = J | (Mask{1} << jp);
        for (std::size_t k = 0; k < last; ++k) {
          for (std::size_t l = 0; l < last; ++l) {
            if (k == l || (Jp >> k & 1U) || (Jp >> l & 1U)) continue;
            const CellLabel base = row_meet(J, k, n_);
            const CellLabel extra = oriented_generator(jp, l, n_);
            const std::string tag = "J=" + mask_string(J) + " j'=" + std::to_string(jp) +
                                    " k=" + std::to_string(k) + " l=" + std::to_string(l) + " ";
            for (std::size_t s = 0; s < o_.samples; ++s) {
              ModelPoint z = bx_sample(base, SampleKind::Random, BallMode::Closed, rng);
              const std::int64_t den = 16;
              const std::int64_t tu = static_cast<std::int64_t>(draw(rng, den + 1));
              const std::int64_t tl = static_cast<std::int64_t>(draw(rng, static_cast<std::uint64_t>(tu) + 1));
              z[jp] = upper_point(Rational(tu, den));
              z[l] = lower_point(Rational(tl, den));
              ++c.cases;
              if (!bx_member(base, z, BallMode::Closed) || !bx_member(extra, z, BallMode::Closed)) {
                fail(c, tag + "sampler left the intersection: " + to_string(z));
                continue;
              }
              const Rational t_k = *lower_param(z[k]);
              const Rational t_l = *lower_param(z[l]);
              const std::size_t kappa = t_k <= t_l ? k : l;
              if (!bx_member(row_meet(Jp, kappa, n_), z, BallMode::Closed)) {
                fail(c, tag + "routing failed at " + to_string(z));
              }
            }
          }
        }
      }
    }
    return c;
  }

  const SliceClaimsOptions& o_;
  std::size_t n_;
  int d_;
  NuFunction nu_;
  std::vector<Mask> subsets_;
  std::map<std::size_t, bool> family_ok_[2];
  std::map<Mask, bool> gluing_ok_;
  std::map<std::pair<Mask, std::size_t>, bool> boundary_ok_;
};

}  // namespace

SliceClaimsReport verify_slice_claims(const SliceClaimsOptions& options) {
  if (options.n < 3) throw std::invalid_argument("verify_slice_claims requires n >= 3");
  if (options.n > 31) throw std::invalid_argument("verify_slice_claims supports n <= 31");
  return SliceVerifier(options).run();
}

}  // namespace phasesphere
