#include "phasesphere/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "phasesphere/gluing.hpp"
#include "phasesphere/mesh.hpp"

namespace phasesphere {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skip: return "skip";
  }
  return "?";
}

bool VerificationReport::passed() const {
  return std::none_of(checks.begin(), checks.end(),
                      [](const CheckResult& c) { return c.status == CheckStatus::Fail; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "lemma-zero-oracle", "pieces",      "sign-spheres",   "gamma-roundtrip", "pn-combinatorics",
      "slice-claims",      "slice-mesh",  "boundary-ident", "full-sphere",     "all"};
  return names;
}

namespace {

using Params = std::vector<std::pair<std::string, std::string>>;

// Collects sub-condition outcomes for one check; the first failure is the witness.
struct Outcome {
  bool ok = true;
  std::string witness;
  std::vector<std::string> notes;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) witness = what;
    ok = ok && cond;
  }
  void note(std::string s) { notes.push_back(std::move(s)); }
};

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string tuple_string(const std::vector<std::size_t>& v) {
  std::vector<std::string> parts;
  for (std::size_t x : v) parts.push_back(std::to_string(x));
  return "(" + join(parts, ",") + ")";
}

std::vector<std::size_t> sphere_betti(std::size_t d) {
  std::vector<std::size_t> b(d + 1, 0);
  b[0] += 1;
  b[d] += 1;
  return b;
}

std::vector<std::size_t> ball_betti(std::size_t d) {
  std::vector<std::size_t> b(d + 1, 0);
  b[0] = 1;
  return b;
}

class Runner {
 public:
  Runner(const SuiteParams& p, VerificationReport& r) : p_(p), r_(r) {}

  void run(const std::string& suite) {
    if (suite == "lemma-zero-oracle") lemma_zero();
    else if (suite == "pieces") pieces();
    else if (suite == "sign-spheres") sign_spheres();
    else if (suite == "gamma-roundtrip") gamma_roundtrip();
    else if (suite == "pn-combinatorics") pn_combinatorics();
    else if (suite == "slice-claims") slice_claims();
    else if (suite == "slice-mesh") slice_mesh();
    else if (suite == "boundary-ident") boundary_ident();
    else if (suite == "full-sphere") full_sphere();
    else if (suite == "all") {
      for (const std::string& s : suite_names()) {
        if (s != "all") run(s);
      }
    } else {
      throw std::invalid_argument("unknown suite '" + suite + "'");
    }
  }

 private:
  void check(const std::string& suite, const std::string& name, Params params,
             const std::function<void(Outcome&)>& body) {
    CheckResult c;
    c.suite = suite;
    c.name = name;
    c.params = std::move(params);
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      body(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    c.status = o.ok ? CheckStatus::Pass : CheckStatus::Fail;
    if (o.ok && !o.notes.empty() && o.notes.front() == "skip") {
      c.status = CheckStatus::Skip;
      o.notes.erase(o.notes.begin());
    }
    c.detail = join(o.notes, "; ");
    c.witness = o.witness;
    r_.checks.push_back(std::move(c));
  }

  std::size_t max_n(std::size_t fallback, std::size_t lo, std::size_t hi) const {
    const std::size_t n = p_.max_n ? p_.max_n : fallback;
    if (n < lo || n > hi) {
      throw std::invalid_argument("--max-n must lie in [" + std::to_string(lo) + ", " +
                                  std::to_string(hi) + "] for this suite");
    }
    return n;
  }

  std::vector<int> resolutions(std::vector<int> fallback, int hi) const {
    if (!p_.m) return fallback;
    if (p_.m < 2 || p_.m % 2 || p_.m > hi) {
      throw std::invalid_argument("--m must be even and in [2, " + std::to_string(hi) + "]");
    }
    return {p_.m};
  }

  std::vector<Field> fields() const {
    if (p_.field) return {*p_.field};
    return {Field::Rationals, Field::GF2};
  }

  std::size_t samples(std::size_t fallback) const { return p_.samples ? p_.samples : fallback; }

  // Betti numbers over every requested field must equal `expected`.
  void expect_betti(Outcome& o, const SimplicialComplex& k, const std::vector<std::size_t>& expected) {
    for (Field f : fields()) {
      const BettiReport b = betti(k, f);
      o.note("betti_" + to_string(f) + "=" + tuple_string(b.betti));
      o.require(b.betti == expected, "betti over " + to_string(f) + " is " + tuple_string(b.betti) +
                                         ", expected " + tuple_string(expected));
      std::int64_t alt = 0;
      for (std::size_t i = 0; i < b.betti.size(); ++i) {
        alt += (i % 2 ? -1 : 1) * static_cast<std::int64_t>(b.betti[i]);
      }
      o.require(alt == b.euler, "alternating Betti sum differs from the Euler characteristic");
    }
  }

  void lemma_zero() {
    const std::size_t top = max_n(5, 1, 6);
    for (int m : resolutions({2, 4, 6, 8}, 16)) {
      check("lemma-zero-oracle", "gap criterion vs fold m=" + std::to_string(m),
            {{"max_n", std::to_string(top)}, {"m", std::to_string(m)}}, [&](Outcome& o) {
              std::size_t inputs = 0, mismatches = 0;
              for (std::size_t n = 1; n <= top; ++n) {
                for (const PhaseVector& x : enumerate_phase_grid(n, m)) {
                  ++inputs;
                  const bool fold = hsum_fold(std::span(x.entries())).contains_zero();
                  if (fold != zero_in_sum(x)) {
                    ++mismatches;
                    o.require(false, to_string(x));
                  }
                }
              }
              o.note("inputs=" + std::to_string(inputs));
              o.note("mismatches=" + std::to_string(mismatches));
            });
    }
  }

  void pieces() {
    const std::size_t top = max_n(5, 1, 6);
    for (int m : resolutions({2, 4, 6, 8}, 16)) {
      check("pieces", "zero triples m=" + std::to_string(m),
            {{"max_n", std::to_string(top)}, {"m", std::to_string(m)}}, [&](Outcome& o) {
              std::size_t covectors = 0, failures = 0;
              for (std::size_t n = 3; n <= top; ++n) {
                for (const PhaseVector& x : enumerate_phase_grid(n, m)) {
                  if (x.grade() < 3 || !zero_in_sum(x)) continue;
                  ++covectors;
                  const auto t = find_zero_triple(x);
                  bool ok = t.has_value();
                  if (ok) {
                    const std::array<Phase, 3> entries{x[(*t)[0]], x[(*t)[1]], x[(*t)[2]]};
                    ok = hsum_fold(std::span(entries)).contains_zero();
                  }
                  if (!ok) {
                    ++failures;
                    o.require(false, to_string(x));
                  }
                }
              }
              o.note("covectors=" + std::to_string(covectors));
              o.note("failures=" + std::to_string(failures));
            });
    }
  }

  void sign_spheres() {
    const std::size_t top = max_n(5, 3, 6);
    for (std::size_t n = 3; n <= top; ++n) {
      check("sign-spheres", "order complex of sign covectors n=" + std::to_string(n),
            {{"n", std::to_string(n)}}, [&](Outcome& o) {
              const auto cov = enumerate_sign_covectors(n);
              const SimplicialComplex k = order_complex_of_poset(
                  cov.size(), [&](std::size_t a, std::size_t b) { return leq(cov[a], cov[b]); });
              o.note("elements=" + std::to_string(cov.size()));
              o.note("facets=" + std::to_string(k.facets().size()));
              expect_betti(o, k, sphere_betti(n - 2));
            });
    }
  }

  void gamma_roundtrip() {
    const std::size_t top = max_n(6, 1, 12);
    const std::size_t count = samples(10000);
    const Params params{{"max_n", std::to_string(top)},
                        {"samples", std::to_string(count)},
                        {"seed", std::to_string(p_.seed)}};
    check("gamma-roundtrip", "gamma_inv after gamma", params, [&](Outcome& o) {
      std::mt19937_64 rng(p_.seed * 0x9E3779B97F4A7C15ULL + 11);
      std::size_t failures = 0;
      for (std::size_t i = 0; i < count; ++i) {
        const std::size_t n = 1 + i % top;
        const JoinPoint p = random_join_point(n, rng);
        if (gamma_inv(gamma(p)) != p) {
          ++failures;
          o.require(false, "sample " + std::to_string(i) + ": " + to_string(gamma(p)));
        }
      }
      o.note("samples=" + std::to_string(count));
      o.note("failures=" + std::to_string(failures));
    });
    check("gamma-roundtrip", "gamma after gamma_inv", params, [&](Outcome& o) {
      std::mt19937_64 rng(p_.seed * 0x9E3779B97F4A7C15ULL + 12);
      std::size_t failures = 0;
      for (std::size_t i = 0; i < count; ++i) {
        const std::size_t n = 1 + i % top;
        ModelPoint z;
        for (std::size_t j = 0; j < n; ++j) {
          const std::int64_t den = std::int64_t{2} << (rng() % 4);
          const Rational r(static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(den + 1)), den);
          const std::int64_t aden = 3 * den;
          z.coords.emplace_back(r, Angle(static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(aden)), aden));
        }
        if (gamma(gamma_inv(z)) != z) {
          ++failures;
          o.require(false, to_string(z));
        }
      }
      o.note("samples=" + std::to_string(count));
      o.note("failures=" + std::to_string(failures));
    });
  }

  // A canonical chain: nested supports of a random unit vector, optionally led by
  // the zero vector, with random positive weights summing to 1.
  static JoinPoint random_join_point(std::size_t n, std::mt19937_64& rng) {
    std::vector<Phase> top;
    for (std::size_t j = 0; j < n; ++j) {
      const std::int64_t den = std::int64_t{1} << (1 + rng() % 4);
      top.push_back(Phase::unit(static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(den)), den));
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<std::size_t> grades;
    for (std::size_t g = 1; g <= n; ++g) {
      if (g == n ? rng() % 2 == 0 || grades.empty() : rng() % 2 == 0) grades.push_back(g);
    }
    const bool lead_zero = rng() % 2 == 0;
    std::vector<std::int64_t> w;
    for (std::size_t i = 0; i < grades.size() + (lead_zero ? 1 : 0); ++i) {
      w.push_back(1 + static_cast<std::int64_t>(rng() % 20));
    }
    const std::int64_t total = std::accumulate(w.begin(), w.end(), std::int64_t{0});
    JoinPoint p;
    std::size_t wi = 0;
    if (lead_zero) p.terms.push_back({Rational(w[wi++], total), PhaseVector::zeros(n)});
    for (std::size_t g : grades) {
      PhaseVector x = PhaseVector::zeros(n);
      for (std::size_t i = 0; i < g; ++i) x[order[i]] = top[order[i]];
      p.terms.push_back({Rational(w[wi++], total), std::move(x)});
    }
    return p;
  }

  void pn_combinatorics() {
    const std::size_t top = max_n(7, 3, 9);
    for (std::size_t n = 3; n <= top; ++n) {
      check("pn-combinatorics", "cell lattice skeleton n=" + std::to_string(n), {{"n", std::to_string(n)}},
            [&](Outcome& o) {
              SliceClaimsOptions opts;
              opts.n = n;
              opts.samples = 0;
              const SliceClaimsReport rep = verify_slice_claims(opts);
              for (const ClaimCheck& c : rep.checks) {
                o.note(c.name + ":" + std::to_string(c.cases));
                o.require(c.passed, c.name + ": " + c.witness);
              }
            });
    }
    for (std::size_t n = 3; n <= std::min<std::size_t>(top, 5); ++n) {
      check("pn-combinatorics", "meet is the greatest lower bound n=" + std::to_string(n),
            {{"n", std::to_string(n)}}, [&](Outcome& o) {
              const auto cells = enumerate_Pn(n);
              std::size_t pairs = 0, bounded = 0;
              for (const CellLabel& x : cells) {
                for (const CellLabel& y : cells) {
                  ++pairs;
                  std::vector<const CellLabel*> lower;
                  for (const CellLabel& z : cells) {
                    if (leq(z, x) && leq(z, y)) lower.push_back(&z);
                  }
                  std::optional<CellLabel> m;
                  try {
                    m = meet(x, y);
                  } catch (const std::domain_error&) {
                  }
                  if (!m) {
                    o.require(lower.empty(), "meet undefined but lower bounds exist: " + to_string(x) +
                                                 " / " + to_string(y));
                    continue;
                  }
                  ++bounded;
                  bool glb = in_Pn(*m) && leq(*m, x) && leq(*m, y);
                  for (const CellLabel* z : lower) glb = glb && leq(*z, *m);
                  o.require(glb, "meet of " + to_string(x) + " / " + to_string(y) + " is not the glb");
                }
              }
              o.note("cells=" + std::to_string(cells.size()));
              o.note("pairs=" + std::to_string(pairs));
              o.note("with_meet=" + std::to_string(bounded));
            });
    }
  }

  void slice_claims() {
    const std::size_t top = max_n(4, 3, 6);
    const std::size_t count = samples(1000);
    auto run_claim = [&](std::size_t n, const std::string& claim) {
      check("slice-claims", claim + " n=" + std::to_string(n),
            {{"n", std::to_string(n)}, {"samples", std::to_string(count)}, {"seed", std::to_string(p_.seed)}},
            [&](Outcome& o) {
              SliceClaimsOptions opts;
              opts.n = n;
              opts.samples = count;
              opts.seed = p_.seed;
              opts.combinatorial = false;
              opts.sampled_only = {claim};
              const SliceClaimsReport rep = verify_slice_claims(opts);
              const ClaimCheck& c = rep.checks.at(0);
              if (c.cases == 0) {
                o.note("skip");
                o.note("vacuous for this n");
                return;
              }
              o.note("cases=" + std::to_string(c.cases));
              o.require(c.passed, c.witness);
            });
    };
    auto run_n = [&](std::size_t n, const std::vector<std::string>& claims) {
      for (const std::string& claim : claims) run_claim(n, claim);
    };
    const std::vector<std::string> claims{"slice-cover", "boundary-order", "row-intersection",
                                          "intersection-union", "overlap-routing"};
    for (std::size_t n = 3; n <= top; ++n) run_n(n, claims);
    // The routing dichotomy needs four distinct indices below n - 1.
    if (top < 5) run_n(5, {"overlap-routing"});
  }

  void slice_mesh() {
    const std::size_t top = max_n(4, 3, 4);
    std::vector<std::pair<std::size_t, int>> configs;
    if (p_.m) {
      for (int m : resolutions({}, 8)) {
        for (std::size_t n = 3; n <= top; ++n) configs.emplace_back(n, m);
      }
    } else {
      configs = {{3, 2}, {3, 4}, {4, 2}};
      std::erase_if(configs, [&](const auto& c) { return c.first > top; });
    }
    for (const auto& [n, m] : configs) {
      check("slice-mesh", "slice ball n=" + std::to_string(n) + " m=" + std::to_string(m),
            {{"n", std::to_string(n)}, {"m", std::to_string(m)}}, [&, n = n, m = m](Outcome& o) {
              const SliceAssembly s = assemble_slice_charts(n, m);
              const SimplicialComplex& k = s.complex;
              o.note("charts=" + std::to_string(s.charts.size()));
              o.note("f=" + tuple_string(k.f_vector()));
              o.require(k.dim() == static_cast<int>(2 * n - 4), "dimension " + std::to_string(k.dim()));
              o.require(is_pseudomanifold(k, false), "not a pure pseudomanifold with boundary");
              o.require(k.euler_characteristic() == 1,
                        "Euler characteristic " + std::to_string(k.euler_characteristic()));
              expect_betti(o, k, ball_betti(2 * n - 4));
              for (const Simplex& f : k.facets()) {
                const ModelPoint b = barycenter(k, f);
                const bool carried = std::any_of(s.charts.begin(), s.charts.end(), [&](const CellLabel& x) {
                  return bx_member(x, b, BallMode::Closed);
                });
                if (!carried) {
                  o.require(false, "barycenter outside every chart: " + to_string(b));
                  break;
                }
              }
            });
    }
  }

  void boundary_ident() {
    const std::size_t top = max_n(4, 3, 4);
    for (int m : resolutions({2, 4}, 8)) {
      check("boundary-ident", "slice boundary n=3 m=" + std::to_string(m) + " vs full n=2",
            {{"n", "3"}, {"m", std::to_string(m)}}, [&](Outcome& o) {
              const SimplicialComplex bd = boundary_subcomplex(assemble_slice(3, m));
              const SimplicialComplex full = assemble_full(2, m).complex;
              for (const ModelPoint& z : bd.coords()) {
                const bool antipodal = z[0].on_circle() && z[1].on_circle() &&
                                       z[1].angle() == z[0].angle().antipode();
                o.require(antipodal, "boundary vertex off the antipodal circle: " + to_string(z));
              }
              const IsomorphismResult iso = complex_isomorphic(bd, full, drop_last);
              o.note("vertices=" + std::to_string(bd.num_vertices()));
              o.require(iso.isomorphic, iso.mismatch);
            });
    }
    if (top >= 4) {
      const int m = p_.m ? p_.m : 2;
      check("boundary-ident", "slice boundary n=4 m=" + std::to_string(m) + " is a 3-sphere model",
            {{"n", "4"}, {"m", std::to_string(m)}}, [&](Outcome& o) {
              const SimplicialComplex bd = boundary_subcomplex(assemble_slice(4, m));
              o.note("f=" + tuple_string(bd.f_vector()));
              o.require(is_pseudomanifold(bd, true), "not a closed pseudomanifold");
              expect_betti(o, bd, sphere_betti(3));
              const FullAssembly full = assemble_full(3, 2);
              if (full.glued) {
                for (Field f : fields()) {
                  o.require(betti(full.complex, f).betti == betti(bd, f).betti,
                            "homology differs from the n=3 full complex over " + to_string(f));
                }
              }
            });
    }
  }

  void full_sphere() {
    for (int m : resolutions({2, 4}, 8)) {
      check("full-sphere", "full complex n=2 m=" + std::to_string(m), {{"n", "2"}, {"m", std::to_string(m)}},
            [&](Outcome& o) {
              const FullAssembly full = assemble_full(2, m);
              const SimplicialComplex& k = full.complex;
              o.require(is_pseudomanifold(k, true), "not a closed pseudomanifold");
              expect_betti(o, k, sphere_betti(1));
              carrier(o, full, 2);
            });
    }
    const int m = p_.m ? p_.m : 2;
    check("full-sphere", "full complex n=3 m=" + std::to_string(m), {{"n", "3"}, {"m", std::to_string(m)}},
          [&](Outcome& o) {
            const FullAssembly full = assemble_full(3, m);
            o.note(full.glued ? "glued" : "mayer-vietoris fallback: " + full.failure);
            if (!full.interface_to_b.empty()) {
              for (Field f : fields()) {
                const MayerVietorisResult mv =
                    mayer_vietoris_assemble(full.region_a, full.region_b, full.interface,
                                            full.interface_to_a, full.interface_to_b, f);
                o.note("mayer_vietoris_" + to_string(f) + "=" + tuple_string(mv.betti));
                o.require(mv.betti == sphere_betti(3), "Mayer-Vietoris over " + to_string(f) +
                                                           " gives " + tuple_string(mv.betti));
              }
            }
            if (!full.glued) {
              o.require(false, "exact gluing failed: " + full.failure);
              return;
            }
            const SimplicialComplex& k = full.complex;
            o.note("f=" + tuple_string(k.f_vector()));
            o.require(is_pseudomanifold(k, true), "not a closed pseudomanifold");
            expect_betti(o, k, sphere_betti(3));
            carrier(o, full, 3);
          });
  }

  void carrier(Outcome& o, const FullAssembly& full, std::size_t n) {
    const PhaseVector one = ones(n);
    o.require(full.carrier_points.size() == full.complex.facets().size(), "carrier points missing");
    for (const ModelPoint& b : full.carrier_points) {
      if (!delta_member(one, b)) {
        o.require(false, "barycenter outside the space: " + to_string(b));
        return;
      }
    }
  }

  const SuiteParams& p_;
  VerificationReport& r_;
};

}  // namespace

VerificationReport run_suite(const std::string& suite, const SuiteParams& params) {
  if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end()) {
    throw std::invalid_argument("unknown suite '" + suite + "'");
  }
  VerificationReport r;
  r.suite = suite;
  r.seed = params.seed;
  Runner(params, r).run(suite);
  return r;
}

std::string report_text(const VerificationReport& r, bool timings) {
  std::ostringstream out;
  out << "suite: " << r.suite << "\nseed: " << r.seed << "\n";
  std::size_t passed = 0, failed = 0, skipped = 0;
  for (const CheckResult& c : r.checks) {
    std::string tag = c.status == CheckStatus::Pass ? "PASS" : c.status == CheckStatus::Fail ? "FAIL" : "SKIP";
    out << "[" << tag << "] " << c.suite << " / " << c.name;
    if (!c.detail.empty()) out << ": " << c.detail;
    if (timings) out << " (" << std::to_string(c.seconds) << " s)";
    out << "\n";
    if (!c.witness.empty()) out << "    witness: " << c.witness << "\n";
    (c.status == CheckStatus::Pass ? passed : c.status == CheckStatus::Fail ? failed : skipped)++;
  }
  out << "result: " << (r.passed() ? "PASS" : "FAIL") << " (" << passed << " passed, " << failed
      << " failed, " << skipped << " skipped)\n";
  return out.str();
}

std::string report_json(const VerificationReport& r, bool timings) {
  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  j["seed"] = r.seed;
  j["passed"] = r.passed();
  j["checks"] = nlohmann::ordered_json::array();
  for (const CheckResult& c : r.checks) {
    nlohmann::ordered_json cj;
    cj["suite"] = c.suite;
    cj["name"] = c.name;
    cj["status"] = to_string(c.status);
    nlohmann::ordered_json pj = nlohmann::ordered_json::object();
    for (const auto& [k, v] : c.params) pj[k] = v;
    cj["params"] = std::move(pj);
    cj["detail"] = c.detail;
    if (!c.witness.empty()) cj["witness"] = c.witness;
    if (timings) cj["seconds"] = c.seconds;
    j["checks"].push_back(std::move(cj));
  }
  return j.dump(2) + "\n";
}

}  // namespace phasesphere
