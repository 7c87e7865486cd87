#pragma once

// Hypothesis checker for gluing d-balls B_1, ..., B_m into a d-ball, and the
// combinatorial plus sampled verification of the slice decomposition built from it.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "phasesphere/cell_lattice.hpp"

namespace phasesphere {

/// Balls indexed by abstract labels. The oracles describe intersections through
/// labels: `meet` names the intersection of a set of balls, `dim` its dimension,
/// and `in_boundary(inner, outer)` decides B(inner) ⊆ ∂B(outer).
template <class Label>
struct GluingFamily {
  std::vector<Label> cells;
  int ambient_dim = 0;
  std::function<int(const Label&)> dim;
  std::function<std::optional<Label>(const std::vector<Label>&)> meet;
  std::function<bool(const Label&, const Label&)> in_boundary;
};

struct GluingViolation {
  std::vector<std::size_t> subset;  // 0-based cell indices
  std::string hypothesis;           // "precondition", "distinct", "meet", "dimension", "boundary"
  std::string detail;
};

struct GluingReport {
  std::vector<GluingViolation> violations;
  bool passed() const { return violations.empty(); }
};

std::string to_string(const std::vector<std::size_t>& subset);

/// Checks, for every J with |J| > 1, that the intersection over J is a
/// (d - |J| + 1)-ball and lies in the boundary of every intersection over J - {r}.
/// Too many cells (m > d + 1) is reported as a violation, as is an undefined meet.
template <class Label>
GluingReport check_gluing(const GluingFamily<Label>& f) {
  GluingReport report;
  const std::size_t m = f.cells.size();
  const int d = f.ambient_dim;
  std::vector<std::size_t> all(m);
  for (std::size_t i = 0; i < m; ++i) all[i] = i;
  if (static_cast<int>(m) > d + 1) {
    report.violations.push_back({all, "precondition",
                                 "m = " + std::to_string(m) + " exceeds d + 1 = " +
                                     std::to_string(d + 1)});
    return report;
  }
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      if (f.cells[a] == f.cells[b]) report.violations.push_back({{a, b}, "distinct", "repeated cell"});
    }
  }
  const std::uint64_t full = (std::uint64_t{1} << m) - 1;
  std::vector<std::optional<Label>> meets(full + 1);
  auto members = [&](std::uint64_t mask) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < m; ++i) {
      if (mask >> i & 1U) out.push_back(i);
    }
    return out;
  };
  for (std::uint64_t mask = 1; mask <= full; ++mask) {
    const auto idx = members(mask);
    if (idx.size() == 1) {
      meets[mask] = f.cells[idx.front()];
      continue;
    }
    std::vector<Label> labels;
    for (std::size_t i : idx) labels.push_back(f.cells[i]);
    meets[mask] = f.meet(labels);
  }
  for (std::uint64_t mask = 1; mask <= full; ++mask) {
    const auto idx = members(mask);
    if (idx.size() < 2) continue;
    if (!meets[mask]) {
      report.violations.push_back({idx, "meet", "intersection label undefined"});
      continue;
    }
    const int expected = d - static_cast<int>(idx.size()) + 1;
    const int got = f.dim(*meets[mask]);
    if (got != expected) {
      report.violations.push_back({idx, "dimension",
                                   "dimension " + std::to_string(got) + ", expected " +
                                       std::to_string(expected)});
    }
    for (std::size_t r : idx) {
      const std::uint64_t rest = mask & ~(std::uint64_t{1} << r);
      if (!meets[rest]) continue;  // reported on its own subset
      if (!f.in_boundary(*meets[mask], *meets[rest])) {
        report.violations.push_back({idx, "boundary",
                                     "not in the boundary of the intersection without cell " +
                                         std::to_string(r)});
      }
    }
  }
  return report;
}

using NuFunction = std::function<int(const CellLabel&)>;

/// Cells B(X) with the lattice meet, dimension from `nu_fn` and boundary from the
/// strict lattice order.
GluingFamily<CellLabel> lattice_family(std::vector<CellLabel> cells, int ambient_dim,
                                       NuFunction nu_fn);

struct ClaimCheck {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::string witness;  // first failure
};

struct SliceClaimsOptions {
  std::size_t n = 3;
  std::size_t samples = 1000;  // 0 skips the sampled checks
  std::uint64_t seed = 1;
  NuFunction nu_fn;            // defaults to nu
  bool combinatorial = true;   // false skips the non-sampled checks
  std::vector<std::string> sampled_only;  // restricts the sampled checks by name
};

struct SliceClaimsReport {
  std::size_t n = 0;
  std::vector<ClaimCheck> checks;
  bool passed() const;
};

/// The combinatorial skeleton of the slice decomposition for one n (generator
/// families, meets over every J, nested boundaries, the outer gluing) plus exact
/// membership tests on deterministic rational samples.
SliceClaimsReport verify_slice_claims(const SliceClaimsOptions& options);

/// The slice family B_j = ∪_k B(X^(j,k)) membership test.
bool in_slice_family(std::size_t j, const ModelPoint& z);

}  // namespace phasesphere
