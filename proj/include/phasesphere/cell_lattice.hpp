#pragma once

// The five-element label poset, the lattice of cell labels, and the balls B(X) they
// index inside the slice {z_n = 1} of the disc model.
//
// Conventions. A circle point on the upper half is e^{iπt}, i.e. angle t/2 turns;
// on the lower half it is e^{i(πt+π)}, i.e. angle 1/2 + t/2. Coordinates are
// 0-based: the distinguished last coordinate is n-1.

#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "phasesphere/order_complex.hpp"

namespace phasesphere {

/// Hasse diagram: One, MinusOne < U, L < Phi.
enum class PLabel { One, MinusOne, U, L, Phi };

bool leq(PLabel a, PLabel b);
inline bool less(PLabel a, PLabel b) { return a != b && leq(a, b); }

class CellLabel {
 public:
  CellLabel() = default;
  explicit CellLabel(std::vector<PLabel> labels) : labels_(std::move(labels)) {}

  std::size_t size() const { return labels_.size(); }
  PLabel operator[](std::size_t a) const { return labels_[a]; }
  const std::vector<PLabel>& labels() const { return labels_; }

  std::vector<std::size_t> indices_of(PLabel l) const;

  friend bool operator==(const CellLabel&, const CellLabel&) = default;
  friend auto operator<=>(const CellLabel& a, const CellLabel& b) { return a.labels_ <=> b.labels_; }

 private:
  std::vector<PLabel> labels_;
};

/// Membership in the lattice of cell labels (requires n >= 3 to be non-empty).
bool in_Pn(const CellLabel& x);

/// Componentwise order.
bool leq(const CellLabel& x, const CellLabel& y);
inline bool less(const CellLabel& x, const CellLabel& y) { return x != y && leq(x, y); }

/// Generator X^(j,k) with 0-based 0 <= j <= k <= n-2: MinusOne at j when j == k,
/// otherwise U at j and L at k; One at n-1; Phi elsewhere. Throws std::out_of_range.
CellLabel generator(std::size_t j, std::size_t k, std::size_t n);

/// Like generator() but with U at `upper` and L at `lower` in either order, as the
/// slice cover needs every ordered pair.
CellLabel oriented_generator(std::size_t upper, std::size_t lower, std::size_t n);

/// Greatest lower bound: componentwise in P, except that U ∧ L = MinusOne off the
/// last coordinate. Throws std::domain_error if the result leaves the lattice.
CellLabel meet(const CellLabel& x, const CellLabel& y);
CellLabel meet(const std::vector<CellLabel>& xs);

/// |X^{-1}(U)| + |X^{-1}(L)| + 2|X^{-1}(Phi)|
int nu(const CellLabel& x);

/// Every element of the lattice for the given n, in lexicographic label order.
std::vector<CellLabel> enumerate_Pn(std::size_t n);

/// Parameter t in [0,1] of a circle point on the upper / lower closed half circle.
std::optional<Rational> upper_param(const DiscPoint& p);
std::optional<Rational> lower_param(const DiscPoint& p);
DiscPoint upper_point(const Rational& t);
DiscPoint lower_point(const Rational& t);

enum class BallMode { Closed, Interior };

/// z ∈ B(X) (closed) or z ∈ int B(X).
bool bx_member(const CellLabel& x, const ModelPoint& z, BallMode mode);

enum class SampleKind { Corner, Center, Random };

/// Deterministic rational point of B(X) (or of its interior when mode is Interior).
/// Corner puts every t at 0 and every disc coordinate at the centre.
ModelPoint bx_sample(const CellLabel& x, SampleKind kind, BallMode mode, std::mt19937_64& rng);

// Tokens "1", "-1", "U", "L", "F", comma separated.
std::string to_string(PLabel l);
std::string to_string(const CellLabel& x);
CellLabel parse_cell_label(std::string_view text);

}  // namespace phasesphere
