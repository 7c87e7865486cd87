#pragma once

// Two coordinate systems for the topological order complex of Φ^n and of
// v^⊥ - {0}: weighted chains of phase vectors (join coordinates) and n-tuples of
// points of the closed unit disc, related by the homeomorphism gamma.

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "phasesphere/covector.hpp"

namespace phasesphere {

/// A point r·e^{2πi·angle} of the closed unit disc. The centre always carries angle 0.
class DiscPoint {
 public:
  DiscPoint() = default;
  DiscPoint(const Rational& radius, Angle angle);
  static DiscPoint center() { return DiscPoint(); }
  static DiscPoint on_circle(Angle a) { return DiscPoint(Rational(1), a); }

  const Rational& radius() const { return radius_; }
  const Angle& angle() const { return angle_; }
  bool is_center() const { return radius_ == 0; }
  bool on_circle() const { return radius_ == 1; }

  friend bool operator==(const DiscPoint&, const DiscPoint&) = default;
  friend std::strong_ordering operator<=>(const DiscPoint& a, const DiscPoint& b);

 private:
  Rational radius_{0};
  Angle angle_;
};

/// A point of the product of n closed discs.
struct ModelPoint {
  std::vector<DiscPoint> coords;

  std::size_t size() const { return coords.size(); }
  const DiscPoint& operator[](std::size_t j) const { return coords[j]; }
  DiscPoint& operator[](std::size_t j) { return coords[j]; }

  friend bool operator==(const ModelPoint&, const ModelPoint&) = default;
  friend auto operator<=>(const ModelPoint& a, const ModelPoint& b) {
    return a.coords <=> b.coords;
  }
};

struct JoinTerm {
  Rational weight;
  PhaseVector vector;
  friend bool operator==(const JoinTerm&, const JoinTerm&) = default;
};

/// A convex combination Σ t_k x_k of a strict chain x_0 < x_1 < ... of phase vectors.
/// Canonical form: positive weights summing to 1, grades strictly increasing.
struct JoinPoint {
  std::vector<JoinTerm> terms;

  /// Throws std::invalid_argument when the canonical-form invariants fail.
  void validate() const;
  friend bool operator==(const JoinPoint&, const JoinPoint&) = default;
};

/// Join coordinates -> disc coordinates. Validates its input.
ModelPoint gamma(const JoinPoint& p);

/// Level-set reconstruction; gamma(gamma_inv(z)) == z for every z.
JoinPoint gamma_inv(const ModelPoint& z);

/// z lies in Δ(v^⊥ - {0}): the radius-1 level is present and every level's phase
/// vector is a covector of v.
bool delta_member(const PhaseVector& v, const ModelPoint& z);

/// The action of g_y: rotate every non-centre coordinate by y.
ModelPoint rotate(const Angle& y, const ModelPoint& z);

/// Multiply each coordinate's phase by the matching entry of v.
ModelPoint rescale(const PhaseVector& v, const ModelPoint& z);

// "r@a;r@a;..." with rationals r and a; "0@0" for the centre.
std::string to_string(const DiscPoint& p);
std::string to_string(const ModelPoint& z);
ModelPoint parse_model_point(std::string_view text);

}  // namespace phasesphere
