#pragma once

// Exact arithmetic in the tropical phase hyperfield (unit circle plus origin,
// complex multiplication, arc-valued addition) and in the sign hyperfield.

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "phasesphere/rational.hpp"

namespace phasesphere {

/// A point of the unit circle, stored as a reduced rational number of turns in [0,1).
class Angle {
 public:
  Angle() = default;
  explicit Angle(const Rational& turns) : value_(frac(turns)) {}
  Angle(std::int64_t num, std::int64_t den) : Angle(Rational(num, den)) {}

  const Rational& turns() const { return value_; }
  Angle antipode() const { return Angle(value_ + Rational(1, 2)); }

  friend Angle operator+(const Angle& a, const Angle& b) { return Angle(a.value_ + b.value_); }
  friend Angle operator-(const Angle& a, const Angle& b) { return Angle(a.value_ - b.value_); }
  Angle operator-() const { return Angle(-value_); }

  friend bool operator==(const Angle& a, const Angle& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Angle& a, const Angle& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (b.value_ < a.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  Rational value_{0};
};

/// Closed arc starting at `start` and sweeping counterclockwise by `length` turns.
/// Length 0 is a single point; length 1 is the whole circle (canonical start 0).
class Arc {
 public:
  Arc(Angle start, const Rational& length);
  static Arc point(Angle a) { return Arc(a, Rational(0)); }
  static Arc full() { return Arc(Angle(), Rational(1)); }

  const Angle& start() const { return start_; }
  const Rational& length() const { return length_; }
  Angle end() const { return Angle(start_.turns() + length_); }
  bool is_full() const { return length_ == 1; }
  bool contains(const Angle& a) const;

  friend bool operator==(const Arc&, const Arc&) = default;

 private:
  Angle start_;
  Rational length_;
};

/// Element of the hyperfield: the origin, or a unit with a given angle.
class Phase {
 public:
  Phase() = default;  // zero
  static Phase zero() { return Phase(); }
  static Phase unit(Angle a) { return Phase(a); }
  static Phase unit(std::int64_t num, std::int64_t den) { return Phase(Angle(num, den)); }

  bool is_zero() const { return !angle_.has_value(); }
  bool is_unit() const { return angle_.has_value(); }
  /// Precondition: is_unit().
  const Angle& angle() const;
  Phase negated() const { return is_zero() ? *this : Phase(angle_->antipode()); }

  friend bool operator==(const Phase&, const Phase&) = default;
  /// Zero sorts before every unit; units sort by angle.
  friend std::strong_ordering operator<=>(const Phase& a, const Phase& b);

 private:
  explicit Phase(Angle a) : angle_(a) {}
  std::optional<Angle> angle_;
};

/// A subset of the hyperfield: a finite union of closed arcs plus possibly the origin.
/// Always kept normalized: arcs disjoint, non-touching, sorted by start, and the
/// full circle represented as the single canonical full arc.
class PhaseSet {
 public:
  PhaseSet() = default;
  PhaseSet(bool contains_zero, std::vector<Arc> arcs);
  static PhaseSet of(const Phase& p);

  bool contains_zero() const { return contains_zero_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  bool is_full_circle() const { return arcs_.size() == 1 && arcs_.front().is_full(); }
  bool contains(const Phase& p) const;

  friend bool operator==(const PhaseSet&, const PhaseSet&) = default;

 private:
  bool contains_zero_ = false;
  std::vector<Arc> arcs_;
};

/// Normalizes an arbitrary arc list: merges overlapping or touching arcs.
std::vector<Arc> normalize_arcs(std::vector<Arc> arcs);

Phase mul(const Phase& a, const Phase& b);

/// The hyperfield sum of two elements.
PhaseSet hsum_pair(const Phase& a, const Phase& b);

/// Set extension A ⊞ p = union of a ⊞ p over a in A.
PhaseSet hsum_set(const PhaseSet& acc, const Phase& p);

/// Left fold of the set extension over the inputs. Throws on empty input.
PhaseSet hsum_fold(std::span<const Phase> xs);

/// Shortest closed arc containing every given angle. Throws on empty input.
/// Among several shortest arcs the one with the smallest start is returned.
Arc min_enclosing_arc(std::span<const Angle> angles);

enum class Sign : int { Minus = -1, Zero = 0, Plus = 1 };

Sign sign_mul(Sign a, Sign b);

/// Sum in the sign hyperfield, returned sorted ascending.
std::vector<Sign> sign_hsum(Sign a, Sign b);

/// Left fold of the set extension of the sign sum. Throws on empty input.
std::vector<Sign> sign_hsum_fold(std::span<const Sign> xs);

// Text forms: angles and rationals as "p/q"; the zero phase as "z"; signs as "+", "-", "0".
std::string to_string(const Angle& a);
std::string to_string(const Phase& p);
std::string to_string(const Arc& a);
std::string to_string(const PhaseSet& s);
std::string to_string(Sign s);
Phase parse_phase(std::string_view token);
Sign parse_sign(std::string_view token);

}  // namespace phasesphere
