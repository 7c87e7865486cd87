#pragma once

// Covectors of the loopless rank n-1 phased matroid v^⊥ on [n], the componentwise
// order on phase vectors, and exhaustive enumeration over root-of-unity grids.

#include <array>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "phasesphere/phase.hpp"

namespace phasesphere {

class PhaseVector {
 public:
  PhaseVector() = default;
  explicit PhaseVector(std::vector<Phase> entries) : entries_(std::move(entries)) {}
  PhaseVector(std::initializer_list<Phase> entries) : entries_(entries) {}
  /// All-zero vector of length n.
  static PhaseVector zeros(std::size_t n) { return PhaseVector(std::vector<Phase>(n)); }
  /// Units with the given angles.
  static PhaseVector units(const std::vector<Angle>& angles);

  std::size_t size() const { return entries_.size(); }
  const Phase& operator[](std::size_t k) const { return entries_[k]; }
  Phase& operator[](std::size_t k) { return entries_[k]; }
  const std::vector<Phase>& entries() const { return entries_; }

  std::vector<std::size_t> support() const;
  /// |supp(x)|
  std::size_t grade() const;
  bool is_all_units() const { return grade() == size(); }

  friend bool operator==(const PhaseVector&, const PhaseVector&) = default;
  /// Lexicographic, zero before units.
  friend auto operator<=>(const PhaseVector& a, const PhaseVector& b) {
    return a.entries_ <=> b.entries_;
  }

 private:
  std::vector<Phase> entries_;
};

using SignVector = std::vector<Sign>;

/// 0 ∈ x_1 ⊞ ... ⊞ x_n, decided by the minimal enclosing arc of the nonzero entries.
bool zero_in_sum(std::span<const Phase> xs);
inline bool zero_in_sum(const PhaseVector& x) { return zero_in_sum(std::span(x.entries())); }

/// x ∈ v^⊥. Throws std::invalid_argument on length mismatch or a zero entry in v.
bool is_covector(const PhaseVector& v, const PhaseVector& x);

/// Componentwise order: every x_k is zero or equals y_k. Throws on length mismatch.
bool leq(const PhaseVector& x, const PhaseVector& y);

/// Lexicographically smallest 0-based triple j < k < l with 0 ∈ x_j ⊞ x_k ⊞ x_l.
std::optional<std::array<std::size_t, 3>> find_zero_triple(const PhaseVector& x);

/// Entrywise product (v_1 x_1, ..., v_n x_n). Same preconditions as is_covector.
PhaseVector rescale(const PhaseVector& v, const PhaseVector& x);

/// Entrywise inverse of a vector of units.
PhaseVector inverse(const PhaseVector& v);

/// The all-ones vector 1_n (every angle 0).
PhaseVector ones(std::size_t n);

/// Nonzero covectors of 1_n over {0} ∪ {k/m}, lexicographic. Requires n >= 2 and m even >= 2.
std::vector<PhaseVector> enumerate_phase_covectors(std::size_t n, int m);

/// Every vector of length n over {0} ∪ {k/m} (zero first, then angles ascending).
std::vector<PhaseVector> enumerate_phase_grid(std::size_t n, int m);

bool is_sign_covector(const SignVector& x);
bool leq(const SignVector& x, const SignVector& y);

/// Nonzero sign covectors of 1_n, lexicographic with 0 < - < +.
std::vector<SignVector> enumerate_sign_covectors(std::size_t n);

// "z,1/4,0" style text for phase vectors; "+,-,0" for sign vectors.
std::string to_string(const PhaseVector& x);
std::string to_string(const SignVector& x);
PhaseVector parse_phase_vector(std::string_view text);
SignVector parse_sign_vector(std::string_view text);

std::vector<std::string_view> split(std::string_view text, char sep);

}  // namespace phasesphere
