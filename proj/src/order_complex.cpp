#include "phasesphere/order_complex.hpp"

#include <algorithm>
#include <stdexcept>

namespace phasesphere {

DiscPoint::DiscPoint(const Rational& radius, Angle angle) : radius_(radius), angle_(angle) {
  if (radius < 0 || radius > 1) throw std::invalid_argument("disc radius outside [0,1]");
  if (radius == 0) angle_ = Angle();
}

std::strong_ordering operator<=>(const DiscPoint& a, const DiscPoint& b) {
  if (a.radius_ < b.radius_) return std::strong_ordering::less;
  if (b.radius_ < a.radius_) return std::strong_ordering::greater;
  return a.angle_ <=> b.angle_;
}

void JoinPoint::validate() const {
  if (terms.empty()) throw std::invalid_argument("join point without terms");
  const std::size_t n = terms.front().vector.size();
  Rational total(0);
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const JoinTerm& t = terms[i];
    if (t.weight <= 0) throw std::invalid_argument("join weight must be positive");
    if (t.vector.size() != n) throw std::invalid_argument("join vectors of different lengths");
    total += t.weight;
    if (i > 0) {
      const JoinTerm& prev = terms[i - 1];
      if (prev.vector.grade() >= t.vector.grade()) {
        throw std::invalid_argument("join grades must strictly increase");
      }
      if (!leq(prev.vector, t.vector)) throw std::invalid_argument("join terms are not a chain");
    }
  }
  if (total != 1) throw std::invalid_argument("join weights must sum to 1");
}

ModelPoint gamma(const JoinPoint& p) {
  p.validate();
  const std::size_t n = p.terms.front().vector.size();
  ModelPoint z;
  z.coords.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    // Terms are nested, so the first term supporting j fixes the phase and every
    // later term supports j as well.
    Rational radius(0);
    Angle angle;
    bool seen = false;
    for (const JoinTerm& t : p.terms) {
      if (t.vector[j].is_zero()) continue;
      if (!seen) angle = t.vector[j].angle();
      seen = true;
      radius += t.weight;
    }
    z.coords.emplace_back(radius, angle);
  }
  return z;
}

JoinPoint gamma_inv(const ModelPoint& z) {
  const std::size_t n = z.size();
  std::vector<Rational> radii;
  for (const DiscPoint& c : z.coords) {
    if (!c.is_center()) radii.push_back(c.radius());
  }
  std::sort(radii.begin(), radii.end(), [](const Rational& a, const Rational& b) { return b < a; });
  radii.erase(std::unique(radii.begin(), radii.end()), radii.end());

  JoinPoint p;
  const Rational top = radii.empty() ? Rational(0) : radii.front();
  if (top < 1) p.terms.push_back({1 - top, PhaseVector::zeros(n)});
  for (std::size_t i = 0; i < radii.size(); ++i) {
    const Rational next = i + 1 < radii.size() ? radii[i + 1] : Rational(0);
    PhaseVector level = PhaseVector::zeros(n);
    for (std::size_t j = 0; j < n; ++j) {
      if (z[j].radius() >= radii[i]) level[j] = Phase::unit(z[j].angle());
    }
    p.terms.push_back({radii[i] - next, std::move(level)});
  }
  return p;
}

bool delta_member(const PhaseVector& v, const ModelPoint& z) {
  if (v.size() != z.size()) throw std::invalid_argument("delta_member: length mismatch");
  const JoinPoint p = gamma_inv(z);
  if (p.terms.front().vector.grade() == 0) return false;  // max radius < 1
  return std::all_of(p.terms.begin(), p.terms.end(),
                     [&](const JoinTerm& t) { return is_covector(v, t.vector); });
}

ModelPoint rotate(const Angle& y, const ModelPoint& z) {
  ModelPoint out = z;
  for (DiscPoint& c : out.coords) {
    if (!c.is_center()) c = DiscPoint(c.radius(), c.angle() + y);
  }
  return out;
}

ModelPoint rescale(const PhaseVector& v, const ModelPoint& z) {
  if (v.size() != z.size()) throw std::invalid_argument("rescale: length mismatch");
  if (!v.is_all_units()) throw std::invalid_argument("rescale: v must have no zero entry");
  ModelPoint out = z;
  for (std::size_t j = 0; j < z.size(); ++j) {
    if (!out[j].is_center()) out[j] = DiscPoint(out[j].radius(), out[j].angle() + v[j].angle());
  }
  return out;
}

std::string to_string(const DiscPoint& p) {
  return to_string(p.radius()) + "@" + to_string(p.angle());
}

std::string to_string(const ModelPoint& z) {
  std::string out;
  for (std::size_t j = 0; j < z.size(); ++j) {
    if (j) out += ";";
    out += to_string(z[j]);
  }
  return out;
}

ModelPoint parse_model_point(std::string_view text) {
  ModelPoint z;
  for (auto tok : split(text, ';')) {
    const auto at = tok.find('@');
    if (at == std::string_view::npos) {
      throw std::invalid_argument("malformed disc point: '" + std::string(tok) + "'");
    }
    z.coords.emplace_back(parse_rational(tok.substr(0, at)), Angle(parse_rational(tok.substr(at + 1))));
  }
  return z;
}

}  // namespace phasesphere
