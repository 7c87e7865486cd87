#include "phasesphere/phase.hpp"

#include <algorithm>
#include <stdexcept>

namespace phasesphere {

namespace {

const Rational kHalf(1, 2);

// Signed offset of `x` from `center`, in [-1/2, 1/2).
Rational centered_offset(const Angle& x, const Angle& center) {
  return frac((x - center).turns() + kHalf) - kHalf;
}

}  // namespace

Arc::Arc(Angle start, const Rational& length) : start_(start), length_(length) {
  if (length < 0 || length > 1) throw std::invalid_argument("arc length outside [0,1]");
  if (length == 1) start_ = Angle();
}

bool Arc::contains(const Angle& a) const {
  if (is_full()) return true;
  return (a - start_).turns() <= length_;
}

const Angle& Phase::angle() const {
  if (!angle_) throw std::logic_error("angle() of the zero phase");
  return *angle_;
}

std::strong_ordering operator<=>(const Phase& a, const Phase& b) {
  if (a.is_zero() || b.is_zero()) return b.is_zero() <=> a.is_zero();
  return *a.angle_ <=> *b.angle_;
}

std::vector<Arc> normalize_arcs(std::vector<Arc> arcs) {
  if (arcs.empty()) return arcs;
  for (const Arc& a : arcs) {
    if (a.is_full()) return {Arc::full()};
  }
  struct Span {
    Rational lo, hi;
  };
  std::vector<Span> spans;
  spans.reserve(arcs.size());
  for (const Arc& a : arcs) spans.push_back({a.start().turns(), a.start().turns() + a.length()});
  std::sort(spans.begin(), spans.end(), [](const Span& x, const Span& y) { return x.lo < y.lo; });

  std::vector<Span> merged;
  for (const Span& s : spans) {
    if (!merged.empty() && s.lo <= merged.back().hi) {
      merged.back().hi = std::max(merged.back().hi, s.hi);
    } else {
      merged.push_back(s);
    }
  }
  // Spans past 1 may wrap onto the first ones.
  while (merged.size() > 1 && merged.back().hi >= merged.front().lo + 1) {
    merged.back().hi = std::max(merged.back().hi, merged.front().hi + 1);
    merged.erase(merged.begin());
  }
  std::vector<Arc> out;
  for (const Span& s : merged) {
    if (s.hi - s.lo >= 1) return {Arc::full()};
    out.emplace_back(Angle(s.lo), s.hi - s.lo);
  }
  std::sort(out.begin(), out.end(),
            [](const Arc& x, const Arc& y) { return x.start() < y.start(); });
  return out;
}

PhaseSet::PhaseSet(bool contains_zero, std::vector<Arc> arcs)
    : contains_zero_(contains_zero), arcs_(normalize_arcs(std::move(arcs))) {}

PhaseSet PhaseSet::of(const Phase& p) {
  if (p.is_zero()) return PhaseSet(true, {});
  return PhaseSet(false, {Arc::point(p.angle())});
}

bool PhaseSet::contains(const Phase& p) const {
  if (p.is_zero()) return contains_zero_;
  return std::any_of(arcs_.begin(), arcs_.end(),
                     [&](const Arc& a) { return a.contains(p.angle()); });
}

Phase mul(const Phase& a, const Phase& b) {
  if (a.is_zero() || b.is_zero()) return Phase::zero();
  return Phase::unit(a.angle() + b.angle());
}

PhaseSet hsum_pair(const Phase& a, const Phase& b) { return hsum_set(PhaseSet::of(a), b); }

PhaseSet hsum_set(const PhaseSet& acc, const Phase& p) {
  if (p.is_zero()) return acc;
  const Angle u = p.angle();
  const Angle anti = u.antipode();
  std::vector<Arc> out;
  for (const Arc& arc : acc.arcs()) {
    if (arc.contains(anti)) return PhaseSet(true, {Arc::full()});
    // The arc avoids -u, so it is an interval of the line S^1 - {-u} centred at u,
    // and the union of the shortest arcs joining u to its points is its hull with u.
    const Rational lo = centered_offset(arc.start(), u);
    const Rational hi = lo + arc.length();
    const Rational hull_lo = std::min(lo, Rational(0));
    const Rational hull_hi = std::max(hi, Rational(0));
    out.emplace_back(Angle(u.turns() + hull_lo), hull_hi - hull_lo);
  }
  if (acc.contains_zero()) out.push_back(Arc::point(u));
  return PhaseSet(false, std::move(out));
}

PhaseSet hsum_fold(std::span<const Phase> xs) {
  if (xs.empty()) throw std::invalid_argument("hsum_fold of an empty list");
  PhaseSet acc = PhaseSet::of(xs.front());
  for (const Phase& p : xs.subspan(1)) acc = hsum_set(acc, p);
  return acc;
}

Arc min_enclosing_arc(std::span<const Angle> angles) {
  if (angles.empty()) throw std::invalid_argument("min_enclosing_arc of an empty list");
  std::vector<Angle> pts(angles.begin(), angles.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() == 1) return Arc::point(pts.front());

  // The gap ending at pts[i] runs from its cyclic predecessor.
  Rational best_gap(-1);
  Angle best_start;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const Angle& prev = pts[(i + pts.size() - 1) % pts.size()];
    const Rational gap = i == 0 ? pts[0].turns() + 1 - prev.turns() : pts[i].turns() - prev.turns();
    if (gap > best_gap) {  // strict: the earliest (smallest) start wins ties
      best_gap = gap;
      best_start = pts[i];
    }
  }
  return Arc(best_start, 1 - best_gap);
}

Sign sign_mul(Sign a, Sign b) {
  return static_cast<Sign>(static_cast<int>(a) * static_cast<int>(b));
}

std::vector<Sign> sign_hsum(Sign a, Sign b) {
  if (a == Sign::Zero) return {b};
  if (b == Sign::Zero || a == b) return {a};
  return {Sign::Minus, Sign::Zero, Sign::Plus};
}

std::vector<Sign> sign_hsum_fold(std::span<const Sign> xs) {
  if (xs.empty()) throw std::invalid_argument("sign_hsum_fold of an empty list");
  std::vector<Sign> acc{xs.front()};
  for (Sign s : xs.subspan(1)) {
    std::vector<Sign> next;
    for (Sign a : acc) {
      for (Sign r : sign_hsum(a, s)) next.push_back(r);
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    acc = std::move(next);
  }
  return acc;
}

std::string to_string(const Angle& a) { return to_string(a.turns()); }

std::string to_string(const Phase& p) { return p.is_zero() ? "z" : to_string(p.angle()); }

std::string to_string(const Arc& a) {
  return "[" + to_string(a.start()) + " +" + to_string(a.length()) + "]";
}

std::string to_string(const PhaseSet& s) {
  std::string out = "{";
  bool first = true;
  if (s.contains_zero()) {
    out += "z";
    first = false;
  }
  for (const Arc& a : s.arcs()) {
    if (!first) out += ", ";
    out += to_string(a);
    first = false;
  }
  return out + "}";
}

std::string to_string(Sign s) {
  switch (s) {
    case Sign::Minus: return "-";
    case Sign::Zero: return "0";
    case Sign::Plus: return "+";
  }
  return "?";
}

Phase parse_phase(std::string_view token) {
  while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
  while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
  if (token == "z") return Phase::zero();
  return Phase::unit(Angle(parse_rational(token)));
}

Sign parse_sign(std::string_view token) {
  while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
  while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
  if (token == "+" || token == "1" || token == "+1") return Sign::Plus;
  if (token == "-" || token == "-1") return Sign::Minus;
  if (token == "0") return Sign::Zero;
  throw std::invalid_argument("malformed sign: '" + std::string(token) + "'");
}

}  // namespace phasesphere
