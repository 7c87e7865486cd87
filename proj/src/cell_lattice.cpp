#include "phasesphere/cell_lattice.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace phasesphere {

namespace {

const Rational kHalf(1, 2);

bool is_sign_like(PLabel l) { return l == PLabel::MinusOne || l == PLabel::U || l == PLabel::L; }
bool is_half(PLabel l) { return l == PLabel::U || l == PLabel::L; }

std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

}  // namespace

bool leq(PLabel a, PLabel b) {
  if (a == b || b == PLabel::Phi) return true;
  if (a == PLabel::One || a == PLabel::MinusOne) return b == PLabel::U || b == PLabel::L;
  return false;
}

std::vector<std::size_t> CellLabel::indices_of(PLabel l) const {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < labels_.size(); ++a) {
    if (labels_[a] == l) out.push_back(a);
  }
  return out;
}

bool in_Pn(const CellLabel& x) {
  const std::size_t n = x.size();
  if (n < 3) return false;
  for (std::size_t a = 0; a < n; ++a) {
    if ((x[a] == PLabel::One) != (a == n - 1)) return false;
  }
  bool has_sign_like = false;
  for (std::size_t a = 0; a + 1 < n; ++a) has_sign_like = has_sign_like || is_sign_like(x[a]);
  if (!has_sign_like) return false;
  for (std::size_t a = 0; a + 1 < n; ++a) {
    if (!is_half(x[a])) continue;
    bool partner = false;
    for (std::size_t b = 0; b + 1 < n && !partner; ++b) {
      partner = b != a && is_sign_like(x[b]) && x[b] != x[a];
    }
    if (!partner) return false;
  }
  return true;
}

bool leq(const CellLabel& x, const CellLabel& y) {
  if (x.size() != y.size()) throw std::invalid_argument("cell labels of different sizes");
  for (std::size_t a = 0; a < x.size(); ++a) {
    if (!leq(x[a], y[a])) return false;
  }
  return true;
}

CellLabel oriented_generator(std::size_t upper, std::size_t lower, std::size_t n) {
  if (n < 3 || upper + 1 >= n || lower + 1 >= n) {
    throw std::out_of_range("generator indices out of range");
  }
  std::vector<PLabel> l(n, PLabel::Phi);
  l[n - 1] = PLabel::One;
  if (upper == lower) {
    l[upper] = PLabel::MinusOne;
  } else {
    l[upper] = PLabel::U;
    l[lower] = PLabel::L;
  }
  return CellLabel(std::move(l));
}

CellLabel generator(std::size_t j, std::size_t k, std::size_t n) {
  if (j > k) throw std::out_of_range("generator requires j <= k");
  return oriented_generator(j, k, n);
}

CellLabel meet(const CellLabel& x, const CellLabel& y) {
  if (x.size() != y.size()) throw std::invalid_argument("cell labels of different sizes");
  std::vector<PLabel> out(x.size());
  for (std::size_t a = 0; a < x.size(); ++a) {
    if (leq(x[a], y[a])) {
      out[a] = x[a];
    } else if (leq(y[a], x[a])) {
      out[a] = y[a];
    } else if (is_half(x[a]) && is_half(y[a]) && a + 1 != x.size()) {
      out[a] = PLabel::MinusOne;
    } else {
      throw std::domain_error("labels without a common lower bound at coordinate " +
                              std::to_string(a));
    }
  }
  CellLabel m(std::move(out));
  if (!in_Pn(m)) throw std::domain_error("meet " + to_string(m) + " leaves the lattice");
  return m;
}

CellLabel meet(const std::vector<CellLabel>& xs) {
  if (xs.empty()) throw std::invalid_argument("meet of no labels");
  CellLabel acc = xs.front();
  for (std::size_t i = 1; i < xs.size(); ++i) acc = meet(acc, xs[i]);
  return acc;
}

int nu(const CellLabel& x) {
  int v = 0;
  for (PLabel l : x.labels()) {
    if (is_half(l)) v += 1;
    if (l == PLabel::Phi) v += 2;
  }
  return v;
}

std::vector<CellLabel> enumerate_Pn(std::size_t n) {
  if (n < 3) return {};
  const std::array<PLabel, 4> values{PLabel::MinusOne, PLabel::U, PLabel::L, PLabel::Phi};
  std::vector<CellLabel> out;
  std::vector<std::size_t> digits(n - 1, 0);
  while (true) {
    std::vector<PLabel> l;
    for (std::size_t d : digits) l.push_back(values[d]);
    l.push_back(PLabel::One);
    CellLabel x(std::move(l));
    if (in_Pn(x)) out.push_back(std::move(x));
    std::size_t i = digits.size();
    while (i > 0 && ++digits[i - 1] == values.size()) digits[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

std::optional<Rational> upper_param(const DiscPoint& p) {
  if (!p.on_circle()) return std::nullopt;
  const Rational& a = p.angle().turns();
  if (a <= kHalf) return 2 * a;
  return std::nullopt;
}

std::optional<Rational> lower_param(const DiscPoint& p) {
  if (!p.on_circle()) return std::nullopt;
  const Rational& a = p.angle().turns();
  if (a == 0) return Rational(1);
  if (a >= kHalf) return 2 * a - 1;
  return std::nullopt;
}

DiscPoint upper_point(const Rational& t) { return DiscPoint::on_circle(Angle(t / 2)); }
DiscPoint lower_point(const Rational& t) { return DiscPoint::on_circle(Angle(kHalf + t / 2)); }

bool bx_member(const CellLabel& x, const ModelPoint& z, BallMode mode) {
  const std::size_t n = x.size();
  if (z.size() != n) throw std::invalid_argument("bx_member: point and label sizes differ");
  const bool interior = mode == BallMode::Interior;
  std::vector<std::optional<Rational>> t(n);
  for (std::size_t a = 0; a < n; ++a) {
    const DiscPoint& p = z[a];
    switch (x[a]) {
      case PLabel::One:
        if (p != DiscPoint::on_circle(Angle())) return false;
        break;
      case PLabel::MinusOne:
        if (p != DiscPoint::on_circle(Angle(kHalf))) return false;
        break;
      case PLabel::U:
      case PLabel::L:
        t[a] = x[a] == PLabel::U ? upper_param(p) : lower_param(p);
        if (!t[a]) return false;
        if (interior && (*t[a] <= 0 || *t[a] >= 1)) return false;
        break;
      case PLabel::Phi:
        if (interior && p.on_circle()) return false;
        break;
    }
  }
  if (z[n - 1] != DiscPoint::on_circle(Angle())) return false;
  for (std::size_t a = 0; a < n; ++a) {
    if (x[a] != PLabel::U) continue;
    for (std::size_t b = 0; b < n; ++b) {
      if (x[b] != PLabel::L) continue;
      if (interior ? !(*t[b] < *t[a]) : !(*t[b] <= *t[a])) return false;
    }
  }
  return true;
}

ModelPoint bx_sample(const CellLabel& x, SampleKind kind, BallMode mode, std::mt19937_64& rng) {
  const std::size_t n = x.size();
  const bool interior = mode == BallMode::Interior;
  ModelPoint z;
  z.coords.resize(n);

  // Every U parameter is drawn above a threshold s and every L parameter below it,
  // which is exactly the order-polytope condition t_L <= t_U.
  std::int64_t den = 1;
  std::int64_t s_num = 0;
  if (kind == SampleKind::Random) {
    den = std::int64_t{2} << draw(rng, 0, 3);
    if (interior) {
      s_num = 2 * draw(rng, 1, den - 1);
      den *= 2;
    } else {
      s_num = draw(rng, 0, den);
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    switch (x[a]) {
      case PLabel::One: z[a] = DiscPoint::on_circle(Angle()); break;
      case PLabel::MinusOne: z[a] = DiscPoint::on_circle(Angle(kHalf)); break;
      case PLabel::U:
      case PLabel::L: {
        Rational t;
        if (kind == SampleKind::Corner) {
          t = 0;
        } else if (kind == SampleKind::Center) {
          t = x[a] == PLabel::U ? Rational(2, 3) : Rational(1, 3);
        } else if (x[a] == PLabel::U) {
          t = interior ? Rational(draw(rng, s_num + 1, den - 1), den)
                       : Rational(draw(rng, s_num, den), den);
        } else {
          t = interior ? Rational(draw(rng, 1, s_num - 1), den) : Rational(draw(rng, 0, s_num), den);
        }
        z[a] = x[a] == PLabel::U ? upper_point(t) : lower_point(t);
        break;
      }
      case PLabel::Phi: {
        if (kind != SampleKind::Random) {
          z[a] = DiscPoint::center();
          break;
        }
        const std::int64_t rden = std::int64_t{2} << draw(rng, 0, 3);
        const Rational r(draw(rng, 0, interior ? rden - 1 : rden), rden);
        const std::int64_t aden = 4 * rden;
        z[a] = DiscPoint(r, Angle(draw(rng, 0, aden - 1), aden));
        break;
      }
    }
  }
  return z;
}

std::string to_string(PLabel l) {
  switch (l) {
    case PLabel::One: return "1";
    case PLabel::MinusOne: return "-1";
    case PLabel::U: return "U";
    case PLabel::L: return "L";
    case PLabel::Phi: return "F";
  }
  return "?";
}

std::string to_string(const CellLabel& x) {
  std::string out;
  for (std::size_t a = 0; a < x.size(); ++a) {
    if (a) out += ",";
    out += to_string(x[a]);
  }
  return out;
}

CellLabel parse_cell_label(std::string_view text) {
  std::vector<PLabel> out;
  for (auto tok : split(text, ',')) {
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    if (tok == "1") out.push_back(PLabel::One);
    else if (tok == "-1") out.push_back(PLabel::MinusOne);
    else if (tok == "U") out.push_back(PLabel::U);
    else if (tok == "L") out.push_back(PLabel::L);
    else if (tok == "F" || tok == "Phi") out.push_back(PLabel::Phi);
    else throw std::invalid_argument("malformed cell label token: '" + std::string(tok) + "'");
  }
  return CellLabel(std::move(out));
}

}  // namespace phasesphere
