#include "phasesphere/covector.hpp"

#include <algorithm>
#include <stdexcept>

namespace phasesphere {

namespace {

void require_same_length(std::size_t a, std::size_t b) {
  if (a != b) {
    throw std::invalid_argument("length mismatch: " + std::to_string(a) + " vs " +
                                std::to_string(b));
  }
}

void require_units(const PhaseVector& v) {
  if (!v.is_all_units()) throw std::invalid_argument("v must have no zero entry");
}

// Odometer over {0, ..., base-1}^n.
bool advance(std::vector<int>& digits, int base) {
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (++digits[i] < base) return true;
    digits[i] = 0;
  }
  return false;
}

}  // namespace

PhaseVector PhaseVector::units(const std::vector<Angle>& angles) {
  std::vector<Phase> e;
  e.reserve(angles.size());
  for (const Angle& a : angles) e.push_back(Phase::unit(a));
  return PhaseVector(std::move(e));
}

std::vector<std::size_t> PhaseVector::support() const {
  std::vector<std::size_t> s;
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    if (entries_[k].is_unit()) s.push_back(k);
  }
  return s;
}

std::size_t PhaseVector::grade() const {
  return static_cast<std::size_t>(
      std::count_if(entries_.begin(), entries_.end(), [](const Phase& p) { return p.is_unit(); }));
}

bool zero_in_sum(std::span<const Phase> xs) {
  std::vector<Angle> angles;
  for (const Phase& p : xs) {
    if (p.is_unit()) angles.push_back(p.angle());
  }
  if (angles.empty()) return true;
  if (angles.size() == 1) return false;
  return min_enclosing_arc(angles).length() >= Rational(1, 2);
}

bool is_covector(const PhaseVector& v, const PhaseVector& x) {
  require_same_length(v.size(), x.size());
  require_units(v);
  std::vector<Phase> products;
  products.reserve(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) products.push_back(mul(v[k], x[k]));
  return zero_in_sum(products);
}

bool leq(const PhaseVector& x, const PhaseVector& y) {
  require_same_length(x.size(), y.size());
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (x[k].is_unit() && x[k] != y[k]) return false;
  }
  return true;
}

std::optional<std::array<std::size_t, 3>> find_zero_triple(const PhaseVector& x) {
  const std::size_t n = x.size();
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = j + 1; k < n; ++k) {
      for (std::size_t l = k + 1; l < n; ++l) {
        const std::array<Phase, 3> t{x[j], x[k], x[l]};
        if (zero_in_sum(t)) return std::array<std::size_t, 3>{j, k, l};
      }
    }
  }
  return std::nullopt;
}

PhaseVector rescale(const PhaseVector& v, const PhaseVector& x) {
  require_same_length(v.size(), x.size());
  require_units(v);
  std::vector<Phase> out;
  out.reserve(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) out.push_back(mul(v[k], x[k]));
  return PhaseVector(std::move(out));
}

PhaseVector inverse(const PhaseVector& v) {
  require_units(v);
  std::vector<Phase> out;
  for (const Phase& p : v.entries()) out.push_back(Phase::unit(-p.angle()));
  return PhaseVector(std::move(out));
}

PhaseVector ones(std::size_t n) { return PhaseVector(std::vector<Phase>(n, Phase::unit(0, 1))); }

std::vector<PhaseVector> enumerate_phase_grid(std::size_t n, int m) {
  if (m < 1) throw std::invalid_argument("grid size must be positive");
  std::vector<Phase> values{Phase::zero()};
  for (int k = 0; k < m; ++k) values.push_back(Phase::unit(k, m));
  std::vector<PhaseVector> out;
  std::vector<int> digits(n, 0);
  do {
    std::vector<Phase> e;
    e.reserve(n);
    for (int d : digits) e.push_back(values[static_cast<std::size_t>(d)]);
    out.emplace_back(std::move(e));
  } while (advance(digits, m + 1));
  return out;
}

std::vector<PhaseVector> enumerate_phase_covectors(std::size_t n, int m) {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  if (m < 2 || m % 2 != 0) throw std::invalid_argument("m must be even and at least 2");
  std::vector<PhaseVector> out;
  for (PhaseVector& x : enumerate_phase_grid(n, m)) {
    if (x.grade() > 0 && zero_in_sum(x)) out.push_back(std::move(x));
  }
  return out;
}

bool is_sign_covector(const SignVector& x) {
  if (x.empty()) return true;
  const auto sum = sign_hsum_fold(x);
  return std::find(sum.begin(), sum.end(), Sign::Zero) != sum.end();
}

bool leq(const SignVector& x, const SignVector& y) {
  require_same_length(x.size(), y.size());
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (x[k] != Sign::Zero && x[k] != y[k]) return false;
  }
  return true;
}

std::vector<SignVector> enumerate_sign_covectors(std::size_t n) {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  const std::array<Sign, 3> values{Sign::Zero, Sign::Minus, Sign::Plus};
  std::vector<SignVector> out;
  std::vector<int> digits(n, 0);
  do {
    SignVector x;
    for (int d : digits) x.push_back(values[static_cast<std::size_t>(d)]);
    const bool nonzero = std::any_of(x.begin(), x.end(), [](Sign s) { return s != Sign::Zero; });
    if (nonzero && is_sign_covector(x)) out.push_back(std::move(x));
  } while (advance(digits, 3));
  return out;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    const auto next = text.find(sep, pos);
    out.push_back(text.substr(pos, next == std::string_view::npos ? text.npos : next - pos));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return out;
}

std::string to_string(const PhaseVector& x) {
  std::string out;
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (k) out += ",";
    out += to_string(x[k]);
  }
  return out;
}

std::string to_string(const SignVector& x) {
  std::string out;
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (k) out += ",";
    out += to_string(x[k]);
  }
  return out;
}

PhaseVector parse_phase_vector(std::string_view text) {
  std::vector<Phase> e;
  for (auto tok : split(text, ',')) e.push_back(parse_phase(tok));
  return PhaseVector(std::move(e));
}

SignVector parse_sign_vector(std::string_view text) {
  SignVector out;
  for (auto tok : split(text, ',')) out.push_back(parse_sign(tok));
  return out;
}

}  // namespace phasesphere
