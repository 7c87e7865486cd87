#include <doctest.h>

#include <algorithm>
#include <array>
#include <vector>

#include "phasesphere/covector.hpp"

using namespace phasesphere;

namespace {

PhaseVector angles(std::initializer_list<Rational> as) {
  std::vector<Angle> out;
  for (const Rational& a : as) out.emplace_back(a);
  return PhaseVector::units(out);
}

}  // namespace

TEST_CASE("zero_in_sum examples") {
  CHECK(zero_in_sum(angles({0, Rational(1, 2)})));
  CHECK_FALSE(zero_in_sum(angles({0, 0})));
  CHECK(zero_in_sum(angles({0, Rational(3, 8), Rational(3, 4)})));
  CHECK_FALSE(zero_in_sum(angles({0, Rational(1, 8), Rational(1, 4)})));
  CHECK(zero_in_sum(PhaseVector::zeros(3)));
  CHECK_FALSE(zero_in_sum(PhaseVector{Phase::unit(1, 3), Phase::zero()}));
}

TEST_CASE("zero_in_sum agrees with the fold on a small grid") {
  for (const PhaseVector& x : enumerate_phase_grid(3, 6)) {
    CHECK(zero_in_sum(x) == hsum_fold(x.entries()).contains_zero());
  }
}

TEST_CASE("is_covector") {
  CHECK(is_covector(ones(3), PhaseVector{Phase::unit(0, 1), Phase::unit(1, 2), Phase::zero()}));
  CHECK_FALSE(is_covector(ones(3), PhaseVector{Phase::unit(0, 1), Phase::zero(), Phase::zero()}));
  CHECK(is_covector(angles({0, Rational(1, 4)}), angles({Rational(1, 2), Rational(3, 4)})));
  CHECK_THROWS_AS(is_covector(ones(2), ones(3)), std::invalid_argument);
  CHECK_THROWS_AS(is_covector(PhaseVector::zeros(2), ones(2)), std::invalid_argument);
}

TEST_CASE("rescaling carries covectors of v to covectors of 1") {
  const PhaseVector v = angles({Rational(1, 4), Rational(1, 2), Rational(7, 8)});
  CHECK(rescale(ones(3), v) == v);
  for (const PhaseVector& x : enumerate_phase_grid(3, 4)) {
    CHECK(is_covector(v, x) == is_covector(ones(3), rescale(v, x)));
    CHECK(rescale(inverse(v), rescale(v, x)) == x);
  }
}

TEST_CASE("componentwise order") {
  CHECK(leq(PhaseVector{Phase::zero(), Phase::unit(0, 1)}, PhaseVector{Phase::unit(1, 3), Phase::unit(0, 1)}));
  CHECK_FALSE(leq(PhaseVector{Phase::unit(0, 1), Phase::zero()}, PhaseVector{Phase::unit(1, 2), Phase::unit(0, 1)}));
  const PhaseVector x = angles({0, Rational(1, 5)});
  CHECK(leq(x, x));
  CHECK_THROWS(leq(ones(2), ones(3)));
}

TEST_CASE("find_zero_triple") {
  const auto t = find_zero_triple(angles({0, Rational(3, 8), Rational(3, 4), Rational(1, 16)}));
  REQUIRE(t.has_value());
  CHECK(*t == std::array<std::size_t, 3>{0, 1, 2});
  CHECK_FALSE(find_zero_triple(angles({0, Rational(1, 8), Rational(1, 4)})).has_value());
  const PhaseVector sparse{Phase::zero(), Phase::unit(0, 1), Phase::unit(1, 3), Phase::zero(), Phase::unit(2, 3)};
  CHECK(*find_zero_triple(sparse) == std::array<std::size_t, 3>{1, 2, 4});
}

TEST_CASE("every covector of support at least 3 has a zero triple") {
  for (const PhaseVector& x : enumerate_phase_covectors(4, 6)) {
    if (x.grade() < 3) continue;
    const auto t = find_zero_triple(x);
    REQUIRE(t.has_value());
    const std::vector<Phase> three{x[(*t)[0]], x[(*t)[1]], x[(*t)[2]]};
    CHECK(zero_in_sum(three));
  }
}

TEST_CASE("enumeration counts") {
  CHECK(enumerate_sign_covectors(3).size() == 12);
  const auto four = enumerate_phase_covectors(2, 4);
  CHECK(four.size() == 4);
  for (const PhaseVector& x : four) {
    CHECK(x.is_all_units());
    CHECK(x[1].angle() == x[0].angle().antipode());
  }
  CHECK(enumerate_phase_covectors(2, 2).size() == 2);
  CHECK(enumerate_phase_grid(2, 4).size() == 25);
  CHECK_THROWS(enumerate_phase_covectors(2, 3));
}

TEST_CASE("sign covectors are exactly the vectors with both signs or none") {
  for (const SignVector& x : enumerate_sign_covectors(4)) {
    const bool plus = std::find(x.begin(), x.end(), Sign::Plus) != x.end();
    const bool minus = std::find(x.begin(), x.end(), Sign::Minus) != x.end();
    CHECK(plus);
    CHECK(minus);
    CHECK(is_sign_covector(x));
  }
  CHECK_FALSE(is_sign_covector(SignVector{Sign::Plus, Sign::Zero, Sign::Plus}));
}

TEST_CASE("vector text round trip") {
  const PhaseVector x = parse_phase_vector("z,1/4,0");
  CHECK(x == PhaseVector{Phase::zero(), Phase::unit(1, 4), Phase::unit(0, 1)});
  CHECK(to_string(x) == "z,1/4,0");
  CHECK(to_string(parse_sign_vector("+,-,0")) == "+,-,0");
}
