#include <doctest.h>

#include <algorithm>
#include <vector>

#include "phasesphere/phase.hpp"

using namespace phasesphere;

TEST_CASE("phase multiplication adds angles mod 1") {
  CHECK(mul(Phase::unit(1, 4), Phase::unit(1, 2)) == Phase::unit(3, 4));
  CHECK(mul(Phase::zero(), Phase::unit(1, 3)) == Phase::zero());
  CHECK(mul(Phase::unit(3, 4), Phase::unit(3, 4)) == Phase::unit(1, 2));
}

TEST_CASE("pair sums") {
  const PhaseSet with_zero = hsum_pair(Phase::unit(0, 1), Phase::zero());
  CHECK_FALSE(with_zero.contains_zero());
  REQUIRE(with_zero.arcs().size() == 1);
  CHECK(with_zero.arcs()[0] == Arc::point(Angle(0, 1)));

  const PhaseSet opposite = hsum_pair(Phase::unit(0, 1), Phase::unit(1, 2));
  CHECK(opposite.contains_zero());
  CHECK(opposite.is_full_circle());

  const PhaseSet quarter = hsum_pair(Phase::unit(0, 1), Phase::unit(1, 4));
  CHECK_FALSE(quarter.contains_zero());
  REQUIRE(quarter.arcs().size() == 1);
  CHECK(quarter.arcs()[0].start() == Angle(0, 1));
  CHECK(quarter.arcs()[0].length() == Rational(1, 4));

  CHECK(hsum_pair(Phase::unit(1, 3), Phase::unit(1, 3)) == PhaseSet::of(Phase::unit(1, 3)));
  CHECK(hsum_pair(Phase::zero(), Phase::zero()) == PhaseSet::of(Phase::zero()));
}

TEST_CASE("pair sum is commutative and takes the short arc") {
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) {
      const Phase x = Phase::unit(a, 8);
      const Phase y = Phase::unit(b, 8);
      CHECK(hsum_pair(x, y) == hsum_pair(y, x));
      const PhaseSet s = hsum_pair(x, y);
      if ((a - b + 8) % 8 == 4) {
        CHECK(s.contains_zero());
      } else {
        CHECK_FALSE(s.contains_zero());
        REQUIRE(s.arcs().size() == 1);
        CHECK(s.arcs()[0].length() <= Rational(1, 2));
        CHECK(s.arcs()[0].contains(x.angle()));
        CHECK(s.arcs()[0].contains(y.angle()));
      }
    }
  }
}

TEST_CASE("folds") {
  const std::vector<Phase> one{Phase::unit(0, 1)};
  CHECK(hsum_fold(one) == PhaseSet::of(Phase::unit(0, 1)));

  const std::vector<Phase> two{Phase::unit(0, 1), Phase::unit(1, 4)};
  const PhaseSet s2 = hsum_fold(two);
  CHECK_FALSE(s2.contains_zero());
  REQUIRE(s2.arcs().size() == 1);
  CHECK(s2.arcs()[0] == Arc(Angle(0, 1), Rational(1, 4)));

  const std::vector<Phase> three{Phase::unit(0, 1), Phase::unit(1, 2), Phase::unit(1, 4)};
  const PhaseSet s3 = hsum_fold(three);
  CHECK(s3.contains_zero());
  CHECK(s3.is_full_circle());

  CHECK_THROWS(hsum_fold(std::vector<Phase>{}));
}

TEST_CASE("minimal enclosing arc") {
  const std::vector<Angle> a{Angle(0, 1), Angle(1, 8), Angle(1, 4)};
  CHECK(min_enclosing_arc(a) == Arc(Angle(0, 1), Rational(1, 4)));
  const std::vector<Angle> b{Angle(0, 1), Angle(1, 2)};
  CHECK(min_enclosing_arc(b).length() == Rational(1, 2));
  const std::vector<Angle> c{Angle(1, 3)};
  CHECK(min_enclosing_arc(c) == Arc::point(Angle(1, 3)));
  const std::vector<Angle> wrap{Angle(7, 8), Angle(1, 8)};
  CHECK(min_enclosing_arc(wrap) == Arc(Angle(7, 8), Rational(1, 4)));
  CHECK_THROWS(min_enclosing_arc(std::vector<Angle>{}));
}

TEST_CASE("arc normalization merges touching arcs") {
  const auto merged = normalize_arcs({Arc(Angle(0, 1), Rational(1, 4)), Arc(Angle(1, 4), Rational(1, 4))});
  REQUIRE(merged.size() == 1);
  CHECK(merged[0] == Arc(Angle(0, 1), Rational(1, 2)));
  const auto full = normalize_arcs({Arc(Angle(0, 1), Rational(1, 2)), Arc(Angle(1, 2), Rational(1, 2))});
  REQUIRE(full.size() == 1);
  CHECK(full[0].is_full());
}

TEST_CASE("sign hyperfield") {
  CHECK(sign_hsum(Sign::Plus, Sign::Minus) == std::vector<Sign>{Sign::Minus, Sign::Zero, Sign::Plus});
  CHECK(sign_hsum(Sign::Plus, Sign::Plus) == std::vector<Sign>{Sign::Plus});
  CHECK(sign_hsum(Sign::Minus, Sign::Zero) == std::vector<Sign>{Sign::Minus});
  CHECK(sign_mul(Sign::Minus, Sign::Minus) == Sign::Plus);
  CHECK(sign_mul(Sign::Zero, Sign::Minus) == Sign::Zero);
  const std::vector<Sign> xs{Sign::Plus, Sign::Plus, Sign::Minus};
  CHECK(sign_hsum_fold(xs) == std::vector<Sign>{Sign::Minus, Sign::Zero, Sign::Plus});
}

TEST_CASE("text round trip") {
  for (const char* t : {"z", "0", "1/4", "7/8"}) CHECK(to_string(parse_phase(t)) == t);
  CHECK(parse_phase("5/4") == Phase::unit(1, 4));
  CHECK_THROWS(parse_phase("abc"));
  CHECK(parse_sign("-") == Sign::Minus);
}
