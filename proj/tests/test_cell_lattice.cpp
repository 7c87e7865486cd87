#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "phasesphere/cell_lattice.hpp"

using namespace phasesphere;

namespace {

CellLabel L(const char* text) { return parse_cell_label(text); }

ModelPoint pt(std::initializer_list<std::pair<Rational, Rational>> cs) {
  ModelPoint z;
  for (const auto& [r, a] : cs) z.coords.emplace_back(r, Angle(a));
  return z;
}

}  // namespace

TEST_CASE("label order") {
  CHECK(leq(PLabel::One, PLabel::U));
  CHECK(leq(PLabel::One, PLabel::L));
  CHECK(leq(PLabel::MinusOne, PLabel::U));
  CHECK(leq(PLabel::MinusOne, PLabel::L));
  CHECK(leq(PLabel::U, PLabel::Phi));
  CHECK(leq(PLabel::One, PLabel::Phi));
  CHECK_FALSE(leq(PLabel::U, PLabel::L));
  CHECK_FALSE(leq(PLabel::One, PLabel::MinusOne));
  CHECK_FALSE(leq(PLabel::Phi, PLabel::U));
  int strict = 0;
  for (PLabel a : {PLabel::One, PLabel::MinusOne, PLabel::U, PLabel::L, PLabel::Phi}) {
    for (PLabel b : {PLabel::One, PLabel::MinusOne, PLabel::U, PLabel::L, PLabel::Phi}) strict += less(a, b);
  }
  CHECK(strict == 8);
}

TEST_CASE("lattice membership") {
  CHECK(in_Pn(L("U,L,F,1")));
  CHECK(in_Pn(L("U,U,-1,1")));
  CHECK_FALSE(in_Pn(L("U,U,F,1")));
  CHECK_FALSE(in_Pn(L("U,L,F,-1")));
}

TEST_CASE("generators") {
  CHECK(generator(0, 1, 4) == L("U,L,F,1"));
  CHECK(generator(0, 0, 4) == L("-1,F,F,1"));
  CHECK_THROWS_AS(generator(1, 0, 4), std::out_of_range);
  CHECK_THROWS_AS(generator(0, 3, 4), std::out_of_range);
  CHECK(oriented_generator(2, 0, 4) == L("L,F,U,1"));
  CHECK(oriented_generator(1, 1, 4) == generator(1, 1, 4));
  for (std::size_t n = 3; n <= 6; ++n) {
    for (std::size_t j = 0; j + 1 < n; ++j) {
      for (std::size_t k = 0; k + 1 < n; ++k) {
        CHECK(in_Pn(oriented_generator(j, k, n)));
        CHECK(nu(oriented_generator(j, k, n)) == static_cast<int>(2 * n - 4));
      }
    }
  }
}

TEST_CASE("meet examples") {
  CHECK(meet(generator(0, 1, 4), generator(0, 2, 4)) == L("U,L,L,1"));
  CHECK(meet(generator(0, 1, 4), generator(1, 2, 4)) == L("U,-1,L,1"));
  const CellLabel x = generator(1, 2, 5);
  CHECK(meet(x, x) == x);
}

TEST_CASE("meet is the greatest lower bound") {
  for (std::size_t n = 3; n <= 4; ++n) {
    const auto all = enumerate_Pn(n);
    for (const CellLabel& x : all) {
      for (const CellLabel& y : all) {
        const CellLabel m = meet(x, y);
        CHECK(in_Pn(m));
        CHECK(leq(m, x));
        CHECK(leq(m, y));
        CHECK(meet(y, x) == m);
        for (const CellLabel& z : all) {
          if (leq(z, x) && leq(z, y)) CHECK(leq(z, m));
        }
      }
    }
  }
}

TEST_CASE("nu") {
  CHECK(nu(L("U,L,F,1")) == 4);
  CHECK(nu(L("-1,F,F,1")) == 4);
  CHECK(nu(L("U,L,L,1")) == 3);
  for (std::size_t n = 3; n <= 6; ++n) {
    for (const CellLabel& x : enumerate_Pn(n)) {
      CHECK(nu(x) >= 0);
      CHECK(nu(x) <= static_cast<int>(2 * n - 4));
    }
  }
}

TEST_CASE("enumeration is exactly the members") {
  const auto all = enumerate_Pn(4);
  CHECK(std::is_sorted(all.begin(), all.end()));
  std::size_t members = 0;
  std::vector<PLabel> labels(4);
  const PLabel ps[] = {PLabel::One, PLabel::MinusOne, PLabel::U, PLabel::L, PLabel::Phi};
  for (int code = 0; code < 625; ++code) {
    int c = code;
    for (auto& l : labels) {
      l = ps[c % 5];
      c /= 5;
    }
    members += in_Pn(CellLabel(labels));
  }
  CHECK(all.size() == members);
}

TEST_CASE("half circle parameters") {
  CHECK(upper_param(DiscPoint::on_circle(Angle(1, 4))) == Rational(1, 2));
  CHECK(lower_param(DiscPoint::on_circle(Angle(5, 8))) == Rational(1, 4));
  CHECK(lower_param(DiscPoint::on_circle(Angle(0, 1))) == Rational(1));
  CHECK(upper_param(DiscPoint::on_circle(Angle(0, 1))) == Rational(0));
  CHECK_FALSE(upper_param(DiscPoint::on_circle(Angle(3, 4))).has_value());
  CHECK_FALSE(upper_param(DiscPoint(Rational(1, 2), Angle(1, 8))).has_value());
  for (int i = 0; i <= 8; ++i) {
    const Rational t(i, 8);
    CHECK(upper_param(upper_point(t)) == t);
    CHECK(lower_param(lower_point(t)) == t);
  }
}

TEST_CASE("ball membership examples") {
  const CellLabel x = L("U,L,1");
  const ModelPoint inside = pt({{1, Rational(1, 4)}, {1, Rational(5, 8)}, {1, 0}});
  CHECK(bx_member(x, inside, BallMode::Closed));
  CHECK(bx_member(x, inside, BallMode::Interior));
  const ModelPoint violated = pt({{1, Rational(1, 4)}, {1, Rational(7, 8)}, {1, 0}});
  CHECK_FALSE(bx_member(x, violated, BallMode::Closed));
  const ModelPoint edge = pt({{1, Rational(1, 2)}, {1, Rational(5, 8)}, {1, 0}});
  CHECK(bx_member(x, edge, BallMode::Closed));
  CHECK_FALSE(bx_member(x, edge, BallMode::Interior));
  const ModelPoint off_slice = pt({{1, Rational(1, 4)}, {1, Rational(5, 8)}, {1, Rational(1, 2)}});
  CHECK_FALSE(bx_member(x, off_slice, BallMode::Closed));
}

TEST_CASE("samples") {
  std::mt19937_64 rng(3);
  const ModelPoint corner = bx_sample(generator(0, 1, 3), SampleKind::Corner, BallMode::Closed, rng);
  CHECK(corner == pt({{1, 0}, {1, Rational(1, 2)}, {1, 0}}));

  const ModelPoint centre = bx_sample(generator(0, 0, 4), SampleKind::Center, BallMode::Interior, rng);
  CHECK(centre[0] == DiscPoint::on_circle(Angle(1, 2)));
  CHECK(bx_member(generator(0, 0, 4), centre, BallMode::Interior));

  for (std::size_t n = 3; n <= 5; ++n) {
    for (const CellLabel& x : enumerate_Pn(n)) {
      for (SampleKind kind : {SampleKind::Corner, SampleKind::Center, SampleKind::Random}) {
        CHECK(bx_member(x, bx_sample(x, kind, BallMode::Closed, rng), BallMode::Closed));
      }
      const ModelPoint z = bx_sample(x, SampleKind::Random, BallMode::Interior, rng);
      CHECK(bx_member(x, z, BallMode::Interior));
    }
  }
}

TEST_CASE("label text") {
  CHECK(to_string(L("U,L,Phi,1")) == "U,L,F,1");
  CHECK_THROWS(parse_cell_label("U,X,1"));
}
