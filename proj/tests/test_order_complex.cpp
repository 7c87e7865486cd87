#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "phasesphere/order_complex.hpp"

using namespace phasesphere;

namespace {

DiscPoint dp(Rational r, Rational a) { return DiscPoint(r, Angle(a)); }

JoinPoint chain_example() {
  return JoinPoint{{{Rational(1, 4), PhaseVector{Phase::unit(0, 1), Phase::unit(1, 2), Phase::zero()}},
                    {Rational(3, 4), PhaseVector{Phase::unit(0, 1), Phase::unit(1, 2), Phase::unit(1, 4)}}}};
}

// A random strict chain of phase vectors on a 1/8 grid with random positive weights.
JoinPoint random_chain(std::size_t n, std::mt19937_64& rng) {
  std::vector<Phase> entries(n);
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  JoinPoint p;
  std::size_t filled = 0;
  if (rng() % 3 == 0) p.terms.push_back({Rational(1), PhaseVector(entries)});
  while (filled < n) {
    const std::size_t step = 1 + rng() % (n - filled);
    for (std::size_t s = 0; s < step; ++s) {
      entries[order[filled++]] = Phase::unit(static_cast<std::int64_t>(rng() % 8), 8);
    }
    p.terms.push_back({Rational(1), PhaseVector(entries)});
    if (rng() % 2 == 0) break;
  }
  Rational total = 0;
  for (JoinTerm& t : p.terms) {
    t.weight = Rational(static_cast<std::int64_t>(1 + rng() % 7));
    total += t.weight;
  }
  for (JoinTerm& t : p.terms) t.weight /= total;
  return p;
}

}  // namespace

TEST_CASE("gamma examples") {
  const JoinPoint origin{{{Rational(1), PhaseVector::zeros(3)}}};
  CHECK(gamma(origin) == ModelPoint{{DiscPoint(), DiscPoint(), DiscPoint()}});

  const JoinPoint half{{{Rational(1, 2), PhaseVector::zeros(2)},
                        {Rational(1, 2), PhaseVector{Phase::unit(0, 1), Phase::unit(1, 2)}}}};
  CHECK(gamma(half) == ModelPoint{{dp(Rational(1, 2), 0), dp(Rational(1, 2), Rational(1, 2))}});

  CHECK(gamma(chain_example()) ==
        ModelPoint{{dp(1, 0), dp(1, Rational(1, 2)), dp(Rational(3, 4), Rational(1, 4))}});
}

TEST_CASE("gamma rejects non-canonical join points") {
  const JoinPoint bad_weights{{{Rational(1, 2), ones(2)}}};
  CHECK_THROWS_AS(gamma(bad_weights), std::invalid_argument);
  const JoinPoint not_chain{{{Rational(1, 2), PhaseVector{Phase::unit(0, 1), Phase::zero()}},
                             {Rational(1, 2), PhaseVector{Phase::unit(1, 2), Phase::unit(0, 1)}}}};
  CHECK_THROWS_AS(gamma(not_chain), std::invalid_argument);
}

TEST_CASE("gamma_inv examples") {
  const JoinPoint origin = gamma_inv(ModelPoint{{DiscPoint(), DiscPoint()}});
  REQUIRE(origin.terms.size() == 1);
  CHECK(origin.terms[0].weight == 1);
  CHECK(origin.terms[0].vector == PhaseVector::zeros(2));

  const JoinPoint antipodal = gamma_inv(ModelPoint{{dp(1, 0), dp(1, Rational(1, 2))}});
  REQUIRE(antipodal.terms.size() == 1);
  CHECK(antipodal.terms[0].vector == PhaseVector{Phase::unit(0, 1), Phase::unit(1, 2)});

  CHECK(gamma_inv(ModelPoint{{dp(1, 0), dp(1, Rational(1, 2)), dp(Rational(3, 4), Rational(1, 4))}}) ==
        chain_example());
}

TEST_CASE("gamma round trips on random chains") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    const std::size_t n = 1 + rng() % 6;
    const JoinPoint p = random_chain(n, rng);
    const ModelPoint z = gamma(p);
    CHECK(gamma_inv(z) == p);
    CHECK(gamma(gamma_inv(z)) == z);
  }
}

TEST_CASE("delta membership") {
  CHECK(delta_member(ones(2), ModelPoint{{dp(1, 0), dp(1, Rational(1, 2))}}));
  CHECK_FALSE(delta_member(ones(2), ModelPoint{{dp(1, 0), dp(Rational(3, 4), Rational(1, 2))}}));
  CHECK(delta_member(ones(3), ModelPoint{{dp(1, 0), dp(1, Rational(1, 2)), dp(Rational(3, 4), Rational(1, 4))}}));
  CHECK_FALSE(delta_member(ones(2), ModelPoint{{DiscPoint(), DiscPoint()}}));
}

TEST_CASE("delta membership is invariant under rotation and transported by rescaling") {
  std::mt19937_64 rng(11);
  const PhaseVector v{Phase::unit(1, 8), Phase::unit(3, 4), Phase::unit(1, 2)};
  for (int i = 0; i < 300; ++i) {
    const ModelPoint z = gamma(random_chain(3, rng));
    const Angle y(static_cast<std::int64_t>(rng() % 16), 16);
    CHECK(delta_member(ones(3), z) == delta_member(ones(3), rotate(y, z)));
    CHECK(delta_member(v, z) == delta_member(ones(3), rescale(v, z)));
  }
}

TEST_CASE("model point text round trip") {
  const ModelPoint z{{dp(1, 0), dp(Rational(1, 2), Rational(3, 8)), DiscPoint()}};
  CHECK(to_string(z) == "1@0;1/2@3/8;0@0");
  CHECK(parse_model_point(to_string(z)) == z);
  CHECK_THROWS(parse_model_point("2@0"));
}
