// Copyright 2026 The skewgal Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "skewgal/error.hpp"
#include "skewgal/quat.hpp"

using namespace skewgal;
using namespace skewgal::quat;

namespace {

Quaternion q(const QuadField& K, long a, long b, long c, long d) {
  return Quaternion(QuadNumber(K, a), QuadNumber(K, b), QuadNumber(K, c), QuadNumber(K, d));
}

}  // namespace

TEST_CASE("Hamilton products") {
  auto K = QuadField::rationals();
  auto one = Quaternion::unit(K, 0), i = Quaternion::unit(K, 1), j = Quaternion::unit(K, 2),
       k = Quaternion::unit(K, 3);
  auto m1 = q(K, -1, 0, 0, 0);
  CHECK(i * j == k);
  CHECK(j * k == i);
  CHECK(k * i == j);
  CHECK(j * i == q(K, 0, 0, 0, -1));
  CHECK(i * i == m1);
  CHECK(j * j == m1);
  CHECK(k * k == m1);
  CHECK(i * j * k == m1);
  CHECK((one + i) * (one - i) == q(K, 2, 0, 0, 0));
  CHECK(i.inverse() == q(K, 0, -1, 0, 0));
  CHECK_THROWS_AS(q(K, 0, 0, 0, 0).inverse(), DomainError);
}

TEST_CASE("norm is multiplicative over Q(sqrt 3)") {
  auto K = QuadField::sqrt(3);
  std::mt19937_64 rng(4);
  auto r = [&] { return QuadNumber(K, Rational(static_cast<long>(rng() % 11) - 5, 1 + rng() % 4),
                                   Rational(static_cast<long>(rng() % 7) - 3)); };
  for (int t = 0; t < 200; ++t) {
    Quaternion x(r(), r(), r(), r()), y(r(), r(), r(), r());
    CHECK((x * y).norm() == x.norm() * y.norm());
    if (!x.norm().is_zero()) CHECK(x * x.inverse() == Quaternion::scalar(QuadNumber(K, 1)));
  }
}

TEST_CASE("quadratic field descriptors") {
  CHECK(QuadField::parse("Q").is_rationals());
  CHECK(QuadField::parse("Q(sqrt:-7)").m() == -7);
  CHECK_THROWS_AS(QuadField::parse("Q(sqrt:4)"), DomainError);
  CHECK_THROWS_AS(QuadField::parse("Q(cbrt:2)"), ParseError);
  CHECK(QuadField::sqrt(5).half_integral_order());
  CHECK_FALSE(QuadField::sqrt(3).half_integral_order());
}

TEST_CASE("local levels") {
  auto l5 = level_local(5);
  CHECK(l5.level == 1);
  REQUIRE(l5.witness.size() == 1);
  CHECK((l5.witness[0] * l5.witness[0] + 1) % l5.witness_modulus == 0);

  auto l3 = level_local(3);
  CHECK(l3.level == 2);
  REQUIRE(l3.witness.size() == 2);
  CHECK((l3.witness[0] * l3.witness[0] + l3.witness[1] * l3.witness[1] + 1) % l3.witness_modulus == 0);

  auto l2 = level_local(2);
  CHECK(l2.level == 4);
  CHECK(l2.verified);
  CHECK(three_squares_miss_minus_one_mod16());
  CHECK(three_squares_zero_mod4_forces_even());

  CHECK(level_local(0).level == kInfiniteLevel);
}

TEST_CASE("completions of level at least four") {
  auto Q = level4_completion_exists(QuadField::rationals());
  CHECK(Q.feasible);
  CHECK(Q.place == "inf");
  CHECK_FALSE(level4_completion_exists(QuadField::sqrt(-1)).feasible);
  auto r2 = level4_completion_exists(QuadField::sqrt(2));
  CHECK(r2.feasible);
  CHECK(r2.place == "inf");
  // no real place, and 2^2 + (sqrt -5)^2 = -1 bounds every completion by 2
  CHECK_FALSE(level4_completion_exists(QuadField::sqrt(-5)).feasible);
}

TEST_CASE("division ring test") {
  CHECK(is_division_ring(QuadField::rationals()));
  CHECK(nonsplit_places(QuadField::rationals()) == std::vector<std::string>{"2", "inf"});
  CHECK_FALSE(is_division_ring(QuadField::sqrt(-1)));
  // Q(sqrt -7): 2 splits, so both places above 2 are copies of Q_2
  auto K = QuadField::sqrt(-7);
  CHECK(is_division_ring(K));
  CHECK(nonsplit_places(K).size() % 2 == 0);
  // -1 is then not a sum of two squares: a bounded search finds nothing
  CHECK_FALSE(two_square_search(K, 6));
  CHECK(two_square_search(QuadField::sqrt(-1), 2));
  for (long m : {2l, 3l, -2l, -3l, 5l, -5l, 6l, -6l, 7l, 10l}) {
    auto P = nonsplit_places(QuadField::sqrt(m));
    CHECK_MESSAGE(P.size() % 2 == 0, "m = " << m);
  }
}

TEST_CASE("global levels") {
  CHECK(level_global(QuadField::rationals()).level == kInfiniteLevel);
  auto i = level_global(QuadField::sqrt(-1));
  CHECK(i.level == 1);
  CHECK(level_global(QuadField::sqrt(-7)).level == 4);
  CHECK(level_global(QuadField::sqrt(-2)).level == 2);
}
