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

#include "skewgal/checks/oracles.hpp"
#include "skewgal/error.hpp"
#include "skewgal/orepoly.hpp"

using namespace skewgal;
using namespace skewgal::ore;

namespace {

struct F4Ring {
  FqField F = FqField::make(2, 2);
  FieldAut frob = ff::frobenius(F, 1);
  FqElem w = F.generator();
  OrePoly T = OrePoly::monomial(frob, F.one(), 1);
  OrePoly one = OrePoly::one(frob);
  OrePoly c(const FqElem& x) const { return OrePoly::constant(frob, x); }
};

OrePoly random_poly(const FieldAut& tw, std::mt19937_64& rng, int max_deg) {
  const auto& F = tw.field();
  std::vector<FqElem> c;
  int deg = static_cast<int>(rng() % (max_deg + 1));
  for (int i = 0; i <= deg; ++i) c.push_back(F.from_index(rng() % F.size()));
  return OrePoly(tw, c);
}

}  // namespace

TEST_CASE("multiplication examples over F4") {
  F4Ring R;
  auto w2 = R.w * R.w;
  CHECK(R.T * R.c(R.w) == OrePoly::monomial(R.frob, w2, 1));

  auto wT = OrePoly::monomial(R.frob, R.w, 1);
  CHECK(wT * wT == OrePoly::monomial(R.frob, R.F.one(), 2));

  auto lhs = (R.T + R.one) * (R.T + R.c(R.w));
  auto rhs = R.T * R.T + wT + R.c(R.w);
  CHECK(lhs == rhs);
  // ω^2 + 1 = ω in F4
  CHECK(w2 + R.F.one() == R.w);
}

TEST_CASE("multiplication agrees with monomial expansion") {
  std::mt19937_64 rng(11);
  for (auto [p, n] : {std::pair{2u, 3u}, {3u, 2u}, {5u, 2u}}) {
    auto F = FqField::make(p, n);
    for (unsigned k = 0; k < n; ++k) {
      auto tw = ff::frobenius(F, k);
      for (int i = 0; i < 50; ++i) {
        auto f = random_poly(tw, rng, 4), g = random_poly(tw, rng, 4);
        CHECK((f * g) == OrePoly(tw, oracle::ore_convolution(f.coeffs(), g.coeffs(), k)));
      }
    }
  }
}

TEST_CASE("right division") {
  F4Ring R;
  auto T2 = R.T * R.T;
  auto d = ore_right_divmod(T2, R.T);
  CHECK(d.quotient == R.T);
  CHECK(d.remainder.is_zero());

  auto f = T2 + OrePoly::monomial(R.frob, R.w, 1) + R.c(R.w);
  auto byone = ore_right_divmod(f, R.one);
  CHECK(byone.quotient == f);
  CHECK(byone.remainder.is_zero());

  auto inv = ore_right_divmod(f, R.T + R.c(R.w));
  CHECK(inv.quotient == R.T + R.one);
  CHECK(inv.remainder.is_zero());

  CHECK_THROWS_AS(ore_right_divmod(f, OrePoly::zero(R.frob)), DomainError);
}

TEST_CASE("division quotient is unique") {
  // any other q' with deg(f - q' g) < deg g fails: perturb q by a monomial
  std::mt19937_64 rng(5);
  auto F = FqField::make(3, 2);
  auto tw = ff::frobenius(F, 1);
  for (int i = 0; i < 100; ++i) {
    auto f = random_poly(tw, rng, 6), g = random_poly(tw, rng, 3);
    if (g.is_zero()) continue;
    auto d = ore_right_divmod(f, g);
    CHECK(d.quotient * g + d.remainder == f);
    CHECK(d.remainder.degree() < g.degree());
    auto bumped = d.quotient + OrePoly::monomial(tw, F.one(), static_cast<unsigned>(rng() % 3));
    CHECK((f - bumped * g).degree() >= g.degree());
  }
}

TEST_CASE("left division via the opposite ring") {
  std::mt19937_64 rng(6);
  auto F = FqField::make(2, 3);
  auto tw = ff::frobenius(F, 1);
  for (int i = 0; i < 100; ++i) {
    auto f = random_poly(tw, rng, 6), g = random_poly(tw, rng, 3);
    if (g.is_zero()) continue;
    auto d = ore_left_divmod(f, g);
    CHECK(g * d.quotient + d.remainder == f);
    CHECK(d.remainder.degree() < g.degree());
    CHECK(from_opposite(to_opposite(f)) == f);
  }
}

TEST_CASE("gcd and lcm") {
  F4Ring R;
  auto T2 = R.T * R.T;
  CHECK(ore_right_gcd(T2, R.T) == R.T);
  auto f = OrePoly::monomial(R.frob, R.w, 2) + R.one;
  auto g0 = ore_right_gcd(f, OrePoly::zero(R.frob));
  CHECK(g0.leading().is_one());
  CHECK(g0 == f.left_scale(R.w.inverse()));
  CHECK(ore_left_lcm(R.T, R.c(R.w)) == R.T);
}

TEST_CASE("gcd divides and lcm is a common multiple") {
  std::mt19937_64 rng(8);
  auto F = FqField::make(2, 4);
  for (unsigned k : {1u, 2u}) {
    auto tw = ff::frobenius(F, k);
    for (int i = 0; i < 60; ++i) {
      auto f = random_poly(tw, rng, 4), g = random_poly(tw, rng, 4);
      if (f.is_zero() || g.is_zero()) continue;
      auto d = ore_right_gcd(f, g);
      CHECK(ore_right_divmod(f, d).remainder.is_zero());
      CHECK(ore_right_divmod(g, d).remainder.is_zero());
      auto l = ore_left_lcm(f, g);
      CHECK(ore_right_divmod(l, f).remainder.is_zero());
      CHECK(ore_right_divmod(l, g).remainder.is_zero());
      CHECK(l.degree() + d.degree() == f.degree() + g.degree());
    }
  }
}

TEST_CASE("right common multiples") {
  F4Ring R;
  auto y = R.c(R.w);
  auto wit = ore_witness(R.T, y);
  CHECK(R.T * wit.r == y * wit.s);
  CHECK_FALSE((R.T * wit.r).is_zero());
  // the hand pair r = ω, s = ωT also works
  CHECK(R.T * R.c(R.w) == y * OrePoly::monomial(R.frob, R.w, 1));

  auto same = ore_witness(R.T + R.one, R.T + R.one);
  CHECK(same.r == R.one);
  CHECK(same.s == R.one);

  auto F2 = FqField::make(2, 1);
  auto id = ff::frobenius(F2, 0);
  auto X = OrePoly::monomial(id, F2.one(), 1);
  auto one = OrePoly::one(id);
  auto c = ore_witness(X + one, X);
  CHECK(c.r == X);
  CHECK(c.s == X + one);
}

TEST_CASE("induced automorphisms and the fixed subring") {
  auto K = FqField::make(2, 1);
  auto L = FqField::make(2, 2);
  ff::SubfieldEmbedding emb(K, L);
  auto tw = ff::frobenius(L, 1);
  auto ident = induced_ring_aut(ff::frobenius(L, 0), tw, emb);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    auto f = random_poly(tw, rng, 3);
    CHECK(ident.apply(f) == f);
  }
  auto rho = induced_ring_aut(ff::frobenius(L, 1), tw, emb);
  auto scan = fixed_subring_scan({rho}, emb, 2);
  CHECK(scan.scanned == 64);
  CHECK(scan.expected == 8);
  CHECK(scan.matches_subring());
}
