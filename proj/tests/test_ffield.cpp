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

#include "skewgal/error.hpp"
#include "skewgal/ffield.hpp"

using namespace skewgal;
using namespace skewgal::ff;

TEST_CASE("field construction") {
  auto F4 = FqField::make(2, 2);
  CHECK(F4.size() == 4);
  CHECK(F4.modulus() == zp::Poly{1, 1, 1});

  auto F3 = FqField::make(3, 1);
  CHECK(F3.size() == 3);
  CHECK(zp::degree(F3.modulus()) == 1);

  // irreducibility of the degree-4 modulus: no factor of degree 1 or 2
  auto F16 = FqField::make(2, 4);
  const auto& m = F16.modulus();
  CHECK(zp::degree(m) == 4);
  for (unsigned d = 1; d <= 2; ++d) {
    auto xq = zp::x_pow_p_iter(d, m, 2);
    auto g = zp::gcd(zp::sub(xq, zp::Poly{0, 1}, 2), m, 2);
    CHECK(zp::degree(g) == 0);
  }

  CHECK(FqField::parse("2^4") == F16);
  CHECK_THROWS_AS(FqField::make(4, 2), DomainError);
  CHECK_THROWS_AS(FqField::parse("2^x"), ParseError);
}

TEST_CASE("seeded moduli are irreducible and reproducible") {
  for (std::uint64_t seed : {1ull, 2ull, 99ull}) {
    auto a = FqField::make(3, 5, seed);
    auto b = FqField::make(3, 5, seed);
    CHECK(a.modulus() == b.modulus());
    CHECK(zp::is_irreducible(a.modulus(), 3));
  }
}

TEST_CASE("arithmetic against exponent laws") {
  auto F = FqField::make(3, 3);
  for (auto x : F.elements()) {
    CHECK(x.pow(F.size()) == x);
    if (!x.is_zero()) {
      CHECK((x * x.inverse()).is_one());
      CHECK(x.pow(F.size() - 1).is_one());
    }
  }
  CHECK_THROWS(F.zero().inverse());
}

TEST_CASE("frobenius orders") {
  auto F16 = FqField::make(2, 4);
  CHECK(frobenius(F16, 1).order() == 4);
  CHECK(frobenius(F16, 2).order() == 2);
  auto F4 = FqField::make(2, 2);
  CHECK(frobenius(F4, 0).is_identity());
  CHECK(frobenius(F4, 0).order() == 1);
  // matrix action agrees with exponentiation
  for (auto x : F16.elements()) CHECK(frobenius(F16, 3)(x) == x.pow(8));
}

TEST_CASE("galois groups of subfield extensions") {
  auto F4 = FqField::make(2, 2);
  auto F16 = FqField::make(2, 4);
  auto F64 = FqField::make(2, 6);
  auto F8 = FqField::make(2, 3);

  auto g = galois_group(F16, SubfieldEmbedding(F4, F16));
  REQUIRE(g.size() == 2);
  CHECK(g[0] == frobenius(F16, 2));
  CHECK(g[1].is_identity());

  auto h = galois_group(F64, SubfieldEmbedding(F4, F64));
  REQUIRE(h.size() == 3);
  CHECK(h[0] == frobenius(F64, 2));
  CHECK(h[0].order() == 3);

  auto t = galois_group(F8, SubfieldEmbedding(F8, F8));
  REQUIRE(t.size() == 1);
  CHECK(t[0].is_identity());
}

TEST_CASE("restriction to a subfield") {
  auto F4 = FqField::make(2, 2);
  auto F16 = FqField::make(2, 4);
  SubfieldEmbedding K(F4, F16);

  auto r2 = restrict_aut(frobenius(F16, 2), K);
  CHECK(r2.is_identity());
  for (auto x : F4.elements()) CHECK(frobenius(F16, 2)(K.map(x)) == K.map(x));

  auto r1 = restrict_aut(frobenius(F16, 1), K);
  CHECK(r1 == frobenius(F4, 1));
  for (auto x : F4.elements()) CHECK(frobenius(F16, 1)(K.map(x)) == K.map(x.pow(2)));

  CHECK(restrict_aut(frobenius(F16, 0), K).is_identity());

  // restriction is a homomorphism
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      auto A = frobenius(F16, a), B = frobenius(F16, b);
      CHECK(restrict_aut(A.compose(B), K) == restrict_aut(A, K).compose(restrict_aut(B, K)));
    }
}

TEST_CASE("embedding respects arithmetic") {
  auto F9 = FqField::make(3, 2);
  auto F729 = FqField::make(3, 6);
  SubfieldEmbedding K(F9, F729);
  CHECK(K.relative_degree() == 3);
  for (auto x : F9.elements())
    for (auto y : F9.elements()) {
      CHECK(K.map(x * y) == K.map(x) * K.map(y));
      CHECK(K.map(x + y) == K.map(x) + K.map(y));
    }
  for (auto x : F9.elements()) CHECK(K.preimage(K.map(x)) == x);
  CHECK_FALSE(K.contains(F729.generator()));
  CHECK_THROWS_AS(K.preimage(F729.generator()), DomainError);
  CHECK_THROWS_AS(SubfieldEmbedding(FqField::make(3, 4), F729), DomainError);
}

TEST_CASE("split roots") {
  auto F16 = FqField::make(2, 4);
  // x^16 - x splits into every element
  std::vector<FqElem> f(17, F16.zero());
  f[16] = F16.one();
  f[1] = -F16.one();
  auto roots = split_roots(f);
  CHECK(roots.size() == 16);
}
