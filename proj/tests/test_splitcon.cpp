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

#include "skewgal/checks/oracles.hpp"
#include "skewgal/error.hpp"
#include "skewgal/splitcon.hpp"

using namespace skewgal;
using namespace skewgal::splitcon;

namespace {

ZPoly Z(std::initializer_list<long> c) {
  ZPoly f;
  for (long x : c) f.push_back(Int(x));
  return f;
}

std::vector<std::uint64_t> primes_of(const std::vector<LocalSpec>& v) {
  std::vector<std::uint64_t> out;
  for (const auto& s : v) out.push_back(s.prime);
  return out;
}

LocalSpec ur(std::uint64_t p, unsigned m) {
  LocalSpec s;
  s.prime = p;
  s.kind = Kind::unramified_degree;
  s.m = m;
  return s;
}

}  // namespace

TEST_CASE("spec strings") {
  auto s = parse_spec("3:rq");
  CHECK(s.prime == 3);
  CHECK(s.kind == Kind::ramified_quadratic);
  CHECK_FALSE(s.ram_in_L);
  CHECK(parse_spec("inf:ts").is_real());
  auto u = parse_spec("7:ur3:ramL");
  CHECK(u.m == 3);
  CHECK(u.ram_in_L);
  for (const char* t : {"3:rq", "inf:ts", "7:ur3:ramL", "2:ts"}) CHECK(format_spec(parse_spec(t)) == t);
  CHECK_THROWS_AS(parse_spec("4:ts"), DomainError);
  CHECK_THROWS_AS(parse_spec("3:zz"), ParseError);
  CHECK_THROWS_AS(parse_spec("inf:rq"), ParseError);
}

TEST_CASE("auxiliary primes") {
  auto a = plan_aux_primes({parse_spec("3:ts"), parse_spec("inf:ts")}, {3}, 5);
  CHECK(primes_of(a) == std::vector<std::uint64_t>{2, 5, 7, 11});
  REQUIRE(a.size() == 4);
  CHECK(a[0].kind == Kind::ramified_quadratic);
  CHECK(kind_tag(a[1]) == "ur5");
  CHECK(kind_tag(a[2]) == "ur4");
  CHECK(kind_tag(a[3]) == "ur2");

  CHECK(primes_of(plan_aux_primes({}, {}, 2)) == std::vector<std::uint64_t>{2, 3, 5, 7});

  std::vector<LocalSpec> crowd;
  for (const char* t : {"2:ts", "3:ts", "5:ts", "7:ts", "11:ts"}) crowd.push_back(parse_spec(t));
  auto c = plan_aux_primes(crowd, {}, 3);
  CHECK(c[0].prime >= 13);
  for (auto p : primes_of(c)) CHECK(p >= 13);
}

TEST_CASE("local polynomials") {
  auto ts = build_local_poly(parse_spec("5:ts"), 3, 1);
  CHECK(ts.modulus == 5);
  CHECK(ts.coeffs == Z({0, 2, 2, 1}));  // X(X-1)(X-2) mod 5

  auto rq = build_local_poly(parse_spec("3:rq"), 3, 2);
  CHECK(rq.modulus == 9);
  CHECK(rq.coeffs == Z({3, 6, 8, 1}));  // (X^2-3)(X-1) mod 9

  auto u = build_local_poly(ur(2, 2), 3, 1);
  CHECK(u.coeffs == Z({0, 1, 1, 1}));  // (X^2+X+1) X mod 2
  CHECK(u.factor_shape == std::vector<unsigned>{2, 1});
}

TEST_CASE("weak approximation") {
  auto single = weak_approximation({build_local_poly(parse_spec("5:ts"), 3, 1)}, std::nullopt, 3);
  CHECK(single == Z({0, 2, 2, 1}));

  auto two = weak_approximation({build_local_poly(ur(2, 3), 3, 1), build_local_poly(parse_spec("3:ts"), 3, 1)},
                                std::nullopt, 3);
  CHECK(zx::reduce(two, 2) == zx::reduce(build_local_poly(ur(2, 3), 3, 1).coeffs, 2));
  CHECK(zx::reduce(two, 3) == zx::reduce(build_local_poly(parse_spec("3:ts"), 3, 1).coeffs, 3));
  for (const auto& c : two) CHECK(abs(c) <= 3);

  CHECK(weak_approximation({}, real_target(2), 2) == Z({2, -3, 1}));
}

TEST_CASE("S_n certificates") {
  // X^3 + 7X + 5: irreducible mod 2, X(X^2 + 2) mod 5
  auto cert = certify_sn(Z({5, 7, 0, 1}), {ur(2, 3), ur(5, 2)});
  CHECK(cert.n_cycle);
  CHECK(cert.transposition);
  CHECK(cert.conclusion);
  CHECK(oracle::galois_group_small(Z({5, 7, 0, 1})) == "S3");

  CHECK(certify_sn(Z({0, 1}), {}).conclusion);

  // X^2 (X + 1) is not squarefree mod 2
  auto bad = certify_sn(Z({0, 0, 1, 1}), {ur(2, 3)});
  CHECK_FALSE(bad.conclusion);
  CHECK(bad.reason.find("not squarefree") != std::string::npos);
}

TEST_CASE("local certificates") {
  auto rq = certify_local_behavior(Z({-3, 0, 1}), parse_spec("3:rq"));
  CHECK(rq.passed);
  CHECK(certify_local_behavior(Z({-1, 0, 1}), parse_spec("5:ts")).passed);
  auto real = certify_local_behavior(Z({1, 0, 1}), parse_spec("inf:ts"));
  CHECK_FALSE(real.passed);
  REQUIRE(real.root_count);
  CHECK(*real.root_count == 0);
}

TEST_CASE("construction end to end") {
  auto r = construct_lprime({parse_spec("3:rq"), parse_spec("inf:ts")}, 5, 3);
  CHECK(r.certified);
  CHECK(verify_report(r).ok);
  CHECK(r.disjoint.prime == r.aux.at(0).prime);
  CHECK(oracle::real_root_count(r.Q) == r.n);

  auto empty = construct_lprime({}, 3, 2);
  CHECK(empty.certified);
  CHECK(verify_report(empty).ok);

  auto two = construct_lprime({parse_spec("2:ts:ramL")}, 3, 3);
  CHECK(two.certified);
  CHECK(verify_report(two).ok);

  CHECK_THROWS_AS(construct_lprime({}, 2, 3), DomainError);

  // a tampered report fails verification
  auto bad = r;
  bad.Q[0] += 1;
  CHECK_FALSE(verify_report(bad).ok);
}

TEST_CASE("odd prime for cubic residue extensions") {
  CHECK(odd_prime_dividing_cube_minus_one(2) == 7);
  CHECK(odd_prime_dividing_cube_minus_one(3) == 13);
  CHECK(odd_prime_dividing_cube_minus_one(4) == 3);
  CHECK_THROWS_AS(odd_prime_dividing_cube_minus_one(6), DomainError);
  CHECK(is_prime_power(49));
  CHECK_FALSE(is_prime_power(12));
}
