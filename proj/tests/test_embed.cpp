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

#include <set>

#include "skewgal/embed.hpp"
#include "skewgal/group_catalog.hpp"

using namespace skewgal;
using namespace skewgal::embed;
using ff::FqField;
using grp::Elem;

namespace {

FFGaloisExt ext(unsigned p, unsigned nK, unsigned nL) {
  return make_extension(FqField::make(p, nK), FqField::make(p, nL));
}

// C_m -> C_e, i -> i mod e
std::vector<Elem> reduction(unsigned m, unsigned e) {
  std::vector<Elem> a(m);
  for (unsigned i = 0; i < m; ++i) a[i] = i % e;
  return a;
}

}  // namespace

TEST_CASE("extensions") {
  auto e = ext(2, 2, 6);
  CHECK(e.degree == 3);
  CHECK_THROWS_AS(ext(2, 2, 3), DomainError);
  CHECK_THROWS_AS(make_extension(FqField::make(2, 1), FqField::make(3, 2)), DomainError);
}

TEST_CASE("sections") {
  auto iso = make_problem(grp::cyclic_group(3), ext(2, 1, 3), reduction(3, 3));
  auto s = find_section(iso);
  REQUIRE(s);
  CHECK(s->images() == std::vector<Elem>{0, 1, 2});

  auto c4 = make_problem(grp::cyclic_group(4), ext(2, 2, 4), reduction(4, 2));
  CHECK_FALSE(find_section(c4));

  // C2 x C2 -> C2, projection onto the second factor (index a + 2b)
  auto v4 = make_problem(grp::direct_product(*grp::cyclic_group(2), *grp::cyclic_group(2)), ext(3, 1, 2),
                         {0, 0, 1, 1});
  CHECK(find_section(v4));

  CHECK_THROWS_AS(make_problem(grp::cyclic_group(4), ext(2, 2, 4), {0, 0, 0, 0}), DomainError);
}

TEST_CASE("weak solutions") {
  auto iso = make_problem(grp::cyclic_group(5), ext(2, 1, 5), reduction(5, 5));
  auto w = find_weak_solutions(iso);
  REQUIRE(w.size() == 1);
  CHECK(w[0].ord == 5);

  auto c4 = find_weak_solutions(make_problem(grp::cyclic_group(4), ext(2, 2, 4), reduction(4, 2)));
  REQUIRE(c4.size() == 2);
  for (auto x : c4) CHECK(x.ord == 4);

  auto c6 = find_weak_solutions(make_problem(grp::cyclic_group(6), ext(2, 2, 4), reduction(6, 2)));
  std::set<unsigned> orders;
  for (auto x : c6) orders.insert(x.ord);
  CHECK(orders == std::set<unsigned>{2, 6});
}

TEST_CASE("lifting sigma") {
  auto e = ext(2, 2, 6);
  auto tau = lift_sigma(e, ff::frobenius(e.K, 1));
  CHECK(tau.exponent() == 3);
  CHECK(tau.order() == 2);
  // among the three extensions Frob, Frob^3, Frob^5 only Frob^3 has order 2
  auto cands = extensions_of(e, ff::frobenius(e.K, 1));
  REQUIRE(cands.size() == 3);
  unsigned order2 = 0;
  for (auto c : cands) order2 += c.order == 2;
  CHECK(order2 == 1);

  CHECK(lift_sigma(e, ff::frobenius(e.K, 0)).is_identity());

  auto bad = ext(2, 2, 4);
  try {
    lift_sigma(bad, ff::frobenius(bad.K, 1));
    FAIL("expected a coprimality failure");
  } catch (const CoprimalityFailure& f) {
    CHECK(f.d() == 2);
    CHECK(f.degree() == 2);
    REQUIRE(f.evidence().size() == 2);
    for (auto c : f.evidence()) CHECK(c.order == 4);
  }
}

TEST_CASE("order criterion and direct product criterion") {
  auto e = ext(2, 2, 6);
  auto r = checked_extension_criteria(e, ff::frobenius(e.K, 1), ff::frobenius(e.L, 3));
  CHECK(r.order_coprime);
  CHECK(r.is_direct_product);

  auto b = ext(2, 2, 4);
  auto s = checked_extension_criteria(b, ff::frobenius(b.K, 1), ff::frobenius(b.L, 1));
  CHECK_FALSE(s.order_coprime);
  CHECK_FALSE(s.is_direct_product);
  CHECK(s.tau_order == 4);
  CHECK(s.intersection_order == 2);

  auto t = checked_extension_criteria(b, ff::frobenius(b.K, 0), ff::frobenius(b.L, 0));
  CHECK(t.order_coprime);
  CHECK(t.is_direct_product);

  CHECK_THROWS_AS(checked_extension_criteria(e, ff::frobenius(e.K, 1), ff::frobenius(e.L, 2)), DomainError);
}

TEST_CASE("sigma-solvability decisions") {
  // C2 x C2 -> C2 over F4 -> F16: split, [L:K] = 2
  auto V4 = grp::direct_product(*grp::cyclic_group(2), *grp::cyclic_group(2));
  auto ep2 = make_problem(V4, ext(2, 2, 4), {0, 0, 1, 1});
  auto v = decide_sigma_solvability(ep2, ff::frobenius(ep2.ext.K, 1));
  CHECK(v.status == Status::unsolvable);
  CHECK_FALSE(v.coprime_degree);
  CHECK_FALSE(v.coprime_weak_solution);

  // C6 -> C3 over F4 -> F64: split, [L:K] = 3
  auto ep3 = make_problem(grp::cyclic_group(6), ext(2, 2, 6), reduction(6, 3));
  auto w = decide_sigma_solvability(ep3, ff::frobenius(ep3.ext.K, 1));
  CHECK(w.status == Status::solvable);
  REQUIRE(w.tau);
  CHECK(w.tau->exponent() == 3);
  CHECK(w.coprime_weak_solution);
  CHECK(w.coprime_degree);

  // identity sigma on every split nilpotent-kernel problem over F4 with |G| <= 8
  for (const auto& entry : grp::small_group_catalog()) {
    const auto& G = entry.group;
    if (G->order() > 8) continue;
    for (unsigned e = 2; e <= G->order(); ++e) {
      auto homs = grp::enumerate_homs(*G, *grp::cyclic_group(e));
      for (const auto& h : homs) {
        std::set<Elem> img(h.begin(), h.end());
        if (img.size() != e) continue;
        auto ep = make_problem(G, ext(2, 2, 2 * e), h);
        if (!ep.kernel_nilpotent || !find_section(ep)) continue;
        auto d = decide_sigma_solvability(ep, ff::frobenius(ep.ext.K, 0));
        CHECK_MESSAGE(d.status == Status::solvable, entry.name << " onto C" << e);
      }
    }
  }
}

TEST_CASE("non-nilpotent kernels are rejected") {
  // S4 -> C2 has kernel A4
  auto S4 = grp::symmetric_group(4);
  auto homs = grp::enumerate_homs(*S4, *grp::cyclic_group(2));
  for (const auto& h : homs) {
    if (std::set<Elem>(h.begin(), h.end()).size() != 2) continue;
    auto ep = make_problem(S4, ext(3, 1, 2), h);
    CHECK_FALSE(ep.kernel_nilpotent);
    CHECK_THROWS_AS(decide_sigma_solvability(ep, ff::frobenius(ep.ext.K, 0)), DomainError);
  }
}
