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

#include <map>

#include "skewgal/checks/oracles.hpp"
#include "skewgal/error.hpp"
#include "skewgal/group_catalog.hpp"
#include "skewgal/groups.hpp"

using namespace skewgal;
using namespace skewgal::grp;

namespace {

// inversion on C_n as an image list
std::vector<Elem> inversion(std::size_t n) {
  std::vector<Elem> m(n);
  for (std::size_t i = 0; i < n; ++i) m[i] = static_cast<Elem>((n - i) % n);
  return m;
}

}  // namespace

TEST_CASE("table validation") {
  CHECK_NOTHROW(FiniteGroup::from_table({{0, 1}, {1, 0}}));
  CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1}, {1, 1}}), DomainError);
  CHECK_THROWS_AS(FiniteGroup::from_table({{1, 0}, {0, 1}}), DomainError);
  // Latin square with identity but not associative (order 5 loop)
  std::vector<std::vector<Elem>> loop = {
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  CHECK_THROWS_AS(FiniteGroup::from_table(loop), DomainError);
}

TEST_CASE("nilpotent and solvable flags") {
  auto C6 = cyclic_group(6);
  CHECK(is_nilpotent(*C6));
  CHECK(is_solvable(*C6));
  for (unsigned k : {3u, 4u}) {
    auto S = symmetric_group(k);
    CHECK_FALSE(is_nilpotent(*S));
    CHECK_FALSE(oracle::nilpotent_by_upper_central(*S, whole_group(*S)));
    CHECK(is_solvable(*S));
  }
  CHECK_FALSE(is_solvable(*alternating_group(5)));
  CHECK(is_nilpotent(*catalog_group("Q8")));
}

TEST_CASE("fitting subgroups") {
  auto Q8 = catalog_group("Q8");
  CHECK(fitting_subgroup(*Q8).size() == 8);

  auto S3 = symmetric_group(3);
  auto F3 = fitting_subgroup(*S3);
  CHECK(F3.size() == 3);
  CHECK(F3 == oracle::max_nilpotent_normal(*S3));
  CHECK(F3 == derived_series(*S3)[1]);

  auto S4 = symmetric_group(4);
  auto F4 = fitting_subgroup(*S4);
  CHECK(F4.size() == 4);
  CHECK(F4 == oracle::max_nilpotent_normal(*S4));
  for (Elem x : F4) CHECK(S4->mul(x, x) == 0);
}

TEST_CASE("semidirect products") {
  auto C2 = cyclic_group(2);
  auto triv = semidirect_product(C2, C2, {{0, 1}, {0, 1}});
  CHECK(are_isomorphic(*triv.group, *direct_product(*C2, *C2)));
  CHECK(triv.group->is_abelian());

  auto C3 = cyclic_group(3);
  auto d3 = semidirect_product(C3, C2, {{0, 1, 2}, inversion(3)});
  CHECK(are_isomorphic(*d3.group, *symmetric_group(3)));
  CHECK(d3.projection.is_surjective());
  CHECK(d3.section.then(d3.projection).images() == std::vector<Elem>{0, 1});

  // V4 x| S3, S3 permuting the three involutions 1, 2, 3 of C2 x C2
  // (products of permutations read left to right, so act through inverses)
  auto S4 = symmetric_group(4);
  auto S3 = symmetric_group(3);
  std::vector<std::vector<Elem>> action;
  const auto& perms = S3->permutations();
  for (Elem h = 0; h < S3->order(); ++h) {
    std::vector<Elem> img = {0};
    for (unsigned i = 0; i < 3; ++i) img.push_back(perms[S3->inv(h)][i] + 1);
    action.push_back(img);
  }
  auto sd = semidirect_product(direct_product(*C2, *C2), S3, action);
  CHECK(sd.group->order() == 24);
  CHECK(are_isomorphic(*sd.group, *S4));
}

TEST_CASE("reduction steps") {
  auto S3 = symmetric_group(3);
  auto st = fitting_reduction_step(S3);
  CHECK(st.N.size() == 3);
  CHECK(st.Gp.size() == 2);
  CHECK(st.phi.is_surjective());
  CHECK(st.phi.kernel().size() == 1);

  auto S4 = symmetric_group(4);
  auto s4 = fitting_reduction_step(S4);
  CHECK(s4.N.size() == 4);
  CHECK(s4.Gp.size() == 6);
  CHECK(s4.phi.is_surjective());
  CHECK(oracle::product_covers(*S4, s4.N, s4.Gp));

  auto q = fitting_reduction_step(catalog_group("Q8"));
  CHECK(q.N.size() == 8);
  CHECK(q.Gp.size() == 1);
}

TEST_CASE("solvable towers") {
  auto C5 = solvable_tower(cyclic_group(5));
  REQUIRE(C5.size() == 1);
  CHECK(C5[0].Gp.size() == 1);

  auto S3 = solvable_tower(symmetric_group(3));
  REQUIRE(S3.size() == 2);
  CHECK(S3[0].N.size() == 3);
  CHECK(S3[0].Gp.size() == 2);
  CHECK(S3[1].N.size() == 2);
  CHECK(S3[1].Gp.size() == 1);

  auto S4 = solvable_tower(symmetric_group(4));
  REQUIRE(S4.size() == 3);
  for (const auto& s : S4) CHECK(s.phi.is_surjective());
  CHECK(S4.back().Gp.size() == 1);

  CHECK_THROWS_AS(solvable_tower(alternating_group(5)), DomainError);
}

TEST_CASE("catalog is complete and irredundant") {
  const auto& cat = small_group_catalog();
  CHECK(cat.size() == 74);
  std::map<std::size_t, unsigned> per_order;
  for (const auto& e : cat) ++per_order[e.group->order()];
  for (unsigned n = 1; n <= 24; ++n) CHECK(per_order[n] == known_group_count(n));
  for (std::size_t i = 0; i < cat.size(); ++i)
    for (std::size_t j = i + 1; j < cat.size(); ++j)
      if (cat[i].group->order() == cat[j].group->order())
        CHECK_MESSAGE(!are_isomorphic(*cat[i].group, *cat[j].group), cat[i].name << " ~ " << cat[j].name);
}

TEST_CASE("homomorphism enumeration") {
  auto C4 = cyclic_group(4), C2 = cyclic_group(2);
  CHECK(enumerate_homs(*C4, *C2).size() == 2);
  CHECK(enumerate_homs(*symmetric_group(3), *cyclic_group(3)).size() == 1);
  CHECK_THROWS_AS(GroupHom(C2, C4, {0, 1}), DomainError);
}
