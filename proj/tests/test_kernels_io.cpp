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

#include "skewgal/group_catalog.hpp"
#include "skewgal/json_io.hpp"
#include "skewgal/kernels.hpp"

using namespace skewgal;
using kernels::Exec;

TEST_CASE("serial and parallel kernels agree") {
  auto L = ff::FqField::make(3, 2);
  CHECK(kernels::ore_ring_laws(L, 1, 500, 9, 3, Exec::serial) == kernels::ore_ring_laws(L, 1, 500, 9, 3, Exec::parallel));
  CHECK(kernels::ore_division_sweep(L, 1, 500, 9, 5, Exec::serial) ==
        kernels::ore_division_sweep(L, 1, 500, 9, 5, Exec::parallel));
  CHECK(kernels::ore_witness_sweep(L, 1, 100, 9, 3, Exec::serial) ==
        kernels::ore_witness_sweep(L, 1, 100, 9, 3, Exec::parallel));
  auto inst = kernels::aut_instances(2, 1 << 8);
  CHECK(kernels::criteria_sweep(inst, Exec::serial) == kernels::criteria_sweep(inst, Exec::parallel));
  CHECK(kernels::lift_sweep(3, 729, Exec::serial) == kernels::lift_sweep(3, 729, Exec::parallel));

  auto S4 = grp::symmetric_group(4);
  CHECK(kernels::table_associative(S4->flat_table(), 24, Exec::serial));
  CHECK(kernels::table_associative(S4->flat_table(), 24, Exec::parallel));
  auto broken = S4->flat_table();
  std::swap(broken[5 * 24 + 7], broken[5 * 24 + 8]);
  CHECK_FALSE(kernels::table_associative(broken, 24, Exec::serial));
  CHECK_FALSE(kernels::table_associative(broken, 24, Exec::parallel));
}

TEST_CASE("case seeds are stable") {
  CHECK(kernels::case_seed(1, 0) != kernels::case_seed(1, 1));
  CHECK(kernels::case_seed(1, 5) == kernels::case_seed(1, 5));
}

TEST_CASE("json round trips") {
  CHECK(io::int_from_json(io::int_to_json(Int(-42))) == -42);
  Int big = Int(1) << 100;
  CHECK(io::int_to_json(big).is_string());
  CHECK(io::int_from_json(io::int_to_json(big)) == big);

  auto F = ff::FqField::make(2, 2);
  auto f = ore::OrePoly(ff::frobenius(F, 1), {F.generator(), F.one(), F.generator()});
  CHECK(io::orepoly_from_json(io::orepoly_to_json(f)) == f);

  auto G = io::group_from_json(io::json::parse(R"({"catalog":"D8"})"));
  CHECK(G->order() == 8);
  auto P = io::group_from_json(io::json::parse(R"({"perm_gens":[[[0,1,2,3]],[[0,2]]]})"));
  CHECK(grp::are_isomorphic(*G, *P));
  auto T = io::group_from_json(io::group_to_json(*G));
  CHECK(T->flat_table() == G->flat_table());
  CHECK_THROWS_AS(io::group_from_json(io::json::parse(R"({"catalog":"nope"})")), DomainError);

  auto r = splitcon::construct_lprime({splitcon::parse_spec("3:rq")}, 5, 3);
  auto back = io::report_from_json(io::report_to_json(r));
  CHECK(back.Q == r.Q);
  CHECK(io::report_to_json(back) == io::report_to_json(r));
}
