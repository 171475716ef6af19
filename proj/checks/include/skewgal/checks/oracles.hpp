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

#pragma once

// Brute-force reference computations. None of these call the library routine
// they are used to check; they trade speed for directness.

#include <cstdint>
#include <string>
#include <vector>

#include "skewgal/bigint.hpp"
#include "skewgal/ffield.hpp"
#include "skewgal/groups.hpp"
#include "skewgal/orepoly.hpp"

namespace skewgal::oracle {

// --- groups ---------------------------------------------------------------------

/// Element order by repeated multiplication.
unsigned element_order(const grp::FiniteGroup& G, grp::Elem g);

/// Nilpotency through the upper central series: Z_i grows until it is H or stalls.
bool nilpotent_by_upper_central(const grp::FiniteGroup& G, const std::vector<grp::Elem>& H);

/// Every normal subgroup of G, found by closing normal closures of single
/// elements under products.
std::vector<std::vector<grp::Elem>> normal_subgroups(const grp::FiniteGroup& G);

/// Largest nilpotent normal subgroup by scanning all normal subgroups.
std::vector<grp::Elem> max_nilpotent_normal(const grp::FiniteGroup& G);

/// Whether {n * g : n in N, g in H} is all of G.
bool product_covers(const grp::FiniteGroup& G, const std::vector<grp::Elem>& N, const std::vector<grp::Elem>& H);

// --- twisted polynomials -----------------------------------------------------------

/// Product in L[T, Frob^k] by expanding monomials with T^l b = b^(p^(kl)) T^l,
/// evaluating the Frobenius by exponentiation rather than the precomputed matrix.
std::vector<ff::FqElem> ore_convolution(const std::vector<ff::FqElem>& a, const std::vector<ff::FqElem>& b,
                                        unsigned k);

// --- integer polynomials -----------------------------------------------------------

/// Integer roots of a monic integer polynomial, by Sturm bisection down to
/// unit intervals and exact evaluation of the candidates.
std::vector<Int> integer_roots(const std::vector<Int>& f);

/// Galois group of a monic integer polynomial of degree 2, 3 or 4 over Q
/// through rational roots, the cubic resolvent and the discriminant formula.
/// Returns "S2", "S3", "S4" or a coarser description such as "not S4".
std::string galois_group_small(const std::vector<Int>& f);

/// Number of distinct real roots with a Sturm chain built here.
unsigned real_root_count(const std::vector<Int>& f);

// --- arithmetic -----------------------------------------------------------------------

bool is_prime(std::uint64_t n);
/// Legendre symbol by Euler's criterion.
int euler_symbol(std::uint64_t a, std::uint64_t p);

}  // namespace skewgal::oracle
