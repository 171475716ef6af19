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

// Dense univariate polynomials over the prime field Z/p.
//
// Coefficients are stored ascending and trimmed, so the zero polynomial is
// the empty vector. All routines assume p is prime and below 2^32.

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace skewgal::zp {

using Poly = std::vector<std::uint64_t>;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p);
bool is_prime(std::uint64_t n);

void trim(Poly& f);
int degree(const Poly& f);
bool is_monic(const Poly& f);

Poly add(const Poly& f, const Poly& g, std::uint64_t p);
Poly sub(const Poly& f, const Poly& g, std::uint64_t p);
Poly mul(const Poly& f, const Poly& g, std::uint64_t p);
Poly scale(const Poly& f, std::uint64_t c, std::uint64_t p);
Poly derivative(const Poly& f, std::uint64_t p);
Poly make_monic(const Poly& f, std::uint64_t p);

/// f = q*g + r with deg r < deg g. g must be nonzero.
std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g, std::uint64_t p);
Poly rem(const Poly& f, const Poly& g, std::uint64_t p);
/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& f, const Poly& g, std::uint64_t p);

Poly mulmod(const Poly& f, const Poly& g, const Poly& m, std::uint64_t p);
Poly powmod(const Poly& f, std::uint64_t e, const Poly& m, std::uint64_t p);
/// X^(p^k) mod m, by k successive p-th powers.
Poly x_pow_p_iter(unsigned k, const Poly& m, std::uint64_t p);

std::uint64_t eval(const Poly& f, std::uint64_t x, std::uint64_t p);

bool is_squarefree(const Poly& f, std::uint64_t p);

/// Distinct-degree factorization of a monic squarefree f: pairs
/// (d, product of all irreducible factors of degree d), increasing d.
std::vector<std::pair<unsigned, Poly>> distinct_degree(const Poly& f, std::uint64_t p);

/// Degrees of the irreducible factors of a monic squarefree f, descending.
std::vector<unsigned> factor_degrees(const Poly& f, std::uint64_t p);

bool is_irreducible(const Poly& f, std::uint64_t p);

/// Monic polynomial of degree n whose lower coefficients are the base-p digits
/// of index (coefficient 0 least significant).
Poly monic_from_index(std::uint64_t index, unsigned n, std::uint64_t p);

/// Lexicographically least monic irreducible of degree n (index order above).
Poly least_irreducible(unsigned n, std::uint64_t p);

/// First irreducible hit by a mt19937_64 stream seeded with seed.
Poly seeded_irreducible(unsigned n, std::uint64_t p, std::uint64_t seed);

}  // namespace skewgal::zp
