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

// Dense polynomials over Z with arbitrary-precision coefficients, plus the
// exact tools used to certify local behavior: real-root counting by Sturm
// sequences, discriminants, p-adic root counting and Hensel lifting.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "skewgal/bigint.hpp"
#include "skewgal/zp_poly.hpp"

namespace skewgal::zx {

/// Ascending coefficients, trimmed (zero polynomial = empty).
using ZPoly = std::vector<Int>;
using QPoly = std::vector<Rational>;

void trim(ZPoly& f);
int degree(const ZPoly& f);
ZPoly add(const ZPoly& f, const ZPoly& g);
ZPoly sub(const ZPoly& f, const ZPoly& g);
ZPoly mul(const ZPoly& f, const ZPoly& g);
ZPoly derivative(const ZPoly& f);
Int eval(const ZPoly& f, const Int& x);
/// Coefficients of f(X + r).
ZPoly taylor_shift(const ZPoly& f, const Int& r);
/// Monic product of (X - r) over the given roots.
ZPoly from_roots(const std::vector<Int>& roots);
std::string to_string(const ZPoly& f);

zp::Poly reduce(const ZPoly& f, std::uint64_t p);
ZPoly lift(const zp::Poly& f);
/// Coefficientwise reduction into [0, m).
ZPoly reduce_mod(const ZPoly& f, const Int& m);

/// Determinant by fraction-free (Bareiss) elimination.
Int determinant(std::vector<std::vector<Int>> m);
/// Resultant through the Sylvester matrix.
Int resultant(const ZPoly& f, const ZPoly& g);
/// (-1)^(n(n-1)/2) Res(f, f') / lc(f).
Int discriminant(const ZPoly& f);

/// Number of distinct real roots (Sturm sequence, exact rationals).
unsigned count_real_roots(const ZPoly& f);

/// Number of roots of a squarefree f in Z_p (or in p^k-balls, see below),
/// decided by isolating balls: after substituting X = r + p^k Y the number of
/// roots in the closed unit disk is the last index attaining the minimal
/// valuation. Throws PrecisionExhausted past max_level.
struct PadicRootCount {
  unsigned roots = 0;
  unsigned deepest_level = 0;
  unsigned balls_examined = 0;
};
PadicRootCount count_padic_roots(const ZPoly& f, std::uint64_t p, unsigned max_level = 64);
/// Same, restricted to roots congruent to one of the given residues mod p.
PadicRootCount count_padic_roots_in(const ZPoly& f, std::uint64_t p, const std::vector<std::uint64_t>& residues,
                                    unsigned max_level = 64);

/// Monic a, s, t with s a + t b = 1 mod p; a and b coprime.
std::pair<zp::Poly, zp::Poly> bezout(const zp::Poly& a, const zp::Poly& b, std::uint64_t p);

/// Lifts f = a b mod p (a, b monic and coprime mod p, f monic) to
/// f = A B mod p^k with A = a, B = b mod p. Coefficients of A, B in [0, p^k).
std::pair<ZPoly, ZPoly> hensel_lift(const ZPoly& f, const zp::Poly& a, const zp::Poly& b, std::uint64_t p,
                                    unsigned k);

}  // namespace skewgal::zx
