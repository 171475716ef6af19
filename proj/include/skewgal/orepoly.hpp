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

// The twisted polynomial ring L[T, tau] over a finite field L, with
// T * a = tau(a) * T. Only the polynomial ring is materialized; common
// multiples and divisors stand in for the skew field of fractions.

#include <optional>
#include <utility>
#include <vector>

#include "skewgal/ffield.hpp"

namespace skewgal::ore {

using ff::FieldAut;
using ff::FqElem;
using ff::FqField;

class OrePoly {
 public:
  OrePoly() = default;
  /// Trailing zero coefficients are dropped; the zero polynomial has none.
  OrePoly(FieldAut twist, std::vector<FqElem> coeffs);

  static OrePoly zero(const FieldAut& twist);
  static OrePoly one(const FieldAut& twist);
  static OrePoly constant(const FieldAut& twist, const FqElem& c);
  /// c * T^k.
  static OrePoly monomial(const FieldAut& twist, const FqElem& c, unsigned k);

  const FqField& base() const { return twist_.field(); }
  const FieldAut& twist() const { return twist_; }
  const std::vector<FqElem>& coeffs() const { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const FqElem& leading() const;
  FqElem coeff(std::size_t i) const;

  OrePoly operator+(const OrePoly& o) const;
  OrePoly operator-(const OrePoly& o) const;
  OrePoly operator-() const;
  OrePoly operator*(const OrePoly& o) const;

  /// c * this (left scalar multiplication).
  OrePoly left_scale(const FqElem& c) const;

  bool operator==(const OrePoly& o) const;
  bool operator!=(const OrePoly& o) const { return !(*this == o); }

 private:
  void check_compatible(const OrePoly& o) const;

  FieldAut twist_;
  std::vector<FqElem> coeffs_;
};

OrePoly ore_mul(const OrePoly& f, const OrePoly& g);

struct OreDivResult {
  OrePoly quotient;
  OrePoly remainder;
};

/// f = q * g + r with deg r < deg g.
OreDivResult ore_right_divmod(const OrePoly& f, const OrePoly& g);

/// f = g * q + r with deg r < deg g, via the anti-isomorphism.
OreDivResult ore_left_divmod(const OrePoly& f, const OrePoly& g);

/// Left-monic generator of R f + R g (the greatest common right divisor).
OrePoly ore_right_gcd(const OrePoly& f, const OrePoly& g);

/// Left-monic generator of R f intersect R g (least common left multiple).
OrePoly ore_left_lcm(const OrePoly& f, const OrePoly& g);

/// Anti-isomorphism L[T, tau] -> L[T, tau^-1], sum a_i T^i -> sum T^i a_i.
OrePoly to_opposite(const OrePoly& f);
/// Inverse of to_opposite.
OrePoly from_opposite(const OrePoly& f);

struct OreWitness {
  OrePoly r;
  OrePoly s;
};

/// r, s with x r = y s != 0; the common multiple generates xR intersect yR.
OreWitness ore_witness(const OrePoly& x, const OrePoly& y);

/// Coefficientwise action of an automorphism rho of L that fixes the subfield K.
class InducedRingAut {
 public:
  InducedRingAut(FieldAut rho, FieldAut twist, ff::SubfieldEmbedding K);

  const FieldAut& rho() const { return rho_; }
  const FieldAut& twist() const { return twist_; }
  OrePoly apply(const OrePoly& f) const;
  bool fixes(const OrePoly& f) const { return apply(f) == f; }

 private:
  FieldAut rho_;
  FieldAut twist_;
  ff::SubfieldEmbedding K_;
};

InducedRingAut induced_ring_aut(const FieldAut& rho, const FieldAut& twist, const ff::SubfieldEmbedding& K);

struct FixedSubringScan {
  std::uint64_t scanned = 0;
  std::uint64_t fixed = 0;
  /// Fixed polynomials whose coefficients all lie in K.
  std::uint64_t fixed_with_coeffs_in_K = 0;
  /// |K|^(max_degree+1): the size of K[T] truncated at max_degree.
  std::uint64_t expected = 0;
  bool matches_subring() const { return fixed == expected && fixed_with_coeffs_in_K == fixed; }
};

/// Scans every polynomial of degree <= max_degree in L[T, tau] and counts
/// those fixed by all of the given ring automorphisms.
FixedSubringScan fixed_subring_scan(const std::vector<InducedRingAut>& group, const ff::SubfieldEmbedding& K,
                                    unsigned max_degree);

}  // namespace skewgal::ore
