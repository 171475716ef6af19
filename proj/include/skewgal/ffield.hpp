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

// Finite fields F_{p^n} with an explicit modulus, their Frobenius
// automorphisms, and explicit embeddings between them.
//
// Field handles are cheap to copy (shared immutable data). Elements carry
// their field; mixing elements of different fields throws.

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "skewgal/zp_poly.hpp"

namespace skewgal::ff {

namespace detail {
struct FieldData;
}

class FqElem;

class FqField {
 public:
  FqField() = default;

  /// Field with p^n elements. seed 0 picks the lexicographically least
  /// irreducible modulus; any other seed draws one from mt19937_64(seed).
  static FqField make(std::uint64_t p, unsigned n, std::uint64_t seed = 0);
  /// Parses "p^n" (or "p" for the prime field) into the seed-0 field.
  static FqField parse(const std::string& descriptor);

  std::uint64_t characteristic() const;
  unsigned degree() const;
  std::uint64_t size() const;
  std::uint64_t seed() const;
  const zp::Poly& modulus() const;
  std::string descriptor() const;

  FqElem zero() const;
  FqElem one() const;
  /// Class of x modulo the modulus.
  FqElem generator() const;
  FqElem from_coeffs(std::vector<std::uint32_t> coeffs) const;
  FqElem from_int(std::int64_t c) const;
  /// Element whose coefficient vector is the base-p expansion of index.
  FqElem from_index(std::uint64_t index) const;
  std::vector<FqElem> elements() const;

  /// x -> x^(p^k) applied through a precomputed F_p-linear matrix.
  FqElem frobenius(const FqElem& x, unsigned k) const;

  bool operator==(const FqField& other) const;
  bool operator!=(const FqField& other) const { return !(*this == other); }

  const detail::FieldData* data() const { return data_.get(); }

 private:
  explicit FqField(std::shared_ptr<const detail::FieldData> d) : data_(std::move(d)) {}
  std::shared_ptr<const detail::FieldData> data_;
  friend class FqElem;
};

class FqElem {
 public:
  FqElem() = default;
  FqElem(FqField field, std::vector<std::uint32_t> coeffs);

  const FqField& field() const { return field_; }
  std::span<const std::uint32_t> coeffs() const { return coeffs_; }
  std::uint64_t index() const;

  bool is_zero() const;
  bool is_one() const;

  FqElem operator+(const FqElem& o) const;
  FqElem operator-(const FqElem& o) const;
  FqElem operator-() const;
  FqElem operator*(const FqElem& o) const;
  FqElem operator/(const FqElem& o) const;
  FqElem& operator+=(const FqElem& o) { return *this = *this + o; }
  FqElem& operator-=(const FqElem& o) { return *this = *this - o; }
  FqElem& operator*=(const FqElem& o) { return *this = *this * o; }

  FqElem pow(std::uint64_t e) const;
  FqElem inverse() const;

  bool operator==(const FqElem& o) const;
  bool operator!=(const FqElem& o) const { return !(*this == o); }

 private:
  FqField field_;
  std::vector<std::uint32_t> coeffs_;
};

/// The automorphism x -> x^(p^k) of a finite field, 0 <= k < n.
class FieldAut {
 public:
  FieldAut() = default;
  FieldAut(FqField field, std::int64_t k);

  const FqField& field() const { return field_; }
  unsigned exponent() const { return k_; }
  /// n / gcd(n, k).
  unsigned order() const;
  bool is_identity() const { return k_ == 0; }

  FqElem operator()(const FqElem& x) const;
  /// (this o other)(x) = this(other(x)).
  FieldAut compose(const FieldAut& other) const;
  FieldAut inverse() const;
  FieldAut power(std::int64_t e) const;

  bool operator==(const FieldAut& o) const { return field_ == o.field_ && k_ == o.k_; }
  bool operator!=(const FieldAut& o) const { return !(*this == o); }

 private:
  FqField field_;
  unsigned k_ = 0;
};

FieldAut frobenius(const FqField& field, std::int64_t k);

/// An explicit ring embedding small -> big, fixed by the image of small's
/// generator (a root of small's modulus inside big).
class SubfieldEmbedding {
 public:
  SubfieldEmbedding() = default;
  /// Canonical embedding: the root of small's modulus with least index.
  SubfieldEmbedding(FqField small, FqField big);

  const FqField& small() const { return small_; }
  const FqField& big() const { return big_; }
  const FqElem& image_of_generator() const { return image_; }
  /// [big : small].
  unsigned relative_degree() const;

  FqElem map(const FqElem& x) const;
  /// Whether z lies in the image (fixed by x -> x^|small|).
  bool contains(const FqElem& z) const;
  /// Inverse of map on the image. Throws DomainError outside the image.
  FqElem preimage(const FqElem& z) const;

 private:
  FqField small_;
  FqField big_;
  FqElem image_;
};

/// Gal(L/K) as [Frob^m, Frob^2m, ..., Frob^(em) = id] with m = [K : F_p] and
/// e = [L : K]; the first entry is the relative Frobenius.
std::vector<FieldAut> galois_group(const FqField& L, const SubfieldEmbedding& K);

/// Restriction of an automorphism of L to the embedded subfield K.
FieldAut restrict_aut(const FieldAut& a, const SubfieldEmbedding& K);

/// All roots in field of a polynomial with coefficients in field (ascending),
/// sorted by element index. The polynomial must split into distinct linear
/// factors over field.
std::vector<FqElem> split_roots(const std::vector<FqElem>& poly);

}  // namespace skewgal::ff
