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

// The quaternions H_K = K + Ki + Kj + Kk with i^2 = j^2 = k^2 = ijk = -1 over
// K = Q or K = Q(sqrt m), levels of the completions of such K, and the check
// for a completion of level at least 4.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "skewgal/bigint.hpp"

namespace skewgal::quat {

/// Q (m = 1) or Q(sqrt m) with m squarefree, m != 0, 1.
class QuadField {
 public:
  QuadField() = default;
  static QuadField rationals();
  static QuadField sqrt(std::int64_t m);
  /// "Q" or "Q(sqrt:m)". Throws ParseError / DomainError.
  static QuadField parse(const std::string& descriptor);

  std::int64_t m() const { return m_; }
  bool is_rationals() const { return m_ == 1; }
  std::string descriptor() const;
  bool operator==(const QuadField&) const = default;

  /// m = 1 mod 4: the ring of integers is Z[(1 + sqrt m) / 2].
  bool half_integral_order() const { return m_ % 4 == 1 || m_ % 4 == -3; }

 private:
  std::int64_t m_ = 1;
};

/// a + b sqrt(m) with rational a, b.
class QuadNumber {
 public:
  QuadNumber() = default;
  QuadNumber(QuadField K, Rational a, Rational b = 0);

  const QuadField& field() const { return K_; }
  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }

  QuadNumber operator+(const QuadNumber& o) const;
  QuadNumber operator-(const QuadNumber& o) const;
  QuadNumber operator-() const;
  QuadNumber operator*(const QuadNumber& o) const;
  QuadNumber operator/(const QuadNumber& o) const;
  bool operator==(const QuadNumber& o) const;
  bool is_zero() const { return a_ == 0 && b_ == 0; }

  QuadNumber conj() const;
  /// a^2 - m b^2.
  Rational norm() const;
  std::string to_string() const;

 private:
  void check(const QuadNumber& o) const;
  QuadField K_;
  Rational a_ = 0;
  Rational b_ = 0;
};

class Quaternion {
 public:
  Quaternion() = default;
  Quaternion(QuadNumber a, QuadNumber b, QuadNumber c, QuadNumber d);
  static Quaternion scalar(const QuadNumber& x);
  static Quaternion unit(const QuadField& K, int which);  // 0 -> 1, 1 -> i, 2 -> j, 3 -> k

  const QuadField& field() const { return a_.field(); }
  const QuadNumber& a() const { return a_; }
  const QuadNumber& b() const { return b_; }
  const QuadNumber& c() const { return c_; }
  const QuadNumber& d() const { return d_; }

  Quaternion operator+(const Quaternion& o) const;
  Quaternion operator-(const Quaternion& o) const;
  Quaternion operator*(const Quaternion& o) const;
  bool operator==(const Quaternion& o) const;

  Quaternion conj() const;
  /// a^2 + b^2 + c^2 + d^2.
  QuadNumber norm() const;
  /// Throws DomainError when the norm vanishes.
  Quaternion inverse() const;
  std::string to_string() const;

 private:
  QuadNumber a_, b_, c_, d_;
};

inline Quaternion quat_mul(const Quaternion& x, const Quaternion& y) { return x * y; }
inline Quaternion quat_conj(const Quaternion& x) { return x.conj(); }
inline QuadNumber quat_norm(const Quaternion& x) { return x.norm(); }
inline Quaternion quat_inv(const Quaternion& x) { return x.inverse(); }

/// Level 0 stands for infinity.
inline constexpr unsigned kInfiniteLevel = 0;

struct LevelResult {
  /// "inf", a prime as decimal, or "global".
  std::string place;
  unsigned level = kInfiniteLevel;
  /// Integers whose squares sum to -1 modulo witness_modulus (length = level).
  std::vector<Int> witness;
  Int witness_modulus = 0;
  /// Elements of K whose squares sum to -1 (global levels only).
  std::vector<std::string> element_witness;
  /// Why no shorter representation exists.
  std::string certificate;
  bool verified = false;
};

/// Level of Q_p (prime p) or of R (p = 0). Witnesses are Hensel-lifted to
/// p^precision (odd p) or 2^precision (p = 2, precision >= 4).
LevelResult level_local(std::uint64_t p, unsigned precision = 8);

/// Residue scan: no x, y, z mod 16 with x^2 + y^2 + z^2 = -1.
bool three_squares_miss_minus_one_mod16();
/// Residue scan: x^2 + y^2 + z^2 = 0 mod 4 forces x, y, z even.
bool three_squares_zero_mod4_forces_even();

/// Element of the ring of integers of K: u + v * theta with theta = sqrt m or
/// (1 + sqrt m) / 2.
struct IntegralElement {
  Int u = 0;
  Int v = 0;
};
QuadNumber to_number(const QuadField& K, const IntegralElement& e);

struct TwoAdicPlace {
  /// "split", "inert" or "ramified".
  std::string behavior;
  unsigned e = 1;
  unsigned f = 1;
  /// Level of the completion(s) above 2: 4 when split, otherwise 1 or 2.
  unsigned level = 4;
  /// For level <= 2: -1 - x^2 = y^2 (1 + delta) with v(delta) > 2e, so -1 = x^2 + y'^2 locally.
  std::optional<IntegralElement> x;
  std::optional<IntegralElement> y;
  std::string certificate;
};

TwoAdicPlace two_adic_place(const QuadField& K, int search_bound = 6);

struct Feasibility {
  bool feasible = false;
  /// "inf" or "2" when feasible.
  std::string place;
  std::string reason;
  TwoAdicPlace two_adic;
};

/// Whether some completion of K has level at least 4.
Feasibility level4_completion_exists(const QuadField& K);

/// Places where (-1,-1) = -1, named "inf", "inf1", "inf2", "2", "2a", "2b".
std::vector<std::string> nonsplit_places(const QuadField& K);

bool is_division_ring(const QuadField& K);

/// Integral x, y with x^2 + y^2 = -1, coefficients bounded by bound.
std::optional<std::pair<IntegralElement, IntegralElement>> two_square_search(const QuadField& K, int bound);

/// Global level (Hasse-Minkowski over the local levels).
LevelResult level_global(const QuadField& K);

}  // namespace skewgal::quat
