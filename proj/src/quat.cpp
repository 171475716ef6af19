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

#include "skewgal/quat.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>

#include "skewgal/error.hpp"
#include "skewgal/zp_poly.hpp"

namespace skewgal::quat {

namespace {

bool squarefree(std::int64_t m) {
  std::uint64_t a = static_cast<std::uint64_t>(m < 0 ? -m : m);
  for (std::uint64_t d = 2; d * d <= a; ++d)
    if (a % (d * d) == 0) return false;
  return true;
}

Int modinv(const Int& a, const Int& M) {
  Int r0 = mod_floor(a, M), r1 = M, s0 = 1, s1 = 0;
  while (r1 != 0) {
    const Int q = r0 / r1;
    Int t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  require(r0 == 1, "modinv: not invertible");
  return mod_floor(s0, M);
}

// Square root of a quadratic residue c mod an odd prime p (Tonelli-Shanks).
std::uint64_t sqrt_mod(std::uint64_t c, std::uint64_t p) {
  c %= p;
  if (c == 0) return 0;
  require(zp::pow_mod(c, (p - 1) / 2, p) == 1, "sqrt_mod: not a quadratic residue");
  std::uint64_t q = p - 1, s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  std::uint64_t z = 2;
  while (zp::pow_mod(z, (p - 1) / 2, p) != p - 1) ++z;
  std::uint64_t m = s, cc = zp::pow_mod(z, q, p), t = zp::pow_mod(c, q, p), r = zp::pow_mod(c, (q + 1) / 2, p);
  while (t != 1) {
    std::uint64_t i = 0, tt = t;
    while (tt != 1) {
      tt = zp::mul_mod(tt, tt, p);
      ++i;
    }
    std::uint64_t b = cc;
    for (std::uint64_t j = 0; j + i + 1 < m; ++j) b = zp::mul_mod(b, b, p);
    m = i;
    cc = zp::mul_mod(b, b, p);
    t = zp::mul_mod(t, cc, p);
    r = zp::mul_mod(r, b, p);
  }
  return std::min(r, p - r);
}

// Lift y with y^2 = c mod p (p odd, y a unit) to y^2 = c mod p^k by Newton steps.
Int hensel_sqrt(const Int& c, std::uint64_t y0, std::uint64_t p, unsigned k) {
  const Int M = ipow(Int(p), k);
  Int y = y0;
  for (unsigned i = 0; i < k; ++i) y = mod_floor(y - (y * y - c) * modinv(2 * y, M), M);
  ensure(mod_floor(y * y - c, M) == 0, "hensel_sqrt: lift failed");
  return y;
}

// Odd x with x^2 = c mod 2^k, for c = 1 mod 8.
Int two_adic_sqrt(const Int& c, unsigned k) {
  require(mod_floor(c, 8) == 1, "two_adic_sqrt: c must be 1 mod 8");
  Int x = 1;
  for (unsigned j = 3; j < k; ++j) {
    const Int mod = Int(1) << (j + 1);
    if (mod_floor(x * x - c, mod) != 0) x += Int(1) << (j - 1);
  }
  const Int M = Int(1) << k;
  x = mod_floor(x, M);
  ensure(mod_floor(x * x - c, M) == 0, "two_adic_sqrt: lift failed");
  return x;
}

bool sum_is_minus_one(const std::vector<Int>& w, const Int& M) {
  Int s = 1;
  for (const auto& x : w) s += x * x;
  return mod_floor(s, M) == 0;
}

Int as_integer(const Rational& r) {
  ensure(denominator(r) == 1, "expected an integral norm");
  return numerator(r);
}

std::string element_string(const QuadField& K, const IntegralElement& e) { return to_number(K, e).to_string(); }

}  // namespace

// --- QuadField / QuadNumber ------------------------------------------------------------

QuadField QuadField::rationals() { return QuadField{}; }

QuadField QuadField::sqrt(std::int64_t m) {
  require(m != 0 && m != 1, "Q(sqrt m): m must not be 0 or 1");
  require(squarefree(m), "Q(sqrt m): m must be squarefree");
  QuadField K;
  K.m_ = m;
  return K;
}

QuadField QuadField::parse(const std::string& d) {
  if (d == "Q") return rationals();
  const std::string pre = "Q(sqrt:";
  if (d.size() <= pre.size() + 1 || d.compare(0, pre.size(), pre) != 0 || d.back() != ')')
    throw ParseError("field descriptor must be 'Q' or 'Q(sqrt:m)': '" + d + "'");
  const std::string num = d.substr(pre.size(), d.size() - pre.size() - 1);
  char* end = nullptr;
  const long long m = std::strtoll(num.c_str(), &end, 10);
  if (num.empty() || *end != '\0') throw ParseError("bad integer in field descriptor '" + d + "'");
  return sqrt(m);
}

std::string QuadField::descriptor() const { return is_rationals() ? "Q" : "Q(sqrt:" + std::to_string(m_) + ")"; }

QuadNumber::QuadNumber(QuadField K, Rational a, Rational b) : K_(K), a_(std::move(a)), b_(std::move(b)) {
  require(!K_.is_rationals() || b_ == 0, "QuadNumber: irrational part over Q");
}

void QuadNumber::check(const QuadNumber& o) const { require(K_ == o.K_, "QuadNumber: field mismatch"); }

QuadNumber QuadNumber::operator+(const QuadNumber& o) const {
  check(o);
  return {K_, a_ + o.a_, b_ + o.b_};
}

QuadNumber QuadNumber::operator-(const QuadNumber& o) const {
  check(o);
  return {K_, a_ - o.a_, b_ - o.b_};
}

QuadNumber QuadNumber::operator-() const { return {K_, -a_, -b_}; }

QuadNumber QuadNumber::operator*(const QuadNumber& o) const {
  check(o);
  const Rational m = K_.is_rationals() ? Rational(0) : Rational(K_.m());
  return {K_, a_ * o.a_ + m * b_ * o.b_, a_ * o.b_ + b_ * o.a_};
}

QuadNumber QuadNumber::operator/(const QuadNumber& o) const {
  check(o);
  require(!o.is_zero(), "QuadNumber: division by zero");
  const QuadNumber num = *this * o.conj();
  const Rational n = o.norm();
  return {K_, num.a_ / n, num.b_ / n};
}

bool QuadNumber::operator==(const QuadNumber& o) const { return K_ == o.K_ && a_ == o.a_ && b_ == o.b_; }

QuadNumber QuadNumber::conj() const { return {K_, a_, -b_}; }

Rational QuadNumber::norm() const {
  return K_.is_rationals() ? a_ * a_ : a_ * a_ - Rational(K_.m()) * b_ * b_;
}

std::string QuadNumber::to_string() const {
  if (K_.is_rationals() || b_ == 0) return a_.str();
  return a_.str() + (b_ < 0 ? "-" : "+") + Rational(abs(b_)).str() + "*sqrt(" + std::to_string(K_.m()) + ")";
}

// --- Quaternion -----------------------------------------------------------------------

Quaternion::Quaternion(QuadNumber a, QuadNumber b, QuadNumber c, QuadNumber d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  require(a_.field() == b_.field() && a_.field() == c_.field() && a_.field() == d_.field(),
          "Quaternion: coefficients from different fields");
}

Quaternion Quaternion::scalar(const QuadNumber& x) {
  const QuadNumber z(x.field(), 0);
  return {x, z, z, z};
}

Quaternion Quaternion::unit(const QuadField& K, int which) {
  require(which >= 0 && which < 4, "Quaternion::unit: index must be 0..3");
  QuadNumber c[4] = {{K, 0}, {K, 0}, {K, 0}, {K, 0}};
  c[which] = QuadNumber(K, 1);
  return {c[0], c[1], c[2], c[3]};
}

Quaternion Quaternion::operator+(const Quaternion& o) const { return {a_ + o.a_, b_ + o.b_, c_ + o.c_, d_ + o.d_}; }

Quaternion Quaternion::operator-(const Quaternion& o) const { return {a_ - o.a_, b_ - o.b_, c_ - o.c_, d_ - o.d_}; }

Quaternion Quaternion::operator*(const Quaternion& o) const {
  // Hamilton product with ij = k, jk = i, ki = j
  return {a_ * o.a_ - b_ * o.b_ - c_ * o.c_ - d_ * o.d_, a_ * o.b_ + b_ * o.a_ + c_ * o.d_ - d_ * o.c_,
          a_ * o.c_ - b_ * o.d_ + c_ * o.a_ + d_ * o.b_, a_ * o.d_ + b_ * o.c_ - c_ * o.b_ + d_ * o.a_};
}

bool Quaternion::operator==(const Quaternion& o) const {
  return a_ == o.a_ && b_ == o.b_ && c_ == o.c_ && d_ == o.d_;
}

Quaternion Quaternion::conj() const { return {a_, -b_, -c_, -d_}; }

QuadNumber Quaternion::norm() const { return a_ * a_ + b_ * b_ + c_ * c_ + d_ * d_; }

Quaternion Quaternion::inverse() const {
  const QuadNumber n = norm();
  require(!n.is_zero(), "Quaternion: norm is zero, element is not invertible");
  const Quaternion c = conj();
  return {c.a_ / n, c.b_ / n, c.c_ / n, c.d_ / n};
}

std::string Quaternion::to_string() const {
  return "(" + a_.to_string() + ") + (" + b_.to_string() + ")i + (" + c_.to_string() + ")j + (" + d_.to_string() +
         ")k";
}

// --- levels ---------------------------------------------------------------------------

bool three_squares_miss_minus_one_mod16() {
  for (int x = 0; x < 16; ++x)
    for (int y = 0; y < 16; ++y)
      for (int z = 0; z < 16; ++z)
        if ((x * x + y * y + z * z + 1) % 16 == 0) return false;
  return true;
}

bool three_squares_zero_mod4_forces_even() {
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y)
      for (int z = 0; z < 4; ++z)
        if ((x * x + y * y + z * z) % 4 == 0 && (x % 2 || y % 2 || z % 2)) return false;
  return true;
}

LevelResult level_local(std::uint64_t p, unsigned precision) {
  LevelResult r;
  if (p == 0) {
    r.place = "inf";
    r.level = kInfiniteLevel;
    r.certificate = "sums of real squares are nonnegative";
    r.verified = true;
    return r;
  }
  require(zp::is_prime(p), "level_local: " + std::to_string(p) + " is not prime");
  require(precision >= 1, "level_local: precision must be positive");
  r.place = std::to_string(p);
  if (p == 2) {
    if (precision < 4) throw PrecisionExhausted("level_local: 2-adic witness needs precision >= 4");
    r.level = 4;
    r.witness_modulus = Int(1) << precision;
    // -1 = 2^2 + 1^2 + 1^2 + (sqrt -7)^2 and -7 = 1 mod 8 is a 2-adic square
    r.witness = {2, 1, 1, two_adic_sqrt(-7, precision)};
    const bool scan16 = three_squares_miss_minus_one_mod16();
    const bool scan4 = three_squares_zero_mod4_forces_even();
    r.certificate =
        "no x,y,z mod 16 with x^2+y^2+z^2 = -1; a 2-adic solution with a denominator would give "
        "x^2+y^2+z^2 = 0 mod 4 with some term odd, which the mod 4 scan excludes";
    r.verified = scan16 && scan4 && sum_is_minus_one(r.witness, r.witness_modulus);
    return r;
  }
  r.witness_modulus = ipow(Int(p), precision);
  if (p % 4 == 1) {
    r.level = 1;
    const std::uint64_t x = sqrt_mod(p - 1, p);
    r.witness = {hensel_sqrt(-1, x, p, precision)};
    r.certificate = "level 1 is minimal";
  } else {
    r.level = 2;
    std::uint64_t a = 0;
    // -1 - a^2 must be a nonzero residue so that its root is a unit and lifts
    for (a = 0; a < p; ++a) {
      const std::uint64_t c = (p - 1 + p - zp::mul_mod(a, a, p)) % p;
      if (c != 0 && zp::pow_mod(c, (p - 1) / 2, p) == 1) break;
    }
    ensure(a < p, "level_local: no two-square representation mod p");
    const std::uint64_t c = (p - 1 + p - zp::mul_mod(a, a, p)) % p;
    const Int b = hensel_sqrt(Int(-1) - Int(a) * a, sqrt_mod(c, p), p, precision);
    r.witness = {Int(a), b};
    const bool euler = zp::pow_mod(p - 1, (p - 1) / 2, p) == p - 1;
    r.certificate = "(-1)^((p-1)/2) = -1 mod p, so -1 is not a square in Q_p";
    if (!euler) r.certificate = "Euler criterion failed";
    r.verified = euler;
  }
  r.verified = (r.level == 1 || r.verified) && sum_is_minus_one(r.witness, r.witness_modulus);
  return r;
}

// --- quadratic fields at 2 -------------------------------------------------------------------

QuadNumber to_number(const QuadField& K, const IntegralElement& e) {
  if (K.is_rationals()) return {K, Rational(e.u)};
  if (K.half_integral_order()) return {K, Rational(e.u) + Rational(e.v, 2), Rational(e.v, 2)};
  return {K, Rational(e.u), Rational(e.v)};
}

TwoAdicPlace two_adic_place(const QuadField& K, int search_bound) {
  require(!K.is_rationals(), "two_adic_place: needs a quadratic field");
  TwoAdicPlace t;
  const std::int64_t m8 = ((K.m() % 8) + 8) % 8;
  if (m8 == 1) {
    t.behavior = "split";
    t.level = 4;
    t.certificate = "m = 1 mod 8: 2 splits and both completions are Q_2, of level 4";
    return t;
  }
  if (m8 == 5) {
    t.behavior = "inert";
    t.e = 1;
    t.f = 2;
  } else {
    t.behavior = "ramified";
    t.e = 2;
    t.f = 1;
  }
  // -1 is a square in Q_2(sqrt m) iff -m is a square in Q_2 iff m = 7 mod 8
  t.level = m8 == 7 ? 1 : 2;
  auto vP = [&](const QuadNumber& z) -> long {
    if (z.is_zero()) return std::numeric_limits<long>::max();
    return valuation(as_integer(z.norm()), Int(2)) / static_cast<long>(t.f);
  };
  const QuadNumber one(K, 1);
  auto try_pair = [&](const IntegralElement& xe, const IntegralElement& ye) {
    const QuadNumber x = to_number(K, xe), y = to_number(K, ye);
    if (y.is_zero()) return false;
    const QuadNumber w = -one - x * x;
    const long lhs = vP(w - y * y);
    return lhs == std::numeric_limits<long>::max() || lhs > 2 * vP(y) + 2 * static_cast<long>(t.e);
  };
  for (int B = search_bound; B <= 4 * search_bound && !t.y; B *= 2) {
    for (int xu = (t.level == 1 ? 0 : -B); xu <= (t.level == 1 ? 0 : B) && !t.y; ++xu)
      for (int xv = (t.level == 1 ? 0 : -B); xv <= (t.level == 1 ? 0 : B) && !t.y; ++xv)
        for (int yu = -B; yu <= B && !t.y; ++yu)
          for (int yv = -B; yv <= B && !t.y; ++yv) {
            const IntegralElement xe{xu, xv}, ye{yu, yv};
            if (try_pair(xe, ye)) {
              t.x = xe;
              t.y = ye;
            }
          }
  }
  ensure(t.y.has_value(), "two_adic_place: no local witness found");
  t.certificate = "-1 - x^2 = y^2 (1 + d) with v(d) > v(4), so 1 + d is a square and -1 = x^2 + (y sqrt(1+d))^2; "
                  "the completion has level " +
                  std::to_string(t.level) + (t.level == 1 ? "" : " since -m is not a 2-adic square");
  return t;
}

Feasibility level4_completion_exists(const QuadField& K) {
  Feasibility f;
  if (K.is_rationals()) {
    f.feasible = true;
    f.place = "inf";
    f.reason = "Q has a real place (level infinity); Q_2 also has level 4";
    return f;
  }
  f.two_adic = two_adic_place(K);
  if (K.m() > 0) {
    f.feasible = true;
    f.place = "inf";
    f.reason = "m > 0: K has real places (level infinity)";
    return f;
  }
  f.feasible = f.two_adic.behavior == "split";
  if (f.feasible) {
    f.place = "2";
    f.reason = "2 splits in K, so a completion equals Q_2, of level 4";
  } else {
    f.reason = "K is totally imaginary, odd places have level <= 2 and the completion at 2 has level " +
               std::to_string(f.two_adic.level);
  }
  return f;
}

std::vector<std::string> nonsplit_places(const QuadField& K) {
  if (K.is_rationals()) return {"2", "inf"};
  const bool split2 = ((K.m() % 8) + 8) % 8 == 1;
  std::vector<std::string> out;
  if (split2) out = {"2a", "2b"};
  if (K.m() > 0) {
    out.push_back("inf1");
    out.push_back("inf2");
  }
  return out;
}

bool is_division_ring(const QuadField& K) { return !nonsplit_places(K).empty(); }

std::optional<std::pair<IntegralElement, IntegralElement>> two_square_search(const QuadField& K, int bound) {
  const QuadNumber minus_one(K, -1);
  const int vb = K.is_rationals() ? 0 : bound;
  for (int xu = -bound; xu <= bound; ++xu)
    for (int xv = -vb; xv <= vb; ++xv) {
      const IntegralElement xe{xu, xv};
      const QuadNumber x = to_number(K, xe);
      for (int yu = -bound; yu <= bound; ++yu)
        for (int yv = -vb; yv <= vb; ++yv) {
          const IntegralElement ye{yu, yv};
          const QuadNumber y = to_number(K, ye);
          if (x * x + y * y == minus_one) return std::make_pair(xe, ye);
        }
    }
  return std::nullopt;
}

LevelResult level_global(const QuadField& K) {
  LevelResult r;
  r.place = "global";
  if (K.is_rationals() || K.m() > 0) {
    r.level = kInfiniteLevel;
    r.certificate = "K has a real place";
    r.verified = true;
    return r;
  }
  const TwoAdicPlace t = two_adic_place(K);
  if (K.m() == -1) {
    r.level = 1;
    r.element_witness = {QuadNumber(K, 0, 1).to_string()};
    r.certificate = "sqrt(-1) lies in K";
    r.verified = QuadNumber(K, 0, 1) * QuadNumber(K, 0, 1) == QuadNumber(K, -1);
    return r;
  }
  if (t.behavior == "split") {
    r.level = 4;
    // -1 = m + a^2 + b^2 + c^2 with a^2 + b^2 + c^2 = -1 - m
    const std::int64_t target = -1 - K.m();
    for (std::int64_t a = 0; a * a <= target && r.element_witness.empty(); ++a)
      for (std::int64_t b = a; a * a + b * b <= target && r.element_witness.empty(); ++b) {
        const std::int64_t rest = target - a * a - b * b;
        std::int64_t c = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(rest))));
        while (c * c > rest) --c;
        while ((c + 1) * (c + 1) <= rest) ++c;
        if (c * c == rest)
          r.element_witness = {QuadNumber(K, 0, 1).to_string(), std::to_string(a), std::to_string(b),
                               std::to_string(c)};
      }
    r.certificate = "the completions at 2 are Q_2, of level 4, so -1 is not a sum of 3 squares in K";
    r.verified = !r.element_witness.empty();
    return r;
  }
  r.level = 2;
  r.certificate = "sqrt(-1) is not in K; -1 is a sum of two squares in every completion (" + t.behavior +
                  " at 2, level " + std::to_string(t.level) + "), hence globally by Hasse-Minkowski";
  if (auto w = two_square_search(K, 6)) r.element_witness = {element_string(K, w->first), element_string(K, w->second)};
  r.verified = true;
  return r;
}

}  // namespace skewgal::quat
