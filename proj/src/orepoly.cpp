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

#include "skewgal/orepoly.hpp"

#include "skewgal/error.hpp"

namespace skewgal::ore {

OrePoly::OrePoly(FieldAut twist, std::vector<FqElem> coeffs) : twist_(std::move(twist)), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) require(c.field() == twist_.field(), "OrePoly: coefficient outside the base field");
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

OrePoly OrePoly::zero(const FieldAut& twist) { return OrePoly(twist, {}); }

OrePoly OrePoly::one(const FieldAut& twist) { return OrePoly(twist, {twist.field().one()}); }

OrePoly OrePoly::constant(const FieldAut& twist, const FqElem& c) { return OrePoly(twist, {c}); }

OrePoly OrePoly::monomial(const FieldAut& twist, const FqElem& c, unsigned k) {
  std::vector<FqElem> v(k + 1, twist.field().zero());
  v[k] = c;
  return OrePoly(twist, std::move(v));
}

const FqElem& OrePoly::leading() const {
  require(!coeffs_.empty(), "OrePoly: zero polynomial has no leading coefficient");
  return coeffs_.back();
}

FqElem OrePoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : base().zero(); }

void OrePoly::check_compatible(const OrePoly& o) const {
  require(twist_ == o.twist_, "OrePoly: base field or twist mismatch");
}

OrePoly OrePoly::operator+(const OrePoly& o) const {
  check_compatible(o);
  std::vector<FqElem> r(std::max(coeffs_.size(), o.coeffs_.size()), base().zero());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r[i] = coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) r[i] += o.coeffs_[i];
  return OrePoly(twist_, std::move(r));
}

OrePoly OrePoly::operator-(const OrePoly& o) const {
  check_compatible(o);
  std::vector<FqElem> r(std::max(coeffs_.size(), o.coeffs_.size()), base().zero());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r[i] = coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) r[i] -= o.coeffs_[i];
  return OrePoly(twist_, std::move(r));
}

OrePoly OrePoly::operator-() const { return zero(twist_) - *this; }

OrePoly OrePoly::operator*(const OrePoly& o) const { return ore_mul(*this, o); }

OrePoly OrePoly::left_scale(const FqElem& c) const {
  std::vector<FqElem> r;
  r.reserve(coeffs_.size());
  for (const auto& a : coeffs_) r.push_back(c * a);
  return OrePoly(twist_, std::move(r));
}

bool OrePoly::operator==(const OrePoly& o) const { return twist_ == o.twist_ && coeffs_ == o.coeffs_; }

OrePoly ore_mul(const OrePoly& f, const OrePoly& g) {
  require(f.twist() == g.twist(), "ore_mul: base field or twist mismatch");
  if (f.is_zero() || g.is_zero()) return OrePoly::zero(f.twist());
  const FqField& L = f.base();
  const unsigned step = f.twist().exponent();
  const auto& a = f.coeffs();
  const auto& b = g.coeffs();
  std::vector<FqElem> c(a.size() + b.size() - 1, L.zero());
  // coefficient k of fg is sum over l of a_l * tau^l(b_{k-l})
  for (std::size_t l = 0; l < a.size(); ++l) {
    if (a[l].is_zero()) continue;
    const unsigned shift = static_cast<unsigned>((static_cast<std::uint64_t>(step) * l) % L.degree());
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j].is_zero()) continue;
      c[l + j] += a[l] * L.frobenius(b[j], shift);
    }
  }
  return OrePoly(f.twist(), std::move(c));
}

OreDivResult ore_right_divmod(const OrePoly& f, const OrePoly& g) {
  require(f.twist() == g.twist(), "ore_right_divmod: base field or twist mismatch");
  require(!g.is_zero(), "ore_right_divmod: division by zero");
  const FieldAut& tau = f.twist();
  const FqField& L = f.base();
  std::vector<FqElem> q;
  std::vector<FqElem> r = f.coeffs();
  const int dg = g.degree();
  if (static_cast<int>(r.size()) - 1 >= dg) q.assign(r.size() - dg, L.zero());
  for (int k = static_cast<int>(r.size()) - 1; k >= dg; --k) {
    if (r[k].is_zero()) continue;
    const unsigned t = static_cast<unsigned>(k - dg);
    const unsigned shift = static_cast<unsigned>((static_cast<std::uint64_t>(tau.exponent()) * t) % L.degree());
    // (c T^t) * g has leading coefficient c * tau^t(lead g)
    const FqElem c = r[k] / L.frobenius(g.leading(), shift);
    q[t] = c;
    for (int j = 0; j <= dg; ++j) r[t + j] -= c * L.frobenius(g.coeffs()[j], shift);
  }
  return {OrePoly(tau, std::move(q)), OrePoly(tau, std::move(r))};
}

OrePoly to_opposite(const OrePoly& f) {
  const FieldAut inv = f.twist().inverse();
  std::vector<FqElem> out;
  out.reserve(f.coeffs().size());
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) out.push_back(inv.power(static_cast<std::int64_t>(i))(f.coeffs()[i]));
  return OrePoly(inv, std::move(out));
}

OrePoly from_opposite(const OrePoly& f) { return to_opposite(f); }

OreDivResult ore_left_divmod(const OrePoly& f, const OrePoly& g) {
  auto [q, r] = ore_right_divmod(to_opposite(f), to_opposite(g));
  return {from_opposite(q), from_opposite(r)};
}

namespace {

OrePoly left_monic(const OrePoly& f) {
  if (f.is_zero()) return f;
  return f.left_scale(f.leading().inverse());
}

// Extended right Euclid: returns (s, t) with s f + t g = 0 and s f generating Rf ∩ Rg.
std::pair<OrePoly, OrePoly> left_multiple_cofactors(const OrePoly& f, const OrePoly& g) {
  const FieldAut& tau = f.twist();
  OrePoly r0 = f, r1 = g;
  OrePoly s0 = OrePoly::one(tau), s1 = OrePoly::zero(tau);
  OrePoly t0 = OrePoly::zero(tau), t1 = OrePoly::one(tau);
  while (!r1.is_zero()) {
    auto [q, r] = ore_right_divmod(r0, r1);
    OrePoly s2 = s0 - q * s1;
    OrePoly t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  return {s1, t1};
}

}  // namespace

OrePoly ore_right_gcd(const OrePoly& f, const OrePoly& g) {
  require(f.twist() == g.twist(), "ore_right_gcd: base field or twist mismatch");
  require(!(f.is_zero() && g.is_zero()), "ore_right_gcd: both inputs are zero");
  OrePoly a = f, b = g;
  while (!b.is_zero()) {
    OrePoly r = ore_right_divmod(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return left_monic(a);
}

OrePoly ore_left_lcm(const OrePoly& f, const OrePoly& g) {
  require(f.twist() == g.twist(), "ore_left_lcm: base field or twist mismatch");
  require(!(f.is_zero() && g.is_zero()), "ore_left_lcm: both inputs are zero");
  if (f.is_zero() || g.is_zero()) return OrePoly::zero(f.twist());
  auto [s, t] = left_multiple_cofactors(f, g);
  const OrePoly m = s * f;
  ensure(m == -(t * g), "ore_left_lcm: cofactor identity failed");
  ensure(!m.is_zero(), "ore_left_lcm: zero common multiple");
  return left_monic(m);
}

OreWitness ore_witness(const OrePoly& x, const OrePoly& y) {
  require(x.twist() == y.twist(), "ore_witness: base field or twist mismatch");
  require(!x.is_zero() && !y.is_zero(), "ore_witness: inputs must be nonzero");
  auto [s, t] = left_multiple_cofactors(to_opposite(x), to_opposite(y));
  OreWitness w{from_opposite(s), from_opposite(-t)};
  const OrePoly lhs = x * w.r;
  ensure(lhs == y * w.s, "ore_witness: x r != y s");
  ensure(!lhs.is_zero(), "ore_witness: common multiple is zero");
  return w;
}

InducedRingAut::InducedRingAut(FieldAut rho, FieldAut twist, ff::SubfieldEmbedding K)
    : rho_(std::move(rho)), twist_(std::move(twist)), K_(std::move(K)) {
  require(rho_.field() == twist_.field() && K_.big() == rho_.field(),
          "induced_ring_aut: automorphism, twist and subfield must live on the same field");
  require(rho_(K_.image_of_generator()) == K_.image_of_generator(),
          "induced_ring_aut: automorphism does not fix the designated subfield");
}

OrePoly InducedRingAut::apply(const OrePoly& f) const {
  require(f.twist() == twist_, "InducedRingAut: polynomial lives in another ring");
  std::vector<FqElem> out;
  out.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) out.push_back(rho_(c));
  return OrePoly(twist_, std::move(out));
}

InducedRingAut induced_ring_aut(const FieldAut& rho, const FieldAut& twist, const ff::SubfieldEmbedding& K) {
  return InducedRingAut(rho, twist, K);
}

FixedSubringScan fixed_subring_scan(const std::vector<InducedRingAut>& group, const ff::SubfieldEmbedding& K,
                                    unsigned max_degree) {
  const FqField& L = K.big();
  const std::uint64_t q = L.size();
  std::uint64_t total = 1;
  std::uint64_t expected = 1;
  for (unsigned i = 0; i <= max_degree; ++i) {
    total *= q;
    expected *= K.small().size();
  }
  require(total <= (1ull << 24), "fixed_subring_scan: scan too large");
  FixedSubringScan scan;
  scan.expected = expected;
  const auto elems = L.elements();
  std::vector<bool> in_K(q);
  for (std::uint64_t i = 0; i < q; ++i) in_K[i] = K.contains(elems[i]);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::vector<FqElem> coeffs;
    bool coeffs_in_K = true;
    std::uint64_t rest = idx;
    for (unsigned i = 0; i <= max_degree; ++i) {
      coeffs.push_back(elems[rest % q]);
      coeffs_in_K = coeffs_in_K && in_K[rest % q];
      rest /= q;
    }
    ++scan.scanned;
    bool fixed = true;
    if (!group.empty()) {
      const OrePoly f(group.front().twist(), coeffs);
      for (const auto& g : group) fixed = fixed && g.fixes(f);
    }
    if (fixed) {
      ++scan.fixed;
      if (coeffs_in_K) ++scan.fixed_with_coeffs_in_K;
    }
  }
  return scan;
}

}  // namespace skewgal::ore
