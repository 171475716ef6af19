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

#include "skewgal/int_poly.hpp"

#include <algorithm>
#include <limits>

#include "skewgal/error.hpp"

namespace skewgal::zx {

void trim(ZPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const ZPoly& f) { return static_cast<int>(f.size()) - 1; }

ZPoly add(const ZPoly& f, const ZPoly& g) {
  ZPoly r(std::max(f.size(), g.size()));
  for (std::size_t i = 0; i < f.size(); ++i) r[i] += f[i];
  for (std::size_t i = 0; i < g.size(); ++i) r[i] += g[i];
  trim(r);
  return r;
}

ZPoly sub(const ZPoly& f, const ZPoly& g) {
  ZPoly r(std::max(f.size(), g.size()));
  for (std::size_t i = 0; i < f.size(); ++i) r[i] += f[i];
  for (std::size_t i = 0; i < g.size(); ++i) r[i] -= g[i];
  trim(r);
  return r;
}

ZPoly mul(const ZPoly& f, const ZPoly& g) {
  if (f.empty() || g.empty()) return {};
  ZPoly r(f.size() + g.size() - 1);
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) r[i + j] += f[i] * g[j];
  trim(r);
  return r;
}

ZPoly derivative(const ZPoly& f) {
  ZPoly r;
  for (std::size_t i = 1; i < f.size(); ++i) r.push_back(f[i] * static_cast<unsigned>(i));
  trim(r);
  return r;
}

Int eval(const ZPoly& f, const Int& x) {
  Int acc = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * x + *it;
  return acc;
}

ZPoly taylor_shift(const ZPoly& f, const Int& r) {
  ZPoly g = f;
  const std::size_t n = g.size();
  // repeated synthetic division by (X - r)
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = n - 1; j > i; --j) g[j - 1] += r * g[j];
  trim(g);
  return g;
}

ZPoly from_roots(const std::vector<Int>& roots) {
  ZPoly f{1};
  for (const auto& r : roots) f = mul(f, ZPoly{-r, 1});
  return f;
}

std::string to_string(const ZPoly& f) {
  std::string s = "[";
  for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + f[i].str();
  return s + "]";
}

zp::Poly reduce(const ZPoly& f, std::uint64_t p) {
  zp::Poly r(f.size());
  const Int P = p;
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = static_cast<std::uint64_t>(mod_floor(f[i], P));
  zp::trim(r);
  return r;
}

ZPoly lift(const zp::Poly& f) {
  ZPoly r(f.begin(), f.end());
  trim(r);
  return r;
}

ZPoly reduce_mod(const ZPoly& f, const Int& m) {
  ZPoly r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = mod_floor(f[i], m);
  trim(r);
  return r;
}

Int determinant(std::vector<std::vector<Int>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t piv = k + 1;
      while (piv < n && m[piv][k] == 0) ++piv;
      if (piv == n) return 0;
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

Int resultant(const ZPoly& f, const ZPoly& g) {
  const int df = degree(f), dg = degree(g);
  require(df >= 0 && dg >= 0, "resultant: zero polynomial");
  if (df == 0 && dg == 0) return 1;
  const std::size_t n = static_cast<std::size_t>(df + dg);
  std::vector<std::vector<Int>> S(n, std::vector<Int>(n, 0));
  // rows hold coefficients in descending order
  for (int i = 0; i < dg; ++i)
    for (int j = 0; j <= df; ++j) S[i][i + j] = f[df - j];
  for (int i = 0; i < df; ++i)
    for (int j = 0; j <= dg; ++j) S[dg + i][i + j] = g[dg - j];
  return determinant(std::move(S));
}

Int discriminant(const ZPoly& f) {
  const int n = degree(f);
  require(n >= 1, "discriminant: degree must be positive");
  if (n == 1) return 1;
  Int r = resultant(f, derivative(f));
  if ((n * (n - 1) / 2) % 2) r = -r;
  ensure(r % f.back() == 0, "discriminant: resultant not divisible by the leading coefficient");
  return r / f.back();
}

namespace {

void qtrim(QPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

QPoly qrem(QPoly a, const QPoly& b) {
  const int db = static_cast<int>(b.size()) - 1;
  while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
    const Rational c = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
    a.pop_back();
    qtrim(a);
  }
  return a;
}

int sign_changes(const std::vector<int>& signs) {
  int changes = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int sgn(const Rational& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

}  // namespace

unsigned count_real_roots(const ZPoly& f) {
  require(degree(f) >= 1, "count_real_roots: degree must be positive");
  std::vector<QPoly> seq;
  seq.emplace_back(f.begin(), f.end());
  const ZPoly df = derivative(f);
  seq.emplace_back(df.begin(), df.end());
  while (!seq.back().empty()) {
    QPoly r = qrem(seq[seq.size() - 2], seq.back());
    for (auto& c : r) c = -c;
    if (r.empty()) break;
    seq.push_back(std::move(r));
  }
  std::vector<int> at_pos, at_neg;
  for (const auto& s : seq) {
    const int lc = sgn(s.back());
    const int deg = static_cast<int>(s.size()) - 1;
    at_pos.push_back(lc);
    at_neg.push_back(deg % 2 ? -lc : lc);
  }
  return static_cast<unsigned>(sign_changes(at_neg) - sign_changes(at_pos));
}

namespace {

void count_ball(const ZPoly& f, std::uint64_t p, const Int& center, unsigned level, unsigned max_level,
                PadicRootCount& out) {
  ++out.balls_examined;
  out.deepest_level = std::max(out.deepest_level, level);
  const ZPoly g = taylor_shift(f, center);
  const Int P = p;
  long best = std::numeric_limits<long>::max();
  std::size_t last = 0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const Int c = i < g.size() ? g[i] : Int(0);
    if (c == 0) continue;
    const long v = valuation(c, P) + static_cast<long>(level) * static_cast<long>(i);
    if (v <= best) {
      best = v;
      last = i;
    }
  }
  // last is the number of roots in the closed disk |X - center| <= p^-level
  if (last == 0) return;
  if (last == 1) {
    ++out.roots;
    return;
  }
  if (level >= max_level)
    throw PrecisionExhausted("p-adic root isolation exceeded level " + std::to_string(max_level) + " at p = " +
                             std::to_string(p));
  const Int step = ipow(P, level);
  for (std::uint64_t j = 0; j < p; ++j) count_ball(f, p, center + step * j, level + 1, max_level, out);
}

}  // namespace

PadicRootCount count_padic_roots_in(const ZPoly& f, std::uint64_t p, const std::vector<std::uint64_t>& residues,
                                    unsigned max_level) {
  require(degree(f) >= 1, "count_padic_roots: degree must be positive");
  require(zp::is_prime(p), "count_padic_roots: p must be prime");
  require(discriminant(f) != 0, "count_padic_roots: polynomial is not squarefree");
  PadicRootCount out;
  for (auto r : residues) count_ball(f, p, Int(r), 1, max_level, out);
  return out;
}

PadicRootCount count_padic_roots(const ZPoly& f, std::uint64_t p, unsigned max_level) {
  std::vector<std::uint64_t> all(p);
  for (std::uint64_t r = 0; r < p; ++r) all[r] = r;
  return count_padic_roots_in(f, p, all, max_level);
}

std::pair<zp::Poly, zp::Poly> bezout(const zp::Poly& a, const zp::Poly& b, std::uint64_t p) {
  zp::Poly r0 = a, r1 = b;
  zp::Poly s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    auto [q, r] = zp::divmod(r0, r1, p);
    zp::Poly s2 = zp::sub(s0, zp::mul(q, s1, p), p);
    zp::Poly t2 = zp::sub(t0, zp::mul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  require(zp::degree(r0) == 0, "bezout: polynomials are not coprime mod p");
  const std::uint64_t inv = zp::inv_mod(r0[0], p);
  return {zp::scale(s0, inv, p), zp::scale(t0, inv, p)};
}

std::pair<ZPoly, ZPoly> hensel_lift(const ZPoly& f, const zp::Poly& a, const zp::Poly& b, std::uint64_t p,
                                    unsigned k) {
  require(k >= 1, "hensel_lift: precision must be positive");
  require(!f.empty() && f.back() == 1, "hensel_lift: f must be monic");
  require(zp::is_monic(a) && zp::is_monic(b), "hensel_lift: factors must be monic");
  require(reduce(f, p) == zp::mul(a, b, p), "hensel_lift: f != a b mod p");
  const auto [s, t] = bezout(a, b, p);
  ZPoly A = lift(a), B = lift(b);
  const Int P = p;
  Int pj = P;
  for (unsigned j = 1; j < k; ++j) {
    const ZPoly diff = sub(f, mul(A, B));
    ZPoly e_int(diff.size());
    for (std::size_t i = 0; i < diff.size(); ++i) {
      ensure(diff[i] % pj == 0, "hensel_lift: factorization lost precision");
      e_int[i] = diff[i] / pj;
    }
    const zp::Poly E = reduce(e_int, p);
    // dA = t E mod a, dB = s E + q b where t E = q a + dA
    auto [q, dA] = zp::divmod(zp::mul(t, E, p), a, p);
    const zp::Poly dB = zp::add(zp::mul(s, E, p), zp::mul(q, b, p), p);
    ensure(zp::degree(dA) < zp::degree(a) && zp::degree(dB) < zp::degree(b), "hensel_lift: correction too large");
    ZPoly dAi = lift(dA), dBi = lift(dB);
    for (auto& c : dAi) c *= pj;
    for (auto& c : dBi) c *= pj;
    A = add(A, dAi);
    B = add(B, dBi);
    pj *= P;
    A = reduce_mod(A, pj);
    B = reduce_mod(B, pj);
  }
  ensure(reduce_mod(sub(f, mul(A, B)), pj).empty(), "hensel_lift: f != A B mod p^k");
  return {A, B};
}

}  // namespace skewgal::zx
