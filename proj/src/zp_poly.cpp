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

#include "skewgal/zp_poly.hpp"

#include <algorithm>
#include <limits>

#include "skewgal/error.hpp"

namespace skewgal::zp {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  a %= p;
  ensure(a != 0, "zp::inv_mod: zero has no inverse");
  return pow_mod(a, p - 2, p);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % d == 0) return n == d;
  }
  // Deterministic Miller-Rabin for 64-bit inputs.
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

bool is_monic(const Poly& f) { return !f.empty() && f.back() == 1; }

Poly add(const Poly& f, const Poly& g, std::uint64_t p) {
  Poly r(std::max(f.size(), g.size()), 0);
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = f[i];
  for (std::size_t i = 0; i < g.size(); ++i) r[i] = (r[i] + g[i]) % p;
  trim(r);
  return r;
}

Poly sub(const Poly& f, const Poly& g, std::uint64_t p) {
  Poly r(std::max(f.size(), g.size()), 0);
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = f[i];
  for (std::size_t i = 0; i < g.size(); ++i) r[i] = (r[i] + p - g[i]) % p;
  trim(r);
  return r;
}

Poly mul(const Poly& f, const Poly& g, std::uint64_t p) {
  if (f.empty() || g.empty()) return {};
  Poly r(f.size() + g.size() - 1, 0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == 0) continue;
    for (std::size_t j = 0; j < g.size(); ++j) r[i + j] = (r[i + j] + mul_mod(f[i], g[j], p)) % p;
  }
  trim(r);
  return r;
}

Poly scale(const Poly& f, std::uint64_t c, std::uint64_t p) {
  Poly r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = mul_mod(f[i], c, p);
  trim(r);
  return r;
}

Poly derivative(const Poly& f, std::uint64_t p) {
  if (f.size() <= 1) return {};
  Poly r(f.size() - 1);
  for (std::size_t i = 1; i < f.size(); ++i) r[i - 1] = mul_mod(f[i], i % p, p);
  trim(r);
  return r;
}

Poly make_monic(const Poly& f, std::uint64_t p) {
  if (f.empty()) return f;
  return scale(f, inv_mod(f.back(), p), p);
}

std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g, std::uint64_t p) {
  ensure(!g.empty(), "zp::divmod: division by zero polynomial");
  Poly r = f;
  trim(r);
  if (r.size() < g.size()) return {Poly{}, r};
  Poly q(r.size() - g.size() + 1, 0);
  const std::uint64_t lead_inv = inv_mod(g.back(), p);
  for (std::size_t k = q.size(); k-- > 0;) {
    const std::uint64_t c = mul_mod(r[k + g.size() - 1], lead_inv, p);
    q[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < g.size(); ++j) r[k + j] = (r[k + j] + p - mul_mod(c, g[j], p)) % p;
  }
  trim(q);
  trim(r);
  return {q, r};
}

Poly rem(const Poly& f, const Poly& g, std::uint64_t p) { return divmod(f, g, p).second; }

Poly gcd(const Poly& f, const Poly& g, std::uint64_t p) {
  Poly a = f, b = g;
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a, p);
}

Poly mulmod(const Poly& f, const Poly& g, const Poly& m, std::uint64_t p) { return rem(mul(f, g, p), m, p); }

Poly powmod(const Poly& f, std::uint64_t e, const Poly& m, std::uint64_t p) {
  Poly result{1};
  result = rem(result, m, p);
  Poly base = rem(f, m, p);
  while (e) {
    if (e & 1) result = mulmod(result, base, m, p);
    base = mulmod(base, base, m, p);
    e >>= 1;
  }
  return result;
}

Poly x_pow_p_iter(unsigned k, const Poly& m, std::uint64_t p) {
  Poly h = rem(Poly{0, 1}, m, p);
  for (unsigned i = 0; i < k; ++i) h = powmod(h, p, m, p);
  return h;
}

std::uint64_t eval(const Poly& f, std::uint64_t x, std::uint64_t p) {
  std::uint64_t acc = 0;
  for (std::size_t i = f.size(); i-- > 0;) acc = (mul_mod(acc, x, p) + f[i]) % p;
  return acc;
}

bool is_squarefree(const Poly& f, std::uint64_t p) {
  if (f.empty()) return false;
  if (degree(f) == 0) return true;
  const Poly df = derivative(f, p);
  if (df.empty()) return false;
  return degree(gcd(f, df, p)) == 0;
}

std::vector<std::pair<unsigned, Poly>> distinct_degree(const Poly& f, std::uint64_t p) {
  ensure(is_monic(f), "zp::distinct_degree: input must be monic");
  std::vector<std::pair<unsigned, Poly>> out;
  Poly rest = f;
  const Poly x{0, 1};
  Poly h = rem(x, rest, p);
  unsigned d = 1;
  while (2 * d <= static_cast<unsigned>(degree(rest))) {
    h = powmod(h, p, rest, p);
    Poly g = gcd(sub(h, x, p), rest, p);
    if (degree(g) > 0) {
      out.emplace_back(d, g);
      rest = divmod(rest, g, p).first;
      h = rem(h, rest, p);
    }
    ++d;
  }
  if (degree(rest) > 0) out.emplace_back(static_cast<unsigned>(degree(rest)), rest);
  return out;
}

std::vector<unsigned> factor_degrees(const Poly& f, std::uint64_t p) {
  std::vector<unsigned> parts;
  for (const auto& [d, g] : distinct_degree(f, p)) {
    for (int i = 0; i < degree(g) / static_cast<int>(d); ++i) parts.push_back(d);
  }
  std::sort(parts.rbegin(), parts.rend());
  return parts;
}

bool is_irreducible(const Poly& f, std::uint64_t p) {
  if (degree(f) < 1) return false;
  const Poly m = make_monic(f, p);
  if (degree(m) == 1) return true;
  if (!is_squarefree(m, p)) return false;
  const auto parts = distinct_degree(m, p);
  return parts.size() == 1 && parts.front().first == static_cast<unsigned>(degree(m));
}

Poly monic_from_index(std::uint64_t index, unsigned n, std::uint64_t p) {
  Poly f(n + 1, 0);
  for (unsigned i = 0; i < n; ++i) {
    f[i] = index % p;
    index /= p;
  }
  f[n] = 1;
  return f;
}

Poly least_irreducible(unsigned n, std::uint64_t p) {
  ensure(n >= 1, "zp::least_irreducible: degree must be positive");
  for (std::uint64_t idx = 0;; ++idx) {
    Poly f = monic_from_index(idx, n, p);
    if (is_irreducible(f, p)) return f;
  }
}

Poly seeded_irreducible(unsigned n, std::uint64_t p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> coef(0, p - 1);
  for (;;) {
    Poly f(n + 1, 0);
    for (unsigned i = 0; i < n; ++i) f[i] = coef(rng);
    f[n] = 1;
    if (is_irreducible(f, p)) return f;
  }
}

}  // namespace skewgal::zp
