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

#include "skewgal/checks/oracles.hpp"

#include <algorithm>
#include <set>

namespace skewgal::oracle {

namespace {

using grp::Elem;
using grp::FiniteGroup;

std::vector<Elem> close_under(const FiniteGroup& G, const std::vector<Elem>& gens) {
  std::vector<char> seen(G.order(), 0);
  std::vector<Elem> out{0};
  seen[0] = 1;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (Elem g : gens) {
      const Elem y = G.mul(out[i], g);
      if (!seen[y]) {
        seen[y] = 1;
        out.push_back(y);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

unsigned element_order(const FiniteGroup& G, Elem g) {
  unsigned k = 1;
  for (Elem x = g; x != 0; x = G.mul(x, g)) ++k;
  return k;
}

bool nilpotent_by_upper_central(const FiniteGroup& G, const std::vector<Elem>& H) {
  std::vector<char> in_z(G.order(), 0);
  in_z[0] = 1;
  std::size_t size = 1;
  while (true) {
    std::vector<char> next(G.order(), 0);
    std::size_t next_size = 0;
    for (Elem x : H) {
      bool central = true;
      for (Elem h : H) {
        const Elem c = G.mul(G.mul(G.inv(x), G.inv(h)), G.mul(x, h));
        if (!in_z[c]) {
          central = false;
          break;
        }
      }
      if (central) {
        next[x] = 1;
        ++next_size;
      }
    }
    if (next_size == H.size()) return true;
    if (next_size == size) return false;
    in_z = std::move(next);
    size = next_size;
  }
}

std::vector<std::vector<Elem>> normal_subgroups(const FiniteGroup& G) {
  std::set<std::vector<Elem>> found;
  found.insert({0});
  for (Elem g = 0; g < G.order(); ++g) {
    std::vector<Elem> conjugates;
    for (Elem h = 0; h < G.order(); ++h) conjugates.push_back(G.mul(G.mul(h, g), G.inv(h)));
    found.insert(close_under(G, conjugates));
  }
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<std::vector<Elem>> current(found.begin(), found.end());
    for (std::size_t i = 0; i < current.size(); ++i)
      for (std::size_t j = i + 1; j < current.size(); ++j) {
        std::vector<Elem> gens = current[i];
        gens.insert(gens.end(), current[j].begin(), current[j].end());
        if (found.insert(close_under(G, gens)).second) grew = true;
      }
  }
  return {found.begin(), found.end()};
}

std::vector<Elem> max_nilpotent_normal(const FiniteGroup& G) {
  std::vector<Elem> best{0};
  for (const auto& N : normal_subgroups(G))
    if (N.size() > best.size() && nilpotent_by_upper_central(G, N)) best = N;
  // The maximum must contain every nilpotent normal subgroup.
  for (const auto& N : normal_subgroups(G))
    if (nilpotent_by_upper_central(G, N) && !std::includes(best.begin(), best.end(), N.begin(), N.end())) return {};
  return best;
}

bool product_covers(const FiniteGroup& G, const std::vector<Elem>& N, const std::vector<Elem>& H) {
  std::vector<char> hit(G.order(), 0);
  for (Elem n : N)
    for (Elem h : H) hit[G.mul(n, h)] = 1;
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

std::vector<ff::FqElem> ore_convolution(const std::vector<ff::FqElem>& a, const std::vector<ff::FqElem>& b,
                                        unsigned k) {
  if (a.empty() || b.empty()) return {};
  const auto& L = a.front().field();
  const std::uint64_t p = L.characteristic();
  std::vector<ff::FqElem> c(a.size() + b.size() - 1, L.zero());
  for (std::size_t l = 0; l < a.size(); ++l)
    for (std::size_t j = 0; j < b.size(); ++j) {
      ff::FqElem x = b[j];
      for (std::size_t r = 0; r < static_cast<std::size_t>(k) * l; ++r) x = x.pow(p);
      c[l + j] = c[l + j] + a[l] * x;
    }
  while (!c.empty() && c.back().is_zero()) c.pop_back();
  return c;
}

namespace {

using RPoly = std::vector<Rational>;

void rtrim(RPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

RPoly rem(RPoly a, const RPoly& b) {
  while (a.size() >= b.size() && !a.empty()) {
    const Rational c = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    a.pop_back();
    rtrim(a);
  }
  return a;
}

std::vector<RPoly> sturm_chain(const std::vector<Int>& f) {
  RPoly p0(f.begin(), f.end());
  rtrim(p0);
  RPoly p1;
  for (std::size_t i = 1; i < p0.size(); ++i) p1.push_back(p0[i] * Rational(static_cast<long>(i)));
  rtrim(p1);
  std::vector<RPoly> chain{p0};
  if (p1.empty()) return chain;
  chain.push_back(p1);
  while (true) {
    RPoly r = rem(chain[chain.size() - 2], chain.back());
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    chain.push_back(r);
  }
  return chain;
}

int sign_at(const RPoly& f, const Int& x) {
  Rational v = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) v = v * Rational(x) + *it;
  return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

int variations(const std::vector<RPoly>& chain, const Int& x) {
  int count = 0, last = 0;
  for (const auto& f : chain) {
    const int s = sign_at(f, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

Int cauchy_bound(const std::vector<Int>& f) {
  Int m = 0;
  for (std::size_t i = 0; i + 1 < f.size(); ++i) m = std::max(m, Int(abs(f[i])));
  return m + 2;
}

Int eval_int(const std::vector<Int>& f, const Int& x) {
  Int v = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) v = v * x + *it;
  return v;
}

bool is_square(const Int& x) {
  if (x < 0) return false;
  const Int r = boost::multiprecision::sqrt(x);
  return r * r == x;
}

}  // namespace

unsigned real_root_count(const std::vector<Int>& f) {
  const auto chain = sturm_chain(f);
  const Int B = cauchy_bound(f);
  return static_cast<unsigned>(variations(chain, -B) - variations(chain, B));
}

std::vector<Int> integer_roots(const std::vector<Int>& f) {
  const auto chain = sturm_chain(f);
  const Int B = cauchy_bound(f);
  std::vector<Int> roots;
  // Intervals (lo, hi] with integer endpoints holding at least one real root.
  std::vector<std::pair<Int, Int>> work{{-B, B}};
  while (!work.empty()) {
    auto [lo, hi] = work.back();
    work.pop_back();
    if (variations(chain, lo) - variations(chain, hi) == 0) continue;
    if (hi - lo == 1) {
      if (eval_int(f, hi) == 0) roots.push_back(hi);
      continue;
    }
    const Int mid = lo + (hi - lo) / 2;
    work.push_back({lo, mid});
    work.push_back({mid, hi});
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::string galois_group_small(const std::vector<Int>& f) {
  const std::size_t n = f.size() - 1;
  if (f.back() != 1 || n < 2 || n > 4) return "unsupported";
  if (!integer_roots(f).empty()) return "reducible";
  if (n == 2) return is_square(f[1] * f[1] - 4 * f[0]) ? "trivial" : "S2";
  if (n == 3) {
    const Int &b = f[2], &c = f[1], &d = f[0];
    const Int disc = b * b * c * c - 4 * c * c * c - 4 * b * b * b * d - 27 * d * d + 18 * b * c * d;
    return is_square(disc) ? "A3" : "S3";
  }
  const Int &a = f[3], &b = f[2], &c = f[1], &d = f[0];
  // Cubic resolvent with roots x1 x2 + x3 x4 and its permutations.
  const std::vector<Int> R{-(a * a * d - 4 * b * d + c * c), a * c - 4 * d, -b, 1};
  if (!integer_roots(R).empty()) return "not S4: resolvent has a rational root";
  const Int &rb = R[2], &rc = R[1], &rd = R[0];
  const Int disc = rb * rb * rc * rc - 4 * rc * rc * rc - 4 * rb * rb * rb * rd - 27 * rd * rd + 18 * rb * rc * rd;
  return is_square(disc) ? "A4" : "S4";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

int euler_symbol(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) return 0;
  unsigned __int128 r = 1, b = a;
  for (std::uint64_t e = (p - 1) / 2; e; e >>= 1) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
  }
  return r == 1 ? 1 : -1;
}

}  // namespace skewgal::oracle
