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

#include "skewgal/kernels.hpp"

#include <map>
#include <memory>
#include <numeric>
#include <random>
#include <tuple>

#include "skewgal/embed.hpp"
#include "skewgal/error.hpp"
#include "skewgal/orepoly.hpp"

namespace skewgal::kernels {

namespace {

using ore::OrePoly;

bool table_associative_rows(std::span<const std::uint32_t> t, std::size_t n, std::size_t a) {
  for (std::size_t b = 0; b < n; ++b) {
    const std::size_t ab = t[a * n + b];
    for (std::size_t c = 0; c < n; ++c)
      if (t[ab * n + c] != t[a * n + t[b * n + c]]) return false;
  }
  return true;
}

OrePoly random_poly(const ff::FieldAut& tau, std::mt19937_64& rng, unsigned max_degree, bool nonzero) {
  const auto& L = tau.field();
  const unsigned deg = static_cast<unsigned>(rng() % (max_degree + 1));
  std::vector<ff::FqElem> c;
  for (unsigned i = 0; i <= deg; ++i) c.push_back(L.from_index(rng() % L.size()));
  if (nonzero && c.back().is_zero()) c.back() = L.from_index(1 + rng() % (L.size() - 1));
  return OrePoly(tau, std::move(c));
}

template <class Body>
void for_cases(std::uint64_t cases, Exec exec, Body&& body) {
  const auto count = static_cast<std::int64_t>(cases);
  if (exec == Exec::serial) {
    for (std::int64_t i = 0; i < count; ++i) body(static_cast<std::uint64_t>(i));
    return;
  }
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t i = 0; i < count; ++i) body(static_cast<std::uint64_t>(i));
}

}  // namespace

bool table_associative(std::span<const std::uint32_t> table, std::size_t n, Exec exec) {
  require(table.size() == n * n, "table_associative: table size mismatch");
  const auto rows = static_cast<std::int64_t>(n);
  bool ok = true;
  if (exec == Exec::serial) {
    for (std::int64_t a = 0; a < rows && ok; ++a) ok = table_associative_rows(table, n, static_cast<std::size_t>(a));
    return ok;
  }
#pragma omp parallel for schedule(static) reduction(&& : ok)
  for (std::int64_t a = 0; a < rows; ++a) ok = ok && table_associative_rows(table, n, static_cast<std::size_t>(a));
  return ok;
}

std::uint64_t case_seed(std::uint64_t seed, std::uint64_t i) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (i + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

RingLawStats ore_ring_laws(const ff::FqField& L, unsigned twist_exponent, std::uint64_t cases, std::uint64_t seed,
                           unsigned max_degree, Exec exec) {
  const ff::FieldAut tau(L, twist_exponent);
  const OrePoly T = OrePoly::monomial(tau, L.one(), 1);
  std::uint64_t fa = 0, fl = 0, fr = 0, fd = 0, ft = 0;
  auto body = [&](std::uint64_t i, std::uint64_t& a, std::uint64_t& l, std::uint64_t& r, std::uint64_t& d,
                  std::uint64_t& t) {
    std::mt19937_64 rng(case_seed(seed, i));
    const OrePoly f = random_poly(tau, rng, max_degree, true);
    const OrePoly g = random_poly(tau, rng, max_degree, true);
    const OrePoly h = random_poly(tau, rng, max_degree, false);
    const OrePoly fg = f * g;
    a += (fg * h != f * (g * h));
    l += (f * (g + h) != fg + f * h);
    r += ((f + g) * h != f * h + g * h);
    d += (fg.degree() != f.degree() + g.degree());
    const OrePoly c = OrePoly::constant(tau, L.from_index(rng() % L.size()));
    const OrePoly twisted = OrePoly::constant(tau, tau(c.coeff(0)));
    t += (T * c != twisted * T);
  };
  if (exec == Exec::serial) {
    for (std::uint64_t i = 0; i < cases; ++i) body(i, fa, fl, fr, fd, ft);
  } else {
    const auto count = static_cast<std::int64_t>(cases);
#pragma omp parallel for schedule(dynamic, 64) reduction(+ : fa, fl, fr, fd, ft)
    for (std::int64_t i = 0; i < count; ++i) body(static_cast<std::uint64_t>(i), fa, fl, fr, fd, ft);
  }
  RingLawStats s;
  s.cases = cases;
  s.associativity_failures = fa;
  s.left_distributivity_failures = fl;
  s.right_distributivity_failures = fr;
  s.degree_failures = fd;
  s.twist_law_failures = ft;
  return s;
}

DivisionStats ore_division_sweep(const ff::FqField& L, unsigned twist_exponent, std::uint64_t cases,
                                 std::uint64_t seed, unsigned max_degree, Exec exec) {
  const ff::FieldAut tau(L, twist_exponent);
  std::vector<unsigned char> recon(cases, 0), bound(cases, 0);
  for_cases(cases, exec, [&](std::uint64_t i) {
    std::mt19937_64 rng(case_seed(seed, i));
    const OrePoly f = random_poly(tau, rng, 2 * max_degree, false);
    const OrePoly g = random_poly(tau, rng, max_degree, true);
    const auto [q, r] = ore::ore_right_divmod(f, g);
    recon[i] = q * g + r != f;
    bound[i] = r.degree() >= g.degree();
  });
  DivisionStats s;
  s.cases = cases;
  s.reconstruction_failures = std::accumulate(recon.begin(), recon.end(), std::uint64_t{0});
  s.degree_bound_failures = std::accumulate(bound.begin(), bound.end(), std::uint64_t{0});
  return s;
}

WitnessStats ore_witness_sweep(const ff::FqField& L, unsigned twist_exponent, std::uint64_t cases,
                               std::uint64_t seed, unsigned max_degree, Exec exec) {
  const ff::FieldAut tau(L, twist_exponent);
  std::vector<unsigned char> bad(cases, 0);
  for_cases(cases, exec, [&](std::uint64_t i) {
    std::mt19937_64 rng(case_seed(seed, i));
    const OrePoly x = random_poly(tau, rng, max_degree, true);
    const OrePoly y = random_poly(tau, rng, max_degree, true);
    try {
      const auto w = ore::ore_witness(x, y);
      const OrePoly lhs = x * w.r;
      bad[i] = lhs.is_zero() || lhs != y * w.s;
    } catch (const InternalError&) {
      bad[i] = 1;
    }
  });
  WitnessStats s;
  s.cases = cases;
  s.failures = std::accumulate(bad.begin(), bad.end(), std::uint64_t{0});
  return s;
}

std::vector<AutInstance> aut_instances(std::uint64_t p, std::uint64_t max_size) {
  require(zp::is_prime(p), "aut_instances: p must be prime");
  std::vector<AutInstance> out;
  std::uint64_t size = p;
  for (unsigned nL = 1; size <= max_size; ++nL, size *= p) {
    for (unsigned nK = 1; nK <= nL; ++nK) {
      if (nL % nK) continue;
      for (unsigned k = 0; k < nK; ++k)
        for (unsigned t = 0; t < nL / nK; ++t) out.push_back({p, nK, nL, k, k + nK * t});
    }
    if (size > max_size / p) break;
  }
  return out;
}

namespace {

using ExtKey = std::tuple<std::uint64_t, unsigned, unsigned>;

std::map<ExtKey, std::shared_ptr<const embed::FFGaloisExt>> build_extensions(const std::vector<ExtKey>& keys) {
  std::map<ExtKey, std::shared_ptr<const embed::FFGaloisExt>> out;
  for (const auto& key : keys) {
    if (out.count(key)) continue;
    const auto [p, nK, nL] = key;
    out[key] = std::make_shared<const embed::FFGaloisExt>(
        embed::make_extension(ff::FqField::make(p, nK), ff::FqField::make(p, nL)));
  }
  return out;
}

}  // namespace

CriteriaSweepStats criteria_sweep(const std::vector<AutInstance>& instances, Exec exec) {
  std::vector<ExtKey> keys;
  for (const auto& in : instances) keys.emplace_back(in.p, in.n_K, in.n_L);
  const auto exts = build_extensions(keys);
  std::vector<unsigned char> state(instances.size(), 0);  // 1 both true, 2 both false, 3 disagree
  for_cases(instances.size(), exec, [&](std::uint64_t i) {
    const auto& in = instances[i];
    const auto& ext = *exts.at({in.p, in.n_K, in.n_L});
    const auto r = embed::extension_criteria(ext, ff::FieldAut(ext.K, in.sigma), ff::FieldAut(ext.L, in.tau));
    state[i] = r.order_coprime != r.is_direct_product ? 3 : (r.order_coprime ? 1 : 2);
  });
  CriteriaSweepStats s;
  s.instances = instances.size();
  for (auto v : state) {
    s.both_true += v == 1;
    s.both_false += v == 2;
    s.disagreements += v == 3;
  }
  return s;
}

LiftSweepStats lift_sweep(std::uint64_t p, std::uint64_t max_size, Exec exec) {
  struct Triple {
    unsigned nK, nL, k;
  };
  std::vector<Triple> triples;
  std::vector<ExtKey> keys;
  for (const auto& in : aut_instances(p, max_size)) {
    if (in.tau != in.sigma) continue;  // one entry per (K, L, sigma)
    triples.push_back({in.n_K, in.n_L, in.sigma});
    keys.emplace_back(p, in.n_K, in.n_L);
  }
  const auto exts = build_extensions(keys);
  std::vector<unsigned char> state(triples.size(), 0);  // 1 coprime ok, 2 noncoprime ok
  for_cases(triples.size(), exec, [&](std::uint64_t i) {
    const auto& tr = triples[i];
    const auto& ext = *exts.at({p, tr.nK, tr.nL});
    const ff::FieldAut sigma(ext.K, tr.k);
    const unsigned d = sigma.order();
    // extensions found by evaluating every automorphism of L on the embedded generator of K
    const auto target = ext.emb.map(sigma(ext.K.generator()));
    std::vector<unsigned> order_d;
    for (unsigned j = 0; j < ext.L.degree(); ++j) {
      const ff::FieldAut a(ext.L, j);
      if (a(ext.emb.image_of_generator()) == target && a.order() == d) order_d.push_back(j);
    }
    const bool coprime = std::gcd(d, ext.degree) == 1;
    try {
      const auto tau = embed::lift_sigma(ext, sigma);
      if (coprime && order_d.size() == 1 && tau.exponent() == order_d[0]) state[i] = 1;
    } catch (const embed::CoprimalityFailure&) {
      if (!coprime && order_d.empty()) state[i] = 2;
    }
  });
  LiftSweepStats s;
  s.triples = triples.size();
  for (std::size_t i = 0; i < triples.size(); ++i) {
    const auto& tr = triples[i];
    const unsigned d = tr.nK / std::gcd(tr.nK, tr.k == 0 ? tr.nK : tr.k);
    s.coprime += std::gcd(d, tr.nL / tr.nK) == 1;
    s.coprime_unique += state[i] == 1;
    s.noncoprime_none += state[i] == 2;
  }
  return s;
}

}  // namespace skewgal::kernels
