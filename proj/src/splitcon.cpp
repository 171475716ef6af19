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

#include "skewgal/splitcon.hpp"

#include <algorithm>
#include <map>

#include "skewgal/error.hpp"

namespace skewgal::splitcon {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out{""};
  for (char c : s) {
    if (c == sep)
      out.emplace_back();
    else
      out.back() += c;
  }
  return out;
}

std::uint64_t parse_u64(const std::string& s, const std::string& what) {
  if (s.empty() || s.size() > 18 || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw ParseError("bad " + what + ": '" + s + "'");
  return std::stoull(s);
}

std::uint64_t next_prime_from(std::uint64_t p) {
  while (!zp::is_prime(p)) ++p;
  return p;
}

// x with x = a mod m, x = b mod n (gcd(m, n) = 1), in [0, m n).
Int crt2(const Int& a, const Int& m, const Int& b, const Int& n) {
  // extended Euclid for m^-1 mod n
  Int r0 = mod_floor(m, n), r1 = n, s0 = 1, s1 = 0;
  while (r1 != 0) {
    const Int q = r0 / r1;
    Int t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  ensure(r0 == 1, "crt: moduli are not coprime");
  const Int k = mod_floor((b - a) * s0, n);
  return mod_floor(a + m * k, m * n);
}

std::vector<unsigned> shape_for(unsigned big, unsigned n) {
  std::vector<unsigned> s{big};
  for (unsigned i = big; i < n; ++i) s.push_back(1);
  return s;
}

void check_s_consistency(const std::vector<LocalSpec>& S) {
  std::set<std::uint64_t> seen;
  for (const auto& s : S) {
    require(seen.insert(s.prime).second, "construct: place " + format_spec(s) + " listed twice");
    if (s.is_real()) {
      require(s.kind == Kind::totally_split, "construct: the real place must be totally split");
    } else if (s.ram_in_L) {
      require(s.kind == Kind::totally_split, "construct: prime " + std::to_string(s.prime) +
                                                 " is ramified in L and must be totally split (ts)");
    } else {
      require(s.kind == Kind::ramified_quadratic, "construct: prime " + std::to_string(s.prime) +
                                                      " is unramified in L and must be ramified quadratic (rq)");
    }
  }
}

std::set<std::uint64_t> l_ram_of(const std::vector<LocalSpec>& S) {
  std::set<std::uint64_t> out;
  for (const auto& s : S)
    if (!s.is_real() && s.ram_in_L) out.insert(s.prime);
  return out;
}

}  // namespace

LocalSpec parse_spec(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() < 2 || parts.size() > 3) throw ParseError("spec must look like <prime>:ts|rq|ur<m>[:ramL]: '" + text + "'");
  LocalSpec s;
  if (parts[0] == "inf") {
    s.prime = 0;
  } else {
    s.prime = parse_u64(parts[0], "prime in spec");
    require(zp::is_prime(s.prime), "spec: " + parts[0] + " is not prime");
  }
  const std::string& k = parts[1];
  if (k == "ts") {
    s.kind = Kind::totally_split;
  } else if (k == "rq") {
    s.kind = Kind::ramified_quadratic;
  } else if (k.size() > 2 && k.compare(0, 2, "ur") == 0) {
    s.kind = Kind::unramified_degree;
    const auto m = parse_u64(k.substr(2), "residue degree");
    if (m < 1 || m > 64) throw ParseError("residue degree out of range in '" + text + "'");
    s.m = static_cast<unsigned>(m);
  } else {
    throw ParseError("unknown local kind '" + k + "' in '" + text + "'");
  }
  if (parts.size() == 3) {
    if (parts[2] != "ramL") throw ParseError("unknown spec flag '" + parts[2] + "'");
    s.ram_in_L = true;
  }
  if (s.is_real()) {
    if (s.kind != Kind::totally_split || s.ram_in_L) throw ParseError("the real place only accepts 'inf:ts'");
  }
  return s;
}

std::string kind_tag(const LocalSpec& spec) {
  switch (spec.kind) {
    case Kind::totally_split:
      return "ts";
    case Kind::ramified_quadratic:
      return "rq";
    case Kind::unramified_degree:
      return "ur" + std::to_string(spec.m);
    case Kind::ramified_odd:
      return "ro" + std::to_string(spec.q);
  }
  return "?";
}

std::string format_spec(const LocalSpec& spec) {
  std::string s = (spec.is_real() ? std::string("inf") : std::to_string(spec.prime)) + ":" + kind_tag(spec);
  if (spec.ram_in_L) s += ":ramL";
  return s;
}

std::vector<LocalSpec> plan_aux_primes(const std::vector<LocalSpec>& S, const std::set<std::uint64_t>& L_ram,
                                       unsigned n) {
  require(n >= 2, "plan_aux_primes: n must be at least 2");
  std::set<std::uint64_t> used;
  for (const auto& s : S)
    if (!s.is_real()) used.insert(s.prime);
  auto pick = [&](std::uint64_t from, auto&& extra_ok) {
    for (std::uint64_t p = next_prime_from(std::max<std::uint64_t>(from, 2));; p = next_prime_from(p + 1))
      if (!used.count(p) && extra_ok(p)) {
        used.insert(p);
        return p;
      }
  };
  std::vector<LocalSpec> aux(4);
  aux[0].prime = pick(2, [&](std::uint64_t p) { return !L_ram.count(p); });
  aux[0].kind = Kind::ramified_quadratic;
  aux[1].prime = pick(2, [](std::uint64_t) { return true; });
  aux[1].kind = Kind::unramified_degree;
  aux[1].m = n;
  aux[2].prime = pick(2, [](std::uint64_t) { return true; });
  aux[2].kind = Kind::unramified_degree;
  aux[2].m = n - 1;
  aux[3].prime = pick(n > 2 ? n - 2 : 2, [](std::uint64_t) { return true; });
  aux[3].kind = Kind::unramified_degree;
  aux[3].m = 2;
  return aux;
}

LocalPoly build_local_poly(const LocalSpec& spec, unsigned n, unsigned precision) {
  require(!spec.is_real(), "build_local_poly: the real place has no p-adic local polynomial");
  require(precision >= 1, "build_local_poly: precision must be positive");
  require(n >= 1, "build_local_poly: degree must be positive");
  const std::uint64_t p = spec.prime;
  LocalPoly lp;
  lp.prime = p;
  lp.precision = precision;
  lp.modulus = ipow(Int(p), precision);
  ZPoly f;
  switch (spec.kind) {
    case Kind::totally_split: {
      std::vector<Int> roots;
      for (unsigned j = 0; j < n; ++j) roots.push_back(j);
      f = zx::from_roots(roots);
      lp.factor_shape.assign(n, 1);
      break;
    }
    case Kind::ramified_quadratic: {
      require(n >= 2, "build_local_poly: a ramified quadratic factor needs n >= 2");
      std::vector<Int> roots;
      for (std::uint64_t r = 1; roots.size() < n - 2; ++r)
        if (r % p) roots.push_back(r);
      f = zx::mul(ZPoly{-Int(p), 0, 1}, zx::from_roots(roots));
      lp.factor_shape = shape_for(2, n);
      break;
    }
    case Kind::unramified_degree: {
      const unsigned m = spec.m;
      require(m >= 1 && m <= n, "build_local_poly: residue degree " + std::to_string(m) + " exceeds n = " +
                                     std::to_string(n));
      const zp::Poly P = zp::least_irreducible(m, p);
      std::vector<Int> roots;
      for (std::uint64_t r = 0; r < p && roots.size() < n - m; ++r)
        if (zp::eval(P, r, p) != 0) roots.push_back(r);
      require(roots.size() == n - m, "build_local_poly: need " + std::to_string(n - m) +
                                         " distinct linear factors mod " + std::to_string(p));
      f = zx::mul(zx::lift(P), zx::from_roots(roots));
      lp.factor_shape = shape_for(m, n);
      break;
    }
    case Kind::ramified_odd:
      throw DomainError("build_local_poly: ramified odd-degree local extensions are not constructed");
  }
  lp.coeffs = zx::reduce_mod(f, lp.modulus);
  ensure(zx::degree(lp.coeffs) == static_cast<int>(n) && lp.coeffs.back() == 1, "build_local_poly: not monic");
  return lp;
}

ZPoly real_target(unsigned n) {
  std::vector<Int> roots;
  for (unsigned j = 1; j <= n; ++j) roots.push_back(j);
  return zx::from_roots(roots);
}

ZPoly weak_approximation(const std::vector<LocalPoly>& locals, const std::optional<ZPoly>& target, unsigned n) {
  require(n >= 1, "weak_approximation: degree must be positive");
  std::set<std::uint64_t> primes;
  Int M = 1;
  std::vector<Int> residue(n + 1, 0);
  for (const auto& lp : locals) {
    require(primes.insert(lp.prime).second, "weak_approximation: primes must be distinct");
    require(zx::degree(lp.coeffs) == static_cast<int>(n) && lp.coeffs.back() == 1,
            "weak_approximation: local polynomial is not monic of degree n");
    for (unsigned i = 0; i <= n; ++i) residue[i] = crt2(residue[i], M, mod_floor(lp.coeffs[i], lp.modulus), lp.modulus);
    M *= lp.modulus;
  }
  ZPoly Q(n + 1);
  Q[n] = 1;
  if (!target) {
    for (unsigned i = 0; i < n; ++i) {
      Int c = residue[i];
      if (2 * c > M) c -= M;
      Q[i] = c;
    }
    return Q;
  }
  require(zx::degree(*target) == static_cast<int>(n), "weak_approximation: real target has the wrong degree");
  for (Int g = 1; g < (Int(1) << 64); g *= 2) {
    const Int s = M * g;
    ZPoly scaled(n + 1);
    // roots of the target multiplied by s
    Int sp = 1;
    for (int i = static_cast<int>(n); i >= 0; --i) {
      scaled[i] = (*target)[i] * sp;
      sp *= s;
    }
    for (unsigned i = 0; i < n; ++i) {
      const Int t = scaled[i];
      const Int d = mod_floor(t - residue[i], M);
      const Int lo = t - d;
      if (2 * d == M)
        Q[i] = lo >= 0 ? lo : lo + M;
      else
        Q[i] = 2 * d < M ? lo : lo + M;
    }
    if (zx::count_real_roots(Q) == n) return Q;
  }
  throw InternalError("weak_approximation: real-root spreading did not converge");
}

SnCertificate certify_sn(const ZPoly& Q, const std::vector<LocalSpec>& aux) {
  const int n = zx::degree(Q);
  require(n >= 1 && Q.back() == 1, "certify_sn: Q must be monic of positive degree");
  SnCertificate cert;
  if (n == 1) {
    cert.n_cycle = cert.n_minus_1_cycle = cert.transposition = cert.conclusion = true;
    cert.reason = "degree 1";
    return cert;
  }
  const unsigned un = static_cast<unsigned>(n);
  for (const auto& spec : aux) {
    if (spec.kind != Kind::unramified_degree) continue;
    PatternRecord rec;
    rec.prime = spec.prime;
    const zp::Poly f = zx::reduce(Q, spec.prime);
    rec.squarefree = zp::is_squarefree(f, spec.prime);
    if (rec.squarefree) {
      rec.pattern = zp::factor_degrees(f, spec.prime);
      if (rec.pattern == shape_for(un, un)) cert.n_cycle = true;
      if (rec.pattern == shape_for(un - 1, un)) cert.n_minus_1_cycle = true;
      if (rec.pattern == shape_for(2, un)) cert.transposition = true;
    } else if (cert.reason.empty()) {
      cert.reason = "Q mod " + std::to_string(spec.prime) + " is not squarefree";
    }
    cert.patterns.push_back(std::move(rec));
  }
  cert.conclusion = cert.n_cycle && cert.n_minus_1_cycle && cert.transposition;
  if (!cert.conclusion && cert.reason.empty()) cert.reason = "missing cycle type";
  if (cert.conclusion) cert.reason = "n-cycle, (n-1)-cycle and transposition present";
  return cert;
}

LocalCertificate certify_local_behavior(const ZPoly& Q, const LocalSpec& spec, unsigned precision) {
  const int n = zx::degree(Q);
  require(n >= 1 && Q.back() == 1, "certify_local_behavior: Q must be monic of positive degree");
  LocalCertificate c;
  c.spec = spec;
  if (zx::discriminant(Q) == 0) {
    c.reason = "Q is not squarefree";
    return c;
  }
  const std::uint64_t p = spec.prime;
  try {
    switch (spec.kind) {
      case Kind::totally_split: {
        c.root_count = spec.is_real() ? zx::count_real_roots(Q) : zx::count_padic_roots(Q, p).roots;
        c.passed = *c.root_count == static_cast<unsigned>(n);
        c.reason = std::to_string(*c.root_count) + (spec.is_real() ? " real" : " p-adic") + " roots of " +
                   std::to_string(n);
        break;
      }
      case Kind::ramified_quadratic: {
        require(!spec.is_real(), "certify: the real place cannot be ramified quadratic");
        if (n < 2) {
          c.reason = "degree below 2";
          break;
        }
        if (precision < 2) {
          c.reason = "precision below 2 cannot certify v(b) = 1";
          break;
        }
        const zp::Poly f = zx::reduce(Q, p);
        if (f[0] != 0 || f[1] != 0 || zp::degree(f) < 2 || f[2] == 0) {
          c.reason = "Q mod p is not X^2 times a unit polynomial";
          break;
        }
        const zp::Poly B(f.begin() + 2, f.end());
        const auto [A, Bl] = zx::hensel_lift(Q, zp::Poly{0, 0, 1}, B, p, precision);
        c.residual_b = A.size() > 0 ? A[0] : Int(0);
        c.residual_a = A.size() > 1 ? A[1] : Int(0);
        c.v_b = *c.residual_b == 0 ? static_cast<int>(precision) : valuation(*c.residual_b, Int(p));
        c.v_a = *c.residual_a == 0 ? static_cast<int>(precision) : valuation(*c.residual_a, Int(p));
        std::vector<std::uint64_t> units;
        for (std::uint64_t r = 1; r < p; ++r) units.push_back(r);
        c.root_count = zx::count_padic_roots_in(Q, p, units).roots;
        const bool eisenstein = *c.v_b == 1 && *c.v_a >= 1;
        c.passed = eisenstein && *c.root_count == static_cast<unsigned>(n - 2);
        c.reason = eisenstein ? std::to_string(*c.root_count) + " unit roots, Eisenstein residual quadratic"
                              : "residual quadratic is not Eisenstein";
        break;
      }
      case Kind::unramified_degree: {
        require(!spec.is_real(), "certify: the real place cannot be unramified of degree m");
        const zp::Poly f = zx::reduce(Q, p);
        if (!zp::is_squarefree(f, p)) {
          c.reason = "Q mod p is not squarefree";
          break;
        }
        c.pattern = zp::factor_degrees(f, p);
        c.passed = spec.m <= static_cast<unsigned>(n) && *c.pattern == shape_for(spec.m, static_cast<unsigned>(n));
        c.reason = c.passed ? "declared factorization pattern" : "factorization pattern differs";
        break;
      }
      case Kind::ramified_odd:
        c.reason = "ramified odd-degree behavior is not certified";
        break;
    }
  } catch (const PrecisionExhausted& e) {
    c.passed = false;
    c.reason = e.what();
  }
  return c;
}

DisjointnessEvidence disjointness(const ZPoly& Q, std::uint64_t prime, const std::set<std::uint64_t>& L_ram) {
  DisjointnessEvidence d;
  d.prime = prime;
  const Int disc = zx::discriminant(Q);
  require(disc != 0, "disjointness: Q is not squarefree");
  d.disc_valuation = valuation(disc, Int(prime));
  d.odd = d.disc_valuation % 2 == 1;
  d.prime_unramified_in_L = !L_ram.count(prime);
  return d;
}

ConstructionReport construct_lprime(const std::vector<LocalSpec>& S, std::uint64_t p_kernel, unsigned n_min,
                                    std::uint64_t seed) {
  require(zp::is_prime(p_kernel), "construct: p_kernel must be prime");
  require(p_kernel != 2,
          "construct: p_kernel = 2 needs a ramified local extension of degree 3p' which is not constructed");
  check_s_consistency(S);
  ConstructionReport rep;
  rep.specs = S;
  rep.L_ram = l_ram_of(S);
  rep.p_kernel = p_kernel;
  rep.seed = seed;
  rep.n = std::max(n_min, 2u);
  rep.aux = plan_aux_primes(S, rep.L_ram, rep.n);
  bool has_real = false;
  for (const auto& s : S) has_real = has_real || s.is_real();
  std::vector<LocalSpec> finite;
  for (const auto& s : S)
    if (!s.is_real()) finite.push_back(s);
  finite.insert(finite.end(), rep.aux.begin(), rep.aux.end());
  for (unsigned m = 2; m <= 64; m *= 2) {
    std::vector<LocalPoly> locals;
    for (const auto& s : finite) locals.push_back(build_local_poly(s, rep.n, m));
    rep.precision = m;
    rep.Q = weak_approximation(locals, has_real ? std::optional<ZPoly>(real_target(rep.n)) : std::nullopt, rep.n);
    rep.sn = certify_sn(rep.Q, rep.aux);
    rep.locals.clear();
    bool ok = rep.sn.conclusion;
    for (const auto& s : S) {
      rep.locals.push_back(certify_local_behavior(rep.Q, s, m));
      ok = ok && rep.locals.back().passed;
    }
    for (const auto& s : rep.aux) {
      rep.locals.push_back(certify_local_behavior(rep.Q, s, m));
      ok = ok && rep.locals.back().passed;
    }
    rep.disjoint = disjointness(rep.Q, rep.aux[0].prime, rep.L_ram);
    ok = ok && rep.disjoint.passed();
    if (ok) {
      rep.certified = true;
      return rep;
    }
  }
  return rep;
}

namespace {

bool same_local(const LocalCertificate& a, const LocalCertificate& b) {
  return a.spec == b.spec && a.passed == b.passed && a.root_count == b.root_count && a.pattern == b.pattern &&
         a.residual_a == b.residual_a && a.residual_b == b.residual_b && a.v_a == b.v_a && a.v_b == b.v_b;
}

}  // namespace

VerifyResult verify_report(const ConstructionReport& r) {
  VerifyResult out;
  auto fail = [&](const std::string& s) { out.failures.push_back(s); };
  const int n = zx::degree(r.Q);
  if (n < 1 || r.Q.back() != 1) {
    fail("Q is not monic of positive degree");
    return out;
  }
  if (static_cast<unsigned>(n) != r.n) fail("recorded n differs from deg Q");
  try {
    check_s_consistency(r.specs);
  } catch (const DomainError& e) {
    fail(e.what());
  }
  if (l_ram_of(r.specs) != r.L_ram) fail("L_ram does not match the ramL tags");
  if (r.p_kernel == 2 || !zp::is_prime(r.p_kernel)) fail("p_kernel must be an odd prime");
  if (zx::discriminant(r.Q) == 0) {
    fail("Q is not squarefree");
    return out;
  }
  // auxiliary primes
  if (r.aux.size() != 4) {
    fail("expected four auxiliary primes");
    return out;
  }
  std::set<std::uint64_t> seen;
  for (const auto& s : r.specs)
    if (!s.is_real()) seen.insert(s.prime);
  for (const auto& a : r.aux) {
    if (!zp::is_prime(a.prime)) fail("auxiliary prime " + std::to_string(a.prime) + " is not prime");
    if (!seen.insert(a.prime).second) fail("auxiliary prime " + std::to_string(a.prime) + " is reused");
  }
  const unsigned un = static_cast<unsigned>(n);
  if (r.aux[0].kind != Kind::ramified_quadratic) fail("first auxiliary prime must be rq");
  if (r.L_ram.count(r.aux[0].prime)) fail("first auxiliary prime is ramified in L");
  const unsigned want_m[3] = {un, un - 1, 2};
  for (int i = 0; i < 3; ++i)
    if (r.aux[i + 1].kind != Kind::unramified_degree || r.aux[i + 1].m != want_m[i])
      fail("auxiliary prime " + std::to_string(i + 2) + " has the wrong kind");
  // S_n certificate
  const SnCertificate sn = certify_sn(r.Q, r.aux);
  if (!sn.conclusion) fail("S_n certificate fails: " + sn.reason);
  if (sn.patterns.size() != r.sn.patterns.size()) {
    fail("recorded cycle types differ");
  } else {
    for (std::size_t i = 0; i < sn.patterns.size(); ++i)
      if (sn.patterns[i].prime != r.sn.patterns[i].prime || sn.patterns[i].pattern != r.sn.patterns[i].pattern ||
          sn.patterns[i].squarefree != r.sn.patterns[i].squarefree)
        fail("recorded cycle type at " + std::to_string(sn.patterns[i].prime) + " differs");
  }
  if (sn.conclusion != r.sn.conclusion) fail("recorded S_n conclusion differs");
  // local behavior
  std::vector<LocalSpec> all = r.specs;
  all.insert(all.end(), r.aux.begin(), r.aux.end());
  if (r.locals.size() != all.size()) fail("recorded local certificates are incomplete");
  for (std::size_t i = 0; i < all.size(); ++i) {
    const LocalCertificate c = certify_local_behavior(r.Q, all[i], r.precision);
    if (!c.passed) fail("local behavior " + format_spec(all[i]) + " fails: " + c.reason);
    if (i < r.locals.size() && !same_local(c, r.locals[i])) fail("recorded certificate for " + format_spec(all[i]) + " differs");
  }
  // disjointness
  const DisjointnessEvidence d = disjointness(r.Q, r.aux[0].prime, r.L_ram);
  if (!d.passed()) fail("discriminant valuation at " + std::to_string(d.prime) + " is not odd");
  if (d.disc_valuation != r.disjoint.disc_valuation || d.prime != r.disjoint.prime)
    fail("recorded disjointness evidence differs");
  if (!r.certified) fail("report is not marked certified");
  out.ok = out.failures.empty();
  return out;
}

bool is_prime_power(std::uint64_t q) {
  if (q < 2) return false;
  std::uint64_t p = 2;
  while (p * p <= q && q % p) ++p;
  if (q % p) return true;  // q is prime
  while (q % p == 0) q /= p;
  return q == 1;
}

std::uint64_t odd_prime_dividing_cube_minus_one(std::uint64_t q) {
  require(is_prime_power(q), "odd_prime_dividing_cube_minus_one: q must be a prime power");
  require(q < (1ull << 21), "odd_prime_dividing_cube_minus_one: q too large");
  std::uint64_t x = q * q * q - 1;
  while (x % 2 == 0) x /= 2;
  ensure(x > 1, "odd_prime_dividing_cube_minus_one: q^3 - 1 is a power of two");
  for (std::uint64_t d = 3; d * d <= x; d += 2)
    if (x % d == 0) return d;
  return x;
}

}  // namespace skewgal::splitcon
