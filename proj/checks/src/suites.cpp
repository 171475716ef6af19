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

#include "skewgal/checks/suites.hpp"

#include <chrono>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "skewgal/checks/oracles.hpp"
#include "skewgal/embed.hpp"
#include "skewgal/error.hpp"
#include "skewgal/group_catalog.hpp"
#include "skewgal/groups.hpp"
#include "skewgal/int_poly.hpp"
#include "skewgal/orepoly.hpp"
#include "skewgal/quat.hpp"
#include "skewgal/splitcon.hpp"
#include "skewgal/zp_poly.hpp"

namespace skewgal::checks {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct FieldCase {
  std::uint64_t p;
  unsigned n;
};
const std::vector<FieldCase> kOreFields{{2, 2}, {2, 4}, {3, 3}, {5, 2}};

// --- 1: ring laws ------------------------------------------------------------------

CriterionResult ring_laws(const SuiteOptions& o) {
  CriterionResult r{1, "ore-ring-laws", true, "", 0};
  std::ostringstream detail;
  double kernel_seconds = 0;
  std::uint64_t cases = 0, failures = 0, oracle_mismatch = 0, twist_failures = 0, commutativity_failures = 0;
  for (const auto& fc : kOreFields) {
    const auto L = ff::FqField::make(fc.p, fc.n);
    const auto elems = L.elements();
    for (unsigned k = 0; k < fc.n; ++k) {
      const auto t0 = Clock::now();
      const auto s = kernels::ore_ring_laws(L, k, 10000, o.seed + 101 * fc.p + 7 * fc.n + k, 4, o.exec);
      kernel_seconds += since(t0);
      cases += s.cases;
      if (!s.clean() || s.cases < 10000) ++failures;

      const ff::FieldAut tau(L, k);
      const auto T = ore::OrePoly::monomial(tau, L.one(), 1);
      bool noncommuting = false;
      for (const auto& a : elems) {
        const auto A = ore::OrePoly::constant(tau, a);
        if (T * A != ore::OrePoly::monomial(tau, tau(a), 1)) ++twist_failures;
        noncommuting = noncommuting || (T * A != A * T);
      }
      if (noncommuting != (k != 0)) ++commutativity_failures;

      std::mt19937_64 rng(kernels::case_seed(o.seed, 1000 * fc.p + 10 * fc.n + k));
      for (int i = 0; i < 300; ++i) {
        std::vector<ff::FqElem> a, b;
        const unsigned da = rng() % 5, db = rng() % 5;
        for (unsigned j = 0; j <= da; ++j) a.push_back(L.from_index(rng() % L.size()));
        for (unsigned j = 0; j <= db; ++j) b.push_back(L.from_index(rng() % L.size()));
        const auto prod = ore::OrePoly(tau, a) * ore::OrePoly(tau, b);
        if (prod.coeffs() != oracle::ore_convolution(a, b, k)) ++oracle_mismatch;
      }
    }
  }
  r.passed = failures == 0 && oracle_mismatch == 0 && twist_failures == 0 && commutativity_failures == 0 &&
             kernel_seconds < 10.0;
  detail << cases << " triples over 11 (field, twist) pairs" << (kernel_seconds < 10.0 ? "" : ", over the 10 s budget")
         << "; law failures " << failures << ", convolution mismatches " << oracle_mismatch
         << ", twist-law failures " << twist_failures << ", commutativity mismatches " << commutativity_failures;
  r.detail = detail.str();
  return r;
}

// --- 2: division and witnesses -----------------------------------------------------------

CriterionResult division(const SuiteOptions& o) {
  CriterionResult r{2, "ore-division-witness", true, "", 0};
  std::uint64_t div_cases = 0, div_bad = 0, wit_cases = 0, wit_bad = 0;
  for (const auto& fc : kOreFields) {
    const auto L = ff::FqField::make(fc.p, fc.n);
    const std::uint64_t per_div = (10000 + fc.n - 1) / fc.n;
    const std::uint64_t per_wit = (1000 + fc.n - 1) / fc.n;
    for (unsigned k = 0; k < fc.n; ++k) {
      const auto d = kernels::ore_division_sweep(L, k, per_div, o.seed + 31 * fc.p + fc.n + k, 6, o.exec);
      div_cases += d.cases;
      div_bad += d.reconstruction_failures + d.degree_bound_failures;
      const auto w = kernels::ore_witness_sweep(L, k, per_wit, o.seed + 37 * fc.p + fc.n + k, 4, o.exec);
      wit_cases += w.cases;
      wit_bad += w.failures;
    }
  }
  r.passed = div_bad == 0 && wit_bad == 0 && div_cases >= 40000 && wit_cases >= 4000;
  std::ostringstream os;
  os << div_cases << " divisions (" << div_bad << " failures), " << wit_cases << " witnesses (" << wit_bad
     << " failures)";
  r.detail = os.str();
  return r;
}

// --- 3, 4: exhaustive Frobenius sweeps ------------------------------------------------------

struct SweepRange {
  std::uint64_t p;
  std::uint64_t max_size;
};
const std::vector<SweepRange> kSweep{{2, 4096}, {3, 6561}, {5, 15625}, {7, 2401}};

// Direct-product test inside Z/N on explicit element sets.
bool oracle_direct_product(unsigned N, unsigned m, unsigned tau) {
  std::vector<char> in_tau(N, 0), in_gal(N, 0), in_both(N, 0);
  for (unsigned j = 0; j < N; ++j) in_tau[(static_cast<std::uint64_t>(j) * tau) % N] = 1;
  for (unsigned j = 0; j < N; ++j) in_gal[(static_cast<std::uint64_t>(j) * m) % N] = 1;
  unsigned a = 0, b = 0, inter = 0;
  for (unsigned x = 0; x < N; ++x) {
    a += in_tau[x];
    b += in_gal[x];
    inter += in_tau[x] && in_gal[x];
  }
  for (unsigned x = 0; x < N; ++x)
    for (unsigned y = 0; y < N; ++y)
      if (in_tau[x] && in_gal[y]) in_both[(x + y) % N] = 1;
  unsigned gen = 0;
  for (unsigned x = 0; x < N; ++x) gen += in_both[x];
  return inter == 1 && gen == a * b;
}

CriterionResult extension_criteria_suite(const SuiteOptions& o) {
  CriterionResult r{3, "extension-criteria-agree", true, "", 0};
  const auto t0 = Clock::now();
  std::uint64_t instances = 0, disagreements = 0, oracle_mismatch = 0, both_true = 0;
  for (const auto& sr : kSweep) {
    const auto inst = kernels::aut_instances(sr.p, sr.max_size);
    const auto s = kernels::criteria_sweep(inst, o.exec);
    instances += s.instances;
    disagreements += s.disagreements;
    both_true += s.both_true;
    std::uint64_t oracle_true = 0;
    for (const auto& in : inst) {
      const unsigned N = in.n_L, e = in.n_L / in.n_K;
      const unsigned d = in.n_K / std::gcd(in.n_K, in.sigma);
      const unsigned ord_tau = N / std::gcd(N, in.tau);
      const bool c2 = ord_tau == d && std::gcd(d, e) == 1;
      const bool c3 = oracle_direct_product(N, in.n_K, in.tau);
      if (c2 != c3) ++oracle_mismatch;
      oracle_true += c2;
    }
    if (oracle_true != s.both_true || s.instances != inst.size()) ++oracle_mismatch;
  }
  const double secs = since(t0);
  r.passed = disagreements == 0 && oracle_mismatch == 0 && instances > 0 && secs < 60.0;
  std::ostringstream os;
  os << instances << " (K, L, sigma, tau) instances, " << both_true << " with both conditions true, "
     << disagreements << " disagreements, " << oracle_mismatch << " oracle mismatches"
     << (secs < 60.0 ? "" : ", over the 60 s budget");
  r.detail = os.str();
  return r;
}

CriterionResult lift_uniqueness(const SuiteOptions& o) {
  CriterionResult r{4, "tau-unique-or-none", true, "", 0};
  std::uint64_t triples = 0, coprime = 0, bad = 0, oracle_mismatch = 0;
  for (const auto& sr : kSweep) {
    const auto s = kernels::lift_sweep(sr.p, sr.max_size, o.exec);
    triples += s.triples;
    coprime += s.coprime;
    if (!s.clean()) bad += s.triples - s.coprime_unique - s.noncoprime_none;
    // Count order-d extensions by exponent arithmetic alone.
    std::uint64_t oracle_coprime = 0, oracle_triples = 0;
    for (std::uint64_t size = sr.p, nL = 1; size <= sr.max_size; size *= sr.p, ++nL)
      for (unsigned nK = 1; nK <= nL; ++nK) {
        if (nL % nK) continue;
        for (unsigned k = 0; k < nK; ++k) {
          ++oracle_triples;
          const unsigned d = nK / std::gcd(nK, k);
          unsigned count = 0;
          for (unsigned j = k; j < nL; j += nK) count += nL / std::gcd(static_cast<unsigned>(nL), j) == d;
          const bool cp = std::gcd(d, static_cast<unsigned>(nL / nK)) == 1;
          oracle_coprime += cp;
          if (cp ? count != 1 : count != 0) ++oracle_mismatch;
        }
      }
    if (oracle_coprime != s.coprime || oracle_triples != s.triples) ++oracle_mismatch;
  }
  r.passed = bad == 0 && oracle_mismatch == 0 && triples > 0;
  std::ostringstream os;
  os << triples << " (K, L, sigma) triples, " << coprime << " coprime with a unique order-d extension, "
     << triples - coprime << " without one; " << bad << " failures, " << oracle_mismatch << " oracle mismatches";
  r.detail = os.str();
  return r;
}

// --- 5: decision on split problems ------------------------------------------------------------

CriterionResult decision(const SuiteOptions&) {
  CriterionResult r{5, "decide-split-problems", true, "", 0};
  struct Base {
    std::uint64_t p;
    unsigned n;
  };
  const std::vector<Base> bases{{2, 1}, {2, 2}, {3, 2}};
  std::map<std::pair<std::uint64_t, unsigned>, ff::FqField> fields;
  auto field = [&](std::uint64_t p, unsigned n) -> const ff::FqField& {
    auto it = fields.find({p, n});
    if (it == fields.end()) it = fields.emplace(std::make_pair(p, n), ff::FqField::make(p, n)).first;
    return it->second;
  };
  std::uint64_t decided = 0, solvable = 0, unknown = 0, status_mismatch = 0, witness_mismatch = 0, tau_bad = 0,
                problems = 0;
  for (const auto& entry : grp::small_group_catalog()) {
    const auto& G = entry.group;
    if (G->order() > 16) continue;
    for (unsigned e = 1; e <= G->order(); ++e) {
      if (G->order() % e) continue;
      const auto Ce = grp::cyclic_group(e);
      for (const auto& images : grp::enumerate_homs(*G, *Ce)) {
        const grp::GroupHom h(G, Ce, images);
        if (!h.is_surjective()) continue;
        for (const auto& b : bases) {
          const auto ext = embed::make_extension(field(b.p, b.n), field(b.p, b.n * e));
          const auto ep = embed::make_problem(G, ext, images);
          if (!ep.kernel_nilpotent || !embed::find_section(ep)) continue;
          ++problems;
          for (unsigned k = 0; k < b.n; ++k) {
            const ff::FieldAut sigma(ext.K, k);
            const auto v = embed::decide_sigma_solvability(ep, sigma);
            ++decided;
            const unsigned d = b.n / std::gcd(b.n, k);
            const bool coprime = std::gcd(d, e) == 1;
            bool oracle_a = false;
            for (grp::Elem g = 0; g < G->order(); ++g)
              if (images[g] == (e > 1 ? 1u : 0u) && std::gcd(d, oracle::element_order(*G, g)) == 1) oracle_a = true;
            if (v.status == embed::Status::unknown) ++unknown;
            if ((v.status == embed::Status::solvable) != coprime) ++status_mismatch;
            if (oracle_a != coprime || v.coprime_weak_solution != oracle_a || v.coprime_degree != coprime) ++witness_mismatch;
            if (v.status == embed::Status::solvable) {
              ++solvable;
              if (!v.tau || v.tau->order() != d || ff::restrict_aut(*v.tau, ext.emb) != sigma || !v.tau_unique)
                ++tau_bad;
            }
          }
        }
      }
    }
  }
  r.passed = decided > 0 && unknown == 0 && status_mismatch == 0 && witness_mismatch == 0 && tau_bad == 0;
  std::ostringstream os;
  os << problems << " split problems, " << decided << " verdicts (" << solvable << " SOLVABLE), " << unknown
     << " UNKNOWN, " << status_mismatch << " status mismatches, " << witness_mismatch << " witness mismatches, "
     << tau_bad << " bad tau";
  r.detail = os.str();
  return r;
}

// --- 6: Fitting subgroup and tower -------------------------------------------------------------

CriterionResult fitting(const SuiteOptions&) {
  CriterionResult r{6, "fitting-and-tower", true, "", 0};
  std::uint64_t groups = 0, fitting_bad = 0, steps = 0, step_bad = 0, tower_bad = 0;
  for (const auto& entry : grp::small_group_catalog()) {
    const auto& G = entry.group;
    ++groups;
    if (grp::fitting_subgroup(*G) != oracle::max_nilpotent_normal(*G)) ++fitting_bad;
    if (G->order() == 1) continue;
    const auto tower = grp::solvable_tower(G);
    if (tower.empty() || static_cast<double>(tower.size()) > std::log2(static_cast<double>(G->order())) + 1e-9)
      ++tower_bad;
    grp::GroupPtr current = G;
    for (const auto& st : tower) {
      ++steps;
      const auto& H = *st.G;
      bool ok = H.order() == current->order();
      ok = ok && st.N == oracle::max_nilpotent_normal(H);
      ok = ok && oracle::nilpotent_by_upper_central(H, st.N);
      ok = ok && oracle::product_covers(H, st.N, st.Gp);
      ok = ok && st.phi.is_surjective();
      ok = ok && (st.Gp.size() < H.order());
      // phi(n, g') = n g' on every pair
      const std::size_t nN = st.N_group.elements.size();
      for (std::size_t i = 0; ok && i < nN; ++i)
        for (std::size_t j = 0; ok && j < st.Gp_group.elements.size(); ++j)
          ok = st.phi(static_cast<grp::Elem>(i + nN * j)) == H.mul(st.N_group.elements[i], st.Gp_group.elements[j]);
      if (!ok) ++step_bad;
      current = st.Gp_group.group;
    }
    if (!tower.empty() && tower.back().Gp.size() != 1) ++tower_bad;
  }
  r.passed = fitting_bad == 0 && step_bad == 0 && tower_bad == 0 && groups >= 74;
  std::ostringstream os;
  os << groups << " catalog groups, " << steps << " reduction steps; Fitting mismatches " << fitting_bad
     << ", bad steps " << step_bad << ", bad towers " << tower_bad;
  r.detail = os.str();
  return r;
}

// --- 7: constructor -------------------------------------------------------------------------------

bool has_pattern(const splitcon::SnCertificate& c, const std::vector<unsigned>& want) {
  for (const auto& p : c.patterns)
    if (p.squarefree && p.pattern == want) return true;
  return false;
}

CriterionResult constructor(const SuiteOptions& o) {
  CriterionResult r{7, "construct-lprime", true, "", 0};
  std::ostringstream os;
  const std::vector<splitcon::LocalSpec> S{splitcon::parse_spec("3:rq"), splitcon::parse_spec("inf:ts")};
  bool all = true;
  for (unsigned n : {3u, 4u, 5u}) {
    const auto t0 = Clock::now();
    const auto rep = splitcon::construct_lprime(S, 5, n, o.seed);
    const double secs = since(t0);
    const auto ver = splitcon::verify_report(rep);
    std::vector<unsigned> n_cycle{n}, n1{n - 1, 1}, transp(n - 1, 1);
    transp[0] = 2;
    bool ok = rep.certified && ver.ok && secs < 60.0 && rep.n == n;
    ok = ok && has_pattern(rep.sn, n_cycle) && has_pattern(rep.sn, n1) && has_pattern(rep.sn, transp);
    bool rq = false, real = false;
    for (const auto& c : rep.locals) {
      if (c.spec.prime == 3 && c.spec.kind == splitcon::Kind::ramified_quadratic)
        rq = c.passed && c.v_b == 1 && c.v_a && *c.v_a >= 1;
      if (c.spec.is_real()) real = c.passed && c.root_count == n;
    }
    const bool sturm = oracle::real_root_count(rep.Q) == n;
    ok = ok && rq && real && sturm && rep.disjoint.passed();
    std::string group = "-";
    if (n <= 4) {
      group = oracle::galois_group_small(rep.Q);
      ok = ok && group == "S" + std::to_string(n);
      // Discriminant by the closed cubic / resolvent formula, valuation at the ramified aux prime.
      const auto& Q = rep.Q;
      Int disc;
      if (n == 3) {
        const Int &b = Q[2], &c = Q[1], &d = Q[0];
        disc = b * b * c * c - 4 * c * c * c - 4 * b * b * b * d - 27 * d * d + 18 * b * c * d;
      } else {
        const Int &a = Q[3], &b = Q[2], &c = Q[1], &d = Q[0];
        const Int rd = -(a * a * d - 4 * b * d + c * c), rc = a * c - 4 * d, rb = -b;
        disc = rb * rb * rc * rc - 4 * rc * rc * rc - 4 * rb * rb * rb * rd - 27 * rd * rd + 18 * rb * rc * rd;
      }
      ok = ok && valuation(disc, Int(rep.disjoint.prime)) == rep.disjoint.disc_valuation;
    }
    all = all && ok;
    os << "n=" << n << (ok ? " ok" : " FAILED") << " (" << (secs < 60.0 ? "" : "over 60 s, ") << "precision "
       << rep.precision
       << ", group " << group << ", v_" << rep.disjoint.prime << "(disc)=" << rep.disjoint.disc_valuation << ")";
    for (const auto& f : ver.failures) os << " [" << f << "]";
    if (n < 5) os << "; ";
  }
  r.passed = all;
  r.detail = os.str();
  return r;
}

// --- 8: odd prime dividing q^3 - 1 ---------------------------------------------------------

CriterionResult cube_minus_one_suite(const SuiteOptions&) {
  CriterionResult r{8, "odd-prime-cube-minus-one", true, "", 0};
  std::uint64_t checked = 0, bad = 0;
  for (std::uint64_t q = 2; q <= 10000; ++q) {
    if (!splitcon::is_prime_power(q)) continue;
    ++checked;
    const std::uint64_t pp = splitcon::odd_prime_dividing_cube_minus_one(q);
    const std::uint64_t q3 = q * q * q - 1;
    bool ok = pp % 2 == 1 && oracle::is_prime(pp) && q3 % pp == 0;
    for (std::uint64_t s = 3; ok && s < pp; s += 2)
      if (oracle::is_prime(s) && q3 % s == 0) ok = false;
    if (!ok) ++bad;
  }
  // prime powers are exactly the q with a single prime factor
  std::uint64_t expected = 0;
  for (std::uint64_t q = 2; q <= 10000; ++q) {
    std::uint64_t x = q, f = 2;
    while (x % f) ++f;
    while (x % f == 0) x /= f;
    expected += x == 1;
  }
  const bool q2 = splitcon::odd_prime_dividing_cube_minus_one(2) == 7;
  r.passed = bad == 0 && checked == expected && q2;
  std::ostringstream os;
  os << checked << " prime powers q <= 10^4, " << bad << " failures; q=2 -> " << splitcon::odd_prime_dividing_cube_minus_one(2);
  r.detail = os.str();
  return r;
}

// --- 9: levels ----------------------------------------------------------------------------------------

CriterionResult levels(const SuiteOptions&) {
  CriterionResult r{9, "levels-and-feasibility", true, "", 0};
  std::uint64_t primes = 0, bad = 0;
  for (std::uint64_t p = 2; p <= 1000; ++p) {
    if (!oracle::is_prime(p)) continue;
    ++primes;
    const auto lr = quat::level_local(p);
    const unsigned want = p == 2 ? 4 : (p % 4 == 1 ? 1 : 2);
    bool ok = lr.level == want && lr.witness.size() == want && lr.verified;
    Int sum = 1;
    for (const auto& x : lr.witness) sum += x * x;
    ok = ok && lr.witness_modulus > 1 && sum % lr.witness_modulus == 0;
    // the modulus is a power of p, at least p^1 (2^4 at p = 2)
    Int m = lr.witness_modulus;
    unsigned k = 0;
    while (m > 1 && m % p == 0) {
      m /= p;
      ++k;
    }
    ok = ok && m == 1 && k >= (p == 2 ? 4u : 1u);
    if (p % 4 == 3) ok = ok && oracle::euler_symbol(p - 1, p) == -1;
    if (!ok) ++bad;
  }
  // p = 2: no sum of three squares is -1 mod 16, by direct search
  bool three_miss = true;
  for (int x = 0; x < 16; ++x)
    for (int y = 0; y < 16; ++y)
      for (int z = 0; z < 16; ++z)
        if ((x * x + y * y + z * z) % 16 == 15) three_miss = false;
  const bool lib_scans = quat::three_squares_miss_minus_one_mod16() && quat::three_squares_zero_mod4_forces_even();
  const bool real_inf = quat::level_local(0).level == quat::kInfiniteLevel;
  const bool fq = quat::level4_completion_exists(quat::QuadField::rationals()).feasible;
  const bool fi = quat::level4_completion_exists(quat::QuadField::sqrt(-1)).feasible;
  r.passed = bad == 0 && primes == 168 && three_miss && lib_scans && real_inf && fq && !fi;
  std::ostringstream os;
  os << primes << " primes <= 1000, " << bad << " failures; mod-16 search " << (three_miss ? "ok" : "FAILED")
     << "; feasible(Q)=" << (fq ? "true" : "false") << ", feasible(Q(sqrt -1))=" << (fi ? "true" : "false");
  r.detail = os.str();
  return r;
}

}  // namespace

CriterionResult run_suite(int id, const SuiteOptions& opts) {
  const auto t0 = Clock::now();
  CriterionResult r;
  switch (id) {
    case 1: r = ring_laws(opts); break;
    case 2: r = division(opts); break;
    case 3: r = extension_criteria_suite(opts); break;
    case 4: r = lift_uniqueness(opts); break;
    case 5: r = decision(opts); break;
    case 6: r = fitting(opts); break;
    case 7: r = constructor(opts); break;
    case 8: r = cube_minus_one_suite(opts); break;
    case 9: r = levels(opts); break;
    default: throw DomainError("no suite with id " + std::to_string(id));
  }
  r.seconds = since(t0);
  return r;
}

CriterionResult run_suite_guarded(int id, const SuiteOptions& opts) {
  const auto t0 = Clock::now();
  try {
    return run_suite(id, opts);
  } catch (const std::exception& e) {
    return {id, "suite-" + std::to_string(id), false, std::string("exception: ") + e.what(), since(t0)};
  }
}

std::string format_line(const CriterionResult& r) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(2);
  os << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << " " << r.name << " (" << r.seconds << " s): " << r.detail;
  return os.str();
}

}  // namespace skewgal::checks
