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

// Monic integer polynomials with prescribed behavior at finitely many places
// of Q, certified to have Galois group S_n by Frobenius cycle types and to be
// linearly disjoint from a given extension through a ramified quadratic
// resolvent.

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "skewgal/bigint.hpp"
#include "skewgal/int_poly.hpp"

namespace skewgal::splitcon {

using zx::ZPoly;

enum class Kind { totally_split, ramified_quadratic, unramified_degree, ramified_odd };

/// prime == 0 denotes the real place.
struct LocalSpec {
  std::uint64_t prime = 0;
  Kind kind = Kind::totally_split;
  /// Residue degree for unramified_degree.
  unsigned m = 0;
  bool ram_in_L = false;
  /// Residue cardinality for ramified_odd.
  std::uint64_t q = 0;
  bool is_real() const { return prime == 0; }
  bool operator==(const LocalSpec&) const = default;
};

/// "<prime>:ts|rq|ur<m>[:ramL]" or "inf:ts". Throws ParseError.
LocalSpec parse_spec(const std::string& text);
std::string format_spec(const LocalSpec& spec);
/// "ts", "rq", "ur3", ...
std::string kind_tag(const LocalSpec& spec);

/// Auxiliary primes P_{r+1}..P_{r+4} with kinds rq, ur(n), ur(n-1), ur(2).
std::vector<LocalSpec> plan_aux_primes(const std::vector<LocalSpec>& S, const std::set<std::uint64_t>& L_ram,
                                       unsigned n);

struct LocalPoly {
  std::uint64_t prime = 0;
  unsigned precision = 0;
  Int modulus;
  /// Monic, coefficients in [0, modulus).
  ZPoly coeffs;
  /// Degrees of the declared factors, descending.
  std::vector<unsigned> factor_shape;
};

LocalPoly build_local_poly(const LocalSpec& spec, unsigned n, unsigned precision);

/// prod_{j=1..n} (X - j).
ZPoly real_target(unsigned n);

/// CRT on each coefficient. Without a real target the representative of least
/// absolute value is used (ties go to the nonnegative one). With a real target
/// of degree n the roots are spread to s * j with s = M * g, doubling g until
/// the Sturm count is n.
ZPoly weak_approximation(const std::vector<LocalPoly>& locals, const std::optional<ZPoly>& real_target, unsigned n);

struct PatternRecord {
  std::uint64_t prime = 0;
  bool squarefree = false;
  std::vector<unsigned> pattern;
};

struct SnCertificate {
  std::vector<PatternRecord> patterns;
  bool n_cycle = false;
  bool n_minus_1_cycle = false;
  bool transposition = false;
  bool conclusion = false;
  std::string reason;
};

SnCertificate certify_sn(const ZPoly& Q, const std::vector<LocalSpec>& aux);

struct LocalCertificate {
  LocalSpec spec;
  bool passed = false;
  std::string reason;
  /// totally_split: real or Z_p roots. ramified_quadratic: unit roots.
  std::optional<unsigned> root_count;
  std::optional<std::vector<unsigned>> pattern;
  /// ramified_quadratic: residual X^2 + a X + b mod p^precision.
  std::optional<Int> residual_a;
  std::optional<Int> residual_b;
  std::optional<int> v_a;
  std::optional<int> v_b;
};

/// precision is the p-adic precision used for the Hensel split in the
/// ramified quadratic case.
LocalCertificate certify_local_behavior(const ZPoly& Q, const LocalSpec& spec, unsigned precision = 8);

struct DisjointnessEvidence {
  std::uint64_t prime = 0;
  int disc_valuation = 0;
  bool odd = false;
  bool prime_unramified_in_L = false;
  bool passed() const { return odd && prime_unramified_in_L; }
};

DisjointnessEvidence disjointness(const ZPoly& Q, std::uint64_t prime, const std::set<std::uint64_t>& L_ram);

struct ConstructionReport {
  ZPoly Q;
  unsigned n = 0;
  std::vector<LocalSpec> specs;
  std::set<std::uint64_t> L_ram;
  std::uint64_t p_kernel = 0;
  std::vector<LocalSpec> aux;
  unsigned precision = 0;
  std::uint64_t seed = 0;
  SnCertificate sn;
  std::vector<LocalCertificate> locals;
  DisjointnessEvidence disjoint;
  bool certified = false;
};

/// Requires p_kernel odd. Runs build -> approximate -> certify at precision
/// 2, 4, ..., 64; report.certified is false if the cap is hit.
ConstructionReport construct_lprime(const std::vector<LocalSpec>& S, std::uint64_t p_kernel, unsigned n_min,
                                    std::uint64_t seed = 0);

struct VerifyResult {
  bool ok = false;
  std::vector<std::string> failures;
};

/// Re-derives every certificate from Q, the specs and the auxiliary primes.
VerifyResult verify_report(const ConstructionReport& report);

/// Smallest odd prime dividing q^3 - 1 for a prime power q >= 2.
std::uint64_t odd_prime_dividing_cube_minus_one(std::uint64_t q);

bool is_prime_power(std::uint64_t q);

}  // namespace skewgal::splitcon
