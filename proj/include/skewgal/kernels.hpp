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

// Exhaustive and randomized verification sweeps. Each kernel has a serial
// reference path and an OpenMP path; both return identical results because
// every case derives its randomness from (seed, case index) alone.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "skewgal/ffield.hpp"

namespace skewgal::kernels {

enum class Exec { serial, parallel };

/// Whether the n x n table (row-major) is associative.
bool table_associative(std::span<const std::uint32_t> table, std::size_t n, Exec exec = Exec::parallel);

/// Seed for case i of a sweep seeded with seed (splitmix64 mixing).
std::uint64_t case_seed(std::uint64_t seed, std::uint64_t i);

struct RingLawStats {
  std::uint64_t cases = 0;
  std::uint64_t associativity_failures = 0;
  std::uint64_t left_distributivity_failures = 0;
  std::uint64_t right_distributivity_failures = 0;
  std::uint64_t degree_failures = 0;
  std::uint64_t twist_law_failures = 0;
  bool operator==(const RingLawStats&) const = default;
  bool clean() const {
    return associativity_failures + left_distributivity_failures + right_distributivity_failures + degree_failures +
               twist_law_failures ==
           0;
  }
};

/// Random triples f, g, h of degree <= max_degree in L[T, Frob^k]; checks
/// associativity, both distributive laws, degree additivity and T a = tau(a) T.
RingLawStats ore_ring_laws(const ff::FqField& L, unsigned twist_exponent, std::uint64_t cases, std::uint64_t seed,
                           unsigned max_degree, Exec exec = Exec::parallel);

struct DivisionStats {
  std::uint64_t cases = 0;
  std::uint64_t reconstruction_failures = 0;
  std::uint64_t degree_bound_failures = 0;
  bool operator==(const DivisionStats&) const = default;
};

/// Random pairs (f, g != 0): f == q g + r and deg r < deg g.
DivisionStats ore_division_sweep(const ff::FqField& L, unsigned twist_exponent, std::uint64_t cases,
                                 std::uint64_t seed, unsigned max_degree, Exec exec = Exec::parallel);

struct WitnessStats {
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  bool operator==(const WitnessStats&) const = default;
};

/// Random nonzero pairs (x, y): x r == y s != 0 for the returned witness.
WitnessStats ore_witness_sweep(const ff::FqField& L, unsigned twist_exponent, std::uint64_t cases,
                               std::uint64_t seed, unsigned max_degree, Exec exec = Exec::parallel);

/// One (K, L, sigma, tau) instance of the Frobenius-exponent sweep.
struct AutInstance {
  std::uint64_t p = 0;
  unsigned n_K = 0;
  unsigned n_L = 0;
  unsigned sigma = 0;
  unsigned tau = 0;
};

/// All (K, L, sigma, tau) with |L| = p^n_L <= max_size, K a subfield of L,
/// sigma in Aut(K) and tau in Aut(L) restricting to sigma.
std::vector<AutInstance> aut_instances(std::uint64_t p, std::uint64_t max_size);

struct CriteriaSweepStats {
  std::uint64_t instances = 0;
  std::uint64_t both_true = 0;
  std::uint64_t both_false = 0;
  std::uint64_t disagreements = 0;
  bool operator==(const CriteriaSweepStats&) const = default;
};

/// Evaluates both criteria on every instance and counts disagreements.
CriteriaSweepStats criteria_sweep(const std::vector<AutInstance>& instances, Exec exec = Exec::parallel);

struct LiftSweepStats {
  /// (K, L, sigma) triples.
  std::uint64_t triples = 0;
  std::uint64_t coprime = 0;
  /// Coprime triples with exactly one order-d extension that lift_sigma returns.
  std::uint64_t coprime_unique = 0;
  /// Non-coprime triples with no order-d extension and a CoprimalityFailure.
  std::uint64_t noncoprime_none = 0;
  bool operator==(const LiftSweepStats&) const = default;
  bool clean() const { return coprime_unique + noncoprime_none == triples; }
};

LiftSweepStats lift_sweep(std::uint64_t p, std::uint64_t max_size, Exec exec = Exec::parallel);

}  // namespace skewgal::kernels
