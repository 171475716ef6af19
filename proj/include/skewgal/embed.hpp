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

// Finite embedding problems G -> Gal(L/K) over finite fields, with the
// decision procedure for solvability over the skew function field K(T, sigma).
//
// Gal(L/K) is always encoded as the cyclic group C_e (e = [L:K]) whose element
// j is the j-th power of the relative Frobenius x -> x^|K|.

#include <optional>
#include <string>
#include <vector>

#include "skewgal/error.hpp"
#include "skewgal/ffield.hpp"
#include "skewgal/groups.hpp"

namespace skewgal::embed {

using ff::FieldAut;
using ff::FqField;

struct FFGaloisExt {
  FqField K;
  FqField L;
  ff::SubfieldEmbedding emb;
  unsigned degree = 1;
};

/// Throws DomainError unless [K : F_p] divides [L : F_p] over the same prime.
FFGaloisExt make_extension(const FqField& K, const FqField& L);

struct EmbeddingProblem {
  grp::GroupPtr G;
  FFGaloisExt ext;
  /// Onto C_[L:K].
  grp::GroupHom alpha;
  bool kernel_nilpotent = false;
};

/// alpha_images[g] is the exponent of the relative Frobenius that g maps to.
/// Throws DomainError if alpha is not a surjective homomorphism.
EmbeddingProblem make_problem(grp::GroupPtr G, FFGaloisExt ext, std::vector<grp::Elem> alpha_images);

/// Section C_e -> G sending the generator to the first preimage of order e.
std::optional<grp::GroupHom> find_section(const EmbeddingProblem& ep);

struct WeakSolution {
  grp::Elem g = 0;
  unsigned ord = 0;
};

/// Every g with alpha(g) = relative Frobenius, ascending by index.
std::vector<WeakSolution> find_weak_solutions(const EmbeddingProblem& ep);

/// Frobenius exponents j of L restricting to sigma, with the order of each.
struct ExtensionCandidate {
  unsigned exponent = 0;
  unsigned order = 0;
};
std::vector<ExtensionCandidate> extensions_of(const FFGaloisExt& ext, const FieldAut& sigma);

class CoprimalityFailure : public DomainError {
 public:
  CoprimalityFailure(const std::string& what, unsigned d, unsigned degree, std::vector<ExtensionCandidate> evidence)
      : DomainError(what), d_(d), degree_(degree), evidence_(std::move(evidence)) {}
  unsigned d() const { return d_; }
  unsigned degree() const { return degree_; }
  const std::vector<ExtensionCandidate>& evidence() const { return evidence_; }

 private:
  unsigned d_;
  unsigned degree_;
  std::vector<ExtensionCandidate> evidence_;
};

/// The unique tau in Aut(L) of order ord(sigma) restricting to sigma.
/// Throws CoprimalityFailure when gcd(ord(sigma), [L:K]) > 1.
FieldAut lift_sigma(const FFGaloisExt& ext, const FieldAut& sigma);

struct ExtensionCriteria {
  /// tau has order d and gcd(d, [L:K]) = 1.
  bool order_coprime = false;
  /// <tau, Gal(L/K)> is the internal direct product <tau> x Gal(L/K).
  bool is_direct_product = false;
  unsigned tau_order = 0;
  unsigned generated_order = 0;
  unsigned intersection_order = 0;
};

/// Both conditions, computed independently and without comparing them.
/// Throws DomainError if tau does not restrict to sigma.
ExtensionCriteria extension_criteria(const FFGaloisExt& ext, const FieldAut& sigma, const FieldAut& tau);

/// extension_criteria, plus an InternalError if the two conditions disagree.
ExtensionCriteria checked_extension_criteria(const FFGaloisExt& ext, const FieldAut& sigma, const FieldAut& tau);

enum class Status { solvable, unsolvable, unknown };
std::string to_string(Status s);

struct Verdict {
  Status status = Status::unknown;
  unsigned d = 1;
  unsigned degree = 1;
  /// Some weak solution g has gcd(d, ord g) = 1.
  bool coprime_weak_solution = false;
  std::optional<WeakSolution> witness;
  /// gcd(d, [L:K]) = 1.
  bool coprime_degree = false;
  bool split = false;
  std::optional<std::vector<grp::Elem>> section;
  std::optional<FieldAut> tau;
  bool tau_unique = false;
};

/// Requires a nilpotent kernel.
Verdict decide_sigma_solvability(const EmbeddingProblem& ep, const FieldAut& sigma);

}  // namespace skewgal::embed
