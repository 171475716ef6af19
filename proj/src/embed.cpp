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

#include "skewgal/embed.hpp"

#include <algorithm>
#include <iterator>
#include <numeric>
#include <set>

namespace skewgal::embed {

namespace {

unsigned order_in(unsigned k, unsigned n) { return n / std::gcd(n, k % n == 0 ? n : k % n); }

std::set<unsigned> cyclic_span(const std::vector<unsigned>& gens, unsigned n) {
  std::set<unsigned> s{0};
  std::vector<unsigned> queue{0};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (unsigned g : gens) {
      const unsigned y = (queue[i] + g) % n;
      if (s.insert(y).second) queue.push_back(y);
    }
  return s;
}

}  // namespace

FFGaloisExt make_extension(const FqField& K, const FqField& L) {
  require(K.characteristic() == L.characteristic(), "extension: K and L have different characteristic");
  require(L.degree() % K.degree() == 0, "extension: [K:F_p] does not divide [L:F_p]");
  FFGaloisExt ext;
  ext.K = K;
  ext.L = L;
  ext.emb = ff::SubfieldEmbedding(K, L);
  ext.degree = L.degree() / K.degree();
  return ext;
}

EmbeddingProblem make_problem(grp::GroupPtr G, FFGaloisExt ext, std::vector<grp::Elem> alpha_images) {
  auto gal = grp::cyclic_group(ext.degree);
  EmbeddingProblem ep;
  ep.alpha = grp::GroupHom(G, gal, std::move(alpha_images));
  require(ep.alpha.is_surjective(), "embedding problem: alpha is not surjective");
  ep.G = std::move(G);
  ep.ext = std::move(ext);
  ep.kernel_nilpotent = grp::is_nilpotent(*ep.G, ep.alpha.kernel());
  return ep;
}

std::vector<WeakSolution> find_weak_solutions(const EmbeddingProblem& ep) {
  const grp::Elem gen = ep.ext.degree > 1 ? 1 : 0;
  std::vector<WeakSolution> out;
  for (grp::Elem g = 0; g < ep.G->order(); ++g)
    if (ep.alpha(g) == gen) out.push_back({g, ep.G->element_order(g)});
  ensure(!out.empty(), "find_weak_solutions: surjective alpha with empty fibre");
  return out;
}

std::optional<grp::GroupHom> find_section(const EmbeddingProblem& ep) {
  const unsigned e = ep.ext.degree;
  for (const auto& w : find_weak_solutions(ep)) {
    if (w.ord != e) continue;
    std::vector<grp::Elem> images(e);
    for (unsigned j = 0; j < e; ++j) images[j] = ep.G->pow(w.g, j);
    grp::GroupHom s(ep.alpha.codomain(), ep.G, std::move(images));
    for (grp::Elem j = 0; j < e; ++j) ensure(ep.alpha(s(j)) == j, "find_section: alpha o section != id");
    return s;
  }
  return std::nullopt;
}

std::vector<ExtensionCandidate> extensions_of(const FFGaloisExt& ext, const FieldAut& sigma) {
  require(sigma.field() == ext.K, "sigma is not an automorphism of K");
  const unsigned m = ext.K.degree(), N = ext.L.degree();
  std::vector<ExtensionCandidate> out;
  for (unsigned t = 0; t < ext.degree; ++t) {
    const unsigned j = sigma.exponent() + m * t;
    const FieldAut cand(ext.L, j);
    ensure(ff::restrict_aut(cand, ext.emb) == sigma, "extensions_of: candidate does not restrict to sigma");
    out.push_back({j, order_in(j, N)});
  }
  return out;
}

FieldAut lift_sigma(const FFGaloisExt& ext, const FieldAut& sigma) {
  const unsigned d = sigma.order();
  const auto cands = extensions_of(ext, sigma);
  std::vector<unsigned> hits;
  for (const auto& c : cands)
    if (c.order == d) hits.push_back(c.exponent);
  if (std::gcd(d, ext.degree) != 1) {
    ensure(hits.empty(), "lift_sigma: order-d extension despite gcd(d, [L:K]) > 1");
    throw CoprimalityFailure("CoprimalityFailure: gcd(ord(sigma), [L:K]) = gcd(" + std::to_string(d) + ", " +
                                 std::to_string(ext.degree) + ") > 1; no extension of sigma has order " +
                                 std::to_string(d),
                             d, ext.degree, cands);
  }
  ensure(hits.size() == 1, "lift_sigma: expected exactly one extension of order d");
  return FieldAut(ext.L, hits.front());
}

ExtensionCriteria extension_criteria(const FFGaloisExt& ext, const FieldAut& sigma, const FieldAut& tau) {
  require(sigma.field() == ext.K && tau.field() == ext.L, "extension_criteria: automorphisms live on the wrong fields");
  require(ff::restrict_aut(tau, ext.emb) == sigma, "extension_criteria: tau does not extend sigma");
  const unsigned N = ext.L.degree(), m = ext.K.degree();
  const unsigned d = sigma.order();
  ExtensionCriteria r;
  r.tau_order = tau.order();
  r.order_coprime = r.tau_order == d && std::gcd(d, ext.degree) == 1;
  // Aut(L) = Z/N, Gal(L/K) = <m>.
  const auto T = cyclic_span({tau.exponent()}, N);
  const auto Gal = cyclic_span({m % N}, N);
  const auto both = cyclic_span({tau.exponent(), m % N}, N);
  std::vector<unsigned> meet;
  std::set_intersection(T.begin(), T.end(), Gal.begin(), Gal.end(), std::back_inserter(meet));
  r.generated_order = static_cast<unsigned>(both.size());
  r.intersection_order = static_cast<unsigned>(meet.size());
  r.is_direct_product = meet.size() == 1 && both.size() == T.size() * Gal.size();
  return r;
}

ExtensionCriteria checked_extension_criteria(const FFGaloisExt& ext, const FieldAut& sigma, const FieldAut& tau) {
  const ExtensionCriteria r = extension_criteria(ext, sigma, tau);
  ensure(r.order_coprime == r.is_direct_product, "checked_extension_criteria: the order/coprimality test and the direct-product test disagree");
  return r;
}

std::string to_string(Status s) {
  switch (s) {
    case Status::solvable:
      return "SOLVABLE";
    case Status::unsolvable:
      return "UNSOLVABLE";
    case Status::unknown:
      return "UNKNOWN";
  }
  return "UNKNOWN";
}

Verdict decide_sigma_solvability(const EmbeddingProblem& ep, const FieldAut& sigma) {
  require(ep.kernel_nilpotent, "decide: kernel of alpha is not nilpotent");
  require(sigma.field() == ep.ext.K, "decide: sigma is not an automorphism of K");
  Verdict v;
  v.d = sigma.order();
  v.degree = ep.ext.degree;
  v.coprime_degree = std::gcd(v.d, v.degree) == 1;
  for (const auto& w : find_weak_solutions(ep)) {
    if (std::gcd(v.d, w.ord) == 1) {
      v.coprime_weak_solution = true;
      v.witness = w;
      break;
    }
  }
  if (auto s = find_section(ep)) {
    v.split = true;
    v.section = s->images();
  }
  ensure(!v.coprime_weak_solution || v.coprime_degree, "decide: weak solution of order prime to d although gcd(d, [L:K]) > 1");
  if (v.coprime_weak_solution) {
    v.status = Status::solvable;
    v.tau = lift_sigma(ep.ext, sigma);
    std::size_t order_d = 0;
    for (const auto& c : extensions_of(ep.ext, sigma)) order_d += c.order == v.d;
    v.tau_unique = order_d == 1;
    ensure(v.tau_unique, "decide: extension of sigma of order d is not unique");
  } else if (!v.coprime_degree) {
    v.status = Status::unsolvable;
  } else {
    v.status = Status::unknown;
    ensure(!v.split, "decide: split problem left undecided");
  }
  return v;
}

}  // namespace skewgal::embed
