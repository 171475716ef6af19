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

// Explicit finite groups given by multiplication tables over element indices
// 0..order-1 (index 0 is the identity), homomorphisms as image lists, and the
// structural routines needed to reduce a solvable group to split problems
// with nilpotent kernel.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace skewgal::grp {

using Elem = std::uint32_t;
/// Permutation of {0..d-1} as an image list. Products read left to right:
/// (a*b)(i) = b(a(i)).
using Perm = std::vector<std::uint32_t>;
/// Sorted element set of a subgroup; always contains 0.
using Subgroup = std::vector<Elem>;

/// Default cap on the order of a group synthesized from permutations.
inline constexpr std::size_t kDefaultOrderCap = 5040;

class FiniteGroup {
 public:
  FiniteGroup() = default;

  /// Validates the Latin-square property, two-sided identity at index 0, and
  /// associativity (O(order^3)).
  static FiniteGroup from_table(const std::vector<std::vector<Elem>>& table, std::string name = {});
  static FiniteGroup from_flat_table(std::size_t order, std::vector<Elem> flat, std::string name = {});
  /// Closure of the generators; elements are numbered in breadth-first order
  /// from the identity. Throws DomainError if the order exceeds cap.
  static FiniteGroup from_permutations(const std::vector<Perm>& gens, std::size_t cap = kDefaultOrderCap,
                                       std::string name = {});

  std::size_t order() const { return n_; }
  Elem mul(Elem a, Elem b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
  Elem inv(Elem a) const { return inv_[a]; }
  Elem pow(Elem a, std::int64_t e) const;
  Elem conj(Elem g, Elem x) const { return mul(mul(g, x), inv(g)); }
  /// a^-1 b^-1 a b.
  Elem commutator(Elem a, Elem b) const { return mul(mul(inv(a), inv(b)), mul(a, b)); }
  unsigned element_order(Elem a) const;

  const std::vector<Elem>& flat_table() const { return table_; }
  std::vector<std::vector<Elem>> table() const;
  const std::optional<std::vector<Perm>>& permutation_generators() const { return perm_gens_; }
  /// For groups built from permutations: the permutation of each element.
  const std::vector<Perm>& permutations() const { return perms_; }

  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  bool is_abelian() const;

 private:
  void finish();

  std::size_t n_ = 0;
  std::vector<Elem> table_;
  std::vector<Elem> inv_;
  std::optional<std::vector<Perm>> perm_gens_;
  std::vector<Perm> perms_;
  std::string name_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

inline GroupPtr share(FiniteGroup g) { return std::make_shared<const FiniteGroup>(std::move(g)); }

class GroupHom {
 public:
  GroupHom() = default;
  /// Verifies map(xy) = map(x)map(y) on all pairs.
  GroupHom(GroupPtr domain, GroupPtr codomain, std::vector<Elem> images);

  const GroupPtr& domain() const { return dom_; }
  const GroupPtr& codomain() const { return cod_; }
  const std::vector<Elem>& images() const { return map_; }
  Elem operator()(Elem x) const { return map_[x]; }

  Subgroup kernel() const;
  Subgroup image() const;
  bool is_surjective() const;
  bool is_injective() const;
  /// (other o this).
  GroupHom then(const GroupHom& other) const;

 private:
  GroupPtr dom_;
  GroupPtr cod_;
  std::vector<Elem> map_;
};

// --- subgroups ---------------------------------------------------------------

Subgroup closure(const FiniteGroup& G, const std::vector<Elem>& gens);
Subgroup trivial_subgroup();
Subgroup whole_group(const FiniteGroup& G);
bool contains(const Subgroup& H, Elem x);
bool is_normal(const FiniteGroup& G, const Subgroup& H);
Subgroup normal_closure(const FiniteGroup& G, const std::vector<Elem>& gens);
Subgroup normalizer(const FiniteGroup& G, const Subgroup& H);
Subgroup intersect(const Subgroup& A, const Subgroup& B);
/// Size of the set A*B.
std::size_t product_size(const Subgroup& A, const Subgroup& B);
/// Subgroup generated by all commutators [a, b], a in A, b in B.
Subgroup commutator_subgroup(const FiniteGroup& G, const Subgroup& A, const Subgroup& B);

std::vector<Subgroup> derived_series(const FiniteGroup& G);
std::vector<Subgroup> lower_central_series(const FiniteGroup& G);

struct SubgroupAsGroup {
  GroupPtr group;
  /// Element i of group is elements[i] of the ambient group.
  std::vector<Elem> elements;
};

/// Re-indexes a subgroup as a standalone group, preserving the ambient order.
SubgroupAsGroup as_group(const FiniteGroup& G, const Subgroup& H);

bool is_nilpotent(const FiniteGroup& G);
bool is_solvable(const FiniteGroup& G);
bool is_nilpotent(const FiniteGroup& G, const Subgroup& H);

Subgroup sylow_subgroup(const FiniteGroup& G, std::uint64_t p);
/// Largest normal p-subgroup.
Subgroup p_core(const FiniteGroup& G, std::uint64_t p);
/// Largest nilpotent normal subgroup, as the product of the p-cores.
Subgroup fitting_subgroup(const FiniteGroup& G);

/// All subgroups generated by at most max_gens elements, by increasing
/// order, ties broken by the lexicographic order of the element sets.
std::vector<Subgroup> small_generated_subgroups(const FiniteGroup& G, unsigned max_gens);

/// A short generating set chosen greedily by element index.
std::vector<Elem> generating_set(const FiniteGroup& G);

// --- constructions -----------------------------------------------------------

struct SemidirectProduct {
  GroupPtr group;
  /// (n, h) -> h.
  GroupHom projection;
  /// h -> (1, h).
  GroupHom section;
  /// n -> (n, 1).
  GroupHom inclusion;
};

/// N x| H with (n,h)(n',h') = (n * action[h](n'), h h'). action[h] is the
/// image list of the automorphism of N attached to h. Element (n, h) has
/// index n + |N| * h.
SemidirectProduct semidirect_product(const GroupPtr& N, const GroupPtr& H,
                                     const std::vector<std::vector<Elem>>& action);

/// Element (a, b) has index a + |A| * b.
GroupPtr direct_product(const FiniteGroup& A, const FiniteGroup& B, std::string name = {});

GroupPtr cyclic_group(std::size_t n);

/// <a, b | a^m, b^n = a^s, b a b^-1 = a^r>; element a^i b^j has index i + m j.
GroupPtr metacyclic_group(std::size_t m, std::size_t n, std::size_t r, std::size_t s, std::string name = {});

GroupPtr symmetric_group(unsigned k);
GroupPtr alternating_group(unsigned k);

// --- reduction step -----------------------------------------------------------

struct ReductionStep {
  /// The group being reduced.
  GroupPtr G;
  /// Fitting subgroup of G (as a subset of G).
  Subgroup N;
  /// Complement-like subgroup with N * Gp = G (as a subset of G).
  Subgroup Gp;
  SubgroupAsGroup N_group;
  SubgroupAsGroup Gp_group;
  /// For each element of Gp_group, conjugation on N_group as an image list.
  std::vector<std::vector<Elem>> action;
  SemidirectProduct semidirect;
  /// (n, g') -> n g', onto G.
  GroupHom phi;
  /// Which rule picked Gp.
  std::string gp_rule;
};

/// One induction step: a surjection N x| G' -> G with N the Fitting subgroup.
ReductionStep fitting_reduction_step(const GroupPtr& G);

/// Iterates fitting_reduction_step on the successive G' until it is trivial.
std::vector<ReductionStep> solvable_tower(const GroupPtr& G);

// --- isomorphism and homomorphism enumeration ----------------------------------

/// Backtracking on generator images. Returns an isomorphism A -> B as an image list.
std::optional<std::vector<Elem>> find_isomorphism(const FiniteGroup& A, const FiniteGroup& B);
inline bool are_isomorphic(const FiniteGroup& A, const FiniteGroup& B) { return find_isomorphism(A, B).has_value(); }

/// All homomorphisms G -> H as image lists.
std::vector<std::vector<Elem>> enumerate_homs(const FiniteGroup& G, const FiniteGroup& H);

}  // namespace skewgal::grp
