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

#include "skewgal/group_catalog.hpp"

#include <array>
#include <mutex>

#include "skewgal/error.hpp"

namespace skewgal::grp {

namespace {

GroupPtr named(GroupPtr g, const std::string& name) {
  FiniteGroup copy = *g;
  copy.set_name(name);
  return share(std::move(copy));
}

GroupPtr dprod(const GroupPtr& a, const GroupPtr& b, const std::string& name) {
  return direct_product(*a, *b, name);
}

GroupPtr dihedral(std::size_t m) { return metacyclic_group(m, 2, m - 1, 0, "D" + std::to_string(2 * m)); }

// SL(2,3) acting on the eight nonzero vectors of F_3^2.
GroupPtr sl23() {
  std::vector<std::array<int, 2>> vecs;
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y)
      if (x || y) vecs.push_back({x, y});
  auto index_of = [&](int x, int y) {
    for (std::uint32_t i = 0; i < vecs.size(); ++i)
      if (vecs[i][0] == x && vecs[i][1] == y) return i;
    throw InternalError("sl23: vector not found");
  };
  auto perm_of = [&](int a, int b, int c, int d) {
    Perm p(vecs.size());
    for (std::size_t i = 0; i < vecs.size(); ++i) {
      const int x = vecs[i][0], y = vecs[i][1];
      p[i] = index_of(((a * x + b * y) % 3 + 3) % 3, ((c * x + d * y) % 3 + 3) % 3);
    }
    return p;
  };
  return share(FiniteGroup::from_permutations({perm_of(1, 1, 0, 1), perm_of(0, -1, 1, 0)}, kDefaultOrderCap, "SL(2,3)"));
}

// (C4 x C2) x| C2 for an automorphism given on the generators a = (1,0), b = (0,1).
GroupPtr c4c2_by_c2(bool twist_a, const std::string& name) {
  const GroupPtr N = direct_product(*cyclic_group(4), *cyclic_group(2));
  const GroupPtr H = cyclic_group(2);
  std::vector<Elem> aut(8);
  for (Elem e = 0; e < 8; ++e) {
    const unsigned x = e % 4, y = e / 4;
    // twist_a: a -> ab, b -> b.  otherwise: a -> a, b -> a^2 b.
    aut[e] = twist_a ? static_cast<Elem>(x + 4 * ((y + x) % 2)) : static_cast<Elem>((x + 2 * y) % 4 + 4 * y);
  }
  std::vector<Elem> id(8);
  for (Elem e = 0; e < 8; ++e) id[e] = e;
  return named(semidirect_product(N, H, {id, aut}).group, name);
}

GroupPtr inversion_by_c2(const GroupPtr& abelian, const std::string& name) {
  std::vector<Elem> id(abelian->order()), inv(abelian->order());
  for (Elem e = 0; e < abelian->order(); ++e) {
    id[e] = e;
    inv[e] = abelian->inv(e);
  }
  return named(semidirect_product(abelian, cyclic_group(2), {id, inv}).group, name);
}

// C3 x| D8 where the elements a^i b^j with i odd invert C3.
GroupPtr c3_by_d8() {
  const GroupPtr C3 = cyclic_group(3);
  const GroupPtr D8 = dihedral(4);
  const std::vector<Elem> id{0, 1, 2}, inv{0, 2, 1};
  std::vector<std::vector<Elem>> action(8);
  for (Elem h = 0; h < 8; ++h) action[h] = (h % 4) % 2 ? inv : id;
  return named(semidirect_product(C3, D8, action).group, "C3:D8");
}

std::vector<CatalogEntry> build() {
  std::vector<CatalogEntry> out;
  auto add = [&](const GroupPtr& g) { out.push_back({g->name(), g}); };
  auto C = [](std::size_t n) { return cyclic_group(n); };

  add(C(1));
  add(C(2));
  add(C(3));
  add(C(4));
  add(dprod(C(2), C(2), "C2xC2"));
  add(C(5));
  add(C(6));
  add(named(dihedral(3), "S3"));
  add(C(7));
  // 8
  add(C(8));
  add(dprod(C(4), C(2), "C4xC2"));
  add(dprod(dprod(C(2), C(2), "C2xC2"), C(2), "C2xC2xC2"));
  add(dihedral(4));
  add(metacyclic_group(4, 2, 3, 2, "Q8"));
  // 9, 10, 11
  add(C(9));
  add(dprod(C(3), C(3), "C3xC3"));
  add(C(10));
  add(dihedral(5));
  add(C(11));
  // 12
  add(C(12));
  add(dprod(C(6), C(2), "C6xC2"));
  add(dihedral(6));
  add(named(alternating_group(4), "A4"));
  add(metacyclic_group(3, 4, 2, 0, "Dic3"));
  // 13, 14, 15
  add(C(13));
  add(C(14));
  add(dihedral(7));
  add(C(15));
  // 16
  const GroupPtr C2xC2 = dprod(C(2), C(2), "C2xC2");
  add(C(16));
  add(dprod(C(4), C(4), "C4xC4"));
  add(dprod(C(8), C(2), "C8xC2"));
  add(dprod(dprod(C(4), C(2), "C4xC2"), C(2), "C4xC2xC2"));
  add(dprod(dprod(C2xC2, C(2), "C2xC2xC2"), C(2), "C2xC2xC2xC2"));
  add(dihedral(8));
  add(metacyclic_group(8, 2, 7, 4, "Q16"));
  add(metacyclic_group(8, 2, 3, 0, "QD16"));
  add(metacyclic_group(8, 2, 5, 0, "M16"));
  add(metacyclic_group(4, 4, 3, 0, "C4:C4"));
  add(dprod(dihedral(4), C(2), "D8xC2"));
  add(dprod(metacyclic_group(4, 2, 3, 2, "Q8"), C(2), "Q8xC2"));
  add(c4c2_by_c2(true, "(C4xC2):C2"));
  add(c4c2_by_c2(false, "C4oD8"));
  // 17, 18, 19
  add(C(17));
  add(C(18));
  add(dprod(C(6), C(3), "C6xC3"));
  add(dihedral(9));
  add(dprod(named(dihedral(3), "S3"), C(3), "S3xC3"));
  add(inversion_by_c2(dprod(C(3), C(3), "C3xC3"), "(C3xC3):C2"));
  add(C(19));
  // 20, 21, 22, 23
  add(C(20));
  add(dprod(C(10), C(2), "C10xC2"));
  add(dihedral(10));
  add(metacyclic_group(10, 2, 9, 5, "Dic5"));
  add(metacyclic_group(5, 4, 2, 0, "F20"));
  add(C(21));
  add(metacyclic_group(7, 3, 2, 0, "C7:C3"));
  add(C(22));
  add(dihedral(11));
  add(C(23));
  // 24
  add(C(24));
  add(dprod(C(12), C(2), "C12xC2"));
  add(dprod(dprod(C(6), C(2), "C6xC2"), C(2), "C6xC2xC2"));
  add(symmetric_group(4));
  add(sl23());
  add(dihedral(12));
  add(metacyclic_group(12, 2, 11, 6, "Dic6"));
  add(metacyclic_group(3, 8, 2, 0, "C3:C8"));
  add(c3_by_d8());
  add(dprod(named(alternating_group(4), "A4"), C(2), "A4xC2"));
  add(dprod(dihedral(6), C(2), "D12xC2"));
  add(dprod(metacyclic_group(3, 4, 2, 0, "Dic3"), C(2), "Dic3xC2"));
  add(dprod(named(dihedral(3), "S3"), C(4), "S3xC4"));
  add(dprod(dihedral(4), C(3), "D8xC3"));
  add(dprod(metacyclic_group(4, 2, 3, 2, "Q8"), C(3), "Q8xC3"));
  return out;
}

}  // namespace

const std::vector<CatalogEntry>& small_group_catalog() {
  static const std::vector<CatalogEntry> catalog = build();
  return catalog;
}

GroupPtr catalog_group(const std::string& name) {
  for (const auto& e : small_group_catalog())
    if (e.name == name) return e.group;
  throw DomainError("unknown catalog group: " + name);
}

unsigned known_group_count(unsigned n) {
  static constexpr std::array<unsigned, 25> counts{0, 1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5,
                                                    1, 2, 1, 14, 1, 5, 1, 5, 2, 2, 1, 15};
  require(n >= 1 && n < counts.size(), "known_group_count: order out of range");
  return counts[n];
}

}  // namespace skewgal::grp
