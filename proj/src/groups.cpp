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

#include "skewgal/groups.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

#include "skewgal/error.hpp"
#include "skewgal/kernels.hpp"

namespace skewgal::grp {

namespace {

struct PermHash {
  std::size_t operator()(const Perm& p) const {
    std::size_t h = 1469598103934665603ull;
    for (auto x : p) h = (h ^ x) * 1099511628211ull;
    return h;
  }
};

Perm perm_mul(const Perm& a, const Perm& b) {
  Perm c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = b[a[i]];
  return c;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::optional<std::vector<Elem>> extend_hom(const FiniteGroup& G, const FiniteGroup& H, const std::vector<Elem>& gens,
                                            const std::vector<Elem>& imgs) {
  constexpr Elem kUnset = ~Elem{0};
  std::vector<Elem> map(G.order(), kUnset);
  map[0] = 0;
  std::deque<Elem> queue{0};
  while (!queue.empty()) {
    const Elem g = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const Elem gs = G.mul(g, gens[i]);
      const Elem val = H.mul(map[g], imgs[i]);
      if (map[gs] == kUnset) {
        map[gs] = val;
        queue.push_back(gs);
      } else if (map[gs] != val) {
        return std::nullopt;
      }
    }
  }
  return map;
}

}  // namespace

// --- FiniteGroup -------------------------------------------------------------

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<Elem>>& table, std::string name) {
  const std::size_t n = table.size();
  std::vector<Elem> flat;
  flat.reserve(n * n);
  for (const auto& row : table) {
    require(row.size() == n, "group table: rows must have length equal to the order");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return from_flat_table(n, std::move(flat), std::move(name));
}

FiniteGroup FiniteGroup::from_flat_table(std::size_t n, std::vector<Elem> flat, std::string name) {
  require(n >= 1, "group table: order must be positive");
  require(flat.size() == n * n, "group table: wrong number of entries");
  for (auto x : flat) require(x < n, "group table: entry out of range");
  for (std::size_t i = 0; i < n; ++i) {
    require(flat[i] == i && flat[i * n] == i, "group table: index 0 is not a two-sided identity");
  }
  // Latin square
  std::vector<char> seen(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t j = 0; j < n; ++j) {
      require(!seen[flat[i * n + j]], "group table: not a Latin square (row " + std::to_string(i) + ")");
      seen[flat[i * n + j]] = 1;
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t j = 0; j < n; ++j) {
      require(!seen[flat[j * n + i]], "group table: not a Latin square (column " + std::to_string(i) + ")");
      seen[flat[j * n + i]] = 1;
    }
  }
  require(kernels::table_associative(flat, n), "group table: multiplication is not associative");
  FiniteGroup g;
  g.n_ = n;
  g.table_ = std::move(flat);
  g.name_ = std::move(name);
  g.finish();
  return g;
}

FiniteGroup FiniteGroup::from_permutations(const std::vector<Perm>& gens, std::size_t cap, std::string name) {
  std::size_t degree = 0;
  for (const auto& g : gens) degree = std::max(degree, g.size());
  std::vector<Perm> gs;
  for (auto g : gens) {
    const std::size_t old = g.size();
    g.resize(degree);
    for (std::size_t i = old; i < degree; ++i) g[i] = static_cast<std::uint32_t>(i);
    std::vector<char> hit(degree, 0);
    for (auto x : g) {
      require(x < degree && !hit[x], "permutation generator is not a bijection");
      hit[x] = 1;
    }
    gs.push_back(std::move(g));
  }
  Perm id(degree);
  std::iota(id.begin(), id.end(), 0u);
  std::vector<Perm> elems{id};
  std::unordered_map<Perm, Elem, PermHash> index{{id, 0}};
  for (std::size_t k = 0; k < elems.size(); ++k) {
    for (const auto& g : gs) {
      Perm y = perm_mul(elems[k], g);
      if (index.emplace(y, static_cast<Elem>(elems.size())).second) {
        elems.push_back(std::move(y));
        require(elems.size() <= cap, "permutation group exceeds the order cap of " + std::to_string(cap));
      }
    }
  }
  const std::size_t n = elems.size();
  std::vector<Elem> flat(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) flat[a * n + b] = index.at(perm_mul(elems[a], elems[b]));
  FiniteGroup g;
  g.n_ = n;
  g.table_ = std::move(flat);
  g.perm_gens_ = gs;
  g.perms_ = std::move(elems);
  g.name_ = std::move(name);
  g.finish();
  return g;
}

void FiniteGroup::finish() {
  inv_.assign(n_, 0);
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = 0; b < n_; ++b)
      if (table_[a * n_ + b] == 0) {
        inv_[a] = static_cast<Elem>(b);
        break;
      }
}

Elem FiniteGroup::pow(Elem a, std::int64_t e) const {
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  Elem r = 0;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

unsigned FiniteGroup::element_order(Elem a) const {
  unsigned k = 1;
  Elem x = a;
  while (x != 0) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

std::vector<std::vector<Elem>> FiniteGroup::table() const {
  std::vector<std::vector<Elem>> t(n_);
  for (std::size_t i = 0; i < n_; ++i) t[i].assign(table_.begin() + i * n_, table_.begin() + (i + 1) * n_);
  return t;
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = a + 1; b < n_; ++b)
      if (table_[a * n_ + b] != table_[b * n_ + a]) return false;
  return true;
}

// --- GroupHom -----------------------------------------------------------------

GroupHom::GroupHom(GroupPtr domain, GroupPtr codomain, std::vector<Elem> images)
    : dom_(std::move(domain)), cod_(std::move(codomain)), map_(std::move(images)) {
  require(dom_ && cod_, "GroupHom: null group");
  require(map_.size() == dom_->order(), "GroupHom: image list length differs from the domain order");
  for (auto x : map_) require(x < cod_->order(), "GroupHom: image out of range");
  require(map_[0] == 0, "GroupHom: identity is not mapped to the identity");
  const std::size_t n = dom_->order();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      require(map_[dom_->mul(static_cast<Elem>(a), static_cast<Elem>(b))] == cod_->mul(map_[a], map_[b]),
              "GroupHom: map is not a homomorphism");
}

Subgroup GroupHom::kernel() const {
  Subgroup k;
  for (std::size_t i = 0; i < map_.size(); ++i)
    if (map_[i] == 0) k.push_back(static_cast<Elem>(i));
  return k;
}

Subgroup GroupHom::image() const {
  std::set<Elem> s(map_.begin(), map_.end());
  return Subgroup(s.begin(), s.end());
}

bool GroupHom::is_surjective() const { return image().size() == cod_->order(); }

bool GroupHom::is_injective() const { return kernel().size() == 1; }

GroupHom GroupHom::then(const GroupHom& other) const {
  require(cod_ == other.dom_ || (cod_->order() == other.dom_->order() && cod_->flat_table() == other.dom_->flat_table()),
          "GroupHom::then: codomain and domain differ");
  std::vector<Elem> m(map_.size());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = other(map_[i]);
  return GroupHom(dom_, other.cod_, std::move(m));
}

// --- subgroups ------------------------------------------------------------------

Subgroup closure(const FiniteGroup& G, const std::vector<Elem>& gens) {
  std::vector<char> seen(G.order(), 0);
  std::vector<Elem> elems{0};
  seen[0] = 1;
  for (std::size_t k = 0; k < elems.size(); ++k)
    for (Elem g : gens) {
      const Elem y = G.mul(elems[k], g);
      if (!seen[y]) {
        seen[y] = 1;
        elems.push_back(y);
      }
    }
  std::sort(elems.begin(), elems.end());
  return elems;
}

Subgroup trivial_subgroup() { return {0}; }

Subgroup whole_group(const FiniteGroup& G) {
  Subgroup s(G.order());
  std::iota(s.begin(), s.end(), Elem{0});
  return s;
}

bool contains(const Subgroup& H, Elem x) { return std::binary_search(H.begin(), H.end(), x); }

bool is_normal(const FiniteGroup& G, const Subgroup& H) {
  for (Elem g : generating_set(G))
    for (Elem h : H)
      if (!contains(H, G.conj(g, h))) return false;
  return true;
}

Subgroup normal_closure(const FiniteGroup& G, const std::vector<Elem>& gens) {
  std::set<Elem> conjugates;
  for (std::size_t g = 0; g < G.order(); ++g)
    for (Elem x : gens) conjugates.insert(G.conj(static_cast<Elem>(g), x));
  return closure(G, std::vector<Elem>(conjugates.begin(), conjugates.end()));
}

Subgroup normalizer(const FiniteGroup& G, const Subgroup& H) {
  Subgroup out;
  for (std::size_t g = 0; g < G.order(); ++g) {
    bool ok = true;
    for (Elem h : H)
      if (!contains(H, G.conj(static_cast<Elem>(g), h))) {
        ok = false;
        break;
      }
    if (ok) out.push_back(static_cast<Elem>(g));
  }
  return out;
}

Subgroup intersect(const Subgroup& A, const Subgroup& B) {
  Subgroup out;
  std::set_intersection(A.begin(), A.end(), B.begin(), B.end(), std::back_inserter(out));
  return out;
}

std::size_t product_size(const Subgroup& A, const Subgroup& B) { return A.size() * B.size() / intersect(A, B).size(); }

Subgroup commutator_subgroup(const FiniteGroup& G, const Subgroup& A, const Subgroup& B) {
  std::set<Elem> comms;
  for (Elem a : A)
    for (Elem b : B) comms.insert(G.commutator(a, b));
  return closure(G, std::vector<Elem>(comms.begin(), comms.end()));
}

std::vector<Subgroup> derived_series(const FiniteGroup& G) {
  std::vector<Subgroup> series{whole_group(G)};
  for (;;) {
    Subgroup next = commutator_subgroup(G, series.back(), series.back());
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

std::vector<Subgroup> lower_central_series(const FiniteGroup& G) {
  const Subgroup all = whole_group(G);
  std::vector<Subgroup> series{all};
  for (;;) {
    Subgroup next = commutator_subgroup(G, series.back(), all);
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

SubgroupAsGroup as_group(const FiniteGroup& G, const Subgroup& H) {
  require(!H.empty() && H.front() == 0, "as_group: subgroup must contain the identity");
  std::vector<std::int64_t> pos(G.order(), -1);
  for (std::size_t i = 0; i < H.size(); ++i) pos[H[i]] = static_cast<std::int64_t>(i);
  const std::size_t n = H.size();
  std::vector<Elem> flat(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const std::int64_t c = pos[G.mul(H[a], H[b])];
      require(c >= 0, "as_group: set is not closed under multiplication");
      flat[a * n + b] = static_cast<Elem>(c);
    }
  return {share(FiniteGroup::from_flat_table(n, std::move(flat))), H};
}

bool is_nilpotent(const FiniteGroup& G) { return lower_central_series(G).back().size() == 1; }

bool is_solvable(const FiniteGroup& G) { return derived_series(G).back().size() == 1; }

bool is_nilpotent(const FiniteGroup& G, const Subgroup& H) { return is_nilpotent(*as_group(G, H).group); }

Subgroup sylow_subgroup(const FiniteGroup& G, std::uint64_t p) {
  std::size_t target = 1;
  std::size_t m = G.order();
  while (m % p == 0) {
    m /= p;
    target *= p;
  }
  auto is_p_power = [p](unsigned k) {
    while (k % p == 0) k /= static_cast<unsigned>(p);
    return k == 1;
  };
  Subgroup P = trivial_subgroup();
  std::vector<Elem> gens;
  while (P.size() < target) {
    const Subgroup N = normalizer(G, P);
    bool grown = false;
    for (Elem x : N) {
      if (contains(P, x) || !is_p_power(G.element_order(x))) continue;
      gens.push_back(x);
      P = closure(G, gens);
      grown = true;
      break;
    }
    ensure(grown, "sylow_subgroup: no p-element in N(P) \\ P");
  }
  ensure(P.size() == target, "sylow_subgroup: overshoot");
  return P;
}

Subgroup p_core(const FiniteGroup& G, std::uint64_t p) {
  Subgroup core = sylow_subgroup(G, p);
  const Subgroup P = core;
  for (std::size_t g = 0; g < G.order() && core.size() > 1; ++g) {
    Subgroup conj;
    for (Elem x : P) conj.push_back(G.conj(static_cast<Elem>(g), x));
    std::sort(conj.begin(), conj.end());
    core = intersect(core, conj);
  }
  return core;
}

Subgroup fitting_subgroup(const FiniteGroup& G) {
  std::vector<Elem> gens;
  for (auto p : prime_divisors(G.order())) {
    const Subgroup core = p_core(G, p);
    gens.insert(gens.end(), core.begin(), core.end());
  }
  return closure(G, gens);
}

std::vector<Subgroup> small_generated_subgroups(const FiniteGroup& G, unsigned max_gens) {
  std::map<Subgroup, std::vector<Elem>> found;
  found.emplace(trivial_subgroup(), std::vector<Elem>{});
  std::vector<std::pair<Subgroup, std::vector<Elem>>> frontier{{trivial_subgroup(), {}}};
  for (unsigned level = 0; level < max_gens; ++level) {
    std::vector<std::pair<Subgroup, std::vector<Elem>>> next;
    for (const auto& [H, gens] : frontier) {
      for (std::size_t x = 0; x < G.order(); ++x) {
        if (contains(H, static_cast<Elem>(x))) continue;
        std::vector<Elem> g2 = gens;
        g2.push_back(static_cast<Elem>(x));
        Subgroup K = closure(G, g2);
        if (found.emplace(K, g2).second) next.emplace_back(std::move(K), std::move(g2));
      }
    }
    frontier = std::move(next);
  }
  std::vector<Subgroup> out;
  for (auto& [H, gens] : found) out.push_back(H);
  std::stable_sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

std::vector<Elem> generating_set(const FiniteGroup& G) {
  std::vector<Elem> gens;
  Subgroup H = trivial_subgroup();
  for (std::size_t x = 1; x < G.order() && H.size() < G.order(); ++x) {
    if (contains(H, static_cast<Elem>(x))) continue;
    gens.push_back(static_cast<Elem>(x));
    H = closure(G, gens);
  }
  return gens;
}

// --- constructions ----------------------------------------------------------------

SemidirectProduct semidirect_product(const GroupPtr& N, const GroupPtr& H,
                                     const std::vector<std::vector<Elem>>& action) {
  const std::size_t nn = N->order();
  const std::size_t nh = H->order();
  require(action.size() == nh, "semidirect_product: need one automorphism per element of H");
  for (std::size_t h = 0; h < nh; ++h) {
    const auto& a = action[h];
    require(a.size() == nn, "semidirect_product: automorphism has the wrong length");
    std::vector<char> hit(nn, 0);
    for (auto x : a) {
      require(x < nn && !hit[x], "semidirect_product: action is not a bijection");
      hit[x] = 1;
    }
    for (std::size_t x = 0; x < nn; ++x)
      for (std::size_t y = 0; y < nn; ++y)
        require(a[N->mul(static_cast<Elem>(x), static_cast<Elem>(y))] == N->mul(a[x], a[y]),
                "semidirect_product: action is not by automorphisms");
  }
  for (std::size_t h = 0; h < nh; ++h)
    for (std::size_t k = 0; k < nh; ++k) {
      const auto& hk = action[H->mul(static_cast<Elem>(h), static_cast<Elem>(k))];
      for (std::size_t x = 0; x < nn; ++x)
        require(hk[x] == action[h][action[k][x]], "semidirect_product: action is not a homomorphism");
    }
  const std::size_t n = nn * nh;
  std::vector<Elem> flat(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    const std::size_t an = a % nn, ah = a / nn;
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t bn = b % nn, bh = b / nn;
      const Elem cn = N->mul(static_cast<Elem>(an), action[ah][bn]);
      const Elem ch = H->mul(static_cast<Elem>(ah), static_cast<Elem>(bh));
      flat[a * n + b] = static_cast<Elem>(cn + nn * ch);
    }
  }
  std::string name = N->name().empty() || H->name().empty() ? std::string{} : N->name() + ":" + H->name();
  GroupPtr G = share(FiniteGroup::from_flat_table(n, std::move(flat), name));
  std::vector<Elem> pr(n), sec(nh), inc(nn);
  for (std::size_t a = 0; a < n; ++a) pr[a] = static_cast<Elem>(a / nn);
  for (std::size_t h = 0; h < nh; ++h) sec[h] = static_cast<Elem>(nn * h);
  for (std::size_t x = 0; x < nn; ++x) inc[x] = static_cast<Elem>(x);
  return {G, GroupHom(G, H, std::move(pr)), GroupHom(H, G, std::move(sec)), GroupHom(N, G, std::move(inc))};
}

GroupPtr direct_product(const FiniteGroup& A, const FiniteGroup& B, std::string name) {
  const std::size_t na = A.order(), nb = B.order(), n = na * nb;
  std::vector<Elem> flat(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const Elem a = A.mul(static_cast<Elem>(x % na), static_cast<Elem>(y % na));
      const Elem b = B.mul(static_cast<Elem>(x / na), static_cast<Elem>(y / na));
      flat[x * n + y] = static_cast<Elem>(a + na * b);
    }
  if (name.empty() && !A.name().empty() && !B.name().empty()) name = A.name() + "x" + B.name();
  return share(FiniteGroup::from_flat_table(n, std::move(flat), std::move(name)));
}

GroupPtr cyclic_group(std::size_t n) {
  require(n >= 1, "cyclic_group: order must be positive");
  std::vector<Elem> flat(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) flat[a * n + b] = static_cast<Elem>((a + b) % n);
  return share(FiniteGroup::from_flat_table(n, std::move(flat), "C" + std::to_string(n)));
}

GroupPtr metacyclic_group(std::size_t m, std::size_t n, std::size_t r, std::size_t s, std::string name) {
  require(m >= 1 && n >= 1, "metacyclic_group: orders must be positive");
  require(std::gcd(r, m) == 1 || m == 1, "metacyclic_group: r must be a unit mod m");
  std::vector<std::size_t> rpow(n + 1, 1 % m);
  for (std::size_t j = 1; j <= n; ++j) rpow[j] = (rpow[j - 1] * r) % m;
  require(rpow[n] == 1 % m, "metacyclic_group: r^n must be 1 mod m");
  require((r * s) % m == s % m, "metacyclic_group: a^s must be central");
  const std::size_t N = m * n;
  std::vector<Elem> flat(N * N);
  for (std::size_t x = 0; x < N; ++x) {
    const std::size_t i = x % m, j = x / m;
    for (std::size_t y = 0; y < N; ++y) {
      const std::size_t k = y % m, l = y / m;
      std::size_t e = (i + rpow[j] * k) % m;
      if (j + l >= n) e = (e + s) % m;
      flat[x * N + y] = static_cast<Elem>(e + m * ((j + l) % n));
    }
  }
  return share(FiniteGroup::from_flat_table(N, std::move(flat), std::move(name)));
}

GroupPtr symmetric_group(unsigned k) {
  if (k <= 1) return share(FiniteGroup::from_permutations({Perm{0}}, kDefaultOrderCap, "S" + std::to_string(k)));
  Perm cyc(k), tr(k);
  for (unsigned i = 0; i < k; ++i) {
    cyc[i] = (i + 1) % k;
    tr[i] = i;
  }
  std::swap(tr[0], tr[1]);
  return share(FiniteGroup::from_permutations({cyc, tr}, kDefaultOrderCap, "S" + std::to_string(k)));
}

GroupPtr alternating_group(unsigned k) {
  std::vector<Perm> gens;
  for (unsigned i = 2; i < k; ++i) {
    Perm p(k);
    std::iota(p.begin(), p.end(), 0u);
    p[0] = 1;
    p[1] = i;
    p[i] = 0;
    gens.push_back(p);
  }
  if (gens.empty()) gens.push_back(Perm{0});
  return share(FiniteGroup::from_permutations(gens, kDefaultOrderCap, "A" + std::to_string(k)));
}

// --- reduction step --------------------------------------------------------------

ReductionStep fitting_reduction_step(const GroupPtr& G) {
  require(G->order() > 1, "fitting_reduction_step: group must be nontrivial");
  require(is_solvable(*G), "fitting_reduction_step: group is not solvable");
  ReductionStep step;
  step.G = G;
  step.N = fitting_subgroup(*G);
  if (step.N.size() == G->order()) {
    step.Gp = trivial_subgroup();
    step.gp_rule = "nilpotent: G' trivial";
  } else {
    for (auto& H : small_generated_subgroups(*G, 3)) {
      if (product_size(step.N, H) == G->order()) {
        step.Gp = std::move(H);
        break;
      }
    }
    ensure(!step.Gp.empty(), "fitting_reduction_step: no subgroup G' with N G' = G");
    ensure(step.Gp.size() < G->order(), "fitting_reduction_step: G' is not proper");
    step.gp_rule = "minimal order, lexicographic tie-break, generated by <= 3 elements";
  }
  step.N_group = as_group(*G, step.N);
  step.Gp_group = as_group(*G, step.Gp);
  std::vector<std::int64_t> npos(G->order(), -1);
  for (std::size_t i = 0; i < step.N.size(); ++i) npos[step.N[i]] = static_cast<std::int64_t>(i);
  step.action.resize(step.Gp.size());
  for (std::size_t h = 0; h < step.Gp.size(); ++h) {
    auto& a = step.action[h];
    a.resize(step.N.size());
    for (std::size_t x = 0; x < step.N.size(); ++x) {
      const std::int64_t c = npos[G->conj(step.Gp[h], step.N[x])];
      ensure(c >= 0, "fitting_reduction_step: Fitting subgroup is not normal");
      a[x] = static_cast<Elem>(c);
    }
  }
  step.semidirect = semidirect_product(step.N_group.group, step.Gp_group.group, step.action);
  const std::size_t nn = step.N.size();
  std::vector<Elem> phi(step.semidirect.group->order());
  for (std::size_t x = 0; x < phi.size(); ++x) phi[x] = G->mul(step.N[x % nn], step.Gp[x / nn]);
  step.phi = GroupHom(step.semidirect.group, G, std::move(phi));
  ensure(step.phi.is_surjective(), "fitting_reduction_step: phi is not surjective");
  return step;
}

std::vector<ReductionStep> solvable_tower(const GroupPtr& G) {
  require(is_solvable(*G), "solvable_tower: group is not solvable");
  std::vector<ReductionStep> tower;
  GroupPtr current = G;
  while (current->order() > 1) {
    tower.push_back(fitting_reduction_step(current));
    current = tower.back().Gp_group.group;
  }
  return tower;
}

// --- isomorphisms and homomorphisms ----------------------------------------------------

std::optional<std::vector<Elem>> find_isomorphism(const FiniteGroup& A, const FiniteGroup& B) {
  if (A.order() != B.order()) return std::nullopt;
  const std::size_t n = A.order();
  std::vector<unsigned> oa(n), ob(n);
  for (std::size_t i = 0; i < n; ++i) {
    oa[i] = A.element_order(static_cast<Elem>(i));
    ob[i] = B.element_order(static_cast<Elem>(i));
  }
  {
    auto sa = oa, sb = ob;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  const auto gens = generating_set(A);
  std::vector<std::vector<Elem>> cands(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t y = 0; y < n; ++y)
      if (ob[y] == oa[gens[i]]) cands[i].push_back(static_cast<Elem>(y));
  std::vector<Elem> imgs(gens.size());
  std::optional<std::vector<Elem>> result;
  auto rec = [&](auto&& self, std::size_t i) -> bool {
    if (i == gens.size()) {
      auto m = extend_hom(A, B, gens, imgs);
      if (!m) return false;
      std::vector<char> hit(n, 0);
      for (auto y : *m) {
        if (hit[y]) return false;
        hit[y] = 1;
      }
      result = std::move(m);
      return true;
    }
    for (Elem y : cands[i]) {
      imgs[i] = y;
      if (self(self, i + 1)) return true;
    }
    return false;
  };
  rec(rec, 0);
  return result;
}

std::vector<std::vector<Elem>> enumerate_homs(const FiniteGroup& G, const FiniteGroup& H) {
  const auto gens = generating_set(G);
  std::vector<std::vector<Elem>> cands(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const unsigned og = G.element_order(gens[i]);
    for (std::size_t y = 0; y < H.order(); ++y)
      if (og % H.element_order(static_cast<Elem>(y)) == 0) cands[i].push_back(static_cast<Elem>(y));
  }
  std::vector<std::vector<Elem>> out;
  std::vector<Elem> imgs(gens.size());
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == gens.size()) {
      if (auto m = extend_hom(G, H, gens, imgs)) out.push_back(std::move(*m));
      return;
    }
    for (Elem y : cands[i]) {
      imgs[i] = y;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace skewgal::grp
