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

#include "skewgal/ffield.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <tuple>

#include "skewgal/error.hpp"

namespace skewgal::ff {

namespace detail {

struct FieldData {
  std::uint64_t p = 0;
  unsigned n = 0;
  std::uint64_t order = 0;
  std::uint64_t seed = 0;
  zp::Poly modulus;
  // frob[k] is the n x n matrix (row-major, column j = image of x^j) of x -> x^(p^k).
  std::vector<std::vector<std::uint32_t>> frob;
};

}  // namespace detail

namespace {

using detail::FieldData;

std::vector<std::uint32_t> reduce_product(const std::vector<std::uint64_t>& prod, const FieldData& d) {
  // prod has length up to 2n-1 with entries already reduced mod p.
  std::vector<std::uint64_t> r = prod;
  const unsigned n = d.n;
  const std::uint64_t p = d.p;
  for (std::size_t k = r.size(); k-- > n;) {
    const std::uint64_t c = r[k];
    if (c == 0) continue;
    r[k] = 0;
    // x^k = x^(k-n) * x^n and x^n = -(m_0 + ... + m_{n-1} x^{n-1}).
    for (unsigned j = 0; j < n; ++j) {
      const std::uint64_t mj = d.modulus[j];
      if (mj == 0) continue;
      r[k - n + j] = (r[k - n + j] + p - zp::mul_mod(c, mj, p)) % p;
    }
  }
  std::vector<std::uint32_t> out(n, 0);
  for (unsigned i = 0; i < n && i < r.size(); ++i) out[i] = static_cast<std::uint32_t>(r[i]);
  return out;
}

std::vector<std::uint32_t> field_mul(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                                     const FieldData& d) {
  const unsigned n = d.n;
  const std::uint64_t p = d.p;
  std::vector<std::uint64_t> prod(2 * n - 1, 0);
  for (unsigned i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (unsigned j = 0; j < n; ++j) {
      if (b[j] == 0) continue;
      prod[i + j] = (prod[i + j] + zp::mul_mod(a[i], b[j], p)) % p;
    }
  }
  return reduce_product(prod, d);
}

std::vector<std::uint32_t> apply_matrix(const std::vector<std::uint32_t>& mat, std::span<const std::uint32_t> v,
                                        const FieldData& d) {
  const unsigned n = d.n;
  std::vector<std::uint32_t> out(n, 0);
  for (unsigned i = 0; i < n; ++i) {
    std::uint64_t acc = 0;
    for (unsigned j = 0; j < n; ++j) {
      if (v[j] == 0) continue;
      acc = (acc + zp::mul_mod(mat[i * n + j], v[j], d.p)) % d.p;
    }
    out[i] = static_cast<std::uint32_t>(acc);
  }
  return out;
}

std::vector<std::uint32_t> compose_matrix(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                                          const FieldData& d) {
  const unsigned n = d.n;
  std::vector<std::uint32_t> out(n * n, 0);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned k = 0; k < n; ++k) {
      const std::uint64_t aik = a[i * n + k];
      if (aik == 0) continue;
      for (unsigned j = 0; j < n; ++j)
        out[i * n + j] = static_cast<std::uint32_t>((out[i * n + j] + zp::mul_mod(aik, b[k * n + j], d.p)) % d.p);
    }
  return out;
}

std::vector<std::uint32_t> pow_coeffs(std::vector<std::uint32_t> base, std::uint64_t e, const FieldData& d) {
  std::vector<std::uint32_t> r(d.n, 0);
  r[0] = 1 % d.p;
  while (e) {
    if (e & 1) r = field_mul(r, base, d);
    base = field_mul(base, base, d);
    e >>= 1;
  }
  return r;
}

std::shared_ptr<const FieldData> build_field(std::uint64_t p, unsigned n, std::uint64_t seed) {
  auto d = std::make_shared<FieldData>();
  d->p = p;
  d->n = n;
  d->seed = seed;
  d->order = 1;
  for (unsigned i = 0; i < n; ++i) d->order *= p;
  d->modulus = seed == 0 ? zp::least_irreducible(n, p) : zp::seeded_irreducible(n, p, seed);
  ensure(zp::is_irreducible(d->modulus, p), "make_field: modulus failed irreducibility re-check");

  // Frobenius matrix: column j holds (x^j)^p = (x^p)^j.
  std::vector<std::uint32_t> xp(n, 0);
  if (n == 1) {
    xp[0] = 0;  // x = 0 in F_p[x]/(x)
  } else {
    xp[1] = 1;
  }
  xp = pow_coeffs(xp, p, *d);
  std::vector<std::uint32_t> f1(n * n, 0);
  std::vector<std::uint32_t> col(n, 0);
  col[0] = 1;
  for (unsigned j = 0; j < n; ++j) {
    for (unsigned i = 0; i < n; ++i) f1[i * n + j] = col[i];
    col = field_mul(col, xp, *d);
  }
  std::vector<std::uint32_t> id(n * n, 0);
  for (unsigned i = 0; i < n; ++i) id[i * n + i] = 1;
  d->frob.push_back(id);
  for (unsigned k = 1; k < n; ++k) d->frob.push_back(compose_matrix(f1, d->frob.back(), *d));
  return d;
}

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

std::map<std::tuple<std::uint64_t, unsigned, std::uint64_t>, std::shared_ptr<const FieldData>>& cache() {
  static std::map<std::tuple<std::uint64_t, unsigned, std::uint64_t>, std::shared_ptr<const FieldData>> c;
  return c;
}

}  // namespace

// --- FqField ---------------------------------------------------------------

FqField FqField::make(std::uint64_t p, unsigned n, std::uint64_t seed) {
  require(p < (1ull << 31) && zp::is_prime(p), "make_field: characteristic " + std::to_string(p) + " is not a prime");
  require(n >= 1, "make_field: degree must be at least 1");
  long double size = 1;
  for (unsigned i = 0; i < n; ++i) size *= static_cast<long double>(p);
  require(size <= static_cast<long double>(1ull << 62), "make_field: field too large (p^n must be at most 2^62)");
  const auto key = std::make_tuple(p, n, seed);
  {
    std::lock_guard<std::mutex> lock(cache_mutex());
    auto it = cache().find(key);
    if (it != cache().end()) return FqField(it->second);
  }
  auto d = build_field(p, n, seed);
  std::lock_guard<std::mutex> lock(cache_mutex());
  auto [it, inserted] = cache().emplace(key, d);
  return FqField(it->second);
}

FqField FqField::parse(const std::string& descriptor) {
  const auto caret = descriptor.find('^');
  const std::string ps = descriptor.substr(0, caret);
  const std::string ns = caret == std::string::npos ? "1" : descriptor.substr(caret + 1);
  std::uint64_t p = 0;
  unsigned n = 0;
  auto r1 = std::from_chars(ps.data(), ps.data() + ps.size(), p);
  auto r2 = std::from_chars(ns.data(), ns.data() + ns.size(), n);
  if (ps.empty() || ns.empty() || r1.ec != std::errc() || r1.ptr != ps.data() + ps.size() || r2.ec != std::errc() ||
      r2.ptr != ns.data() + ns.size())
    throw ParseError("bad field descriptor '" + descriptor + "' (expected p^n)");
  return make(p, n, 0);
}

std::uint64_t FqField::characteristic() const { return data_->p; }
unsigned FqField::degree() const { return data_->n; }
std::uint64_t FqField::size() const { return data_->order; }
std::uint64_t FqField::seed() const { return data_->seed; }
const zp::Poly& FqField::modulus() const { return data_->modulus; }

std::string FqField::descriptor() const {
  return std::to_string(data_->p) + "^" + std::to_string(data_->n);
}

FqElem FqField::zero() const { return FqElem(*this, std::vector<std::uint32_t>(data_->n, 0)); }

FqElem FqField::one() const {
  std::vector<std::uint32_t> c(data_->n, 0);
  c[0] = 1;
  return FqElem(*this, std::move(c));
}

FqElem FqField::generator() const {
  std::vector<std::uint32_t> c(data_->n, 0);
  if (data_->n == 1) {
    c[0] = static_cast<std::uint32_t>((data_->p - data_->modulus[0]) % data_->p);
  } else {
    c[1] = 1;
  }
  return FqElem(*this, std::move(c));
}

FqElem FqField::from_coeffs(std::vector<std::uint32_t> coeffs) const { return FqElem(*this, std::move(coeffs)); }

FqElem FqField::from_int(std::int64_t c) const {
  const auto p = static_cast<std::int64_t>(data_->p);
  std::int64_t r = c % p;
  if (r < 0) r += p;
  std::vector<std::uint32_t> v(data_->n, 0);
  v[0] = static_cast<std::uint32_t>(r);
  return FqElem(*this, std::move(v));
}

FqElem FqField::from_index(std::uint64_t index) const {
  require(index < data_->order, "from_index: index out of range");
  std::vector<std::uint32_t> c(data_->n, 0);
  for (unsigned i = 0; i < data_->n; ++i) {
    c[i] = static_cast<std::uint32_t>(index % data_->p);
    index /= data_->p;
  }
  return FqElem(*this, std::move(c));
}

std::vector<FqElem> FqField::elements() const {
  require(data_->order <= (1ull << 24), "elements: field too large to enumerate");
  std::vector<FqElem> out;
  out.reserve(data_->order);
  for (std::uint64_t i = 0; i < data_->order; ++i) out.push_back(from_index(i));
  return out;
}

FqElem FqField::frobenius(const FqElem& x, unsigned k) const {
  require(x.field() == *this, "frobenius: element belongs to another field");
  return FqElem(*this, apply_matrix(data_->frob[k % data_->n], x.coeffs(), *data_));
}

bool FqField::operator==(const FqField& other) const {
  if (data_ == other.data_) return true;
  if (!data_ || !other.data_) return false;
  return data_->p == other.data_->p && data_->n == other.data_->n && data_->modulus == other.data_->modulus;
}

// --- FqElem ----------------------------------------------------------------

FqElem::FqElem(FqField field, std::vector<std::uint32_t> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  const auto* d = field_.data();
  require(d != nullptr, "FqElem: null field");
  require(coeffs_.size() <= d->n, "FqElem: too many coefficients");
  coeffs_.resize(d->n, 0);
  for (auto& c : coeffs_) c = static_cast<std::uint32_t>(c % d->p);
}

std::uint64_t FqElem::index() const {
  std::uint64_t idx = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) idx = idx * field_.characteristic() + coeffs_[i];
  return idx;
}

bool FqElem::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](std::uint32_t c) { return c == 0; });
}

bool FqElem::is_one() const {
  if (coeffs_.empty() || coeffs_[0] != 1) return false;
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](std::uint32_t c) { return c == 0; });
}

FqElem FqElem::operator+(const FqElem& o) const {
  require(field_ == o.field_, "FqElem: field mismatch in +");
  const std::uint64_t p = field_.characteristic();
  std::vector<std::uint32_t> r(coeffs_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = static_cast<std::uint32_t>((coeffs_[i] + std::uint64_t{o.coeffs_[i]}) % p);
  return FqElem(field_, std::move(r));
}

FqElem FqElem::operator-(const FqElem& o) const {
  require(field_ == o.field_, "FqElem: field mismatch in -");
  const std::uint64_t p = field_.characteristic();
  std::vector<std::uint32_t> r(coeffs_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = static_cast<std::uint32_t>((coeffs_[i] + p - o.coeffs_[i]) % p);
  return FqElem(field_, std::move(r));
}

FqElem FqElem::operator-() const { return field_.zero() - *this; }

FqElem FqElem::operator*(const FqElem& o) const {
  require(field_ == o.field_, "FqElem: field mismatch in *");
  return FqElem(field_, field_mul(coeffs_, o.coeffs_, *field_.data()));
}

FqElem FqElem::operator/(const FqElem& o) const { return *this * o.inverse(); }

FqElem FqElem::pow(std::uint64_t e) const { return FqElem(field_, pow_coeffs(coeffs_, e, *field_.data())); }

FqElem FqElem::inverse() const {
  require(!is_zero(), "FqElem: inverse of zero");
  return pow(field_.size() - 2);
}

bool FqElem::operator==(const FqElem& o) const { return field_ == o.field_ && coeffs_ == o.coeffs_; }

// --- FieldAut --------------------------------------------------------------

FieldAut::FieldAut(FqField field, std::int64_t k) : field_(std::move(field)) {
  const auto n = static_cast<std::int64_t>(field_.degree());
  std::int64_t r = k % n;
  if (r < 0) r += n;
  k_ = static_cast<unsigned>(r);
}

unsigned FieldAut::order() const {
  const unsigned n = field_.degree();
  return n / std::gcd(n, k_);
}

FqElem FieldAut::operator()(const FqElem& x) const { return field_.frobenius(x, k_); }

FieldAut FieldAut::compose(const FieldAut& other) const {
  require(field_ == other.field_, "FieldAut: composing automorphisms of different fields");
  return FieldAut(field_, static_cast<std::int64_t>(k_) + other.k_);
}

FieldAut FieldAut::inverse() const { return FieldAut(field_, -static_cast<std::int64_t>(k_)); }

FieldAut FieldAut::power(std::int64_t e) const {
  const auto n = static_cast<std::int64_t>(field_.degree());
  return FieldAut(field_, (static_cast<std::int64_t>(k_) * (e % n)) % n);
}

FieldAut frobenius(const FqField& field, std::int64_t k) { return FieldAut(field, k); }

// --- polynomials over F_q, used for root finding -----------------------------

namespace {

using FPoly = std::vector<FqElem>;

void ftrim(FPoly& f) {
  while (!f.empty() && f.back().is_zero()) f.pop_back();
}

FPoly fsub(const FPoly& a, const FPoly& b, const FqField& F) {
  FPoly r(std::max(a.size(), b.size()), F.zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = r[i] - b[i];
  ftrim(r);
  return r;
}

FPoly fadd(const FPoly& a, const FPoly& b, const FqField& F) {
  FPoly r(std::max(a.size(), b.size()), F.zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = r[i] + b[i];
  ftrim(r);
  return r;
}

FPoly fmul(const FPoly& a, const FPoly& b, const FqField& F) {
  if (a.empty() || b.empty()) return {};
  FPoly r(a.size() + b.size() - 1, F.zero());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  ftrim(r);
  return r;
}

std::pair<FPoly, FPoly> fdivmod(FPoly a, const FPoly& b, const FqField& F) {
  ftrim(a);
  if (a.size() < b.size()) return {FPoly{}, a};
  FPoly q(a.size() - b.size() + 1, F.zero());
  const FqElem inv = b.back().inverse();
  for (std::size_t k = q.size(); k-- > 0;) {
    const FqElem c = a[k + b.size() - 1] * inv;
    q[k] = c;
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) a[k + j] -= c * b[j];
  }
  ftrim(q);
  ftrim(a);
  return {q, a};
}

FPoly fmonic(const FPoly& f) {
  if (f.empty()) return f;
  const FqElem inv = f.back().inverse();
  FPoly r = f;
  for (auto& c : r) c *= inv;
  return r;
}

FPoly fgcd(FPoly a, FPoly b, const FqField& F) {
  ftrim(a);
  ftrim(b);
  while (!b.empty()) {
    FPoly r = fdivmod(a, b, F).second;
    a = std::move(b);
    b = std::move(r);
  }
  return fmonic(a);
}

FPoly fpowmod(FPoly base, std::uint64_t e, const FPoly& m, const FqField& F) {
  FPoly r = fdivmod(FPoly{F.one()}, m, F).second;
  base = fdivmod(base, m, F).second;
  while (e) {
    if (e & 1) r = fdivmod(fmul(r, base, F), m, F).second;
    base = fdivmod(fmul(base, base, F), m, F).second;
    e >>= 1;
  }
  return r;
}

void collect_roots(const FPoly& f, const FqField& F, std::vector<FqElem>& out) {
  const int deg = static_cast<int>(f.size()) - 1;
  if (deg <= 0) return;
  if (deg == 1) {
    out.push_back(-(f[0] / f[1]));
    return;
  }
  const std::uint64_t q = F.size();
  const std::uint64_t p = F.characteristic();
  // Low-index candidates have degenerate traces for sparse moduli, so draw
  // them from a fixed-seed generator instead.
  std::mt19937_64 rng(0x5eedull + static_cast<std::uint64_t>(deg));
  for (unsigned attempt = 0; attempt < 4096; ++attempt) {
    const FqElem a = F.from_index(1 + rng() % (q - 1));
    FPoly h;
    if (p == 2) {
      // Absolute trace of a*X modulo f.
      FPoly term = fdivmod(FPoly{F.zero(), a}, f, F).second;
      FPoly tr = term;
      for (unsigned i = 1; i < F.degree(); ++i) {
        term = fdivmod(fmul(term, term, F), f, F).second;
        tr = fadd(tr, term, F);
      }
      h = fgcd(f, tr, F);
    } else {
      FPoly w = fpowmod(FPoly{a, F.one()}, (q - 1) / 2, f, F);
      h = fgcd(f, fsub(w, FPoly{F.one()}, F), F);
    }
    const int dh = static_cast<int>(h.size()) - 1;
    if (dh > 0 && dh < deg) {
      collect_roots(h, F, out);
      collect_roots(fdivmod(f, h, F).first, F, out);
      return;
    }
  }
  throw InternalError("split_roots: polynomial does not split into distinct linear factors");
}

}  // namespace

std::vector<FqElem> split_roots(const std::vector<FqElem>& poly) {
  FPoly f = poly;
  ftrim(f);
  require(!f.empty(), "split_roots: zero polynomial");
  const FqField F = f.front().field();
  std::vector<FqElem> roots;
  collect_roots(fmonic(f), F, roots);
  std::sort(roots.begin(), roots.end(), [](const FqElem& a, const FqElem& b) { return a.index() < b.index(); });
  return roots;
}

// --- SubfieldEmbedding -------------------------------------------------------

SubfieldEmbedding::SubfieldEmbedding(FqField small, FqField big) : small_(std::move(small)), big_(std::move(big)) {
  require(small_.characteristic() == big_.characteristic(), "SubfieldEmbedding: characteristics differ");
  require(big_.degree() % small_.degree() == 0,
          "SubfieldEmbedding: degree " + std::to_string(small_.degree()) + " does not divide " +
              std::to_string(big_.degree()));
  std::vector<FqElem> g;
  for (auto c : small_.modulus()) g.push_back(big_.from_int(static_cast<std::int64_t>(c)));
  const auto roots = split_roots(g);
  ensure(roots.size() == small_.degree(), "SubfieldEmbedding: modulus of the small field does not split");
  image_ = roots.front();
}

unsigned SubfieldEmbedding::relative_degree() const { return big_.degree() / small_.degree(); }

FqElem SubfieldEmbedding::map(const FqElem& x) const {
  require(x.field() == small_, "SubfieldEmbedding::map: element not in the small field");
  FqElem acc = big_.zero();
  const auto c = x.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * image_ + big_.from_int(c[i]);
  return acc;
}

bool SubfieldEmbedding::contains(const FqElem& z) const {
  require(z.field() == big_, "SubfieldEmbedding::contains: element not in the big field");
  return big_.frobenius(z, small_.degree()) == z;
}

FqElem SubfieldEmbedding::preimage(const FqElem& z) const {
  require(contains(z), "SubfieldEmbedding::preimage: element is not in the image of the small field");
  const unsigned m = small_.degree();
  const unsigned n = big_.degree();
  const std::uint64_t p = big_.characteristic();
  // Solve sum_i c_i * image^i = z over F_p: n equations, m unknowns.
  std::vector<std::vector<std::uint64_t>> rows(n, std::vector<std::uint64_t>(m + 1, 0));
  FqElem pw = big_.one();
  for (unsigned j = 0; j < m; ++j) {
    for (unsigned i = 0; i < n; ++i) rows[i][j] = pw.coeffs()[i];
    pw = pw * image_;
  }
  for (unsigned i = 0; i < n; ++i) rows[i][m] = z.coeffs()[i];
  unsigned r = 0;
  std::vector<int> pivot_col;
  for (unsigned c = 0; c < m && r < n; ++c) {
    unsigned piv = r;
    while (piv < n && rows[piv][c] == 0) ++piv;
    if (piv == n) continue;
    std::swap(rows[piv], rows[r]);
    const std::uint64_t inv = zp::inv_mod(rows[r][c], p);
    for (auto& v : rows[r]) v = zp::mul_mod(v, inv, p);
    for (unsigned i = 0; i < n; ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const std::uint64_t f = rows[i][c];
      for (unsigned j = 0; j <= m; ++j) rows[i][j] = (rows[i][j] + p - zp::mul_mod(f, rows[r][j], p)) % p;
    }
    pivot_col.push_back(static_cast<int>(c));
    ++r;
  }
  ensure(pivot_col.size() == m, "SubfieldEmbedding::preimage: powers of the image are dependent");
  std::vector<std::uint32_t> coeffs(m, 0);
  for (unsigned i = 0; i < m; ++i) coeffs[pivot_col[i]] = static_cast<std::uint32_t>(rows[i][m]);
  FqElem x = small_.from_coeffs(coeffs);
  ensure(map(x) == z, "SubfieldEmbedding::preimage: solution does not map back");
  return x;
}

std::vector<FieldAut> galois_group(const FqField& L, const SubfieldEmbedding& K) {
  require(K.big() == L, "galois_group: embedding does not land in L");
  const unsigned m = K.small().degree();
  const unsigned e = K.relative_degree();
  std::vector<FieldAut> out;
  out.reserve(e);
  for (unsigned j = 1; j <= e; ++j) out.emplace_back(L, static_cast<std::int64_t>(j) * m);
  return out;
}

FieldAut restrict_aut(const FieldAut& a, const SubfieldEmbedding& K) {
  require(a.field() == K.big(), "restrict_aut: automorphism is not on the big field");
  return FieldAut(K.small(), a.exponent());
}

}  // namespace skewgal::ff
