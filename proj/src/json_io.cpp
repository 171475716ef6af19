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

#include "skewgal/json_io.hpp"

#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include "skewgal/error.hpp"
#include "skewgal/group_catalog.hpp"

namespace skewgal::io {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing key '") + key + "'");
  return j.at(key);
}

template <class T>
T get_as(const json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ParseError(std::string("wrong type for ") + what);
  }
}

std::vector<unsigned> uvec(const json& j, const char* what) { return get_as<std::vector<unsigned>>(j, what); }

}  // namespace

json load_json_arg(const std::string& arg) {
  std::string text = arg;
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream in(arg);
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("invalid JSON (neither a readable file nor inline JSON): " + std::string(e.what()));
  }
}

json int_to_json(const Int& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(x);
  return x.str();
}

Int int_from_json(const json& j) {
  if (j.is_number_integer()) return j.is_number_unsigned() ? Int(j.get<std::uint64_t>()) : Int(j.get<std::int64_t>());
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    const std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos)
      throw ParseError("bad integer string '" + s + "'");
    return Int(s);
  }
  throw ParseError("expected an integer");
}

json zpoly_to_json(const zx::ZPoly& f) {
  json a = json::array();
  for (const auto& c : f) a.push_back(int_to_json(c));
  return a;
}

zx::ZPoly zpoly_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("polynomial must be an array of coefficients");
  zx::ZPoly f;
  for (const auto& c : j) f.push_back(int_from_json(c));
  zx::trim(f);
  return f;
}

grp::GroupPtr group_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("group must be a JSON object");
  const std::string name = j.contains("name") ? get_as<std::string>(j["name"], "name") : std::string{};
  if (j.contains("catalog")) return grp::catalog_group(get_as<std::string>(j["catalog"], "catalog"));
  if (j.contains("table")) {
    auto table = get_as<std::vector<std::vector<grp::Elem>>>(j["table"], "table");
    if (j.contains("order") && get_as<std::size_t>(j["order"], "order") != table.size())
      throw ParseError("group: 'order' differs from the table size");
    return grp::share(grp::FiniteGroup::from_table(table, name));
  }
  if (j.contains("perm_gens")) {
    const auto gens_cycles = get_as<std::vector<std::vector<std::vector<std::uint32_t>>>>(j["perm_gens"], "perm_gens");
    std::uint32_t degree = 1;
    for (const auto& g : gens_cycles)
      for (const auto& c : g)
        for (auto x : c) degree = std::max(degree, x + 1);
    std::vector<grp::Perm> gens;
    for (const auto& g : gens_cycles) {
      grp::Perm p(degree);
      for (std::uint32_t i = 0; i < degree; ++i) p[i] = i;
      std::vector<char> moved(degree, 0);
      for (const auto& c : g)
        for (std::size_t k = 0; k < c.size(); ++k) {
          require(!moved[c[k]], "perm_gens: point " + std::to_string(c[k]) + " occurs twice in one generator");
          moved[c[k]] = 1;
          p[c[k]] = c[(k + 1) % c.size()];
        }
      gens.push_back(std::move(p));
    }
    return grp::share(grp::FiniteGroup::from_permutations(gens, grp::kDefaultOrderCap, name));
  }
  throw ParseError("group JSON needs 'table', 'perm_gens' or 'catalog'");
}

json group_to_json(const grp::FiniteGroup& G) {
  json j;
  if (!G.name().empty()) j["name"] = G.name();
  j["order"] = G.order();
  j["table"] = G.table();
  return j;
}

std::vector<grp::Elem> hom_images_from_json(const json& j) {
  if (j.is_object()) return get_as<std::vector<grp::Elem>>(field(j, "images"), "images");
  return get_as<std::vector<grp::Elem>>(j, "homomorphism images");
}

json subgroup_to_json(const grp::Subgroup& H) { return json(H); }

json step_to_json(const grp::ReductionStep& s) {
  json j;
  j["order"] = s.G->order();
  j["N"] = subgroup_to_json(s.N);
  j["N_order"] = s.N.size();
  j["N_nilpotent"] = grp::is_nilpotent(*s.N_group.group);
  j["Gp"] = subgroup_to_json(s.Gp);
  j["Gp_order"] = s.Gp.size();
  j["gp_rule"] = s.gp_rule;
  j["action"] = s.action;
  j["phi"] = s.phi.images();
  j["phi_surjective"] = s.phi.is_surjective();
  j["phi_kernel_order"] = s.phi.kernel().size();
  return j;
}

json elem_to_json(const ff::FqElem& x) {
  return json(std::vector<std::uint32_t>(x.coeffs().begin(), x.coeffs().end()));
}

ff::FqElem elem_from_json(const ff::FqField& F, const json& j) {
  auto c = get_as<std::vector<std::uint32_t>>(j, "field element");
  require(c.size() <= F.degree(), "field element has more than n coefficients");
  for (auto x : c) require(x < F.characteristic(), "field element coefficient out of range");
  return F.from_coeffs(std::move(c));
}

json aut_to_json(const ff::FieldAut& a) { return json{{"frob", a.exponent()}}; }

json orepoly_to_json(const ore::OrePoly& f) {
  json j;
  j["base"] = f.base().descriptor();
  j["frob"] = f.twist().exponent();
  json c = json::array();
  for (const auto& x : f.coeffs()) c.push_back(elem_to_json(x));
  j["coeffs"] = c;
  return j;
}

ore::OrePoly orepoly_from_json(const json& j) {
  const auto F = ff::FqField::parse(get_as<std::string>(field(j, "base"), "base"));
  const auto k = get_as<std::int64_t>(field(j, "frob"), "frob");
  std::vector<ff::FqElem> c;
  for (const auto& x : field(j, "coeffs")) c.push_back(elem_from_json(F, x));
  return ore::OrePoly(ff::FieldAut(F, k), std::move(c));
}

json verdict_to_json(const embed::Verdict& v) {
  json j;
  j["status"] = embed::to_string(v.status);
  j["d"] = v.d;
  j["degree"] = v.degree;
  j["coprime_weak_solution"] = v.coprime_weak_solution;
  j["coprime_degree"] = v.coprime_degree;
  j["split"] = v.split;
  j["tau"] = v.tau ? aut_to_json(*v.tau) : json(nullptr);
  j["tau_unique"] = v.tau_unique;
  j["witness"] = v.witness ? json{{"g", v.witness->g}, {"ord", v.witness->ord}} : json(nullptr);
  j["section"] = v.section ? json(*v.section) : json(nullptr);
  return j;
}

json local_cert_to_json(const splitcon::LocalCertificate& c) {
  json j;
  j["spec"] = splitcon::format_spec(c.spec);
  j["passed"] = c.passed;
  j["reason"] = c.reason;
  if (c.root_count) j["root_count"] = *c.root_count;
  if (c.pattern) j["pattern"] = *c.pattern;
  if (c.residual_a) {
    j["residual"] = json{{"a", int_to_json(*c.residual_a)},
                         {"b", int_to_json(*c.residual_b)},
                         {"v_a", *c.v_a},
                         {"v_b", *c.v_b}};
  }
  return j;
}

json report_to_json(const splitcon::ConstructionReport& r) {
  json j;
  j["schema"] = "skewgal.report/1";
  j["Q"] = zpoly_to_json(r.Q);
  j["n"] = r.n;
  json specs = json::array();
  for (const auto& s : r.specs) specs.push_back(splitcon::format_spec(s));
  j["specs"] = specs;
  j["L_ram"] = std::vector<std::uint64_t>(r.L_ram.begin(), r.L_ram.end());
  j["p_kernel"] = r.p_kernel;
  json aux = json::array();
  for (const auto& a : r.aux) aux.push_back(json{{"prime", a.prime}, {"kind", splitcon::kind_tag(a)}});
  j["aux"] = aux;
  j["precision"] = r.precision;
  j["seed"] = r.seed;
  json sn;
  json pats = json::array();
  for (const auto& p : r.sn.patterns)
    pats.push_back(json{{"prime", p.prime}, {"squarefree", p.squarefree}, {"pattern", p.pattern}});
  sn["patterns"] = pats;
  sn["n_cycle"] = r.sn.n_cycle;
  sn["n_minus_1_cycle"] = r.sn.n_minus_1_cycle;
  sn["transposition"] = r.sn.transposition;
  sn["conclusion"] = r.sn.conclusion;
  sn["reason"] = r.sn.reason;
  json locals = json::array();
  for (const auto& c : r.locals) locals.push_back(local_cert_to_json(c));
  json disjoint{{"prime", r.disjoint.prime},
                {"disc_valuation", r.disjoint.disc_valuation},
                {"odd", r.disjoint.odd},
                {"prime_unramified_in_L", r.disjoint.prime_unramified_in_L}};
  j["certificates"] = json{{"sn", sn}, {"locals", locals}, {"disjoint", disjoint}};
  j["certified"] = r.certified;
  return j;
}

namespace {

splitcon::LocalSpec aux_from_json(const json& a) {
  const auto prime = get_as<std::uint64_t>(field(a, "prime"), "aux prime");
  return splitcon::parse_spec(std::to_string(prime) + ":" + get_as<std::string>(field(a, "kind"), "aux kind"));
}

}  // namespace

splitcon::ConstructionReport report_from_json(const json& j) {
  splitcon::ConstructionReport r;
  r.Q = zpoly_from_json(field(j, "Q"));
  r.n = get_as<unsigned>(field(j, "n"), "n");
  for (const auto& s : field(j, "specs")) r.specs.push_back(splitcon::parse_spec(get_as<std::string>(s, "spec")));
  for (auto p : get_as<std::vector<std::uint64_t>>(field(j, "L_ram"), "L_ram")) r.L_ram.insert(p);
  r.p_kernel = get_as<std::uint64_t>(field(j, "p_kernel"), "p_kernel");
  for (const auto& a : field(j, "aux")) r.aux.push_back(aux_from_json(a));
  r.precision = get_as<unsigned>(field(j, "precision"), "precision");
  r.seed = j.contains("seed") ? get_as<std::uint64_t>(j["seed"], "seed") : 0;
  const json& certs = field(j, "certificates");
  const json& sn = field(certs, "sn");
  for (const auto& p : field(sn, "patterns")) {
    splitcon::PatternRecord rec;
    rec.prime = get_as<std::uint64_t>(field(p, "prime"), "pattern prime");
    rec.squarefree = get_as<bool>(field(p, "squarefree"), "squarefree");
    rec.pattern = uvec(field(p, "pattern"), "pattern");
    r.sn.patterns.push_back(std::move(rec));
  }
  r.sn.n_cycle = get_as<bool>(field(sn, "n_cycle"), "n_cycle");
  r.sn.n_minus_1_cycle = get_as<bool>(field(sn, "n_minus_1_cycle"), "n_minus_1_cycle");
  r.sn.transposition = get_as<bool>(field(sn, "transposition"), "transposition");
  r.sn.conclusion = get_as<bool>(field(sn, "conclusion"), "conclusion");
  r.sn.reason = sn.contains("reason") ? get_as<std::string>(sn["reason"], "reason") : std::string{};
  for (const auto& c : field(certs, "locals")) {
    splitcon::LocalCertificate lc;
    lc.spec = splitcon::parse_spec(get_as<std::string>(field(c, "spec"), "spec"));
    lc.passed = get_as<bool>(field(c, "passed"), "passed");
    lc.reason = c.contains("reason") ? get_as<std::string>(c["reason"], "reason") : std::string{};
    if (c.contains("root_count")) lc.root_count = get_as<unsigned>(c["root_count"], "root_count");
    if (c.contains("pattern")) lc.pattern = uvec(c["pattern"], "pattern");
    if (c.contains("residual")) {
      const json& res = c["residual"];
      lc.residual_a = int_from_json(field(res, "a"));
      lc.residual_b = int_from_json(field(res, "b"));
      lc.v_a = get_as<int>(field(res, "v_a"), "v_a");
      lc.v_b = get_as<int>(field(res, "v_b"), "v_b");
    }
    r.locals.push_back(std::move(lc));
  }
  const json& d = field(certs, "disjoint");
  r.disjoint.prime = get_as<std::uint64_t>(field(d, "prime"), "disjoint prime");
  r.disjoint.disc_valuation = get_as<int>(field(d, "disc_valuation"), "disc_valuation");
  r.disjoint.odd = d.contains("odd") ? get_as<bool>(d["odd"], "odd") : false;
  r.disjoint.prime_unramified_in_L =
      d.contains("prime_unramified_in_L") ? get_as<bool>(d["prime_unramified_in_L"], "prime_unramified_in_L") : false;
  r.certified = get_as<bool>(field(j, "certified"), "certified");
  return r;
}

json level_to_json(const quat::LevelResult& r) {
  json j;
  j["place"] = r.place;
  j["level"] = r.level == quat::kInfiniteLevel ? json("INFINITY") : json(r.level);
  json w = json::array();
  for (const auto& x : r.witness) w.push_back(int_to_json(x));
  j["witness"] = w;
  j["witness_modulus"] = int_to_json(r.witness_modulus);
  j["element_witness"] = r.element_witness;
  j["certificate"] = r.certificate;
  j["verified"] = r.verified;
  return j;
}

json feasibility_to_json(const quat::QuadField& K, const quat::Feasibility& f) {
  json j;
  j["field"] = K.descriptor();
  j["feasible"] = f.feasible;
  j["place"] = f.feasible ? json(f.place) : json(nullptr);
  j["reason"] = f.reason;
  if (!K.is_rationals()) {
    json t;
    t["behavior"] = f.two_adic.behavior;
    t["e"] = f.two_adic.e;
    t["f"] = f.two_adic.f;
    t["level"] = f.two_adic.level;
    auto el = [](const std::optional<quat::IntegralElement>& e) {
      return e ? json{int_to_json(e->u), int_to_json(e->v)} : json(nullptr);
    };
    t["x"] = el(f.two_adic.x);
    t["y"] = el(f.two_adic.y);
    t["certificate"] = f.two_adic.certificate;
    j["two_adic"] = t;
  }
  j["division_ring"] = quat::is_division_ring(K);
  j["nonsplit_places"] = quat::nonsplit_places(K);
  return j;
}

}  // namespace skewgal::io
