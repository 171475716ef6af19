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

// skewgal: JSON front end to the library.
//
// Exit codes: 0 success, 1 domain error, 2 parse error, 3 certification or
// self-check failure.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "skewgal/checks/suites.hpp"
#include "skewgal/embed.hpp"
#include "skewgal/error.hpp"
#include "skewgal/groups.hpp"
#include "skewgal/json_io.hpp"
#include "skewgal/orepoly.hpp"
#include "skewgal/quat.hpp"
#include "skewgal/splitcon.hpp"

namespace {

using namespace skewgal;
using io::json;

constexpr int kExitDomain = 1;
constexpr int kExitParse = 2;
constexpr int kExitCertification = 3;

struct Globals {
  bool pretty = false;
  std::uint64_t seed = 0;
};

void emit(const Globals& g, const json& j) { std::cout << (g.pretty ? j.dump(2) : j.dump()) << "\n"; }

int fail(const std::string& kind, const std::string& message, int code, json extra = json::object()) {
  json e;
  e["error"] = kind;
  e["message"] = message;
  for (auto it = extra.begin(); it != extra.end(); ++it) e[it.key()] = it.value();
  e["exit_code"] = code;
  std::cerr << e.dump() << "\n";
  return code;
}

ff::FqField field_arg(const std::string& descriptor, std::uint64_t seed) {
  const auto F = ff::FqField::parse(descriptor);
  return seed == 0 ? F : ff::FqField::make(F.characteristic(), F.degree(), seed);
}

// --- verbs --------------------------------------------------------------------------

struct FieldArgs {
  std::string K, L;
  std::int64_t sigma = 0;
};

int run_decide(const Globals& g, const FieldArgs& f, const std::string& group, const std::string& alpha) {
  const auto G = io::group_from_json(io::load_json_arg(group));
  const auto images = io::hom_images_from_json(io::load_json_arg(alpha));
  const auto ext = embed::make_extension(field_arg(f.K, g.seed), field_arg(f.L, g.seed));
  const auto ep = embed::make_problem(G, ext, images);
  const auto v = embed::decide_sigma_solvability(ep, ff::FieldAut(ext.K, f.sigma));
  emit(g, io::verdict_to_json(v));
  return 0;
}

int run_lift_tau(const Globals& g, const FieldArgs& f) {
  const auto ext = embed::make_extension(field_arg(f.K, g.seed), field_arg(f.L, g.seed));
  const ff::FieldAut sigma(ext.K, f.sigma);
  json out;
  out["sigma"] = io::aut_to_json(sigma);
  out["d"] = sigma.order();
  out["degree"] = ext.degree;
  out["tau"] = io::aut_to_json(embed::lift_sigma(ext, sigma));
  json ext_list = json::array();
  for (const auto& c : embed::extensions_of(ext, sigma)) ext_list.push_back({{"frob", c.exponent}, {"order", c.order}});
  out["extensions"] = ext_list;
  emit(g, out);
  return 0;
}

int run_extension_criteria(const Globals& g, const FieldArgs& f, std::int64_t tau) {
  const auto ext = embed::make_extension(field_arg(f.K, g.seed), field_arg(f.L, g.seed));
  const auto r = embed::checked_extension_criteria(ext, ff::FieldAut(ext.K, f.sigma), ff::FieldAut(ext.L, tau));
  json out;
  out["order_coprime"] = r.order_coprime;
  out["is_direct_product"] = r.is_direct_product;
  out["tau_order"] = r.tau_order;
  out["generated_order"] = r.generated_order;
  out["intersection_order"] = r.intersection_order;
  emit(g, out);
  return 0;
}

int run_ore(const Globals& g, const std::string& op, const std::string& fs, const std::string& gs) {
  const auto f = io::orepoly_from_json(io::load_json_arg(fs));
  const auto h = io::orepoly_from_json(io::load_json_arg(gs));
  json out;
  out["op"] = op;
  if (op == "mul") {
    out["product"] = io::orepoly_to_json(f * h);
  } else if (op == "divmod") {
    const auto d = ore::ore_right_divmod(f, h);
    out["quotient"] = io::orepoly_to_json(d.quotient);
    out["remainder"] = io::orepoly_to_json(d.remainder);
  } else if (op == "gcd") {
    out["gcd"] = io::orepoly_to_json(ore::ore_right_gcd(f, h));
  } else if (op == "lcm") {
    out["lcm"] = io::orepoly_to_json(ore::ore_left_lcm(f, h));
  } else {
    const auto w = ore::ore_witness(f, h);
    out["r"] = io::orepoly_to_json(w.r);
    out["s"] = io::orepoly_to_json(w.s);
    out["common_multiple"] = io::orepoly_to_json(f * w.r);
  }
  emit(g, out);
  return 0;
}

int run_tower(const Globals& g, const std::string& group) {
  const auto G = io::group_from_json(io::load_json_arg(group));
  require(grp::is_solvable(*G), "tower: group is not solvable");
  json out;
  out["order"] = G->order();
  out["nilpotent"] = grp::is_nilpotent(*G);
  out["fitting"] = io::subgroup_to_json(grp::fitting_subgroup(*G));
  json steps = json::array();
  for (const auto& s : grp::solvable_tower(G)) steps.push_back(io::step_to_json(s));
  out["steps"] = steps;
  emit(g, out);
  return 0;
}

int run_construct(const Globals& g, const std::vector<std::string>& specs, std::uint64_t p_kernel, unsigned n_min) {
  std::vector<splitcon::LocalSpec> S;
  for (const auto& s : specs) S.push_back(splitcon::parse_spec(s));
  const auto rep = splitcon::construct_lprime(S, p_kernel, n_min, g.seed);
  emit(g, io::report_to_json(rep));
  return rep.certified ? 0 : kExitCertification;
}

int run_level(const Globals& g, const std::string& place, const std::string& field) {
  if (!place.empty() && !field.empty()) throw ParseError("level: give either --place or --field");
  std::string target = place;
  if (!field.empty()) {
    if (field.rfind("Qp:", 0) == 0) {
      target = field.substr(3);
    } else {
      emit(g, io::level_to_json(quat::level_global(quat::QuadField::parse(field))));
      return 0;
    }
  }
  if (target.empty()) throw ParseError("level: --place or --field is required");
  std::uint64_t p = 0;
  if (target != "inf") {
    if (target.find_first_not_of("0123456789") != std::string::npos) throw ParseError("level: bad place '" + target + "'");
    p = std::stoull(target);
    require(p >= 2, "level: place must be a prime or inf");
  }
  emit(g, io::level_to_json(quat::level_local(p)));
  return 0;
}

int run_feasible(const Globals& g, const std::string& field) {
  const auto K = quat::QuadField::parse(field);
  emit(g, io::feasibility_to_json(K, quat::level4_completion_exists(K)));
  return 0;
}

int run_verify(const Globals& g, const std::string& report) {
  const auto rep = io::report_from_json(io::load_json_arg(report));
  const auto v = splitcon::verify_report(rep);
  json out;
  out["ok"] = v.ok;
  out["failures"] = v.failures;
  emit(g, out);
  return v.ok ? 0 : kExitCertification;
}

int run_selftest(const Globals& g, std::vector<int> ids, bool timings) {
  if (ids.empty()) ids = {1, 2, 3, 4, 5, 6, 7, 8, 9};
  checks::SuiteOptions opts;
  if (g.seed != 0) opts.seed = g.seed;
  json suites = json::array();
  bool all = true;
  for (int id : ids) {
    require(id >= 1 && id <= 9, "selftest: suite ids are 1..9");
    const auto r = checks::run_suite_guarded(id, opts);
    json j;
    j["id"] = r.id;
    j["name"] = r.name;
    j["passed"] = r.passed;
    j["detail"] = r.detail;
    if (timings) j["seconds"] = r.seconds;
    suites.push_back(j);
    all = all && r.passed;
  }
  json out;
  out["passed"] = all;
  out["suites"] = suites;
  emit(g, out);
  return all ? 0 : kExitCertification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"skewgal: twisted polynomial rings, embedding problems over finite fields, S_n constructions"};
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--pretty", g.pretty, "Indent JSON output");
  app.add_option("--seed", g.seed, "Seed for field moduli and randomized suites (0 = canonical)");

  FieldArgs fa;
  std::string group, alpha, op, f_arg, g_arg, place, field, report;
  std::int64_t tau = 0;
  std::vector<std::string> specs;
  std::uint64_t p_kernel = 0;
  unsigned n_min = 2;
  std::vector<int> suite_ids;
  bool timings = false;

  auto add_fields = [&](CLI::App* c, bool need_sigma) {
    c->add_option("--K", fa.K, "Base field p^n")->required();
    c->add_option("--L", fa.L, "Extension field p^n")->required();
    auto* s = c->add_option("--sigma", fa.sigma, "Frobenius exponent of sigma on K");
    if (need_sigma) s->required();
  };

  auto* decide = app.add_subcommand("decide", "Decide sigma-solvability of a finite embedding problem");
  add_fields(decide, true);
  decide->add_option("--group", group, "Group JSON (inline or file)")->required();
  decide->add_option("--alpha", alpha, "Image list of alpha onto C_[L:K] (inline or file)")->required();

  auto* lift = app.add_subcommand("lift-tau", "Lift sigma to the unique tau of the same order");
  add_fields(lift, true);

  auto* criteria = app.add_subcommand("extension-criteria", "Evaluate the order/coprimality and direct-product criteria");
  add_fields(criteria, true);
  criteria->add_option("--tau", tau, "Frobenius exponent of tau on L")->required();

  auto* ore_cmd = app.add_subcommand("ore", "Twisted polynomial arithmetic");
  ore_cmd->add_option("--op", op, "mul | divmod | gcd | lcm | witness")
      ->required()
      ->check(CLI::IsMember({"mul", "divmod", "gcd", "lcm", "witness"}));
  ore_cmd->add_option("--f", f_arg, "First polynomial JSON")->required();
  ore_cmd->add_option("--g", g_arg, "Second polynomial JSON")->required();

  auto* tower = app.add_subcommand("tower", "Fitting-subgroup reduction tower of a solvable group");
  tower->add_option("--group", group, "Group JSON (inline or file)")->required();

  auto* construct = app.add_subcommand("construct-lprime", "Build a certified S_n polynomial with local conditions");
  construct->add_option("--spec", specs, "Local spec, repeatable: <prime>:ts|rq|ur<m>[:ramL] or inf:ts");
  construct->add_option("--p-kernel", p_kernel, "Odd prime p of the kernel")->required();
  construct->add_option("--n-min", n_min, "Lower bound on the degree");

  auto* level = app.add_subcommand("level", "Level of Q_p, R, Q or Q(sqrt m)");
  level->add_option("--place", place, "Prime or inf");
  level->add_option("--field", field, "Qp:p, Q or Q(sqrt:m)");

  auto* feasible = app.add_subcommand("feasible-level4", "Whether some completion of K has level at least 4");
  feasible->add_option("--field", field, "Q or Q(sqrt:m)")->required();

  auto* verify = app.add_subcommand("verify-report", "Re-check a construction report");
  verify->add_option("--report", report, "Report JSON (inline or file)")->required();

  auto* selftest = app.add_subcommand("selftest", "Run the invariant suites");
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();
  selftest->add_option("--suite", suite_ids, "Suite id, repeatable (default 1..9)");
  selftest->add_flag("--timings", timings, "Include wall-clock seconds (output is then not reproducible)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail("ParseError", e.what(), kExitParse);
  }

  try {
    if (*decide) return run_decide(g, fa, group, alpha);
    if (*lift) return run_lift_tau(g, fa);
    if (*criteria) return run_extension_criteria(g, fa, tau);
    if (*ore_cmd) return run_ore(g, op, f_arg, g_arg);
    if (*tower) return run_tower(g, group);
    if (*construct) return run_construct(g, specs, p_kernel, n_min);
    if (*level) return run_level(g, place, field);
    if (*feasible) return run_feasible(g, field);
    if (*verify) return run_verify(g, report);
    if (*selftest) return run_selftest(g, suite_ids, timings);
  } catch (const embed::CoprimalityFailure& e) {
    json evidence = json::array();
    for (const auto& c : e.evidence()) evidence.push_back({{"frob", c.exponent}, {"order", c.order}});
    return fail("CoprimalityFailure", e.what(), kExitDomain,
                {{"d", e.d()}, {"degree", e.degree()}, {"extensions", evidence}});
  } catch (const PrecisionExhausted& e) {
    return fail("PrecisionExhausted", e.what(), kExitDomain);
  } catch (const ParseError& e) {
    return fail("ParseError", e.what(), kExitParse);
  } catch (const DomainError& e) {
    return fail("DomainError", e.what(), kExitDomain);
  } catch (const InternalError& e) {
    return fail("InternalError", e.what(), kExitCertification);
  } catch (const std::exception& e) {
    return fail("Error", e.what(), kExitDomain);
  }
  return 0;
}
