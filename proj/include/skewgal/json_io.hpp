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

// JSON encodings shared by the command-line tool and the tests. Objects keep
// insertion order so that output is byte-for-byte reproducible.

#include <string>
#include <vector>

#include "json.hpp"

#include "skewgal/bigint.hpp"
#include "skewgal/embed.hpp"
#include "skewgal/ffield.hpp"
#include "skewgal/groups.hpp"
#include "skewgal/orepoly.hpp"
#include "skewgal/quat.hpp"
#include "skewgal/splitcon.hpp"

namespace skewgal::io {

using json = nlohmann::ordered_json;

/// Reads a file if arg names one, otherwise parses arg as inline JSON.
json load_json_arg(const std::string& arg);

/// Plain number when it fits in int64, decimal string otherwise.
json int_to_json(const Int& x);
Int int_from_json(const json& j);

json zpoly_to_json(const zx::ZPoly& f);
zx::ZPoly zpoly_from_json(const json& j);

/// {"order":k,"table":[[...]]}, {"perm_gens":[[[cycle],...],...]} (points
/// 0-based) or {"catalog":"S4"}.
grp::GroupPtr group_from_json(const json& j);
json group_to_json(const grp::FiniteGroup& G);
/// Image list, or {"images":[...]}.
std::vector<grp::Elem> hom_images_from_json(const json& j);
json subgroup_to_json(const grp::Subgroup& H);
json step_to_json(const grp::ReductionStep& s);

json elem_to_json(const ff::FqElem& x);
ff::FqElem elem_from_json(const ff::FqField& F, const json& j);
json aut_to_json(const ff::FieldAut& a);

/// {"base":"p^n","frob":k,"coeffs":[[...],...]}.
json orepoly_to_json(const ore::OrePoly& f);
ore::OrePoly orepoly_from_json(const json& j);

json verdict_to_json(const embed::Verdict& v);

json local_cert_to_json(const splitcon::LocalCertificate& c);
json report_to_json(const splitcon::ConstructionReport& r);
splitcon::ConstructionReport report_from_json(const json& j);

json level_to_json(const quat::LevelResult& r);
json feasibility_to_json(const quat::QuadField& K, const quat::Feasibility& f);

}  // namespace skewgal::io
