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

// Every group of order at most 24, one per isomorphism class, built from
// cyclic, metacyclic, permutation and (semi)direct product constructions.

#include <string>
#include <vector>

#include "skewgal/groups.hpp"

namespace skewgal::grp {

struct CatalogEntry {
  std::string name;
  GroupPtr group;
};

/// 74 groups, sorted by order; within an order the listing is fixed.
const std::vector<CatalogEntry>& small_group_catalog();

/// Lookup by catalog name ("S4", "Q8", "C4xC2", ...). Throws DomainError.
GroupPtr catalog_group(const std::string& name);

/// Number of isomorphism classes of groups of order n, for 1 <= n <= 24.
unsigned known_group_count(unsigned n);

}  // namespace skewgal::grp
