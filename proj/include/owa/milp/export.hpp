// Copyright 2026 The owamilp Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef OWA_MILP_EXPORT_HPP_
#define OWA_MILP_EXPORT_HPP_

#include <string>

#include "owa/milp/model.hpp"

namespace owa::milp {

// Fixed-format MPS. When any name does not fit the 8-character fields, all
// columns and rows are renamed C0000001.../R0000001... and the original names
// are listed in '*' comment lines after the NAME card.
std::string export_mps(const Model& model);

// CPLEX LP text format.
std::string export_lp(const Model& model);

// Turns an arbitrary label into an LP-file identifier.
std::string lp_safe_name(const std::string& name);

}  // namespace owa::milp

#endif  // OWA_MILP_EXPORT_HPP_
