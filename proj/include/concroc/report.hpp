// Copyright 2026 The concroc Authors
//
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

#pragma once

#include <cstdint>

#include <json.hpp>

#include "concroc/bootstrap.hpp"
#include "concroc/logconcave.hpp"
#include "concroc/simulation.hpp"
#include "concroc/smoothed.hpp"

namespace concroc {

nlohmann::json fit_to_json(const LogConcaveFit& fit);
nlohmann::json fit_to_json(const SmoothedFit& fit);
// Reads {knots, phi, objective}. Throws InputFormat on a malformed object
// and the fit's own validation errors.
LogConcaveFit fit_from_json(const nlohmann::json& j);

nlohmann::json summary_to_json(const Summary& s);
nlohmann::json boot_to_json(const BootResult& r);
nlohmann::json sim_to_json(const SimReport& r, const ScenarioSpec& spec);

std::string digest_hex(std::uint64_t digest);

}  // namespace concroc
