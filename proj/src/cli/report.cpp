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

#include "concroc/report.hpp"

#include <cstdio>

#include "concroc/errors.hpp"

namespace concroc {

using nlohmann::json;

json fit_to_json(const LogConcaveFit& fit) {
    const FitMoments m = fit_moments(fit);
    return json{{"knots", fit.knots()}, {"phi", fit.phi()}, {"objective", fit.objective()},
                {"mean", m.mean}, {"var", m.var}};
}

json fit_to_json(const SmoothedFit& fit) {
    json j = fit_to_json(fit.base());
    j["gamma"] = fit.gamma();
    j["sample_var"] = fit.sample_var();
    return j;
}

LogConcaveFit fit_from_json(const json& j) {
    try {
        return LogConcaveFit(j.at("knots").get<std::vector<double>>(), j.at("phi").get<std::vector<double>>(),
                             j.at("objective").get<double>());
    } catch (const json::exception& e) {
        throw Error(ErrorCode::InputFormat, std::string("malformed fit object: ") + e.what());
    }
}

json summary_to_json(const Summary& s) {
    return json{{"min", s.min}, {"q25", s.q25}, {"median", s.median}, {"q75", s.q75}, {"max", s.max}};
}

json boot_to_json(const BootResult& r) {
    json points = json::array();
    for (const auto& p : r.points) {
        points.push_back({{"t", p.t}, {"estimate", p.estimate}, {"lower", p.lower}, {"upper", p.upper}});
    }
    return json{{"replicates", r.replicates}, {"redraws", r.redraws}, {"points", points}};
}

json sim_to_json(const SimReport& r, const ScenarioSpec& spec) {
    json est = json::object();
    for (const auto& e : r.estimators) {
        est[std::string(to_string(e.kind))] = {
            {"ase", e.ase},
            {"ratio", e.ratio},
            {"summary", {{"ase", summary_to_json(e.ase_summary)}, {"ratio", summary_to_json(e.ratio_summary)}}}};
    }
    return json{{"scenario", r.scenario},
                {"F", spec.F.label()},
                {"m", spec.m},
                {"G", spec.G.label()},
                {"n", spec.n},
                {"M", r.M},
                {"grid", {{"kind", "midpoint"}, {"n", r.grid.size()}, {"points", r.grid}}},
                {"failed_replications", r.failed_replications},
                {"estimators", est}};
}

std::string digest_hex(std::uint64_t digest) {
    char buf[24];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(digest));
    return std::string("fnv1a64:") + buf;
}

}  // namespace concroc
