// Copyright 2026 The btwc Authors
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

#include "btwc/config.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace btwc {

namespace {

void require(bool ok, const std::string &message) {
    if (!ok) {
        throw std::invalid_argument(message);
    }
}

}  // namespace

uint64_t parse_count(std::string_view text) {
    std::string s(text);
    size_t used = 0;
    double v = 0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (used == 0 || used != s.size() || !(v >= 0) || v > 1.8e19 || std::floor(v) != v) {
        throw std::invalid_argument("expected a non-negative integer count, got '" + s + "'");
    }
    return static_cast<uint64_t>(v);
}

void ExperimentConfig::validate() const {
    static const std::vector<std::string> kSubcommands{"coverage", "ler", "bandwidth", "compress", "cost"};
    require(std::find(kSubcommands.begin(), kSubcommands.end(), subcommand) != kSubcommands.end(),
            "unknown subcommand '" + subcommand + "'");
    require(!distances.empty(), "distance list is empty");
    for (int d : distances) {
        require(d >= 3 && d % 2 == 1, "distance must be an odd integer >= 3, got " + std::to_string(d));
    }
    require(!ps.empty(), "p list is empty");
    for (double p : ps) {
        require(p >= 0 && p <= 1, "p must lie in [0, 1], got " + std::to_string(p));
    }
    require(cycles >= 1, "cycles must be at least 1");
    require(trials >= 1, "trials must be at least 1");
    require(mode == "both" || mode == "baseline" || mode == "clique+baseline",
            "mode must be baseline, clique+baseline or both, got '" + mode + "'");
    require(num_qubits >= 1, "num-qubits must be at least 1");
    require(q >= 0 && q <= 1, "q must lie in [0, 1], got " + std::to_string(q));
    require(percentile >= 0 && percentile <= 100, "percentile must lie in [0, 100], got " + std::to_string(percentile));
    for (double pct : tradeoff) {
        require(pct >= 0 && pct <= 100, "tradeoff percentiles must lie in [0, 100], got " + std::to_string(pct));
    }
    require(demand == "bernoulli" || demand == "trace", "demand must be bernoulli or trace, got '" + demand + "'");
    require(clock_hz > 0, "clock-hz must be positive");
    require(energy_j > 0, "energy must be positive");
    require(activity >= 0 && activity <= 1, "activity must lie in [0, 1]");
}

nlohmann::ordered_json ExperimentConfig::to_json() const {
    nlohmann::ordered_json j;
    j["subcommand"] = subcommand;
    j["seed"] = seed;
    j["distance"] = distances;
    j["p"] = ps;
    if (subcommand == "coverage" || subcommand == "compress" || subcommand == "bandwidth") {
        j["cycles"] = cycles;
    }
    if (subcommand == "ler") {
        j["trials"] = trials;
        j["mode"] = mode;
    }
    if (subcommand == "bandwidth") {
        j["num_qubits"] = num_qubits;
        j["q"] = q;
        j["percentile"] = percentile;
        j["bandwidth"] = bandwidth ? nlohmann::ordered_json(*bandwidth) : nlohmann::ordered_json(nullptr);
        j["tradeoff"] = tradeoff;
        j["demand"] = demand;
    }
    if (subcommand == "cost") {
        j["lib"] = lib.empty() ? "builtin:ersfq" : lib;
        j["clock_hz"] = clock_hz;
        j["energy_j"] = energy_j;
        j["activity"] = activity;
    }
    return j;
}

}  // namespace btwc
