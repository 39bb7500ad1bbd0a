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

#ifndef BTWC_CONFIG_H
#define BTWC_CONFIG_H

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace btwc {

/// Fully resolved settings of one CLI invocation. Every random draw derives
/// from `seed`.
struct ExperimentConfig {
    std::string subcommand;
    std::vector<int> distances{5};
    std::vector<double> ps{1e-3};
    uint64_t cycles = 100000;
    uint64_t trials = 10000;
    uint64_t seed = 1;
    unsigned threads = 0;

    // ler
    std::string mode = "both";

    // bandwidth
    uint32_t num_qubits = 1000;
    double q = 0.05;
    double percentile = 99;
    std::optional<uint32_t> bandwidth;
    std::vector<double> tradeoff;
    std::string demand = "bernoulli";

    // cost
    std::string lib;
    double clock_hz = 5e9;
    double energy_j = 1e-19;
    double activity = 0.5;

    std::string out;

    /// Throws std::invalid_argument naming the first offending setting.
    void validate() const;
    nlohmann::ordered_json to_json() const;
};

/// Parses a non-negative integer count, accepting exponent notation such as
/// "1e6" when the value is integral.
uint64_t parse_count(std::string_view text);

}  // namespace btwc

#endif
