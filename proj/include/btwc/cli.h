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

#ifndef BTWC_CLI_H
#define BTWC_CLI_H

#include <ostream>
#include <string>
#include <vector>

#include "btwc/config.h"
#include "json.hpp"

namespace btwc {

/// A CSV table plus the JSON summary written next to it.
struct ExperimentOutput {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    nlohmann::ordered_json summary;
};

/// Runs one resolved configuration. Throws on invalid settings.
ExperimentOutput run_experiment(const ExperimentConfig &config);

std::string format_csv(const ExperimentConfig &config, const ExperimentOutput &output);
std::string format_summary(const ExperimentConfig &config, const ExperimentOutput &output);

/// Command-line entry point. With --out PREFIX, writes PREFIX.csv and
/// PREFIX.json (each replaced atomically, and only once every grid point has
/// finished); otherwise the CSV goes to `out`. Returns the process exit code.
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace btwc

#endif
