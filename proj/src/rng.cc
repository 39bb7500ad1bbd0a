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

#include "btwc/rng.h"

#include <vector>

namespace btwc {

uint64_t mix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

RngStream::RngStream(uint64_t root_seed, std::initializer_list<uint64_t> path) {
    uint64_t h = mix64(root_seed);
    for (uint64_t id : path) {
        h = mix64(h ^ mix64(id + 0x632BE59BD9B4E019ULL));
    }
    std::seed_seq seq{
        static_cast<uint32_t>(h), static_cast<uint32_t>(h >> 32), static_cast<uint32_t>(path.size()),
        static_cast<uint32_t>(root_seed), static_cast<uint32_t>(root_seed >> 32)};
    engine_.seed(seq);
}

}  // namespace btwc
