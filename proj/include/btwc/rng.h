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

#ifndef BTWC_RNG_H
#define BTWC_RNG_H

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <random>

namespace btwc {

/// SplitMix64 finalizer; used to derive independent sub-stream seeds.
uint64_t mix64(uint64_t x);

/// A seeded random stream addressed by (root seed, path of stream ids).
///
/// Every Monte Carlo trial or chunk draws from its own stream, so results do
/// not depend on how work is scheduled across threads.
class RngStream {
   public:
    explicit RngStream(uint64_t root_seed, std::initializer_list<uint64_t> path = {});

    std::mt19937_64 &engine() {
        return engine_;
    }

    /// Uniform double in (0, 1].
    double uniform_open0() {
        return 1.0 - std::generate_canonical<double, 64>(engine_);
    }

    bool bernoulli(double p) {
        if (p <= 0) {
            return false;
        }
        if (p >= 1) {
            return true;
        }
        return std::generate_canonical<double, 64>(engine_) < p;
    }

    /// Calls fn(i) for each i in [0, n) selected independently with probability p.
    /// Uses geometric gap sampling, so the cost scales with the number of hits.
    template <typename Fn>
    void for_each_bernoulli(size_t n, double p, Fn &&fn) {
        if (p <= 0 || n == 0) {
            return;
        }
        if (p >= 1) {
            for (size_t i = 0; i < n; i++) {
                fn(i);
            }
            return;
        }
        const double log_q = std::log1p(-p);
        size_t i = 0;
        while (true) {
            double gap = std::floor(std::log(uniform_open0()) / log_q);
            if (gap >= static_cast<double>(n - i)) {
                return;
            }
            i += static_cast<size_t>(gap);
            fn(i);
            i++;
            if (i >= n) {
                return;
            }
        }
    }

   private:
    std::mt19937_64 engine_;
};

}  // namespace btwc

#endif
