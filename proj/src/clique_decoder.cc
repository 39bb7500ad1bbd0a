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

#include "btwc/clique_decoder.h"

#include <algorithm>
#include <stdexcept>

namespace btwc {

EffectiveSyndrome filter_rounds(const Bits &flips_prev, const Bits &flips_curr, const Bits &flips_next) {
    if (flips_prev.size() != flips_curr.size() || flips_next.size() != flips_curr.size()) {
        throw std::invalid_argument("filter_rounds: flip vectors differ in length");
    }
    EffectiveSyndrome eff;
    eff.bits.assign(flips_curr.size(), 0);
    for (size_t k = 0; k < flips_curr.size(); k++) {
        if (!flips_curr[k]) {
            continue;
        }
        if (flips_next[k]) {
            eff.cancelled_pairs++;
        } else if (!flips_prev[k]) {
            eff.bits[k] = 1;
        }
    }
    return eff;
}

std::string_view to_string(TriageClass cls) {
    switch (cls) {
        case TriageClass::AllZero:
            return "all0";
        case TriageClass::Trivial:
            return "local1";
        case TriageClass::Complex:
            return "complex";
    }
    return "?";
}

TriageClass combine(TriageClass a, TriageClass b) {
    return static_cast<TriageClass>(std::max(static_cast<uint8_t>(a), static_cast<uint8_t>(b)));
}

bool clique_is_trivial(size_t clique_size, size_t set_neighbors, bool has_discharge) {
    if (set_neighbors > clique_size) {
        throw std::invalid_argument("more set neighbours than clique members");
    }
    // Odd neighbourhood parity pairs the center with a neighbour; an empty
    // neighbourhood is only resolvable through a boundary discharge qubit.
    // With one neighbour (the "1+1" corner case) a discharge qubit always exists.
    return set_neighbors % 2 == 1 || (set_neighbors == 0 && has_discharge);
}

TriageOutcome triage(const Lattice &lattice, const Bits &effective, CheckType type) {
    const CheckLayer &layer = lattice.layer(type);
    if (effective.size() != layer.size()) {
        throw std::invalid_argument("effective syndrome length does not match the check layer");
    }
    TriageOutcome out;
    bool any = false;
    for (size_t a = 0; a < layer.size(); a++) {
        if (!effective[a]) {
            continue;
        }
        any = true;
        const auto &nbrs = layer.neighbors[a];
        size_t n = 0;
        for (size_t i = 0; i < nbrs.size(); i++) {
            if (effective[nbrs[i]]) {
                n++;
                // Each adjacent pair emits its shared qubit once.
                if (nbrs[i] > a) {
                    out.corrections.push_back(layer.shared[a][i]);
                }
            }
        }
        bool has_discharge = !layer.discharge[a].empty();
        if (!clique_is_trivial(nbrs.size(), n, has_discharge)) {
            out.complex_cliques.push_back(layer.global_ids[a]);
        } else if (n == 0) {
            out.corrections.push_back(layer.discharge[a].front());
        }
    }
    if (!any) {
        out.cls = TriageClass::AllZero;
    } else if (!out.complex_cliques.empty()) {
        out.cls = TriageClass::Complex;
        out.corrections.clear();
    } else {
        out.cls = TriageClass::Trivial;
        std::sort(out.corrections.begin(), out.corrections.end());
    }
    return out;
}

namespace {

// Assigns every set check to exactly one explaining error, first unassigned
// check first: either a discharge error on it alone, or a shared-qubit error
// with an unassigned set neighbour.
bool explain_isolated(const CheckLayer &layer, const Bits &bits, std::vector<uint8_t> &used, size_t from) {
    size_t a = from;
    while (a < bits.size() && (!bits[a] || used[a])) {
        a++;
    }
    if (a == bits.size()) {
        return true;
    }
    used[a] = 1;
    if (!layer.discharge[a].empty() && explain_isolated(layer, bits, used, a + 1)) {
        used[a] = 0;
        return true;
    }
    for (uint32_t b : layer.neighbors[a]) {
        if (bits[b] && !used[b]) {
            used[b] = 1;
            bool ok = explain_isolated(layer, bits, used, a + 1);
            used[b] = 0;
            if (ok) {
                used[a] = 0;
                return true;
            }
        }
    }
    used[a] = 0;
    return false;
}

}  // namespace

TriageClass triage_oracle(const Lattice &lattice, const Bits &effective, CheckType type) {
    const CheckLayer &layer = lattice.layer(type);
    if (effective.size() != layer.size()) {
        throw std::invalid_argument("effective syndrome length does not match the check layer");
    }
    size_t weight = popcount(effective);
    if (lattice.distance() > 5 && weight > 8) {
        throw std::invalid_argument("triage_oracle: instance exceeds enumeration bounds (d > 5 and > 8 set bits)");
    }
    if (weight == 0) {
        return TriageClass::AllZero;
    }
    std::vector<uint8_t> used(effective.size(), 0);
    return explain_isolated(layer, effective, used, 0) ? TriageClass::Trivial : TriageClass::Complex;
}

}  // namespace btwc
