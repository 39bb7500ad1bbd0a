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

#ifndef BTWC_CLIQUE_DECODER_H
#define BTWC_CLIQUE_DECODER_H

#include <cstdint>
#include <string_view>
#include <vector>

#include "btwc/lattice.h"

namespace btwc {

/// Detection bits judged to be persistent data-error evidence at round t.
struct EffectiveSyndrome {
    Bits bits;
    uint32_t cancelled_pairs = 0;
};

/// Two-round persistence filter over detection events (flips) of one check type:
///   e = curr & ~next & ~prev.
/// A flip that reverts in the next round is a transient readout error and is
/// counted in `cancelled_pairs` instead.
EffectiveSyndrome filter_rounds(const Bits &flips_prev, const Bits &flips_curr, const Bits &flips_next);

enum class TriageClass : uint8_t { AllZero = 0, Trivial = 1, Complex = 2 };

std::string_view to_string(TriageClass cls);

/// Complex dominates, then Trivial; used to merge the X and Z verdicts of a cycle.
TriageClass combine(TriageClass a, TriageClass b);

struct TriageOutcome {
    TriageClass cls = TriageClass::AllZero;
    /// Data qubits to flip; empty unless cls == Trivial.
    std::vector<uint32_t> corrections;
    /// Global ids of active cliques whose local verdict was not trivial.
    std::vector<uint32_t> complex_cliques;
};

/// Per-clique local verdict for one set ancilla. `set_neighbors` is the number
/// of its same-type neighbours that are also set.
bool clique_is_trivial(size_t clique_size, size_t set_neighbors, bool has_discharge);

/// Clique triage of an effective syndrome of checks of `type` (indexed by layer
/// position). Trivial corrections are the shared qubits of every adjacent set
/// pair plus, for set ancillas with no set neighbour, their lowest-id discharge
/// qubit.
TriageOutcome triage(const Lattice &lattice, const Bits &effective, CheckType type);
inline TriageOutcome triage(const Lattice &lattice, const EffectiveSyndrome &eff, CheckType type) {
    return triage(lattice, eff.bits, type);
}

/// Reference classifier: Trivial iff the set checks can be explained by data
/// errors that each flip a disjoint group of checks (two neighbours through
/// their shared qubit, or one check through a discharge qubit). Exhaustive
/// search; rejects inputs with d > 5 and more than 8 set bits.
TriageClass triage_oracle(const Lattice &lattice, const Bits &effective, CheckType type);

}  // namespace btwc

#endif
