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

#include "btwc/blossom.h"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace btwc {

namespace {

// Primal-dual blossom algorithm. Vertices are 0..n-1, non-trivial blossoms use
// ids n..2n-1. Edge k has endpoints 2k (u side) and 2k+1 (v side); mate[] and
// labelend[] store remote endpoint ids so the matched edge is recoverable.
class BlossomMatcher {
   public:
    BlossomMatcher(size_t num_vertices, std::span<const WeightedEdge> edges, bool max_cardinality)
        : n_(static_cast<int>(num_vertices)), edges_(edges.begin(), edges.end()), max_cardinality_(max_cardinality) {
        int nedge = static_cast<int>(edges_.size());
        endpoint_.resize(2 * nedge);
        neighbend_.assign(n_, {});
        int64_t maxweight = 0;
        for (int k = 0; k < nedge; k++) {
            const WeightedEdge &e = edges_[k];
            if (static_cast<int>(e.u) >= n_ || static_cast<int>(e.v) >= n_ || e.u == e.v) {
                throw std::invalid_argument("blossom: bad edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
            }
            endpoint_[2 * k] = static_cast<int>(e.u);
            endpoint_[2 * k + 1] = static_cast<int>(e.v);
            neighbend_[e.u].push_back(2 * k + 1);
            neighbend_[e.v].push_back(2 * k);
            maxweight = std::max(maxweight, e.weight);
        }
        mate_.assign(n_, -1);
        label_.assign(2 * n_, 0);
        labelend_.assign(2 * n_, -1);
        inblossom_.resize(n_);
        for (int v = 0; v < n_; v++) {
            inblossom_[v] = v;
        }
        blossomparent_.assign(2 * n_, -1);
        childs_.assign(2 * n_, {});
        endps_.assign(2 * n_, {});
        blossombase_.assign(2 * n_, -1);
        for (int v = 0; v < n_; v++) {
            blossombase_[v] = v;
        }
        bestedge_.assign(2 * n_, -1);
        bestlist_.assign(2 * n_, {});
        has_bestlist_.assign(2 * n_, 0);
        for (int b = 2 * n_ - 1; b >= n_; b--) {
            unused_.push_back(b);
        }
        dualvar_.assign(2 * n_, 0);
        for (int v = 0; v < n_; v++) {
            dualvar_[v] = maxweight;
        }
        allowedge_.assign(nedge, 0);
    }

    std::vector<int32_t> run() {
        std::vector<int32_t> result(n_, -1);
        if (edges_.empty()) {
            return result;
        }
        for (int stage = 0; stage < n_; stage++) {
            std::fill(label_.begin(), label_.end(), 0);
            std::fill(bestedge_.begin(), bestedge_.end(), -1);
            for (int b = n_; b < 2 * n_; b++) {
                bestlist_[b].clear();
                has_bestlist_[b] = 0;
            }
            std::fill(allowedge_.begin(), allowedge_.end(), 0);
            queue_.clear();
            for (int v = 0; v < n_; v++) {
                if (mate_[v] == -1 && label_[inblossom_[v]] == 0) {
                    assign_label(v, 1, -1);
                }
            }
            bool augmented = false;
            while (true) {
                while (!queue_.empty() && !augmented) {
                    int v = queue_.back();
                    queue_.pop_back();
                    for (int p : neighbend_[v]) {
                        int k = p / 2;
                        int w = endpoint_[p];
                        if (inblossom_[v] == inblossom_[w]) {
                            continue;
                        }
                        int64_t kslack = 0;
                        if (!allowedge_[k]) {
                            kslack = slack(k);
                            if (kslack <= 0) {
                                allowedge_[k] = 1;
                            }
                        }
                        if (allowedge_[k]) {
                            if (label_[inblossom_[w]] == 0) {
                                assign_label(w, 2, p ^ 1);
                            } else if (label_[inblossom_[w]] == 1) {
                                int base = scan_blossom(v, w);
                                if (base >= 0) {
                                    add_blossom(base, k);
                                } else {
                                    augment_matching(k);
                                    augmented = true;
                                    break;
                                }
                            } else if (label_[w] == 0) {
                                label_[w] = 2;
                                labelend_[w] = p ^ 1;
                            }
                        } else if (label_[inblossom_[w]] == 1) {
                            int b = inblossom_[v];
                            if (bestedge_[b] == -1 || kslack < slack(bestedge_[b])) {
                                bestedge_[b] = k;
                            }
                        } else if (label_[w] == 0) {
                            if (bestedge_[w] == -1 || kslack < slack(bestedge_[w])) {
                                bestedge_[w] = k;
                            }
                        }
                    }
                }
                if (augmented) {
                    break;
                }

                int deltatype = -1;
                int64_t delta = 0;
                int deltaedge = -1;
                int deltablossom = -1;
                if (!max_cardinality_) {
                    deltatype = 1;
                    delta = *std::min_element(dualvar_.begin(), dualvar_.begin() + n_);
                }
                for (int v = 0; v < n_; v++) {
                    if (label_[inblossom_[v]] == 0 && bestedge_[v] != -1) {
                        int64_t d = slack(bestedge_[v]);
                        if (deltatype == -1 || d < delta) {
                            delta = d;
                            deltatype = 2;
                            deltaedge = bestedge_[v];
                        }
                    }
                }
                for (int b = 0; b < 2 * n_; b++) {
                    if (blossomparent_[b] == -1 && label_[b] == 1 && bestedge_[b] != -1) {
                        int64_t kslack = slack(bestedge_[b]);
                        if (kslack % 2 != 0) {
                            throw std::logic_error("blossom: odd slack between S-blossoms");
                        }
                        int64_t d = kslack / 2;
                        if (deltatype == -1 || d < delta) {
                            delta = d;
                            deltatype = 3;
                            deltaedge = bestedge_[b];
                        }
                    }
                }
                for (int b = n_; b < 2 * n_; b++) {
                    if (blossombase_[b] >= 0 && blossomparent_[b] == -1 && label_[b] == 2 &&
                        (deltatype == -1 || dualvar_[b] < delta)) {
                        delta = dualvar_[b];
                        deltatype = 4;
                        deltablossom = b;
                    }
                }
                if (deltatype == -1) {
                    // No further improvement possible; optimum reached.
                    deltatype = 1;
                    delta = std::max<int64_t>(0, *std::min_element(dualvar_.begin(), dualvar_.begin() + n_));
                }

                for (int v = 0; v < n_; v++) {
                    if (label_[inblossom_[v]] == 1) {
                        dualvar_[v] -= delta;
                    } else if (label_[inblossom_[v]] == 2) {
                        dualvar_[v] += delta;
                    }
                }
                for (int b = n_; b < 2 * n_; b++) {
                    if (blossombase_[b] >= 0 && blossomparent_[b] == -1) {
                        if (label_[b] == 1) {
                            dualvar_[b] += delta;
                        } else if (label_[b] == 2) {
                            dualvar_[b] -= delta;
                        }
                    }
                }

                if (deltatype == 1) {
                    break;
                } else if (deltatype == 2) {
                    allowedge_[deltaedge] = 1;
                    int i = static_cast<int>(edges_[deltaedge].u);
                    int j = static_cast<int>(edges_[deltaedge].v);
                    if (label_[inblossom_[i]] == 0) {
                        std::swap(i, j);
                    }
                    queue_.push_back(i);
                } else if (deltatype == 3) {
                    allowedge_[deltaedge] = 1;
                    queue_.push_back(static_cast<int>(edges_[deltaedge].u));
                } else {
                    expand_blossom(deltablossom, false);
                }
            }
            if (!augmented) {
                break;
            }
            for (int b = n_; b < 2 * n_; b++) {
                if (blossomparent_[b] == -1 && blossombase_[b] >= 0 && label_[b] == 1 && dualvar_[b] == 0) {
                    expand_blossom(b, true);
                }
            }
        }
        for (int v = 0; v < n_; v++) {
            if (mate_[v] >= 0) {
                result[v] = endpoint_[mate_[v]];
            }
        }
        return result;
    }

   private:
    int64_t slack(int k) const {
        const WeightedEdge &e = edges_[k];
        return dualvar_[e.u] + dualvar_[e.v] - 2 * e.weight;
    }

    static int wrap(int j, int len) {
        return ((j % len) + len) % len;
    }

    void leaves(int b, std::vector<int> &out) const {
        if (b < n_) {
            out.push_back(b);
            return;
        }
        for (int t : childs_[b]) {
            leaves(t, out);
        }
    }

    std::vector<int> leaves(int b) const {
        std::vector<int> out;
        leaves(b, out);
        return out;
    }

    void assign_label(int w, int t, int p) {
        int b = inblossom_[w];
        label_[w] = label_[b] = t;
        labelend_[w] = labelend_[b] = p;
        bestedge_[w] = bestedge_[b] = -1;
        if (t == 1) {
            leaves(b, queue_);
        } else if (t == 2) {
            int base = blossombase_[b];
            assign_label(endpoint_[mate_[base]], 1, mate_[base] ^ 1);
        }
    }

    int scan_blossom(int v, int w) {
        std::vector<int> path;
        int base = -1;
        while (v != -1 || w != -1) {
            int b = inblossom_[v];
            if (label_[b] & 4) {
                base = blossombase_[b];
                break;
            }
            path.push_back(b);
            label_[b] = 5;
            if (labelend_[b] == -1) {
                v = -1;
            } else {
                v = endpoint_[labelend_[b]];
                b = inblossom_[v];
                v = endpoint_[labelend_[b]];
            }
            if (w != -1) {
                std::swap(v, w);
            }
        }
        for (int b : path) {
            label_[b] = 1;
        }
        return base;
    }

    void add_blossom(int base, int k) {
        int v = static_cast<int>(edges_[k].u);
        int w = static_cast<int>(edges_[k].v);
        int bb = inblossom_[base];
        int bv = inblossom_[v];
        int bw = inblossom_[w];
        int b = unused_.back();
        unused_.pop_back();
        blossombase_[b] = base;
        blossomparent_[b] = -1;
        blossomparent_[bb] = b;
        std::vector<int> &path = childs_[b];
        std::vector<int> &endps = endps_[b];
        path.clear();
        endps.clear();
        while (bv != bb) {
            blossomparent_[bv] = b;
            path.push_back(bv);
            endps.push_back(labelend_[bv]);
            v = endpoint_[labelend_[bv]];
            bv = inblossom_[v];
        }
        path.push_back(bb);
        std::reverse(path.begin(), path.end());
        std::reverse(endps.begin(), endps.end());
        endps.push_back(2 * k);
        while (bw != bb) {
            blossomparent_[bw] = b;
            path.push_back(bw);
            endps.push_back(labelend_[bw] ^ 1);
            w = endpoint_[labelend_[bw]];
            bw = inblossom_[w];
        }
        label_[b] = 1;
        labelend_[b] = labelend_[bb];
        dualvar_[b] = 0;
        for (int leaf : leaves(b)) {
            if (label_[inblossom_[leaf]] == 2) {
                queue_.push_back(leaf);
            }
            inblossom_[leaf] = b;
        }

        std::vector<int> bestedgeto(2 * n_, -1);
        auto consider = [&](int kk) {
            int i = static_cast<int>(edges_[kk].u);
            int j = static_cast<int>(edges_[kk].v);
            if (inblossom_[j] == b) {
                std::swap(i, j);
            }
            int bj = inblossom_[j];
            if (bj != b && label_[bj] == 1 && (bestedgeto[bj] == -1 || slack(kk) < slack(bestedgeto[bj]))) {
                bestedgeto[bj] = kk;
            }
        };
        for (int child : path) {
            if (!has_bestlist_[child]) {
                for (int leaf : leaves(child)) {
                    for (int p : neighbend_[leaf]) {
                        consider(p / 2);
                    }
                }
            } else {
                for (int kk : bestlist_[child]) {
                    consider(kk);
                }
            }
            bestlist_[child].clear();
            has_bestlist_[child] = 0;
            bestedge_[child] = -1;
        }
        bestlist_[b].clear();
        for (int kk : bestedgeto) {
            if (kk != -1) {
                bestlist_[b].push_back(kk);
            }
        }
        has_bestlist_[b] = 1;
        bestedge_[b] = -1;
        for (int kk : bestlist_[b]) {
            if (bestedge_[b] == -1 || slack(kk) < slack(bestedge_[b])) {
                bestedge_[b] = kk;
            }
        }
    }

    void expand_blossom(int b, bool endstage) {
        std::vector<int> children = childs_[b];
        for (int s : children) {
            blossomparent_[s] = -1;
            if (s < n_) {
                inblossom_[s] = s;
            } else if (endstage && dualvar_[s] == 0) {
                expand_blossom(s, endstage);
            } else {
                for (int leaf : leaves(s)) {
                    inblossom_[leaf] = s;
                }
            }
        }
        if (!endstage && label_[b] == 2) {
            const std::vector<int> &ch = childs_[b];
            const std::vector<int> &ep = endps_[b];
            int len = static_cast<int>(ch.size());
            int entrychild = inblossom_[endpoint_[labelend_[b] ^ 1]];
            int j = static_cast<int>(std::find(ch.begin(), ch.end(), entrychild) - ch.begin());
            int jstep;
            int endptrick;
            if (j & 1) {
                j -= len;
                jstep = 1;
                endptrick = 0;
            } else {
                jstep = -1;
                endptrick = 1;
            }
            int p = labelend_[b];
            while (j != 0) {
                label_[endpoint_[p ^ 1]] = 0;
                label_[endpoint_[ep[wrap(j - endptrick, len)] ^ endptrick ^ 1]] = 0;
                assign_label(endpoint_[p ^ 1], 2, p);
                allowedge_[ep[wrap(j - endptrick, len)] / 2] = 1;
                j += jstep;
                p = ep[wrap(j - endptrick, len)] ^ endptrick;
                allowedge_[p / 2] = 1;
                j += jstep;
            }
            int bv = ch[wrap(j, len)];
            label_[endpoint_[p ^ 1]] = label_[bv] = 2;
            labelend_[endpoint_[p ^ 1]] = labelend_[bv] = p;
            bestedge_[bv] = -1;
            j += jstep;
            while (ch[wrap(j, len)] != entrychild) {
                bv = ch[wrap(j, len)];
                if (label_[bv] == 1) {
                    j += jstep;
                    continue;
                }
                int found = -1;
                for (int leaf : leaves(bv)) {
                    if (label_[leaf] != 0) {
                        found = leaf;
                        break;
                    }
                }
                if (found >= 0) {
                    label_[found] = 0;
                    label_[endpoint_[mate_[blossombase_[bv]]]] = 0;
                    assign_label(found, 2, labelend_[found]);
                }
                j += jstep;
            }
        }
        label_[b] = labelend_[b] = -1;
        childs_[b].clear();
        endps_[b].clear();
        blossombase_[b] = -1;
        bestlist_[b].clear();
        has_bestlist_[b] = 0;
        bestedge_[b] = -1;
        unused_.push_back(b);
    }

    void augment_blossom(int b, int v) {
        int t = v;
        while (blossomparent_[t] != b) {
            t = blossomparent_[t];
        }
        if (t >= n_) {
            augment_blossom(t, v);
        }
        std::vector<int> &ch = childs_[b];
        std::vector<int> &ep = endps_[b];
        int len = static_cast<int>(ch.size());
        int i = static_cast<int>(std::find(ch.begin(), ch.end(), t) - ch.begin());
        int j = i;
        int jstep;
        int endptrick;
        if (i & 1) {
            j -= len;
            jstep = 1;
            endptrick = 0;
        } else {
            jstep = -1;
            endptrick = 1;
        }
        while (j != 0) {
            j += jstep;
            t = ch[wrap(j, len)];
            int p = ep[wrap(j - endptrick, len)] ^ endptrick;
            if (t >= n_) {
                augment_blossom(t, endpoint_[p]);
            }
            j += jstep;
            t = ch[wrap(j, len)];
            if (t >= n_) {
                augment_blossom(t, endpoint_[p ^ 1]);
            }
            mate_[endpoint_[p]] = p ^ 1;
            mate_[endpoint_[p ^ 1]] = p;
        }
        std::rotate(ch.begin(), ch.begin() + i, ch.end());
        std::rotate(ep.begin(), ep.begin() + i, ep.end());
        blossombase_[b] = blossombase_[ch[0]];
    }

    void augment_matching(int k) {
        int v = static_cast<int>(edges_[k].u);
        int w = static_cast<int>(edges_[k].v);
        const int starts[2][2] = {{v, 2 * k + 1}, {w, 2 * k}};
        for (const auto &start : starts) {
            int s = start[0];
            int p = start[1];
            while (true) {
                int bs = inblossom_[s];
                if (bs >= n_) {
                    augment_blossom(bs, s);
                }
                mate_[s] = p;
                if (labelend_[bs] == -1) {
                    break;
                }
                int t = endpoint_[labelend_[bs]];
                int bt = inblossom_[t];
                s = endpoint_[labelend_[bt]];
                int j = endpoint_[labelend_[bt] ^ 1];
                if (bt >= n_) {
                    augment_blossom(bt, j);
                }
                mate_[j] = labelend_[bt];
                p = labelend_[bt] ^ 1;
            }
        }
    }

    int n_;
    std::vector<WeightedEdge> edges_;
    bool max_cardinality_;
    std::vector<int> endpoint_;
    std::vector<std::vector<int>> neighbend_;
    std::vector<int> mate_;
    std::vector<int> label_;
    std::vector<int> labelend_;
    std::vector<int> inblossom_;
    std::vector<int> blossomparent_;
    std::vector<std::vector<int>> childs_;
    std::vector<std::vector<int>> endps_;
    std::vector<int> blossombase_;
    std::vector<int> bestedge_;
    std::vector<std::vector<int>> bestlist_;
    std::vector<uint8_t> has_bestlist_;
    std::vector<int> unused_;
    std::vector<int64_t> dualvar_;
    std::vector<uint8_t> allowedge_;
    std::vector<int> queue_;
};

}  // namespace

std::vector<int32_t> max_weight_matching(
    size_t num_vertices, std::span<const WeightedEdge> edges, bool max_cardinality) {
    return BlossomMatcher(num_vertices, edges, max_cardinality).run();
}

std::vector<int32_t> min_weight_perfect_matching(size_t num_vertices, std::span<const WeightedEdge> edges) {
    if (num_vertices == 0) {
        return {};
    }
    int64_t top = 0;
    for (const WeightedEdge &e : edges) {
        if (e.weight < 0) {
            throw std::invalid_argument("min_weight_perfect_matching: negative weight");
        }
        top = std::max(top, e.weight);
    }
    // Every perfect matching has the same edge count, so flipping weights
    // around a constant maps the minimum onto the maximum.
    std::vector<WeightedEdge> flipped(edges.begin(), edges.end());
    for (WeightedEdge &e : flipped) {
        e.weight = top + 1 - e.weight;
    }
    std::vector<int32_t> mate = max_weight_matching(num_vertices, flipped, true);
    for (int32_t m : mate) {
        if (m < 0) {
            throw std::invalid_argument("min_weight_perfect_matching: graph has no perfect matching");
        }
    }
    return mate;
}

}  // namespace btwc
