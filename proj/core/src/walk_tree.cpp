// Copyright 2026 The nswr Authors
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

#include "nswr/walk_tree.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pipeline_common.hpp"

namespace nswr {

std::vector<Interval> partition_working_order(int n, int len_min, int len_max) {
    if (n < 0) throw std::invalid_argument("partition_working_order: n must be nonnegative");
    if (len_min < 1 || len_max < len_min)
        throw std::invalid_argument("partition_working_order: need 1 <= len_min <= len_max");
    std::vector<Interval> out;
    if (n == 0) return out;
    int at = 0;
    while (n - at > len_max) {
        out.push_back({at, at + len_max});
        at += len_max;
    }
    const int rest = n - at;
    if (rest < len_min && !out.empty())
        out.back().end = n;  // merged backward; may reach len_max + len_min - 1
    else
        out.push_back({at, n});
    return out;
}

WalkTree build_walk_tree(int t, int leaf_chain_len) {
    if (t < 1) throw std::invalid_argument("build_walk_tree: need at least one interval");
    if (leaf_chain_len < 0)
        throw std::invalid_argument("build_walk_tree: leaf_chain_len must be nonnegative");
    WalkTree tree;
    auto add = [&tree](int s1, int s2, int parent) {
        const int idx = static_cast<int>(tree.nodes.size());
        WalkNode nd;
        nd.s1 = s1;
        nd.s2 = s2;
        nd.parent = parent;
        tree.nodes.push_back(nd);
        return idx;
    };

    std::vector<int> pending;
    pending.push_back(add(1, std::max(2, t), -1));
    while (!pending.empty()) {
        const int idx = pending.back();
        pending.pop_back();
        const int s1 = tree.nodes[idx].s1;
        const int s2 = tree.nodes[idx].s2;
        if (s2 - s1 > 1) {
            const int median = (s1 + s2) / 2;
            const int l = add(s1, median, idx);
            const int r = add(median, s2, idx);
            tree.nodes[idx].left = l;
            tree.nodes[idx].right = r;
            pending.push_back(l);
            pending.push_back(r);
        } else {
            int prev = idx;
            for (int c = 0; c < leaf_chain_len; ++c) {
                const int nxt = add(s1, s2, prev);
                tree.nodes[prev].chain_next = nxt;
                prev = nxt;
            }
        }
    }
    return tree;
}

WalkResult insert_tree_walk(const std::vector<int>& working,
                            const std::vector<Interval>& partition, int x,
                            ComparisonSource& source, const NswrParams& params) {
    params.validate();
    const int t = static_cast<int>(partition.size());
    if (t < 1) throw std::invalid_argument("insert_tree_walk: empty partition");
    int expect = 0;
    for (const Interval& iv : partition) {
        if (iv.begin != expect || iv.length() < 1)
            throw std::invalid_argument("insert_tree_walk: partition does not tile the order");
        expect = iv.end;
    }
    if (expect != static_cast<int>(working.size()))
        throw std::invalid_argument("insert_tree_walk: partition does not cover the order");

    WalkTree tree = build_walk_tree(t, params.walk_steps);
    WalkResult res;

    // Fresh-element accounting per (interval, trimmed-or-not) test set.
    std::vector<long long> consumed(static_cast<std::size_t>(t + 1) * 2, 0);
    std::vector<char> wrapped(static_cast<std::size_t>(t + 1) * 2, 0);

    // Sum of params.majority_k one-shot comparisons of x against elements of
    // interval s, drawn round-robin so each test sees fresh elements until
    // the set is consumed. Returns 0 for an empty test set.
    auto majority_sum = [&](int s, bool trimmed) {
        const Interval& iv = partition[s - 1];
        const int lo = iv.begin + (trimmed ? params.trim : 0);
        const int hi = iv.end - (trimmed ? params.trim : 0);
        if (hi <= lo) return 0;
        const int size = hi - lo;
        const std::size_t key = static_cast<std::size_t>(s) * 2 + (trimmed ? 1 : 0);
        int sum = 0;
        for (int d = 0; d < params.majority_k; ++d) {
            const int at = lo + static_cast<int>((consumed[key] + d) % size);
            sum += source.compare(x, working[at]);
        }
        consumed[key] += params.majority_k;
        if (consumed[key] > size && !wrapped[key]) {
            wrapped[key] = 1;
            ++res.exhaustions;
        }
        return sum;
    };

    int cur = 0;
    for (int step = 0; step < params.walk_steps; ++step) {
        ++res.steps;
        const WalkNode& nd = tree.nodes[cur];
        // x must look larger than everything below the node's span and
        // smaller than everything above; absent neighbours pass.
        bool ok = true;
        if (nd.s1 - 1 >= 1 && majority_sum(nd.s1 - 1, true) <= 0) ok = false;
        if (ok && nd.s2 + 1 <= t && majority_sum(nd.s2 + 1, true) > 0) ok = false;
        if (!ok) {
            if (nd.parent >= 0) cur = nd.parent;
            continue;
        }
        if (nd.left >= 0) {
            const int median = (nd.s1 + nd.s2) / 2;
            cur = majority_sum(median, false) > 0 ? nd.right : nd.left;
        } else if (nd.chain_next >= 0) {
            cur = nd.chain_next;
        }
        // At the chain's end a passing step stays put.
    }

    const WalkNode& nd = tree.nodes[cur];
    if (nd.s2 - nd.s1 == 1) {
        res.s_lo = nd.s1;
        res.s_hi = nd.s2;
    } else {
        const int median = (nd.s1 + nd.s2) / 2;
        res.s_lo = median;
        res.s_hi = median + 1;
    }
    return res;
}

QueryEfficientResult noisy_sort_query_efficient(CountingOracle& oracle,
                                                const NswrParams& params,
                                                const Ranking* truth) {
    params.validate();
    const int n = oracle.items();
    if (truth && truth->size() != n)
        throw std::invalid_argument("noisy_sort_query_efficient: truth size mismatch");

    QueryEfficientResult result;
    if (n == 0) {
        result.ranking = Ranking::identity(0);
        result.score = 0;
        return result;
    }

    const std::vector<int> chain = detail::insertion_chain(n, params.seed);
    detail::TruthTracker tracker(truth, n);

    std::vector<int> work;
    work.reserve(n);
    for (const int x : chain) {
        const int len = static_cast<int>(work.size());
        int pos = 0;
        if (len > 0) {
            const std::vector<Interval> parts =
                partition_working_order(len, params.interval_len_min, params.interval_len_max);
            const int t = static_cast<int>(parts.size());
            const WalkResult wr = insert_tree_walk(work, parts, x, oracle, params);
            result.events.element_exhaustions += wr.exhaustions;

            // One comparison against each member of the returned interval
            // pair; the count of "x larger" estimates the offset with its
            // mean shrunk by 2*gamma, so divide the centred count back out.
            const int ub = parts[wr.s_lo - 1].begin;
            const int ue = (wr.s_hi <= t ? parts[wr.s_hi - 1] : parts[wr.s_lo - 1]).end;
            int larger = 0;
            for (int p = ub; p < ue; ++p)
                if (oracle.compare(x, work[p]) > 0) ++larger;
            const int u = ue - ub;
            const double mid = static_cast<double>(u) / 2.0;
            const double off = mid + (static_cast<double>(larger) - mid) / (2.0 * params.gamma);
            const long long rounded = std::llround(off);
            pos = ub + static_cast<int>(std::clamp(rounded, 0LL, static_cast<long long>(u)));
        }
        work.insert(work.begin() + pos, x);

        // Fixed slice, so repeat passes touch no pairs beyond the first; the
        // walk's placement is usually within the slice radius of the level.
        detail::iterated_resort(work, x, pos, oracle, params.window,
                                /*recenter=*/false, 8, result.dp_stats);

        if (tracker.active()) {
            tracker.insert(x);
            if (tracker.max_dislocation(work) > params.window) ++result.events.window_violations;
        }
    }

    result.query_stats = oracle.snapshot();
    result.ranking = Ranking::from_order(work);
    result.score = score(oracle, result.ranking);
    return result;
}

}  // namespace nswr
