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

#ifndef NSWR_WALK_TREE_HPP
#define NSWR_WALK_TREE_HPP

#include <vector>

#include "nswr/insertion.hpp"
#include "nswr/nswr_params.hpp"
#include "nswr/oracle.hpp"
#include "nswr/ranking.hpp"

namespace nswr {

/// Half-open run of positions in the working order.
struct Interval {
    int begin = 0;
    int end = 0;
    int length() const { return end - begin; }
};

/// Cuts [0, n) into consecutive intervals of length len_max greedily; a final
/// remainder shorter than len_min is merged backward into the previous
/// interval (so the last interval may reach len_max + len_min - 1). n below
/// len_min yields a single short interval. Throws std::invalid_argument for
/// n < 0 or invalid bounds.
std::vector<Interval> partition_working_order(int n, int len_min, int len_max);

/// Node of the walk's search structure over interval indices 1..t. Internal
/// nodes [s1, s2] with s2 - s1 > 1 have two children overlapping at the
/// median s' = (s1+s2)/2: [s1, s'] and [s', s2]. Nodes with s2 - s1 == 1 head
/// a chain of identically labelled descendants that the walk settles into.
struct WalkNode {
    int s1 = 0, s2 = 0;
    int parent = -1;
    int left = -1, right = -1;
    int chain_next = -1;
};

struct WalkTree {
    std::vector<WalkNode> nodes;  // nodes[0] is the root [1, max(2, t)]
};

/// Throws std::invalid_argument for t < 1 or leaf_chain_len < 0.
WalkTree build_walk_tree(int t, int leaf_chain_len);

struct WalkResult {
    int s_lo = 1;        // returned label [s, s+1]; s_hi may exceed t when t == 1
    int s_hi = 2;
    int steps = 0;
    int exhaustions = 0; // test sets that ran out of fresh elements this insertion
};

/// Walks x down the interval search tree for params.walk_steps steps. At each
/// step the two boundary majority tests check x against the trimmed
/// neighbours (elements below interval s1-1, above s2+1; tests against
/// nonexistent neighbours pass); on failure the walk backtracks one node.
/// Internal nodes then descend by a majority test against the untrimmed
/// median interval; chain nodes advance. Each test draws params.majority_k
/// fresh elements round-robin from its interval, reusing them (and flagging
/// an exhaustion) once the interval is consumed. The final node's label is
/// returned; internal nodes report their median pair. Under typical noise x
/// belongs to interval s_lo or s_hi.
WalkResult insert_tree_walk(const std::vector<int>& working,
                            const std::vector<Interval>& partition, int x,
                            ComparisonSource& source, const NswrParams& params);

struct QueryEfficientResult {
    Ranking ranking;
    Score score;
    CountingOracle::Snapshot query_stats;  // taken before the final score materialization
    SortEvents events;
    WindowDpStats dp_stats;
};

/// Insertion sorter that spends O(log n) comparisons per insertion: items
/// arrive in the same seeded random order as noisy_sort_insertion, but each
/// is placed by insert_tree_walk over a partition of the working order, its
/// position inside the returned interval pair estimated from a single
/// comparison against each member (count of "x larger", de-biased by the
/// known noise level), and the re-sort DP always runs on the window*4-radius
/// slice around the insertion. query_stats is snapshotted before the final
/// score is measured, since scoring materialises the remaining pairs.
QueryEfficientResult noisy_sort_query_efficient(CountingOracle& oracle,
                                                const NswrParams& params,
                                                const Ranking* truth = nullptr);

}  // namespace nswr

#endif  // NSWR_WALK_TREE_HPP
