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

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "nswr/oracle.hpp"
#include "nswr/query_table.hpp"
#include "nswr/ranking.hpp"
#include "nswr/rng.hpp"
#include "nswr/walk_tree.hpp"
#include "test_util.hpp"

using namespace nswr;
using namespace nswr_test;

namespace {

std::vector<int> lengths(const std::vector<Interval>& part) {
    std::vector<int> out;
    for (const Interval& iv : part) out.push_back(iv.length());
    return out;
}

// x lives between working levels `level-1` and `level`; comparisons against
// working ids (offset by 1000) are noisy one-shot draws. Only (x, element)
// pairs are ever asked by the walk.
class BetweenLevelsSource final : public ComparisonSource {
public:
    BetweenLevelsSource(int x_id, int level, double p, std::uint64_t seed)
        : x_id_(x_id), level_(level), p_(p), rng_(seed) {}

    int items() const override { return x_id_ + 1; }

    int compare(int a, int b) override {
        const int other = (a == x_id_) ? b : a;
        const int sign_true = (level_ > other - 1000) ? 1 : -1;
        const int noisy = rng_.next_double() < p_ ? sign_true : -sign_true;
        return (a == x_id_) ? noisy : -noisy;
    }

private:
    int x_id_;
    int level_;
    double p_;
    SplitMix64 rng_;
};

}  // namespace

TEST_CASE("partition_working_order: short remainder merges backward") {
    const auto part = partition_working_order(100, 24, 28);
    CHECK(lengths(part) == std::vector<int>{28, 28, 44});
    CHECK(part.front().begin == 0);
    CHECK(part.back().end == 100);
}

TEST_CASE("partition_working_order: exact multiples and fitting remainders") {
    CHECK(lengths(partition_working_order(84, 24, 28)) == std::vector<int>{28, 28, 28});
    CHECK(lengths(partition_working_order(52, 24, 28)) == std::vector<int>{28, 24});
    // Longest possible merged interval: len_max + len_min - 1.
    CHECK(lengths(partition_working_order(51, 24, 28)) == std::vector<int>{51});
}

TEST_CASE("partition_working_order: small and empty orders") {
    CHECK(lengths(partition_working_order(10, 24, 28)) == std::vector<int>{10});
    CHECK(partition_working_order(0, 24, 28).empty());
}

TEST_CASE("partition_working_order: rejects bad arguments") {
    CHECK_THROWS_AS(partition_working_order(-1, 4, 8), std::invalid_argument);
    CHECK_THROWS_AS(partition_working_order(10, 0, 8), std::invalid_argument);
    CHECK_THROWS_AS(partition_working_order(10, 8, 4), std::invalid_argument);
}

TEST_CASE("build_walk_tree: single interval is a root chain") {
    const WalkTree tree = build_walk_tree(1, 3);
    REQUIRE(tree.nodes.size() == 4);
    CHECK(tree.nodes[0].s1 == 1);
    CHECK(tree.nodes[0].s2 == 2);  // widened so a label pair always exists
    CHECK(tree.nodes[0].left == -1);
    CHECK(tree.nodes[0].right == -1);
    int at = 0;
    for (int i = 0; i < 3; ++i) {
        const int next = tree.nodes[at].chain_next;
        REQUIRE(next != -1);
        CHECK(tree.nodes[next].parent == at);
        CHECK(tree.nodes[next].s1 == 1);
        CHECK(tree.nodes[next].s2 == 2);
        at = next;
    }
    CHECK(tree.nodes[at].chain_next == -1);
}

TEST_CASE("build_walk_tree: five intervals split at the median") {
    const WalkTree tree = build_walk_tree(5, 2);
    const WalkNode& root = tree.nodes[0];
    CHECK(root.s1 == 1);
    CHECK(root.s2 == 5);
    REQUIRE(root.left != -1);
    REQUIRE(root.right != -1);
    CHECK(tree.nodes[root.left].s1 == 1);
    CHECK(tree.nodes[root.left].s2 == 3);
    CHECK(tree.nodes[root.right].s1 == 3);
    CHECK(tree.nodes[root.right].s2 == 5);
    CHECK(tree.nodes[root.left].parent == 0);
    CHECK(tree.nodes[root.right].parent == 0);

    // Leaves [1,2],[2,3],[3,4],[4,5], each followed by 2 chain nodes.
    CHECK(tree.nodes.size() == 7 + 4 * 2);
    for (const WalkNode& nd : tree.nodes)
        if (nd.chain_next != -1) CHECK(tree.nodes[nd.chain_next].parent >= 0);
}

TEST_CASE("build_walk_tree: rejects bad arguments") {
    CHECK_THROWS_AS(build_walk_tree(0, 2), std::invalid_argument);
    CHECK_THROWS_AS(build_walk_tree(3, -1), std::invalid_argument);
}

TEST_CASE("insert_tree_walk: clean walk pins the extreme labels") {
    // Working ids are the even numbers; odd x slots between them.
    const int n = 64;
    QueryTable q(130);
    for (int i = 1; i < 130; ++i)
        for (int j = 0; j < i; ++j) q.set(i, j, 1);
    TableSource source(q);
    std::vector<int> working;
    for (int i = 0; i < n; ++i) working.push_back(2 * i + 1);

    const auto part = partition_working_order(n, 8, 16);
    REQUIRE(part.size() == 4);
    NswrParams params = NswrParams::defaults_for(n, 0.5, 0);
    params.trim = 1;

    const WalkResult low = insert_tree_walk(working, part, 0, source, params);
    CHECK(low.s_lo == 1);
    CHECK(low.s_hi == 2);
    CHECK(low.steps == params.walk_steps);

    const WalkResult high = insert_tree_walk(working, part, 129, source, params);
    CHECK(high.s_lo == 3);
    CHECK(high.s_hi == 4);

    // Interior items land on a pair whose span contains the true position.
    for (int x : {16, 34, 64, 98}) {
        const WalkResult mid = insert_tree_walk(working, part, x, source, params);
        const int position = (x + 1) / 2;
        CHECK(part[mid.s_lo - 1].begin <= position);
        CHECK(position <= part[std::min<int>(mid.s_hi, part.size()) - 1].end);
    }
}

TEST_CASE("insert_tree_walk: rejects partitions that do not tile") {
    QueryTable q(10);
    TableSource source(q);
    const std::vector<int> working = {0, 1, 2, 3, 4, 5};
    NswrParams params = NswrParams::defaults_for(6, 0.25, 0);

    CHECK_THROWS_AS(insert_tree_walk(working, {}, 6, source, params), std::invalid_argument);
    CHECK_THROWS_AS(insert_tree_walk(working, {{0, 3}, {4, 6}}, 6, source, params),
                    std::invalid_argument);
    CHECK_THROWS_AS(insert_tree_walk(working, {{0, 3}, {3, 5}}, 6, source, params),
                    std::invalid_argument);
}

TEST_CASE("insert_tree_walk: consumed test sets raise the exhaustion flag") {
    const int n = 12;
    QueryTable q(26);
    for (int i = 1; i < 26; ++i)
        for (int j = 0; j < i; ++j) q.set(i, j, 1);
    TableSource source(q);
    std::vector<int> working;
    for (int i = 0; i < n; ++i) working.push_back(2 * i + 1);

    // Intervals of 4 with trim 1 leave 2 fresh elements per trimmed test;
    // 15 votes must wrap.
    const auto part = partition_working_order(n, 4, 4);
    NswrParams params;
    params.gamma = 0.25;
    params.interval_len_min = 4;
    params.interval_len_max = 4;
    params.trim = 1;
    const WalkResult w = insert_tree_walk(working, part, 24, source, params);
    CHECK(w.exhaustions > 0);
}

TEST_CASE("insert_tree_walk: noisy labels stay honest at scale") {
    // A richer walk than the lean pipeline defaults: longer intervals and
    // more votes per test. Calibrated: 500/500 on these seeds.
    const int n = 1024;
    std::vector<int> working(n);
    for (int i = 0; i < n; ++i) working[i] = i + 1000;
    NswrParams params;
    params.gamma = 0.25;
    params.interval_len_min = 40;
    params.interval_len_max = 80;
    params.majority_k = 21;
    const auto part =
        partition_working_order(n, params.interval_len_min, params.interval_len_max);
    const int t = static_cast<int>(part.size());

    int correct = 0;
    for (int trial = 0; trial < 500; ++trial) {
        SplitMix64 rng(hash_combine(1300, trial));
        const int level = static_cast<int>(rng.next_below(n + 1));
        BetweenLevelsSource source(9999, level, 0.5 + params.gamma, hash_combine(1301, trial));
        const WalkResult w = insert_tree_walk(working, part, 9999, source, params);
        if (part[w.s_lo - 1].begin <= level && level <= part[std::min(w.s_hi, t) - 1].end)
            ++correct;
    }
    CHECK(correct >= 495);
}

TEST_CASE("noisy_sort_query_efficient: clean comparisons recover the truth") {
    const int n = 64;
    const Ranking truth = Ranking::identity(n);
    CountingOracle oracle(truth, NoiseParams{0.5, 5});
    const NswrParams params = NswrParams::defaults_for(n, 0.5, 6);
    const QueryEfficientResult r = noisy_sort_query_efficient(oracle, params, &truth);

    CHECK(r.ranking == truth);
    CHECK(r.score == max_score(n));
    CHECK(r.events.window_violations == 0);
    CHECK(r.query_stats.distinct_queries < 1LL * n * (n - 1) / 2);
}

TEST_CASE("noisy_sort_query_efficient: stays inside the query budget") {
    const int n = 256;
    const Ranking truth = Ranking::identity(n);
    CountingOracle oracle(truth, NoiseParams{0.25, 11});
    const NswrParams params = NswrParams::defaults_for(n, 0.25, 12);
    const QueryEfficientResult r = noisy_sort_query_efficient(oracle, params, &truth);

    const long long pairs = 1LL * n * (n - 1) / 2;
    CHECK(r.query_stats.distinct_queries < pairs);
    CHECK(static_cast<double>(r.query_stats.distinct_queries) < 15.0 * n * 8.0);
    CHECK(r.query_stats.total_accesses >= r.query_stats.distinct_queries);

    // Scoring the final ranking materializes the remaining pairs; the
    // snapshot taken before it is the budgeted figure.
    CHECK(oracle.distinct_queries() == pairs);
    CHECK(r.query_stats.distinct_queries < oracle.distinct_queries());
}

TEST_CASE("noisy_sort_query_efficient: same seed, same run") {
    const int n = 256;
    const Ranking truth = Ranking::identity(n);
    CountingOracle a(truth, NoiseParams{0.25, 11});
    CountingOracle b(truth, NoiseParams{0.25, 11});
    const NswrParams params = NswrParams::defaults_for(n, 0.25, 12);

    const QueryEfficientResult r1 = noisy_sort_query_efficient(a, params, &truth);
    const QueryEfficientResult r2 = noisy_sort_query_efficient(b, params, &truth);
    CHECK(r1.ranking == r2.ranking);
    CHECK(r1.score == r2.score);
    CHECK(r1.query_stats.distinct_queries == r2.query_stats.distinct_queries);
    CHECK(r1.query_stats.total_accesses == r2.query_stats.total_accesses);
}

TEST_CASE("noisy_sort_query_efficient: truth of the wrong size is rejected") {
    const Ranking truth = Ranking::identity(32);
    CountingOracle oracle(truth, NoiseParams{0.25, 1});
    const Ranking wrong = Ranking::identity(31);
    const NswrParams params = NswrParams::defaults_for(32, 0.25, 2);
    CHECK_THROWS_AS(noisy_sort_query_efficient(oracle, params, &wrong), std::invalid_argument);
}
