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

#include <cmath>
#include <map>
#include <stdexcept>
#include <utility>

#include "doctest.h"
#include "nswr/oracle.hpp"
#include "nswr/rng.hpp"
#include "test_util.hpp"

using nswr::CountingOracle;
using nswr::NoiseParams;
using nswr::Ranking;

TEST_CASE("noise params reject gammas outside the half-open interval") {
    CHECK_THROWS_AS((NoiseParams{0.0, 0}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((NoiseParams{-0.1, 0}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((NoiseParams{0.51, 0}.validate()), std::invalid_argument);
    CHECK_NOTHROW((NoiseParams{0.5, 0}.validate()));
    CHECK_NOTHROW((NoiseParams{1e-9, 0}.validate()));
    CHECK((NoiseParams{0.25, 0}.p()) == doctest::Approx(0.75));
}

TEST_CASE("pair outcomes are pure in the seed and unordered pair") {
    const Ranking truth = Ranking::identity(10);
    const NoiseParams params{0.25, 42};
    for (int i = 0; i < 10; ++i)
        for (int j = 0; j < 10; ++j) {
            if (i == j) continue;
            const int once = nswr::noisy_pair_outcome(params, truth, i, j);
            CHECK(once == nswr::noisy_pair_outcome(params, truth, i, j));
            CHECK(once == -nswr::noisy_pair_outcome(params, truth, j, i));
        }
}

TEST_CASE("gamma one half generates the induced table of the truth") {
    nswr::SplitMix64 rng(5);
    const Ranking truth = nswr::random_ranking(12, rng);
    const nswr::QueryTable q = nswr::make_noisy_tournament(truth, {0.5, 77});
    CHECK(nswr::disagreement_distance(q, nswr::induced_queries(truth)) == 0);
    CHECK(nswr::score(q, truth) == nswr::max_score(12));
}

TEST_CASE("tournaments are reproducible from their seed") {
    nswr::SplitMix64 rng(6);
    const Ranking truth = nswr::random_ranking(15, rng);
    const nswr::QueryTable a = nswr::make_noisy_tournament(truth, {0.2, 123});
    const nswr::QueryTable b = nswr::make_noisy_tournament(truth, {0.2, 123});
    const nswr::QueryTable c = nswr::make_noisy_tournament(truth, {0.2, 124});
    CHECK(nswr::disagreement_distance(a, b) == 0);
    CHECK(nswr::disagreement_distance(a, c) > 0);
}

TEST_CASE("flipped-pair fraction concentrates around one half minus gamma") {
    // n = 200 gives 19900 pairs; at gamma = 0.25 the flip fraction lives
    // within 4 standard errors (~0.0123) of 0.25 for all but ~1e-4 of seeds.
    nswr::SplitMix64 rng(7);
    const Ranking truth = nswr::random_ranking(200, rng);
    const nswr::QueryTable ideal = nswr::induced_queries(truth);
    for (const std::uint64_t seed : {11ULL, 22ULL, 33ULL}) {
        const nswr::QueryTable q = nswr::make_noisy_tournament(truth, {0.25, seed});
        const double flipped =
            static_cast<double>(nswr::disagreement_distance(q, ideal)) /
            static_cast<double>(q.pair_count());
        CHECK(flipped > 0.25 - 0.0123);
        CHECK(flipped < 0.25 + 0.0123);
    }
}

TEST_CASE("per-pair flip frequency over many seeds matches the marginal") {
    const Ranking truth = Ranking::identity(8);
    const int trials = 10000;
    int flips_30 = 0;
    int joint_flips = 0;  // pairs {3,0} and {7,4} flipped together
    int flips_74 = 0;
    for (int s = 0; s < trials; ++s) {
        const NoiseParams params{0.25, static_cast<std::uint64_t>(s)};
        const bool f30 = nswr::noisy_pair_outcome(params, truth, 3, 0) != 1;
        const bool f74 = nswr::noisy_pair_outcome(params, truth, 7, 4) != 1;
        flips_30 += f30 ? 1 : 0;
        flips_74 += f74 ? 1 : 0;
        joint_flips += (f30 && f74) ? 1 : 0;
    }
    const double rate_30 = flips_30 / static_cast<double>(trials);
    const double rate_74 = flips_74 / static_cast<double>(trials);
    CHECK(std::abs(rate_30 - 0.25) < 0.02);
    CHECK(std::abs(rate_74 - 0.25) < 0.02);

    // Independence surrogate: the correlation of the two indicators.
    const double joint = joint_flips / static_cast<double>(trials);
    const double cov = joint - rate_30 * rate_74;
    const double denom = std::sqrt(rate_30 * (1 - rate_30) * rate_74 * (1 - rate_74));
    CHECK(std::abs(cov / denom) < 0.05);
}

TEST_CASE("counting oracle memoizes pairs and counts asks") {
    nswr::SplitMix64 rng(8);
    const Ranking truth = nswr::random_ranking(10, rng);
    CountingOracle oracle(truth, {0.3, 99});
    CHECK(oracle.items() == 10);
    CHECK(oracle.distinct_queries() == 0);

    const int first = oracle.query(3, 7);
    CHECK(oracle.query(7, 3) == -first);
    CHECK(oracle.distinct_queries() == 1);
    CHECK(oracle.total_accesses() == 2);

    for (int k = 0; k < 1000; ++k) CHECK(oracle.query(3, 7) == first);
    CHECK(oracle.distinct_queries() == 1);
    CHECK(oracle.total_accesses() == 1002);

    oracle.query(0, 1);
    CHECK(oracle.distinct_queries() == 2);
    const CountingOracle::Snapshot snap = oracle.snapshot();
    CHECK(snap.distinct_queries == 2);
    CHECK(snap.total_accesses == 1003);
}

TEST_CASE("oracle rejects self comparisons and out of range items") {
    CountingOracle oracle(Ranking::identity(5), {0.3, 1});
    CHECK_THROWS_AS(oracle.query(2, 2), std::invalid_argument);
    CHECK_THROWS_AS(oracle.query(0, 5), std::out_of_range);
    CHECK_THROWS_AS(oracle.query(-1, 0), std::out_of_range);
}

TEST_CASE("materialized oracle equals the eagerly generated tournament") {
    nswr::SplitMix64 rng(9);
    const Ranking truth = nswr::random_ranking(12, rng);
    const NoiseParams params{0.2, 4242};
    CountingOracle oracle(truth, params);
    oracle.query(5, 2);
    oracle.query(1, 9);
    const nswr::QueryTable lazy = oracle.materialize_all();
    const nswr::QueryTable eager = nswr::make_noisy_tournament(truth, params);
    CHECK(nswr::disagreement_distance(lazy, eager) == 0);
    CHECK(oracle.distinct_queries() == lazy.pair_count());
    CHECK(oracle.truth() == truth);
}

TEST_CASE("replay oracle serves a fixed table and hides any truth") {
    const nswr::QueryTable fixed = nswr_test::random_table(6, 31);
    CountingOracle oracle(fixed);
    for (int i = 1; i < 6; ++i)
        for (int j = 0; j < i; ++j) CHECK(oracle.query(i, j) == fixed.query(i, j));
    CHECK(oracle.distinct_queries() == fixed.pair_count());
    CHECK_THROWS_AS(oracle.truth(), std::logic_error);
}

TEST_CASE("transcript replay returns identical answers in any interleaving") {
    nswr::SplitMix64 rng(10);
    const Ranking truth = nswr::random_ranking(30, rng);
    CountingOracle oracle(truth, {0.1, 7});
    std::map<std::pair<int, int>, int> first_seen;
    nswr::SplitMix64 asks(11);
    for (int k = 0; k < 5000; ++k) {
        const int i = static_cast<int>(asks.next_below(30));
        int j = static_cast<int>(asks.next_below(29));
        if (j >= i) ++j;
        const int value = oracle.query(i, j);
        const auto key = std::make_pair(std::min(i, j), std::max(i, j));
        const int oriented = i < j ? -value : value;  // canonical (hi, lo) sign
        const auto [it, inserted] = first_seen.emplace(key, oriented);
        if (!inserted) CHECK(it->second == oriented);
    }
    CHECK(oracle.distinct_queries() == static_cast<long long>(first_seen.size()));
    CHECK(oracle.total_accesses() == 5000);
}

TEST_CASE("subset sources relabel a slice of the base source") {
    const nswr::QueryTable q = nswr_test::random_table(8, 77);
    nswr::TableSource base(q);
    nswr::SubsetSource view(base, {5, 1, 6});
    CHECK(view.items() == 3);
    CHECK(view.compare(0, 1) == q.query(5, 1));
    CHECK(view.compare(2, 0) == q.query(6, 5));
}

TEST_CASE("source scoring matches table scoring") {
    const nswr::QueryTable q = nswr_test::random_table(9, 13);
    nswr::TableSource src(q);
    nswr::SplitMix64 rng(14);
    const Ranking sigma = nswr::random_ranking(9, rng);
    CHECK(nswr::score(src, sigma) == nswr::score(q, sigma));
}
