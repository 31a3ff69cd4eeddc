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

// Release gate: ten independent checks, one PASS/FAIL line each, exit code =
// number of failures. Every tolerance is pinned here next to the check it
// gates; constants marked "calibrated" were frozen from measured runs of
// this code base, the others come straight from the model.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "nswr/exact.hpp"
#include "nswr/experiment.hpp"
#include "nswr/insertion.hpp"
#include "nswr/nswr_params.hpp"
#include "nswr/oracle.hpp"
#include "nswr/query_table.hpp"
#include "nswr/ranking.hpp"
#include "nswr/rng.hpp"
#include "nswr/walk_tree.hpp"
#include "nswr/window_dp.hpp"

using namespace nswr;

namespace {

// Calibrated ceilings for the dislocation envelopes (measured ~4.9 and ~4.5).
constexpr double kSumPerNCeiling = 10.0;
constexpr double kMaxPerLogCeiling = 8.0;
// Calibrated query-budget constant (measured per-run maximum ~9.5).
constexpr double kBudgetC = 12.0;
// Growth ratio certifying n log n over n^2; fixed by the gate definition.
constexpr double kDoublingLimit = 2.4;
// Desk-scale floor for exact-optimum hits out of 100 small noisy instances.
constexpr int kOptimalFloor = 95;

int failures = 0;

void report(int criterion, bool pass, const char* detail) {
    std::printf("criterion %2d: %s  %s\n", criterion, pass ? "PASS" : "FAIL", detail);
    if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

QueryTable random_table(int n, std::uint64_t seed) {
    QueryTable q(n);
    SplitMix64 rng(seed);
    for (int i = 1; i < n; ++i)
        for (int j = 0; j < i; ++j) q.set(i, j, rng.next() & 1 ? 1 : -1);
    return q;
}

// All rank vectors of n items, as rankings.
std::vector<Ranking> all_rankings(int n) {
    std::vector<int> ranks(n);
    std::iota(ranks.begin(), ranks.end(), 0);
    std::vector<Ranking> out;
    do {
        out.emplace_back(ranks);
    } while (std::next_permutation(ranks.begin(), ranks.end()));
    return out;
}

// 1. Subset DP against exhaustive enumeration, integer equality.
void criterion_1() {
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    for (int n = 1; n <= 8 && ok; ++n)
        for (int t = 0; t < 50 && ok; ++t) {
            const QueryTable q = random_table(n, hash_combine(100, n * 1000 + t));
            ok = optimal_ranking_subset_dp(q).score == optimal_ranking_exhaustive(q).score;
        }
    const double dt = seconds_since(t0);
    char detail[128];
    std::snprintf(detail, sizeof detail, "subset-dp == exhaustive, n<=8 x50 each, %.1fs (<60s)",
                  dt);
    report(1, ok && dt < 60.0, detail);
}

// 2. Full-window DP equals the subset-DP optimum.
void criterion_2() {
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    for (int n = 1; n <= 14 && ok; ++n)
        for (int t = 0; t < 25 && ok; ++t) {
            const QueryTable q = random_table(n, hash_combine(200, n * 1000 + t));
            SplitMix64 rng(hash_combine(201, n * 1000 + t));
            const Ranking initial = random_ranking(n, rng);
            ok = sort_presorted(q, initial, n).score == optimal_ranking_subset_dp(q).score;
        }
    const double dt = seconds_since(t0);
    char detail[128];
    std::snprintf(detail, sizeof detail, "window>=n DP == subset-dp, n<=14 x25 each, %.1fs (<300s)",
                  dt);
    report(2, ok && dt < 300.0, detail);
}

// 3. Small-window DP equals explicit enumeration of the windowed set.
void criterion_3() {
    bool ok = true;
    int instances = 0;
    for (int k = 1; k <= 2; ++k)
        for (int t = 0; t < 100 && ok; ++t) {
            const int n = 2 + t % 7;
            const QueryTable q = random_table(n, hash_combine(300, k * 1000 + t));
            SplitMix64 rng(hash_combine(301, k * 1000 + t));
            const Ranking initial = random_ranking(n, rng);

            Score best = -max_score(n) - 1;
            for (const Ranking& sigma : all_rankings(n)) {
                bool inside = true;
                for (int i = 0; i < n && inside; ++i)
                    inside = std::abs(sigma.rank_of(i) - initial.rank_of(i)) <= k;
                if (inside) best = std::max(best, score(q, sigma));
            }
            ok = sort_presorted(q, initial, k).score == best;
            ++instances;
        }
    char detail[128];
    std::snprintf(detail, sizeof detail, "windowed DP == enumeration, k in {1,2}, %d instances",
                  instances);
    report(3, ok, detail);
}

// 4. Noiseless recovery for every algorithm at its admissible sizes.
void criterion_4() {
    bool ok = true;
    char where[64] = "all clean";

    const auto fail_at = [&](const char* name, int n, int s) {
        if (ok) std::snprintf(where, sizeof where, "first failure: %s n=%d seed=%d", name, n, s);
        ok = false;
    };

    for (int s = 1; s <= 3 && ok; ++s) {
        SplitMix64 rng(hash_combine(400, s));
        const Ranking truth = random_ranking(10, rng);
        const QueryTable q = make_noisy_tournament(truth, {0.5, hash_combine(401, s)});
        if (optimal_ranking_exhaustive(q).ranking != truth) fail_at("exhaustive", 10, s);
        if (optimal_ranking_subset_dp(q).ranking != truth) fail_at("subset-dp", 10, s);
    }

    for (int n : {10, 100, 1000}) {
        for (int s = 1; s <= (n == 1000 ? 2 : 3) && ok; ++s) {
            const Ranking truth = Ranking::identity(n);
            const QueryTable q = make_noisy_tournament(truth, {0.5, hash_combine(402, n + s)});
            std::vector<int> order(n);
            std::iota(order.begin(), order.end(), 0);
            for (int i = 0; i + 1 < n; i += 5) std::swap(order[i], order[i + 1]);
            if (sort_presorted(q, Ranking::from_order(order), 3).ranking != truth)
                fail_at("window-dp", n, s);

            CountingOracle a(truth, NoiseParams{0.5, hash_combine(403, n + s)});
            if (noisy_sort_insertion(a, NswrParams::defaults_for(n, 0.5, s), &truth).ranking !=
                truth)
                fail_at("insertion", n, s);

            CountingOracle b(truth, NoiseParams{0.5, hash_combine(404, n + s)});
            if (noisy_sort_query_efficient(b, NswrParams::defaults_for(n, 0.5, s), &truth)
                    .ranking != truth)
                fail_at("query-efficient", n, s);
        }
    }
    report(4, ok, where);
}

// 5. Small noisy instances: insertion reaches the exhaustive optimum.
void criterion_5() {
    int optimal = 0, total = 0;
    for (int n = 5; n <= 8; ++n)
        for (int t = 0; t < 25; ++t) {
            SplitMix64 rng(hash_combine(910, n * 100 + t));
            const Ranking truth = random_ranking(n, rng);
            const QueryTable q =
                make_noisy_tournament(truth, {0.3, hash_combine(911, n * 100 + t)});
            const NswrParams params = NswrParams::defaults_for(n, 0.3, hash_combine(912, t));
            if (noisy_sort_insertion(q, params).score == optimal_ranking_exhaustive(q).score)
                ++optimal;
            ++total;
        }
    char detail[128];
    std::snprintf(detail, sizeof detail, "insertion optimal in %d/%d (floor %d)", optimal, total,
                  kOptimalFloor);
    report(5, total == 100 && optimal >= kOptimalFloor, detail);
}

// 6. Dislocation envelopes of the localized insertion pipeline.
void criterion_6() {
    const auto t0 = std::chrono::steady_clock::now();
    const int kTrials = 20;
    struct Cell {
        int n;
        double sum_mean = 0, sum_se = 0, max_mean = 0;
        int breaches = 0;
    };
    std::vector<Cell> cells;

    for (int n : {250, 500, 1000}) {
        std::vector<double> per_sum, per_max;
        int breaches = 0;
        for (int t = 0; t < kTrials; ++t) {
            SplitMix64 rng(hash_combine(hash_combine(7000, n), t * 2));
            const Ranking truth = random_ranking(n, rng);
            CountingOracle oracle(
                truth, NoiseParams{0.25, hash_combine(hash_combine(7000, n), t * 2 + 1)});
            NswrParams params = NswrParams::defaults_for(n, 0.25, hash_combine(7001, t));
            params.localized = true;  // the gate runs the localized re-sort mode
            const InsertionResult r = noisy_sort_insertion(oracle, params, &truth);

            long long sum = 0;
            int mx = 0;
            for (int i = 0; i < n; ++i) {
                const int d = std::abs(r.ranking.rank_of(i) - truth.rank_of(i));
                sum += d;
                mx = std::max(mx, d);
            }
            const double spn = static_cast<double>(sum) / n;
            const double mpl = mx / std::log2(static_cast<double>(n));
            per_sum.push_back(spn);
            per_max.push_back(mpl);
            if (spn > kSumPerNCeiling || mpl > kMaxPerLogCeiling) ++breaches;
        }
        Cell c;
        c.n = n;
        for (double v : per_sum) c.sum_mean += v;
        for (double v : per_max) c.max_mean += v;
        c.sum_mean /= kTrials;
        c.max_mean /= kTrials;
        double var = 0;
        for (double v : per_sum) var += (v - c.sum_mean) * (v - c.sum_mean);
        c.sum_se = std::sqrt(var / (kTrials - 1) / kTrials);
        c.breaches = breaches;
        cells.push_back(c);
    }

    bool ok = true;
    for (const Cell& c : cells)
        ok = ok && c.sum_mean <= kSumPerNCeiling && c.max_mean <= kMaxPerLogCeiling;
    // Non-increasing within noise: each doubling may rise by at most three
    // combined standard errors, the same 3-sigma convention criterion 8 uses.
    for (std::size_t i = 1; i < cells.size(); ++i) {
        const double slack =
            3.0 * std::sqrt(cells[i - 1].sum_se * cells[i - 1].sum_se +
                            cells[i].sum_se * cells[i].sum_se);
        ok = ok && cells[i].sum_mean <= cells[i - 1].sum_mean + slack;
    }
    const double dt = seconds_since(t0);
    ok = ok && dt < 600.0;

    for (const Cell& c : cells)
        std::printf("    cell n=%4d: sum/n %.2f (se %.2f), max/log2 %.2f, "
                    "trials past ceiling %d/%d\n",
                    c.n, c.sum_mean, c.sum_se, c.max_mean, c.breaches, kTrials);
    char detail[160];
    std::snprintf(detail, sizeof detail,
                  "means %.2f/%.2f/%.2f <= %.0f, max/log2 <= %.0f, %.0fs (<600s)",
                  cells[0].sum_mean, cells[1].sum_mean, cells[2].sum_mean, kSumPerNCeiling,
                  kMaxPerLogCeiling, dt);
    report(6, ok, detail);
}

// 7. Query budget of the tree-walk pipeline: one constant, n log n growth.
void criterion_7() {
    const int kSeeds = 10;
    std::vector<int> sizes = {250, 500, 1000};
    std::vector<std::vector<double>> distinct(sizes.size());
    bool under_budget = true;

    for (std::size_t i = 0; i < sizes.size(); ++i) {
        const int n = sizes[i];
        for (int t = 0; t < kSeeds; ++t) {
            const Ranking truth = Ranking::identity(n);
            CountingOracle oracle(truth, NoiseParams{0.25, hash_combine(3100, n * 100 + t)});
            const NswrParams params = NswrParams::defaults_for(n, 0.25, hash_combine(3200, t));
            const QueryEfficientResult r = noisy_sort_query_efficient(oracle, params, &truth);
            const double d = static_cast<double>(r.query_stats.distinct_queries);
            distinct[i].push_back(d);
            if (d > kBudgetC * n * std::log2(static_cast<double>(n))) under_budget = false;
        }
    }

    double worst_ratio = 0;
    for (std::size_t i = 1; i < sizes.size(); ++i) {
        double mean_ratio = 0;
        for (int t = 0; t < kSeeds; ++t) mean_ratio += distinct[i][t] / distinct[i - 1][t];
        mean_ratio /= kSeeds;
        worst_ratio = std::max(worst_ratio, mean_ratio);
    }
    char detail[160];
    std::snprintf(detail, sizeof detail,
                  "distinct <= %.0f n log2 n, worst mean doubling ratio %.2f (<= %.1f)", kBudgetC,
                  worst_ratio, kDoublingLimit);
    report(7, under_budget && worst_ratio <= kDoublingLimit, detail);
}

// 8. Beat rate of an m-pair challenger against the exact binomial tail.
void criterion_8() {
    bool ok = true;
    double worst = 0;
    for (double gamma : {0.1, 0.25})
        for (int m : {1, 5, 20, 100}) {
            const BeatCheck c = beat_probability_check(
                gamma, m, 10000, hash_combine(800, m * 100 + static_cast<int>(gamma * 100)));
            const double se =
                std::sqrt(std::max(c.exact_tail * (1 - c.exact_tail), 1e-9) / 10000);
            const double dev = std::abs(c.empirical_rate - c.exact_tail);
            if (dev > 3 * se) ok = false;
            worst = std::max(worst, se > 0 ? dev / se : 0.0);
        }
    char detail[128];
    std::snprintf(detail, sizeof detail, "8 cells, worst deviation %.2f se (<= 3)", worst);
    report(8, ok, detail);
}

// 9. Dislocation sandwich around the inversion count, every permutation.
void criterion_9() {
    bool ok = true;
    long long checked = 0;
    for (int n = 1; n <= 7 && ok; ++n)
        for (const Ranking& tau : all_rankings(n)) {
            long long d = 0, inv = 0;
            for (int i = 0; i < n; ++i) d += std::abs(tau.rank_of(i) - i);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < i; ++j)
                    if (tau.rank_of(i) < tau.rank_of(j)) ++inv;
            if (!(d <= 2 * inv && inv <= d)) {
                ok = false;
                break;
            }
            ++checked;
        }
    char detail[128];
    std::snprintf(detail, sizeof detail, "%lld permutations, d/2 <= inversions <= d", checked);
    report(9, ok, detail);
}

// 10. Transcript replay: repeats always match, distinct == unique pairs.
void criterion_10() {
    const int n = 60;
    const Ranking truth = Ranking::identity(n);
    CountingOracle oracle(truth, NoiseParams{0.25, 1009});
    SplitMix64 rng(1010);

    std::set<std::pair<int, int>> unique_pairs;
    std::vector<std::vector<int>> first(n, std::vector<int>(n, 0));
    bool ok = true;
    for (long long ask = 0; ask < 100000 && ok; ++ask) {
        const int i = static_cast<int>(rng.next_below(n));
        int j = static_cast<int>(rng.next_below(n - 1));
        if (j >= i) ++j;
        const int v = oracle.compare(i, j);
        if (v != 1 && v != -1) ok = false;
        if (first[i][j] == 0) {
            first[i][j] = v;
            first[j][i] = -v;
            unique_pairs.insert({std::min(i, j), std::max(i, j)});
        } else if (first[i][j] != v) {
            ok = false;
        }
    }
    ok = ok && oracle.distinct_queries() == static_cast<long long>(unique_pairs.size());
    ok = ok && oracle.total_accesses() == 100000;
    char detail[128];
    std::snprintf(detail, sizeof detail,
                  "100000 asks, %zu unique pairs == distinct counter, repeats stable",
                  unique_pairs.size());
    report(10, ok, detail);
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    std::printf("%d of 10 criteria passed\n", 10 - failures);
    return failures;
}
