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

#include "nswr/exact.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace nswr {

OptimalResult optimal_ranking_exhaustive(const QueryTable& q) {
    const int n = q.items();
    if (n > 10) {
        throw std::invalid_argument("optimal_ranking_exhaustive: guarded to n <= 10");
    }
    std::vector<int> ranks(n);
    std::iota(ranks.begin(), ranks.end(), 0);

    std::vector<int> best_ranks = ranks;
    Score best = std::numeric_limits<Score>::min();
    do {
        Score s = 0;
        for (int i = 1; i < n; ++i) {
            for (int j = 0; j < i; ++j) {
                const int outcome = q.query(i, j);
                s += ranks[i] > ranks[j] ? outcome : -outcome;
            }
        }
        // next_permutation walks rank sequences in lexicographic order, so
        // keeping only strict improvements leaves the smallest optimum.
        if (s > best) {
            best = s;
            best_ranks = ranks;
        }
    } while (std::next_permutation(ranks.begin(), ranks.end()));

    return {Ranking(std::move(best_ranks)), best};
}

OptimalResult optimal_ranking_subset_dp(const QueryTable& q) {
    const int n = q.items();
    if (n > 20) {
        throw std::invalid_argument("optimal_ranking_subset_dp: guarded to n <= 20");
    }
    if (n == 1) {
        return {Ranking::identity(1), 0};
    }

    // beats[x] holds a bit per item y with q(x, y) = +1, so the score gained
    // by putting x above every member of S is 2*popcount(beats[x] & S) - |S|.
    std::vector<std::uint32_t> beats(n, 0);
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            if (y != x && q.query(x, y) > 0) beats[x] |= 1u << y;
        }
    }

    const std::size_t states = std::size_t{1} << n;
    constexpr Score kUnset = std::numeric_limits<Score>::min();
    std::vector<Score> best(states, kUnset);
    std::vector<std::int8_t> top(states, -1);
    best[0] = 0;

    for (std::uint32_t mask = 1; mask < states; ++mask) {
        const int size_minus_1 = std::popcount(mask) - 1;
        Score value = kUnset;
        int choice = -1;
        // x ascending plus strict improvement keeps the smallest item index
        // among ties.
        for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
            const int x = std::countr_zero(rest);
            const std::uint32_t below = mask & ~(1u << x);
            const Score gained =
                2 * static_cast<Score>(std::popcount(beats[x] & below)) - size_minus_1;
            const Score cand = best[below] + gained;
            if (cand > value) {
                value = cand;
                choice = x;
            }
        }
        best[mask] = value;
        top[mask] = static_cast<std::int8_t>(choice);
    }

    const std::uint32_t full = static_cast<std::uint32_t>(states - 1);
    std::vector<int> ranks(n);
    std::uint32_t mask = full;
    for (int r = n - 1; r >= 0; --r) {
        const int x = top[mask];
        ranks[x] = r;
        mask &= ~(1u << x);
    }
    return {Ranking(std::move(ranks)), best[full]};
}

}  // namespace nswr
