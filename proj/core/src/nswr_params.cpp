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

#include "nswr/nswr_params.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "nswr/theory.hpp"

namespace nswr {

void NswrParams::validate() const {
    if (!(gamma > 0.0 && gamma <= 0.5))
        throw std::invalid_argument("NswrParams: gamma must lie in (0, 1/2]");
    if (!(beta > 0.0)) throw std::invalid_argument("NswrParams: beta must be positive");
    if (window < 1) throw std::invalid_argument("NswrParams: window must be at least 1");
    if (block_len < 1) throw std::invalid_argument("NswrParams: block_len must be at least 1");
    if (majority_k < 1 || majority_k % 2 == 0)
        throw std::invalid_argument("NswrParams: majority_k must be odd and positive");
    if (walk_steps < 1) throw std::invalid_argument("NswrParams: walk_steps must be at least 1");
    if (interval_len_min < 3)
        throw std::invalid_argument("NswrParams: interval_len_min must be at least 3");
    if (interval_len_max < interval_len_min)
        throw std::invalid_argument("NswrParams: interval_len_max must be >= interval_len_min");
    if (interval_len_max > 2 * interval_len_min)
        throw std::invalid_argument("NswrParams: interval_len_max must be <= 2*interval_len_min");
    if (trim < 1) throw std::invalid_argument("NswrParams: trim must be at least 1");
    if (2 * trim >= interval_len_min)
        throw std::invalid_argument("NswrParams: 2*trim must be below interval_len_min");
}

namespace {

// Smallest block length keeping the expected number of stray block
// majorities over a whole run below ~0.1. A block of b items truly on one
// side of x reports the wrong side when more than b/2 of the one-shot
// comparisons err, so the per-block stray probability is
// P[Bin(b, 1/2-gamma) >= floor(b/2)+1], and a run of n insertions scans
// about n^2/(4b) blocks in total.
int calibrated_block_len(int n, double gamma) {
    const double scans = static_cast<double>(n) * n / 4.0;
    const int cap = std::max(1, n / 4);
    for (int b = 1; b <= cap; ++b) {
        const long double stray = 1.0L - binomial_lower_tail(b, 0.5 - gamma, b / 2);
        if (static_cast<double>(stray) * scans / b <= 0.1) return b;
    }
    return cap;
}

// Smallest odd vote count whose majority errs with probability <= 16%. Kept
// deliberately lean: the tree walk tolerates test errors by backtracking,
// and each extra vote costs distinct queries against the n*log2(n) budget.
int calibrated_majority_k(double gamma) {
    for (int k = 1; k <= 41; k += 2) {
        const long double err = 1.0L - binomial_lower_tail(k, 0.5 - gamma, k / 2);
        if (err <= 0.16L) return k;
    }
    return 41;
}

}  // namespace

NswrParams NswrParams::defaults_for(int n, double gamma, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("NswrParams: n must be at least 1");
    if (!(gamma > 0.0 && gamma <= 0.5))
        throw std::invalid_argument("NswrParams: gamma must lie in (0, 1/2]");

    const double log2n = std::log2(static_cast<double>(std::max(2, n)));
    NswrParams p;
    p.gamma = gamma;
    p.seed = seed;
    p.beta = 1.0;

    p.window = (n <= 12) ? std::max(1, n) : 3;
    p.block_len = calibrated_block_len(n, gamma);
    p.majority_k = calibrated_majority_k(gamma);
    // Fixed desk-scale interval length: the per-insertion position scan costs
    // ~2 intervals of comparisons, and keeping that flat in n is what holds
    // the distinct-query doubling ratio near the n*log2(n) shape. Small lists
    // get shorter intervals so a partition still has several pieces.
    p.interval_len_min = std::clamp(n / 4, 4, 12);
    p.interval_len_max = 2 * p.interval_len_min;
    const int t_estimate = std::max(2, n / p.interval_len_min);
    const int depth = static_cast<int>(std::ceil(std::log2(static_cast<double>(t_estimate))));
    p.walk_steps = std::max(10, depth + 3);
    p.trim = std::clamp(p.interval_len_min / 4, 1, (p.interval_len_min - 1) / 2);
    p.localized = n > 120;
    return p;
}

}  // namespace nswr
