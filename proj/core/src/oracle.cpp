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

#include "nswr/oracle.hpp"

#include <stdexcept>

#include "nswr/rng.hpp"

namespace nswr {

void NoiseParams::validate() const {
    if (!(gamma > 0.0) || !(gamma <= 0.5)) {
        throw std::invalid_argument("NoiseParams: gamma must lie in (0, 1/2]");
    }
}

namespace {

// Uniform variate attached to the unordered pair {i, j} under this seed.
double pair_uniform(std::uint64_t seed, int i, int j) {
    const int lo = i < j ? i : j;
    const int hi = i < j ? j : i;
    const std::uint64_t key =
        (static_cast<std::uint64_t>(lo) << 32) | static_cast<std::uint64_t>(hi);
    const std::uint64_t h = hash_combine(seed, key);
    return static_cast<double>(h >> 11) * 0x1.0p-53;
}

}  // namespace

int noisy_pair_outcome(const NoiseParams& params, const Ranking& truth, int i, int j) {
    params.validate();
    const int truthful = truth.rank_of(i) > truth.rank_of(j) ? +1 : -1;
    const bool flip = pair_uniform(params.seed, i, j) < 0.5 - params.gamma;
    return flip ? -truthful : truthful;
}

QueryTable make_noisy_tournament(const Ranking& truth, const NoiseParams& params) {
    params.validate();
    QueryTable q(truth.size());
    for (int i = 1; i < truth.size(); ++i) {
        for (int j = 0; j < i; ++j) {
            q.set(i, j, noisy_pair_outcome(params, truth, i, j));
        }
    }
    return q;
}

CountingOracle::CountingOracle(Ranking truth, NoiseParams params)
    : n_(truth.size()), generative_(true), truth_(std::move(truth)), params_(params) {
    params_.validate();
    if (n_ < 1) {
        throw std::invalid_argument("CountingOracle: need at least one item");
    }
    const std::size_t pairs = static_cast<std::size_t>(n_) * (n_ - 1) / 2;
    cell_ = std::make_unique<std::atomic<std::int8_t>[]>(pairs);
    for (std::size_t k = 0; k < pairs; ++k) {
        cell_[k].store(0, std::memory_order_relaxed);
    }
}

CountingOracle::CountingOracle(QueryTable fixed)
    : n_(fixed.items()), generative_(false), fixed_(std::move(fixed)) {
    const std::size_t pairs = static_cast<std::size_t>(n_) * (n_ - 1) / 2;
    cell_ = std::make_unique<std::atomic<std::int8_t>[]>(pairs);
    for (std::size_t k = 0; k < pairs; ++k) {
        cell_[k].store(0, std::memory_order_relaxed);
    }
}

int CountingOracle::outcome_for(int hi, int lo) const {
    if (generative_) {
        return noisy_pair_outcome(params_, truth_, hi, lo);
    }
    return fixed_.query(hi, lo);
}

int CountingOracle::query(int i, int j) {
    if (i < 0 || j < 0 || i >= n_ || j >= n_) {
        throw std::out_of_range("CountingOracle: item index out of range");
    }
    if (i == j) {
        throw std::invalid_argument("CountingOracle: self-comparison");
    }
    const int hi = i > j ? i : j;
    const int lo = i > j ? j : i;
    const std::size_t idx = static_cast<std::size_t>(hi) * (hi - 1) / 2 + lo;

    total_.fetch_add(1, std::memory_order_relaxed);
    std::int8_t value = cell_[idx].load(std::memory_order_acquire);
    if (value == 0) {
        const std::int8_t fresh = static_cast<std::int8_t>(outcome_for(hi, lo));
        std::int8_t expected = 0;
        if (cell_[idx].compare_exchange_strong(expected, fresh, std::memory_order_acq_rel)) {
            // This thread materialised the pair.
            distinct_.fetch_add(1, std::memory_order_relaxed);
            value = fresh;
        } else {
            value = expected;  // someone else got there first; same outcome
        }
    }
    return i > j ? value : -value;
}

Score score(ComparisonSource& source, const Ranking& sigma) {
    const int n = source.items();
    if (sigma.size() != n)
        throw std::invalid_argument("score: source and ranking disagree on item count");
    Score s = 0;
    for (int i = 1; i < n; ++i) {
        for (int j = 0; j < i; ++j) {
            const int outcome = source.compare(i, j);
            s += sigma.rank_of(i) > sigma.rank_of(j) ? outcome : -outcome;
        }
    }
    return s;
}

QueryTable CountingOracle::materialize_all() {
    QueryTable q(n_);
    for (int i = 1; i < n_; ++i) {
        for (int j = 0; j < i; ++j) {
            q.set(i, j, query(i, j));
        }
    }
    return q;
}

const Ranking& CountingOracle::truth() const {
    if (!generative_) {
        throw std::logic_error("CountingOracle: replay oracle has no truth ranking");
    }
    return truth_;
}

}  // namespace nswr
