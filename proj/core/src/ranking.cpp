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

#include "nswr/ranking.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace nswr {

Ranking::Ranking(std::vector<int> rank_of) : rank_of_(std::move(rank_of)) {
    const int n = static_cast<int>(rank_of_.size());
    order_.assign(n, -1);
    for (int item = 0; item < n; ++item) {
        const int r = rank_of_[item];
        if (r < 0 || r >= n) {
            throw std::invalid_argument("Ranking: rank out of range");
        }
        if (order_[r] != -1) {
            throw std::invalid_argument("Ranking: duplicate rank");
        }
        order_[r] = item;
    }
}

Ranking Ranking::identity(int n) {
    if (n < 0) {
        throw std::invalid_argument("Ranking::identity: negative size");
    }
    std::vector<int> ranks(n);
    std::iota(ranks.begin(), ranks.end(), 0);
    return Ranking(std::move(ranks));
}

Ranking Ranking::from_order(const std::vector<int>& order) {
    const int n = static_cast<int>(order.size());
    std::vector<int> ranks(n, -1);
    for (int r = 0; r < n; ++r) {
        const int item = order[r];
        if (item < 0 || item >= n) {
            throw std::invalid_argument("Ranking::from_order: item out of range");
        }
        if (ranks[item] != -1) {
            throw std::invalid_argument("Ranking::from_order: duplicate item");
        }
        ranks[item] = r;
    }
    return Ranking(std::move(ranks));
}

Ranking Ranking::reversed() const {
    const int n = size();
    std::vector<int> ranks(n);
    for (int item = 0; item < n; ++item) {
        ranks[item] = n - 1 - rank_of_[item];
    }
    return Ranking(std::move(ranks));
}

std::string Ranking::to_string() const {
    std::ostringstream out;
    out << "[";
    for (int r = 0; r < size(); ++r) {
        if (r > 0) out << " ";
        out << order_[r];
    }
    out << "]";
    return out.str();
}

long long dislocation_distance(const Ranking& a, const Ranking& b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("dislocation_distance: size mismatch");
    }
    long long total = 0;
    for (int item = 0; item < a.size(); ++item) {
        total += std::abs(a.rank_of(item) - b.rank_of(item));
    }
    return total;
}

int max_dislocation(const Ranking& a, const Ranking& b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("max_dislocation: size mismatch");
    }
    int worst = 0;
    for (int item = 0; item < a.size(); ++item) {
        worst = std::max(worst, std::abs(a.rank_of(item) - b.rank_of(item)));
    }
    return worst;
}

Ranking random_ranking(int n, SplitMix64& rng) {
    std::vector<int> ranks(n);
    std::iota(ranks.begin(), ranks.end(), 0);
    shuffle(ranks, rng);
    return Ranking(std::move(ranks));
}

}  // namespace nswr
