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

#include "nswr/query_table.hpp"

#include <stdexcept>

namespace nswr {

QueryTable::QueryTable(int n) : n_(n) {
    if (n < 1) {
        throw std::invalid_argument("QueryTable: need at least one item");
    }
    sign_.assign(static_cast<std::size_t>(pair_count()), +1);
}

int QueryTable::canonical_index(int i, int j) const {
    if (i < 0 || j < 0 || i >= n_ || j >= n_) {
        throw std::out_of_range("QueryTable: item index out of range");
    }
    if (i == j) {
        throw std::invalid_argument("QueryTable: self-comparison");
    }
    const int hi = i > j ? i : j;
    const int lo = i > j ? j : i;
    return hi * (hi - 1) / 2 + lo;
}

int QueryTable::query(int i, int j) const {
    const int stored = sign_[static_cast<std::size_t>(canonical_index(i, j))];
    return i > j ? stored : -stored;
}

void QueryTable::set(int i, int j, int sign) {
    if (sign != 1 && sign != -1) {
        throw std::invalid_argument("QueryTable::set: sign must be +1 or -1");
    }
    const int idx = canonical_index(i, j);
    sign_[static_cast<std::size_t>(idx)] = static_cast<std::int8_t>(i > j ? sign : -sign);
}

Score max_score(int n) { return static_cast<Score>(n) * (n - 1) / 2; }

Score score(const QueryTable& q, const Ranking& sigma) {
    if (q.items() != sigma.size()) {
        throw std::invalid_argument("score: size mismatch");
    }
    Score total = 0;
    for (int i = 1; i < q.items(); ++i) {
        for (int j = 0; j < i; ++j) {
            const int outcome = q.query(i, j);
            total += sigma.rank_of(i) > sigma.rank_of(j) ? outcome : -outcome;
        }
    }
    return total;
}

long long disagreement_distance(const QueryTable& a, const QueryTable& b) {
    if (a.items() != b.items()) {
        throw std::invalid_argument("disagreement_distance: size mismatch");
    }
    long long count = 0;
    for (int i = 1; i < a.items(); ++i) {
        for (int j = 0; j < i; ++j) {
            if (a.query(i, j) != b.query(i, j)) ++count;
        }
    }
    return count;
}

QueryTable induced_queries(const Ranking& pi) {
    QueryTable q(pi.size());
    for (int i = 1; i < pi.size(); ++i) {
        for (int j = 0; j < i; ++j) {
            q.set(i, j, pi.rank_of(i) > pi.rank_of(j) ? +1 : -1);
        }
    }
    return q;
}

}  // namespace nswr
