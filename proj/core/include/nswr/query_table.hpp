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

#ifndef NSWR_QUERY_TABLE_HPP
#define NSWR_QUERY_TABLE_HPP

#include <cstdint>
#include <vector>

#include "nswr/ranking.hpp"

namespace nswr {

using Score = long long;

/// Complete tournament of one-shot pairwise comparison outcomes. One sign is
/// stored per unordered pair {i, j}: the entry for i > j holds the outcome of
/// comparing item i against item j, and the opposite orientation is derived
/// by antisymmetry. +1 claims the first item of the ordered pair is larger.
class QueryTable {
public:
    QueryTable() = default;
    /// All pairs initialised to +1 (first-by-index larger); fill with set().
    explicit QueryTable(int n);

    int items() const { return n_; }
    long long pair_count() const { return static_cast<long long>(n_) * (n_ - 1) / 2; }

    /// Outcome for the ordered pair (i, j), i != j.
    int query(int i, int j) const;

    /// Sets the outcome of the ordered pair (i, j) to sign (+1 or -1); the
    /// reverse orientation is implied.
    void set(int i, int j, int sign);

    bool operator==(const QueryTable& other) const {
        return n_ == other.n_ && sign_ == other.sign_;
    }
    bool operator!=(const QueryTable& other) const { return !(*this == other); }

private:
    int canonical_index(int i, int j) const;

    int n_ = 0;
    std::vector<std::int8_t> sign_;  // entry for i > j at i*(i-1)/2 + j
};

/// Number of pairs a ranking can agree with: n(n-1)/2.
Score max_score(int n);

/// Score of sigma against the table: over all unordered pairs, +1 when the
/// pair's recorded outcome agrees with sigma's ordering of the two items and
/// -1 when it disagrees. Always has the same parity as n(n-1)/2.
Score score(const QueryTable& q, const Ranking& sigma);

/// Number of unordered pairs on which the two tables disagree.
long long disagreement_distance(const QueryTable& a, const QueryTable& b);

/// The noiseless table of a ranking: every pair oriented as pi ranks it.
QueryTable induced_queries(const Ranking& pi);

}  // namespace nswr

#endif  // NSWR_QUERY_TABLE_HPP
