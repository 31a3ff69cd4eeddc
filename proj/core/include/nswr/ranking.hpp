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

#ifndef NSWR_RANKING_HPP
#define NSWR_RANKING_HPP

#include <string>
#include <vector>

#include "nswr/rng.hpp"

namespace nswr {

/// A total order over n items, stored as a bijection item -> rank.
/// Ranks are 0-based and larger rank means larger item. File formats and
/// human-facing output use 1-based ranks; the conversion happens at the
/// I/O boundary, never here.
class Ranking {
public:
    Ranking() = default;

    /// Takes rank_of[item] = rank. Throws std::invalid_argument unless the
    /// vector is a permutation of 0..n-1.
    explicit Ranking(std::vector<int> rank_of);

    static Ranking identity(int n);

    /// Builds from a list of items ordered from lowest rank to highest.
    static Ranking from_order(const std::vector<int>& order);

    int size() const { return static_cast<int>(rank_of_.size()); }
    int rank_of(int item) const { return rank_of_[item]; }
    int item_at(int rank) const { return order_[rank]; }
    const std::vector<int>& ranks() const { return rank_of_; }
    /// Items from lowest rank to highest.
    const std::vector<int>& order() const { return order_; }

    Ranking reversed() const;

    bool operator==(const Ranking& other) const { return rank_of_ == other.rank_of_; }
    bool operator!=(const Ranking& other) const { return !(*this == other); }

    /// Lexicographic comparison of the rank_of sequences. Used by solvers to
    /// break ties between equal-score rankings deterministically.
    bool lex_less(const Ranking& other) const { return rank_of_ < other.rank_of_; }

    std::string to_string() const;

private:
    std::vector<int> rank_of_;
    std::vector<int> order_;
};

/// Sum over items of |rank in a - rank in b|. Symmetric, nonnegative, and
/// satisfies the triangle inequality.
long long dislocation_distance(const Ranking& a, const Ranking& b);

/// Largest single-item rank difference between the two rankings.
int max_dislocation(const Ranking& a, const Ranking& b);

/// Uniformly random ranking drawn from the stream.
Ranking random_ranking(int n, SplitMix64& rng);

}  // namespace nswr

#endif  // NSWR_RANKING_HPP
