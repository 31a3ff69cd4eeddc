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

#include "nswr/metrics.hpp"

#include <stdexcept>

namespace nswr {

Metrics evaluate(const Ranking& sigma, const Ranking& pi, const QueryTable& q,
                 const CountingOracle::Snapshot& counters) {
    if (sigma.size() != pi.size() || sigma.size() != q.items())
        throw std::invalid_argument("evaluate: rankings and table disagree on item count");
    Metrics m;
    m.sum_dislocation = dislocation_distance(sigma, pi);
    m.max_dislocation = max_dislocation(sigma, pi);
    m.score_out = score(q, sigma);
    m.score_truth = score(q, pi);
    m.distinct_queries = counters.distinct_queries;
    m.total_accesses = counters.total_accesses;
    return m;
}

}  // namespace nswr
