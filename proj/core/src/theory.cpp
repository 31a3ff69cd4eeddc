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

#include "nswr/theory.hpp"

#include <cmath>
#include <stdexcept>

namespace nswr {

long double binomial_lower_tail(int m, double p, int t) {
    if (m < 0) throw std::invalid_argument("binomial_lower_tail: m must be nonnegative");
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("binomial_lower_tail: p must lie in [0, 1]");
    if (t < 0) return 0.0L;
    if (t >= m) return 1.0L;
    if (p == 1.0) return 0.0L;  // t < m here
    const long double lp = p;
    const long double lq = 1.0L - lp;
    long double term = std::pow(lq, static_cast<long double>(m));  // P[X = 0]
    long double sum = term;
    for (int k = 0; k < t; ++k) {
        term *= static_cast<long double>(m - k) / (k + 1) * (lp / lq);
        sum += term;
    }
    return sum < 1.0L ? sum : 1.0L;
}

namespace {

// Smallest odd k whose majority over k independent p-biased votes is wrong
// with probability below 1e-3, i.e. P[Bin(k, p) <= (k-1)/2] < 1e-3.
int smallest_reliable_vote_count(double p) {
    for (int k = 1; k < 100000; k += 2) {
        if (binomial_lower_tail(k, p, (k - 1) / 2) < 1e-3L) return k;
    }
    throw std::invalid_argument("theory_constants: gamma too small for a bounded vote count");
}

// Smallest integer c >= 5 with exp(-2*(0.49*c*L - 2L)^2 / (c*L)) below the
// failure target, L = log2(n). The exponent grows linearly in c, so the scan
// terminates quickly.
int smallest_walk_factor(double log2n, double target) {
    for (int c = 5; c < 1000000; ++c) {
        const double len = c * log2n;
        const double slack = 0.49 * len - 2.0 * log2n;
        if (std::exp(-2.0 * slack * slack / len) < target) return c;
    }
    throw std::invalid_argument("theory_constants: walk factor scan did not converge");
}

}  // namespace

TheoryConstants theory_constants(double gamma, double beta, int n, double epsilon) {
    if (!(gamma > 0.0 && gamma <= 0.5))
        throw std::invalid_argument("theory_constants: gamma must lie in (0, 1/2]");
    if (!(beta > 0.0)) throw std::invalid_argument("theory_constants: beta must be positive");
    if (n < 2) throw std::invalid_argument("theory_constants: n must be at least 2");
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw std::invalid_argument("theory_constants: epsilon must lie in (0, 1)");

    TheoryConstants tc;
    tc.gamma = gamma;
    tc.beta = beta;
    tc.n = n;
    tc.epsilon = epsilon;

    const double log2n = std::log2(static_cast<double>(n));
    tc.p1 = std::exp(-gamma * gamma / 16.0);
    tc.m1 = (-std::log2(epsilon) + 2.0 * log2n) / std::log2(1.0 / tc.p1);
    tc.m2 = 2.0 * tc.m1;
    tc.c2 = 70.0 / (gamma * gamma);
    tc.c3 = 500.0 / (gamma * gamma) * tc.m2 / log2n;
    tc.c4 = 24.0 * tc.c3 + 3.0;

    tc.k_star = smallest_reliable_vote_count(0.5 + gamma);
    tc.c_walk = smallest_walk_factor(log2n, std::pow(static_cast<double>(n), -(beta + 1.0)));
    tc.C = 3.0 * tc.k_star * tc.c_walk;
    return tc;
}

TheoryConstants theory_constants(double gamma, double beta, int n) {
    if (n < 2) throw std::invalid_argument("theory_constants: n must be at least 2");
    if (!(beta > 0.0)) throw std::invalid_argument("theory_constants: beta must be positive");
    const double epsilon = std::pow(static_cast<double>(n), -(beta + 1.0)) / 4.0;
    return theory_constants(gamma, beta, n, epsilon);
}

}  // namespace nswr
