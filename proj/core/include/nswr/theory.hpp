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

#ifndef NSWR_THEORY_HPP
#define NSWR_THEORY_HPP

namespace nswr {

/// Constants behind the high-probability guarantees of the insertion
/// sorters, evaluated for a concrete (gamma, beta, n). They are worst-case
/// analysis constants, deliberately loose; the experiment defaults are
/// calibrated empirically and much smaller.
struct TheoryConstants {
    double gamma = 0.0;
    double beta = 0.0;    // failure probability target n^-beta
    int n = 0;
    double epsilon = 0.0; // per-guarantee failure budget, default n^-(beta+1)/4

    double p1 = 0.0;      // exp(-gamma^2/16), decay base of the window tail bounds
    double m1 = 0.0;      // window radius pushing the tail below epsilon
    double m2 = 0.0;      // 2*m1, radius after merging two presorted halves
    double c2 = 0.0;      // 70/gamma^2, block-majority comparisons per element
    double c3 = 0.0;      // dislocation scale after one insertion round
    double c4 = 0.0;      // 24*c3 + 3, dislocation a following round must absorb

    int k_star = 0;       // smallest odd vote count whose majority errs below 1e-3
    int c_walk = 0;       // smallest c >= 5 keeping walk-length deviations below n^-(beta+1)
    double C = 0.0;       // 3 * k_star * c_walk; distinct queries per n*log2(n)
};

/// Evaluates the constants. Throws std::invalid_argument unless
/// gamma in (0, 1/2], beta > 0, n >= 2, and epsilon in (0, 1).
/// The three-argument form uses the default epsilon.
TheoryConstants theory_constants(double gamma, double beta, int n);
TheoryConstants theory_constants(double gamma, double beta, int n, double epsilon);

/// P[Bin(m, p) <= t], summed term by term in extended precision. Exact up to
/// rounding for the m below a few thousand used here; t < 0 gives 0, t >= m
/// gives 1. Throws std::invalid_argument for m < 0 or p outside [0, 1].
long double binomial_lower_tail(int m, double p, int t);

}  // namespace nswr

#endif  // NSWR_THEORY_HPP
