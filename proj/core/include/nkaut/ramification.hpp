/*
   Copyright 2026 The nkaut Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef NKAUT_RAMIFICATION_HPP
#define NKAUT_RAMIFICATION_HPP

#include <string>
#include <vector>

#include "nkaut/nottingham.hpp"
#include "nkaut/rational.hpp"

namespace nk {

/// Breaks of a cyclic automorphism of order p^n. lower_breaks[j] is the lower
/// break of sigma^{p^j}; b_j = i_0 + p i_1 + ... + p^j i_j and
/// upper_breaks[j] = i_0 + ... + i_j.
struct RamificationProfile {
    int p = 0;
    int n = 0;
    std::vector<long long> lower_breaks;
    std::vector<long long> increments;
    std::vector<long long> upper_breaks;
    long long different = 0;

    friend bool operator==(const RamificationProfile&, const RamificationProfile&) = default;
};

/// Requires sigma in N(k) of order exactly p^n at its precision. The different
/// is computed both from the increments and as sum_{g != 1} v(g(t) - t); the
/// two must agree.
RamificationProfile ramification_profile(const Automorphism& sigma, int n);

/// (p^{2n} + p^{n+1} + p^n - p - 2) / (p + 1).
Rational different_lower_bound(int p, int n);

/// (i_0 + 1)(p^n - 1) + sum_j i_j (p^n - p^j) for the given upper breaks.
long long different_from_upper_breaks(int p, const std::vector<long long>& upper);

struct BreakCheck {
    bool ok = false;
    std::string reason;
};

BreakCheck validate_upper_breaks(int p, const std::vector<long long>& upper);

/// Every valid sequence of n upper breaks with last entry <= max_b, in
/// lexicographic order.
std::vector<std::vector<long long>> enumerate_upper_breaks(int p, int n, long long max_b);

struct GenusBounds {
    long long upper = 0;            // (d - 1)^2
    Rational lower;                 // p (p^n - 1)(p^{n-1} - 1) / (2(p + 1))
    double degree_bound = 0;        // 1 + sqrt(lower)
    bool degree_bound_exact = false;
    Rational degree_bound_value;    // set when lower is the square of a rational
    bool consistent = false;        // lower <= upper
    bool degree_ok = false;         // d >= 1 + sqrt(lower)
};

GenusBounds genus_bounds(int p, int n, long long d);

/// 1 - |P| + different / 2.
Rational hkg_genus(long long p_order, long long different);

}  // namespace nk

#endif
