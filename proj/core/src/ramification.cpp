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

#include "nkaut/ramification.hpp"

#include <cmath>
#include <functional>

#include "checked.hpp"

namespace nk {

using detail::checked_add;
using detail::checked_mul;
using detail::checked_pow;

namespace {

long long depth(const Automorphism& g) {
    const TruncatedSeries diff = g.action() - TruncatedSeries::variable(g.field(), g.precision());
    if (diff.is_zero()) return -1;
    return diff.valuation();
}

std::string join(const std::vector<long long>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
    return out;
}

// Exact square root of a nonnegative integer, if it is a square.
std::optional<long long> exact_isqrt(long long v) {
    if (v < 0) return std::nullopt;
    auto s = static_cast<long long>(std::sqrt(static_cast<long double>(v)));
    while (s > 0 && s * s > v) --s;
    while ((s + 1) * (s + 1) <= v) ++s;
    if (s * s != v) return std::nullopt;
    return s;
}

}  // namespace

RamificationProfile ramification_profile(const Automorphism& sigma, int n) {
    const Field& field = sigma.field();
    const int p = field.characteristic();
    if (n < 1) throw Error("profile needs n >= 1");
    if (!sigma.in_nottingham()) throw Error("profile needs an element of the Nottingham group");
    const long long order = checked_pow(p, n);

    RamificationProfile prof;
    prof.p = p;
    prof.n = n;
    Automorphism g = sigma;
    for (int j = 0; j < n; ++j) {
        const long long v = depth(g);
        if (v < 0)
            throw Error("sigma^" + std::to_string(checked_pow(p, j)) + " is the identity modulo t^" +
                        std::to_string(sigma.precision()) + "; sigma does not have order " + std::to_string(order));
        prof.lower_breaks.push_back(v - 1);
        g = aut_power(g, p);
    }
    if (!g.is_identity())
        throw Error("sigma^" + std::to_string(order) + " is not the identity modulo t^" +
                    std::to_string(sigma.precision()));
    if (sigma.precision() < prof.lower_breaks.back() + 2)
        throw PrecisionError("profile needs precision at least " + std::to_string(prof.lower_breaks.back() + 2));

    long long pj = 1;
    for (int j = 0; j < n; ++j) {
        const long long b = prof.lower_breaks[j];
        if (j > 0) {
            pj = checked_mul(pj, p);
            const long long gap = b - prof.lower_breaks[j - 1];
            if (gap <= 0 || gap % pj != 0)
                throw Error("lower breaks " + join(prof.lower_breaks) + " violate Hasse-Arf for order " +
                            std::to_string(order));
            prof.increments.push_back(gap / pj);
        } else {
            if (b < 1) throw Error("lower break must be positive");
            prof.increments.push_back(b);
        }
        prof.upper_breaks.push_back((j ? prof.upper_breaks.back() : 0) + prof.increments.back());
    }
    for (long long b : prof.lower_breaks)
        if ((b - prof.lower_breaks[0]) % p != 0) throw Error("lower breaks are not congruent modulo p");

    prof.different = different_from_upper_breaks(p, prof.upper_breaks);

    // sum over g != 1 of v(g(t) - t), i.e. sum_i (|G_i| - 1).
    long long direct = 0;
    Automorphism h = sigma;
    for (long long k = 1; k < order; ++k) {
        const long long v = depth(h);
        if (v < 0) throw Error("sigma^" + std::to_string(k) + " is the identity; order is below " + std::to_string(order));
        direct = checked_add(direct, v);
        if (k + 1 < order) h = aut_compose(sigma, h);
    }
    if (direct != prof.different)
        throw Error("different mismatch: formula gives " + std::to_string(prof.different) + ", summation gives " +
                    std::to_string(direct));

    const BreakCheck check = validate_upper_breaks(p, prof.upper_breaks);
    if (!check.ok) throw Error("upper breaks " + join(prof.upper_breaks) + " invalid: " + check.reason);
    if (Rational(prof.different) < different_lower_bound(p, n))
        throw Error("different below the lower bound");
    return prof;
}

Rational different_lower_bound(int p, int n) {
    if (!is_prime(p) || n < 1) throw Error("different_lower_bound needs p prime and n >= 1");
    const long long pn = checked_pow(p, n);
    long long num = checked_mul(pn, pn);
    num = checked_add(num, checked_mul(pn, p));
    num = checked_add(num, pn);
    num = num - p - 2;
    return Rational(num, p + 1);
}

long long different_from_upper_breaks(int p, const std::vector<long long>& upper) {
    const int n = static_cast<int>(upper.size());
    if (n == 0) return 0;
    const long long pn = checked_pow(p, n);
    long long d = checked_mul(upper[0] + 1, pn - 1);
    long long pj = 1;
    for (int j = 1; j < n; ++j) {
        pj = checked_mul(pj, p);
        d = checked_add(d, checked_mul(upper[j] - upper[j - 1], pn - pj));
    }
    return d;
}

BreakCheck validate_upper_breaks(int p, const std::vector<long long>& upper) {
    if (upper.empty()) return {false, "empty sequence"};
    for (long long b : upper)
        if (b <= 0) return {false, "entries must be positive"};
    if (upper[0] % p == 0) return {false, "p divides b^(0)"};
    for (std::size_t j = 1; j < upper.size(); ++j) {
        if (upper[j] < checked_mul(p, upper[j - 1]))
            return {false, "b^(" + std::to_string(j) + ") < p b^(" + std::to_string(j - 1) + ")"};
        if (upper[j] > p * upper[j - 1] && upper[j] % p == 0)
            return {false, "b^(" + std::to_string(j) + ") > p b^(" + std::to_string(j - 1) + ") but p divides it"};
    }
    return {true, ""};
}

std::vector<std::vector<long long>> enumerate_upper_breaks(int p, int n, long long max_b) {
    if (!is_prime(p) || n < 1) throw Error("enumerate_upper_breaks needs p prime and n >= 1");
    std::vector<std::vector<long long>> out;
    std::vector<long long> cur;
    std::function<void()> extend = [&] {
        if (static_cast<int>(cur.size()) == n) {
            out.push_back(cur);
            return;
        }
        const long long lo = cur.empty() ? 1 : p * cur.back();
        for (long long b = lo; b <= max_b; ++b) {
            if (cur.empty() ? b % p == 0 : (b > lo && b % p == 0)) continue;
            cur.push_back(b);
            extend();
            cur.pop_back();
        }
    };
    extend();
    return out;
}

GenusBounds genus_bounds(int p, int n, long long d) {
    if (!is_prime(p) || n < 1 || d < 1) throw Error("genus_bounds needs p prime, n >= 1, d >= 1");
    GenusBounds g;
    g.upper = checked_mul(d - 1, d - 1);
    const long long pn = checked_pow(p, n);
    const long long pn1 = checked_pow(p, n - 1);
    g.lower = Rational(checked_mul(checked_mul(p, pn - 1), pn1 - 1), 2 * (p + 1));
    g.degree_bound = 1.0 + std::sqrt(boost::rational_cast<double>(g.lower));
    const auto sn = exact_isqrt(g.lower.numerator());
    const auto sd = exact_isqrt(g.lower.denominator());
    if (sn && sd) {
        g.degree_bound_exact = true;
        g.degree_bound_value = Rational(1) + Rational(*sn, *sd);
    }
    g.consistent = g.lower <= Rational(g.upper);
    g.degree_ok = Rational(g.upper) >= g.lower;  // (d-1)^2 >= lower with d >= 1
    return g;
}

Rational hkg_genus(long long p_order, long long different) {
    if (p_order < 1) throw Error("group order must be positive");
    if (different < 0) throw Error("different must be nonnegative");
    if (p_order > 1) {
        long long q = p_order, f = 2;
        while (q % f != 0) ++f;
        while (q % f == 0) q /= f;
        if (q != 1) throw Error("group order " + std::to_string(p_order) + " is not a prime power");
    }
    return Rational(1 - p_order) + Rational(different, 2);
}

}  // namespace nk
