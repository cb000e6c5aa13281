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

// Independent reference implementations used as test oracles. They favour
// obviousness over speed and share no code with the library beyond the Field
// element type.

#ifndef NKAUT_TESTS_ORACLES_HPP
#define NKAUT_TESTS_ORACLES_HPP

#include <optional>
#include <vector>

#include "nkaut/field.hpp"
#include "nkaut/series.hpp"

namespace oracle {

using Poly = std::vector<int>;  // constant term first

inline int md(long long v, int p) { return static_cast<int>(((v % p) + p) % p); }

inline Poly trim(Poly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

inline Poly rem(Poly a, const Poly& m, int p) {
    a = trim(a);
    const int inv_lead = [&] {
        for (int x = 1; x < p; ++x)
            if (md(1LL * x * m.back(), p) == 1) return x;
        return 0;
    }();
    while (a.size() >= m.size()) {
        const int shift = static_cast<int>(a.size() - m.size());
        const int coef = md(1LL * a.back() * inv_lead, p);
        for (std::size_t i = 0; i < m.size(); ++i) a[i + shift] = md(a[i + shift] - 1LL * coef * m[i], p);
        a = trim(a);
    }
    return a;
}

/// Trial division by every monic polynomial of degree 1..deg/2.
inline bool trial_division_irreducible(const Poly& f, int p) {
    const int deg = static_cast<int>(f.size()) - 1;
    if (deg < 1) return false;
    for (int d = 1; d <= deg / 2; ++d) {
        long long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long long idx = 0; idx < count; ++idx) {
            Poly g(d + 1);
            long long v = idx;
            for (int i = 0; i < d; ++i) {
                g[i] = static_cast<int>(v % p);
                v /= p;
            }
            g[d] = 1;
            if (rem(f, g, p).empty()) return false;
        }
    }
    return true;
}

/// Schoolbook multiplication of coordinate vectors modulo the field modulus.
inline nk::Coeff mul(const nk::Field& f, const nk::Coeff& a, const nk::Coeff& b) {
    const int p = f.characteristic(), r = f.degree();
    Poly prod(2 * r, 0);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) prod[i + j] = md(prod[i + j] + 1LL * a[i] * b[j], p);
    const Poly m(f.modulus().begin(), f.modulus().end());
    const Poly red = rem(prod, m, p);
    nk::Coeff out{};
    for (std::size_t i = 0; i < red.size(); ++i) out[i] = static_cast<std::uint8_t>(red[i]);
    return out;
}

inline nk::Coeff add(const nk::Field& f, const nk::Coeff& a, const nk::Coeff& b) {
    nk::Coeff out{};
    for (int i = 0; i < f.degree(); ++i) out[i] = static_cast<std::uint8_t>(md(a[i] + b[i], f.characteristic()));
    return out;
}

inline nk::Coeff pow(const nk::Field& f, nk::Coeff a, long long e) {
    nk::Coeff out = f.one();
    for (long long i = 0; i < e; ++i) out = mul(f, out, a);
    return out;
}

inline nk::Coeff wp(const nk::Field& f, const nk::Coeff& a) {
    return add(f, pow(f, a, f.characteristic()), f.neg(a));
}

/// Smallest c in lexicographic order (e_0 most significant) with c^p - c = a.
inline std::optional<nk::Coeff> exhaustive_wp_solve(const nk::Field& f, const nk::Coeff& a) {
    std::optional<nk::Coeff> best;
    const int p = f.characteristic(), r = f.degree();
    std::uint64_t q = f.size();
    for (std::uint64_t idx = 0; idx < q; ++idx) {
        nk::Coeff c{};
        std::uint64_t v = idx;
        for (int i = 0; i < r; ++i) {
            c[i] = static_cast<std::uint8_t>(v % p);
            v /= p;
        }
        if (wp(f, c) == a && (!best || nk::lex_compare(c, *best) < 0)) best = c;
    }
    return best;
}

/// Dense coefficients of f for exponents 0..n-1 (f must have valuation >= 0).
inline std::vector<nk::Coeff> dense(const nk::TruncatedSeries& s, int n) {
    std::vector<nk::Coeff> out(n);
    for (int e = 0; e < n; ++e) out[e] = s.coeff(e);
    return out;
}

inline std::vector<nk::Coeff> series_mul(const nk::Field& f, const std::vector<nk::Coeff>& a,
                                         const std::vector<nk::Coeff>& b, int n) {
    std::vector<nk::Coeff> out(n);
    for (int i = 0; i < n && i < static_cast<int>(a.size()); ++i)
        for (int j = 0; i + j < n && j < static_cast<int>(b.size()); ++j)
            out[i + j] = add(f, out[i + j], mul(f, a[i], b[j]));
    return out;
}

/// sum_i f_i g^i modulo t^n with explicit powers of g.
inline std::vector<nk::Coeff> compose(const nk::Field& f, const std::vector<nk::Coeff>& outer,
                                      const std::vector<nk::Coeff>& inner, int n) {
    std::vector<nk::Coeff> out(n), pw(n);
    pw[0] = f.one();
    for (int i = 0; i < n && i < static_cast<int>(outer.size()); ++i) {
        for (int e = 0; e < n; ++e) out[e] = add(f, out[e], mul(f, outer[i], pw[e]));
        pw = series_mul(f, pw, inner, n);
    }
    return out;
}

/// The integers in [0, q) decoded as coordinates with e_0 least significant.
inline std::vector<nk::Coeff> all_elements(const nk::Field& f) {
    std::vector<nk::Coeff> out;
    const int p = f.characteristic();
    for (std::uint64_t idx = 0; idx < f.size(); ++idx) {
        nk::Coeff c{};
        std::uint64_t v = idx;
        for (int i = 0; i < f.degree(); ++i) {
            c[i] = static_cast<std::uint8_t>(v % p);
            v /= p;
        }
        out.push_back(c);
    }
    return out;
}

}  // namespace oracle

#endif
