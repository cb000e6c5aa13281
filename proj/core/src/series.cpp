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

#include "nkaut/series.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>

#include "field_data.hpp"

namespace nk {

namespace {

// First `len` coefficients of a*b, where a and b are dense from exponent 0.
std::vector<Coeff> mul_dense(const Field& field, std::span<const Coeff> a, std::span<const Coeff> b,
                             std::size_t len) {
    std::vector<Coeff> out(len);
    if (len == 0 || a.empty() || b.empty()) return out;
    const auto& d = field.data();
    const std::size_t na = std::min(a.size(), len), nb = std::min(b.size(), len);
    if (d.tables) {
        const int r = d.r;
        std::vector<std::int32_t> la(na), lb(nb);
        for (std::size_t i = 0; i < na; ++i) la[i] = d.log_of(a[i]);
        for (std::size_t j = 0; j < nb; ++j) lb[j] = d.log_of(b[j]);
        std::vector<std::uint32_t> acc(len * r, 0);
        const Coeff* exp = d.exp.data();
        for (std::size_t i = 0; i < na; ++i) {
            if (la[i] < 0) continue;
            const std::size_t jmax = std::min(nb, len - i);
            std::uint32_t* row = acc.data() + i * r;
            for (std::size_t j = 0; j < jmax; ++j) {
                if (lb[j] < 0) continue;
                const Coeff& e = exp[la[i] + lb[j]];
                std::uint32_t* dst = row + j * r;
                for (int k = 0; k < r; ++k) dst[k] += e[k];
            }
        }
        const auto p = static_cast<std::uint32_t>(d.p);
        for (std::size_t n = 0; n < len; ++n)
            for (int k = 0; k < r; ++k) out[n][k] = static_cast<std::uint8_t>(acc[n * r + k] % p);
        return out;
    }
    for (std::size_t i = 0; i < na; ++i) {
        if (Field::is_zero(a[i])) continue;
        for (std::size_t j = 0; j < std::min(nb, len - i); ++j)
            out[i + j] = field.add(out[i + j], field.mul(a[i], b[j]));
    }
    return out;
}

// Inverse of a dense unit series (u[0] != 0), first len coefficients.
std::vector<Coeff> inverse_dense(const Field& field, std::span<const Coeff> u, std::size_t len) {
    std::vector<Coeff> w(len);
    if (len == 0) return w;
    const Coeff u0_inv = field.inv(u[0]);
    w[0] = u0_inv;
    for (std::size_t n = 1; n < len; ++n) {
        Coeff s{};
        for (std::size_t i = 1; i <= std::min(n, u.size() - 1); ++i)
            s = field.add(s, field.mul(u[i], w[n - i]));
        w[n] = field.neg(field.mul(s, u0_inv));
    }
    return w;
}

void check_same_field(const TruncatedSeries& f, const TruncatedSeries& g) {
    if (!(f.field() == g.field())) throw Error("series over different fields");
}

// Coefficients of f for exponents lo, ..., hi-1 (all must be below precision).
std::vector<Coeff> dense_range(const TruncatedSeries& f, int lo, int hi) {
    std::vector<Coeff> out(std::max(0, hi - lo));
    for (int e = std::max(lo, f.valuation()); e < hi; ++e) out[e - lo] = f.coeff(e);
    return out;
}

}  // namespace

TruncatedSeries::TruncatedSeries(Field field, int start, std::vector<Coeff> dense, int precision)
    : field_(std::move(field)), precision_(precision) {
    if (start + static_cast<long long>(dense.size()) > precision)
        throw Error("series coefficient at or beyond its precision");
    std::size_t k = 0;
    while (k < dense.size() && Field::is_zero(dense[k])) ++k;
    if (k == dense.size()) {
        valuation_ = precision;
        return;
    }
    valuation_ = start + static_cast<int>(k);
    coeffs_.assign(dense.begin() + k, dense.end());
    coeffs_.resize(precision - valuation_);
}

TruncatedSeries TruncatedSeries::zero(const Field& field, int precision) {
    return TruncatedSeries(field, precision, {}, precision);
}

TruncatedSeries TruncatedSeries::constant(const Field& field, const Coeff& c, int precision) {
    return monomial(field, c, 0, precision);
}

TruncatedSeries TruncatedSeries::monomial(const Field& field, const Coeff& c, int exponent, int precision) {
    if (exponent >= precision) return zero(field, precision);
    return TruncatedSeries(field, exponent, {c}, precision);
}

TruncatedSeries TruncatedSeries::variable(const Field& field, int precision) {
    return monomial(field, field.one(), 1, precision);
}

TruncatedSeries TruncatedSeries::from_coeffs(const Field& field, int start, std::vector<Coeff> coeffs, int precision) {
    for (const Coeff& c : coeffs)
        for (int k = field.degree(); k < kMaxExtensionDegree; ++k)
            if (c[k] != 0) throw Error("coefficient does not belong to the series field");
    return TruncatedSeries(field, start, std::move(coeffs), precision);
}

TruncatedSeries TruncatedSeries::from_exponents(const Field& field, std::initializer_list<int> exponents,
                                                int precision) {
    if (exponents.size() == 0) return zero(field, precision);
    const int lo = std::min(exponents);
    std::vector<Coeff> dense(std::max(0, precision - lo));
    for (int e : exponents)
        if (e < precision) dense[e - lo] = field.add(dense[e - lo], field.one());
    return TruncatedSeries(field, lo, std::move(dense), precision);
}

const Coeff& TruncatedSeries::coeff(int exponent) const {
    static const Coeff kZero{};
    if (exponent >= precision_)
        throw PrecisionError("coefficient of t^" + std::to_string(exponent) + " requested from a series known mod t^" +
                             std::to_string(precision_));
    if (exponent < valuation_) return kZero;
    return coeffs_[exponent - valuation_];
}

const Coeff& TruncatedSeries::leading() const {
    if (is_zero()) throw Error("leading coefficient of a series that is zero to its precision");
    return coeffs_.front();
}

TruncatedSeries TruncatedSeries::truncated(int precision) const {
    if (precision > precision_)
        throw PrecisionError("cannot raise precision from " + std::to_string(precision_) + " to " +
                             std::to_string(precision));
    if (precision <= valuation_) return zero(field_, precision);
    return TruncatedSeries(field_, valuation_,
                           std::vector<Coeff>(coeffs_.begin(), coeffs_.begin() + (precision - valuation_)), precision);
}

TruncatedSeries TruncatedSeries::scaled(const Coeff& c) const {
    std::vector<Coeff> out(coeffs_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = field_.mul(coeffs_[i], c);
    return TruncatedSeries(field_, valuation_, std::move(out), precision_);
}

TruncatedSeries TruncatedSeries::operator-() const {
    std::vector<Coeff> out(coeffs_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = field_.neg(coeffs_[i]);
    return TruncatedSeries(field_, valuation_, std::move(out), precision_);
}

TruncatedSeries operator+(const TruncatedSeries& f, const TruncatedSeries& g) {
    check_same_field(f, g);
    const int n = std::min(f.precision_, g.precision_);
    const int lo = std::min({f.valuation_, g.valuation_, n});
    std::vector<Coeff> out = dense_range(f, lo, n);
    for (int e = std::max(lo, g.valuation_); e < n; ++e) out[e - lo] = f.field_.add(out[e - lo], g.coeff(e));
    return TruncatedSeries(f.field_, lo, std::move(out), n);
}

TruncatedSeries operator-(const TruncatedSeries& f, const TruncatedSeries& g) { return f + (-g); }

TruncatedSeries operator*(const TruncatedSeries& f, const TruncatedSeries& g) {
    check_same_field(f, g);
    const long long n = std::min<long long>(1LL * f.precision_ + g.valuation_, 1LL * g.precision_ + f.valuation_);
    const int start = f.valuation_ + g.valuation_;
    if (f.is_zero() || g.is_zero()) return TruncatedSeries::zero(f.field_, static_cast<int>(n));
    auto prod = mul_dense(f.field_, f.coeffs_, g.coeffs_, static_cast<std::size_t>(n - start));
    return TruncatedSeries(f.field_, start, std::move(prod), static_cast<int>(n));
}

TruncatedSeries operator/(const TruncatedSeries& f, const TruncatedSeries& g) {
    check_same_field(f, g);
    if (g.is_zero()) throw Error("division by a series that is zero to its precision");
    const int rel = g.precision_ - g.valuation_;
    auto inv = inverse_dense(g.field_, g.coeffs_, static_cast<std::size_t>(rel));
    TruncatedSeries recip(g.field_, -g.valuation_, std::move(inv), g.precision_ - 2 * g.valuation_);
    return f * recip;
}

bool operator==(const TruncatedSeries& f, const TruncatedSeries& g) {
    return f.field_ == g.field_ && f.precision_ == g.precision_ && f.valuation_ == g.valuation_ &&
           f.coeffs_ == g.coeffs_;
}

TruncatedSeries ring_op(const TruncatedSeries& f, const TruncatedSeries& g, SeriesOp op) {
    switch (op) {
        case SeriesOp::add: return f + g;
        case SeriesOp::sub: return f - g;
        case SeriesOp::mul: return f * g;
        case SeriesOp::div: return f / g;
    }
    throw Error("unknown series operation");
}

TruncatedSeries compose(const TruncatedSeries& f, const TruncatedSeries& g) {
    check_same_field(f, g);
    if (g.valuation() < 1) throw Error("compose: inner series must have valuation >= 1");
    if (f.valuation() < 0) throw Error("compose: outer series must have valuation >= 0");
    const Field& field = f.field();
    const int n = std::min(f.precision(), g.precision());
    if (n <= 0) return TruncatedSeries::zero(field, n);
    const std::vector<Coeff> fd = dense_range(f, 0, n);
    const std::vector<Coeff> gd = dense_range(g, 0, n);
    // Horner from the top. The partial value R_j is multiplied by g^j later, so
    // it is only needed modulo t^{n-j}.
    std::vector<Coeff> acc = {fd[n - 1]};
    for (int j = n - 2; j >= 0; --j) {
        acc = mul_dense(field, acc, gd, static_cast<std::size_t>(n - j));
        acc[0] = field.add(acc[0], fd[j]);
    }
    return TruncatedSeries::from_coeffs(field, 0, std::move(acc), n);
}

TruncatedSeries reversion(const TruncatedSeries& f) {
    if (f.is_zero() || f.valuation() != 1) throw Error("reversion needs a series of valuation exactly 1");
    const Field& field = f.field();
    const int n = f.precision();
    const std::vector<Coeff> fd = dense_range(f, 0, n);
    // Solve g(f(t)) = t coefficientwise: with P_i = f^i,
    // [t^k] sum_i g_i P_i = delta_{k,1}, and [t^k] P_k = a_1^k.
    std::vector<Coeff> g(n), running(n), pw = fd;
    const Coeff a1_inv = field.inv(fd[1]);
    Coeff a1_inv_pow = field.one();
    for (int k = 1; k < n; ++k) {
        a1_inv_pow = field.mul(a1_inv_pow, a1_inv);
        Coeff rhs = field.neg(running[k]);
        if (k == 1) rhs = field.add(rhs, field.one());
        g[k] = field.mul(rhs, a1_inv_pow);
        if (!Field::is_zero(g[k]))
            for (int e = k; e < n; ++e) running[e] = field.add(running[e], field.mul(g[k], pw[e]));
        if (k + 1 < n) pw = mul_dense(field, pw, fd, static_cast<std::size_t>(n));
    }
    return TruncatedSeries::from_coeffs(field, 0, std::move(g), n);
}

TruncatedSeries nth_root(const TruncatedSeries& u, int m) {
    const Field& field = u.field();
    const int p = field.characteristic();
    if (m <= 0) throw Error("nth_root: m must be positive");
    if (m % p == 0) throw Error("nth_root: p divides m");
    if (u.is_zero() || u.valuation() != 0) throw Error("nth_root needs a unit series (valuation 0)");
    if (m == 1) return u;
    const auto r0 = field.is_one(u.leading()) ? std::optional<Coeff>(field.one()) : field.root(u.leading(), m);
    if (!r0) throw Error("nth_root: leading coefficient has no m-th root in the field");
    const int n = u.precision();
    std::vector<Coeff> r(n);
    r[0] = *r0;
    // pw[j][k] = [t^k] r^{j+1}, j = 0..m-2, filled as r grows.
    std::vector<Coeff> r0_pow(m + 1);
    r0_pow[0] = field.one();
    for (int j = 1; j <= m; ++j) r0_pow[j] = field.mul(r0_pow[j - 1], r[0]);
    std::vector<std::vector<Coeff>> pw(m - 1, std::vector<Coeff>(n));
    for (int j = 0; j < m - 1; ++j) pw[j][0] = r0_pow[j + 1];
    const Coeff lead_inv = field.inv(field.scale(r0_pow[m - 1], m));
    std::vector<Coeff> known(m + 1);
    for (int k = 1; k < n; ++k) {
        // known[j] = [t^k] r^j computed with r_k = 0.
        known[1] = Coeff{};
        for (int j = 2; j <= m; ++j) {
            Coeff s = field.mul(r[0], known[j - 1]);
            const auto& prev = pw[j - 2];
            for (int i = 1; i < k; ++i)
                if (!Field::is_zero(r[i])) s = field.add(s, field.mul(r[i], prev[k - i]));
            known[j] = s;
        }
        r[k] = field.mul(field.sub(u.coeff(k), known[m]), lead_inv);
        for (int j = 1; j <= m - 1; ++j)
            pw[j - 1][k] = field.add(known[j], field.mul(field.scale(r0_pow[j - 1], j), r[k]));
    }
    return TruncatedSeries::from_coeffs(field, 0, std::move(r), n);
}

TruncatedSeries shift_mul(const TruncatedSeries& f, int k) {
    if (f.is_zero()) return TruncatedSeries::zero(f.field(), f.precision() + k);
    std::vector<Coeff> c(f.coefficients().begin(), f.coefficients().end());
    return TruncatedSeries::from_coeffs(f.field(), f.valuation() + k, std::move(c), f.precision() + k);
}

TruncatedSeries frobenius(const TruncatedSeries& f) {
    const Field& field = f.field();
    const int p = field.characteristic();
    const int n = f.precision() * p;
    if (f.is_zero()) return TruncatedSeries::zero(field, n);
    const int start = f.valuation() * p;
    std::vector<Coeff> out(n - start);
    const auto c = f.coefficients();
    for (std::size_t i = 0; i < c.size(); ++i) out[i * p] = field.frobenius(c[i]);
    return TruncatedSeries::from_coeffs(field, start, std::move(out), n);
}

TruncatedSeries power(const TruncatedSeries& f, long long k) {
    if (k < 0) {
        const TruncatedSeries one = TruncatedSeries::constant(f.field(), f.field().one(), f.precision());
        return power(one / f, -k);
    }
    if (k == 0) {
        if (f.is_zero()) throw Error("power: zero series to the power 0");
        return TruncatedSeries::constant(f.field(), f.field().one(), f.precision() - f.valuation());
    }
    TruncatedSeries base = f;
    std::optional<TruncatedSeries> result;
    while (k > 0) {
        if (k & 1) result = result ? *result * base : base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return *result;
}

bool congruent(const TruncatedSeries& f, const TruncatedSeries& g) {
    const int n = std::min(f.precision(), g.precision());
    return f.truncated(n) == g.truncated(n);
}

TruncatedSeries inflate(const TruncatedSeries& f, int m) {
    if (m < 1) throw Error("inflate: m must be positive");
    const Field& field = f.field();
    const long long n = 1LL * f.precision() * m;
    if (f.is_zero()) return TruncatedSeries::zero(field, static_cast<int>(n));
    const int start = f.valuation() * m;
    std::vector<Coeff> out(n - start);
    const auto c = f.coefficients();
    for (std::size_t i = 0; i < c.size(); ++i) out[i * m] = c[i];
    return TruncatedSeries::from_coeffs(field, start, std::move(out), static_cast<int>(n));
}

}  // namespace nk
