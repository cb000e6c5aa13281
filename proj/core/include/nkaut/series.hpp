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

#ifndef NKAUT_SERIES_HPP
#define NKAUT_SERIES_HPP

#include <initializer_list>
#include <span>
#include <vector>

#include "nkaut/field.hpp"

namespace nk {

/**
 * A Laurent series over a finite field, known modulo t^N.
 *
 * Coefficients are stored densely for exponents valuation(), ..., precision()-1.
 * A nonzero series has a nonzero coefficient at its valuation; a series that is
 * zero to its precision has valuation() == precision(). Reading a coefficient at
 * an exponent >= precision() is an error, never a silent zero.
 */
class TruncatedSeries {
   public:
    static TruncatedSeries zero(const Field& field, int precision);
    static TruncatedSeries constant(const Field& field, const Coeff& c, int precision);
    static TruncatedSeries monomial(const Field& field, const Coeff& c, int exponent, int precision);
    /// The series t.
    static TruncatedSeries variable(const Field& field, int precision);
    /// coeffs[i] is the coefficient of t^{start + i}; exponents past the end
    /// and below precision are zero.
    static TruncatedSeries from_coeffs(const Field& field, int start, std::vector<Coeff> coeffs, int precision);
    /// Sum of t^e over the listed exponents (each with coefficient 1); repeated
    /// exponents add up.
    static TruncatedSeries from_exponents(const Field& field, std::initializer_list<int> exponents, int precision);

    const Field& field() const noexcept { return field_; }
    int valuation() const noexcept { return valuation_; }
    int precision() const noexcept { return precision_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }

    /// Coefficient of t^exponent. Throws PrecisionError if exponent >= precision().
    const Coeff& coeff(int exponent) const;
    FieldElement coefficient(int exponent) const { return field_.element(coeff(exponent)); }
    /// Coefficient at the valuation. Throws Error for a zero series.
    const Coeff& leading() const;
    std::span<const Coeff> coefficients() const noexcept { return coeffs_; }

    /// The same series known to a lower precision.
    TruncatedSeries truncated(int precision) const;
    TruncatedSeries scaled(const Coeff& c) const;

    TruncatedSeries operator-() const;
    friend TruncatedSeries operator+(const TruncatedSeries& f, const TruncatedSeries& g);
    friend TruncatedSeries operator-(const TruncatedSeries& f, const TruncatedSeries& g);
    friend TruncatedSeries operator*(const TruncatedSeries& f, const TruncatedSeries& g);
    friend TruncatedSeries operator/(const TruncatedSeries& f, const TruncatedSeries& g);
    /// Exact equality: same field, precision, and coefficients.
    friend bool operator==(const TruncatedSeries& f, const TruncatedSeries& g);

   private:
    TruncatedSeries(Field field, int start, std::vector<Coeff> dense, int precision);

    Field field_;
    int valuation_ = 0;
    int precision_ = 0;
    std::vector<Coeff> coeffs_;
};

enum class SeriesOp { add, sub, mul, div };

/// add/sub: precision min(N_f, N_g). mul: min(N_f + v_g, N_g + v_f). div: the
/// precision of mul with the reciprocal, which has precision N_g - 2 v_g.
TruncatedSeries ring_op(const TruncatedSeries& f, const TruncatedSeries& g, SeriesOp op);

/// f(g(t)) to precision min(N_f, N_g). Requires v_f >= 0 and v_g >= 1.
TruncatedSeries compose(const TruncatedSeries& f, const TruncatedSeries& g);

/// Compositional inverse of a series with valuation 1, to precision N_f.
TruncatedSeries reversion(const TruncatedSeries& f);

/// The m-th root of a unit series whose leading coefficient is the chosen m-th
/// root of u's (1 when u starts with 1). Requires p not dividing m.
TruncatedSeries nth_root(const TruncatedSeries& u, int m);

/// Multiplication by t^k; valuation and precision both shift by k.
TruncatedSeries shift_mul(const TruncatedSeries& f, int k);

/// f^p, coefficientwise Frobenius. Known to precision p * N_f.
TruncatedSeries frobenius(const TruncatedSeries& f);

/// f^k by repeated squaring; negative k goes through the reciprocal.
TruncatedSeries power(const TruncatedSeries& f, long long k);

/// True iff f and g agree below min(N_f, N_g).
bool congruent(const TruncatedSeries& f, const TruncatedSeries& g);

/// f(t^m): valuation and precision scale by m. Requires m >= 1.
TruncatedSeries inflate(const TruncatedSeries& f, int m);

}  // namespace nk

#endif
