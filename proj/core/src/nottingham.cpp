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

#include "nkaut/nottingham.hpp"

#include <string>
#include <utility>

namespace nk {

namespace {

uint128 gcd128(uint128 a, uint128 b) {
    while (b != 0) a = std::exchange(b, a % b);
    return a;
}

void require_same_field(const Automorphism& a, const Automorphism& b) {
    if (!(a.field() == b.field())) throw Error("automorphisms over different fields");
}

}  // namespace

Automorphism::Automorphism(TruncatedSeries action) : action_(std::move(action)) {
    if (action_.is_zero() || action_.valuation() != 1)
        throw Error("an automorphism needs a series of valuation exactly 1");
}

Automorphism Automorphism::identity(const Field& field, int precision) {
    return Automorphism(TruncatedSeries::variable(field, precision));
}

Automorphism Automorphism::scaling(const Field& field, const Coeff& a, int precision) {
    if (Field::is_zero(a)) throw Error("scaling by zero is not an automorphism");
    return Automorphism(TruncatedSeries::monomial(field, a, 1, precision));
}

bool Automorphism::is_identity() const {
    return (action_ - TruncatedSeries::variable(field(), precision())).is_zero();
}

Automorphism aut_compose(const Automorphism& sigma, const Automorphism& tau) {
    require_same_field(sigma, tau);
    return Automorphism(compose(sigma.action(), tau.action()));
}

Automorphism aut_inverse(const Automorphism& sigma) { return Automorphism(reversion(sigma.action())); }

Automorphism aut_power(const Automorphism& sigma, long long k) {
    if (k < 0) return aut_power(aut_inverse(sigma), -k);
    Automorphism result = Automorphism::identity(sigma.field(), sigma.precision());
    Automorphism base = sigma;
    while (k > 0) {
        if (k & 1) result = aut_compose(result, base);
        k >>= 1;
        if (k > 0) base = aut_compose(base, base);
    }
    return result;
}

Automorphism aut_conjugate(const Automorphism& sigma, const Automorphism& tau) {
    return aut_compose(aut_compose(tau, sigma), aut_inverse(tau));
}

OrderReport aut_order(const Automorphism& sigma, long long bound) {
    if (bound < 1) throw Error("order bound must be at least 1");
    OrderReport report;
    report.precision = sigma.precision();
    Automorphism cur = sigma;
    for (long long k = 1; k <= bound; ++k) {
        if (cur.is_identity()) {
            report.order = k;
            break;
        }
        if (k < bound) cur = aut_compose(sigma, cur);
    }
    return report;
}

OrderPNormalForm order_p_normal_form(const Automorphism& sigma) {
    const Field& field = sigma.field();
    const int p = field.characteristic();
    if (!sigma.in_nottingham()) throw Error("normal form needs an element of the Nottingham group");
    const TruncatedSeries diff = sigma.action() - TruncatedSeries::variable(field, sigma.precision());
    if (diff.is_zero())
        throw Error("sigma is the identity modulo t^" + std::to_string(sigma.precision()) + ", not of order p");
    const int m = diff.valuation() - 1;
    if (m % p == 0) throw Error("p divides the break m = " + std::to_string(m) + "; sigma is not of order p");
    if (sigma.precision() < 2 * (m + 2))
        throw PrecisionError("normal form with m = " + std::to_string(m) + " needs precision at least " +
                             std::to_string(2 * (m + 2)));
    if (!aut_power(sigma, p).is_identity()) throw Error("sigma does not have order p at its precision");
    const Coeff c = field.neg(field.scale(diff.leading(), m));
    return {m, field.element(c)};
}

Automorphism make_order_p(int m, const FieldElement& c, int precision) {
    const Field& field = c.field();
    if (m <= 0 || m % field.characteristic() == 0) throw Error("make_order_p needs m > 0 prime to p");
    if (c.is_zero()) throw Error("make_order_p needs c != 0");
    if (precision < 2) throw Error("precision must be at least 2");
    const int rel = precision - 1;
    const TruncatedSeries one = TruncatedSeries::constant(field, field.one(), rel);
    const TruncatedSeries u = one + TruncatedSeries::monomial(field, c.value(), m, rel);
    const TruncatedSeries root = nth_root(u, m);
    return Automorphism(shift_mul(one / root, 1));
}

bool conjugacy_test_order_p(const Automorphism& sigma, const Automorphism& other, ConjugacyMode mode) {
    require_same_field(sigma, other);
    const OrderPNormalForm a = order_p_normal_form(sigma);
    const OrderPNormalForm b = order_p_normal_form(other);
    if (a.m != b.m) return false;
    if (mode == ConjugacyMode::nottingham) return a.c == b.c;
    const Field& field = sigma.field();
    const uint128 q1 = field.order() - 1;
    const uint128 g = gcd128(static_cast<uint128>(a.m), q1);
    return field.is_one(field.pow((a.c / b.c).value(), q1 / g));
}

Automorphism dispersal(const Automorphism& sigma, int m) {
    const Field& field = sigma.field();
    if (m <= 0 || m % field.characteristic() == 0) throw Error("dispersal needs m > 0 prime to p");
    if (!sigma.in_nottingham()) throw Error("dispersal needs an element of the Nottingham group");
    if (m == 1) return sigma;
    const TruncatedSeries unit = shift_mul(sigma.action(), -1);
    return Automorphism(shift_mul(nth_root(inflate(unit, m), m), 1));
}

TruncatedSeries artin_schreier_series(const TruncatedSeries& alpha) {
    const int n = alpha.precision();
    if (alpha.is_zero()) {
        if (n < 1) throw Error("Artin-Schreier series needs v(alpha) >= 1");
        return alpha;
    }
    if (alpha.valuation() < 1) throw Error("Artin-Schreier series needs v(alpha) >= 1");
    TruncatedSeries sum = TruncatedSeries::zero(alpha.field(), n);
    TruncatedSeries term = alpha;
    while (!term.is_zero()) {
        sum = sum + term;
        term = frobenius(term).truncated(n);
    }
    return -sum;
}

Automorphism sigma_b(const FieldElement& b, int precision) {
    const Field& field = b.field();
    if (field.characteristic() != 2) throw Error("sigma_b is defined in characteristic 2");
    if (precision < 2) throw Error("precision must be at least 2");
    const int work = precision + 2;
    const Coeff b2 = field.mul(b.value(), b.value());
    const Coeff b1 = field.add(b.value(), field.one());
    const Coeff k2 = field.add(b2, b1);  // b^2 + b + 1
    const TruncatedSeries alpha = TruncatedSeries::monomial(field, field.one(), 3, work) +
                                  TruncatedSeries::monomial(field, k2, 2, work);
    const TruncatedSeries beta = artin_schreier_series(alpha);
    const TruncatedSeries num = TruncatedSeries::monomial(field, b2, 1, work) +
                                TruncatedSeries::monomial(field, b1, 2, work) + beta;
    TruncatedSeries quot = TruncatedSeries::zero(field, precision);
    if (b.is_zero()) {
        if (num.valuation() != 3)
            throw Error("internal: sigma_0 numerator has valuation " + std::to_string(num.valuation()) + ", not 3");
        quot = shift_mul(num, -2);
    } else {
        const TruncatedSeries den = TruncatedSeries::constant(field, b2, work) +
                                    TruncatedSeries::monomial(field, field.one(), 2, work);
        quot = (num / den).truncated(precision);
    }
    if (quot.is_zero() || quot.valuation() != 1 || !field.is_one(quot.leading()))
        throw Error("internal: sigma_b is not of the form t + O(t^2)");
    return Automorphism(quot);
}

bool sigma_conjugacy_test(const FieldElement& b, const FieldElement& b_prime) {
    if (b.field().characteristic() != 2) throw Error("sigma_b is defined in characteristic 2");
    return b.field().trace((b - b_prime).value()) == 0;
}

}  // namespace nk
