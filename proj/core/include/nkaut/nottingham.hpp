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

#ifndef NKAUT_NOTTINGHAM_HPP
#define NKAUT_NOTTINGHAM_HPP

#include <optional>

#include "nkaut/field.hpp"
#include "nkaut/series.hpp"

namespace nk {

/**
 * An automorphism of k[[t]] at finite precision, given by the image of t.
 * The action has valuation 1 and a nonzero leading coefficient; it lies in
 * the Nottingham group when that coefficient is 1.
 */
class Automorphism {
   public:
    explicit Automorphism(TruncatedSeries action);

    static Automorphism identity(const Field& field, int precision);
    /// t -> a t.
    static Automorphism scaling(const Field& field, const Coeff& a, int precision);

    const TruncatedSeries& action() const noexcept { return action_; }
    const Field& field() const noexcept { return action_.field(); }
    int precision() const noexcept { return action_.precision(); }
    bool in_nottingham() const noexcept { return field().is_one(action_.leading()); }
    /// True iff the action is t to its precision.
    bool is_identity() const;

    friend bool operator==(const Automorphism& a, const Automorphism& b) { return a.action_ == b.action_; }

   private:
    TruncatedSeries action_;
};

/// t -> sigma(tau(t)).
Automorphism aut_compose(const Automorphism& sigma, const Automorphism& tau);
Automorphism aut_inverse(const Automorphism& sigma);
Automorphism aut_power(const Automorphism& sigma, long long k);
/// tau sigma tau^{-1}.
Automorphism aut_conjugate(const Automorphism& sigma, const Automorphism& tau);

/// An order is only ever certified modulo t^precision.
struct OrderReport {
    std::optional<long long> order;
    int precision = 0;
};

/// Smallest k in [1, bound] with sigma^k(t) = t modulo t^N.
OrderReport aut_order(const Automorphism& sigma, long long bound);

/// t -> t (1 + c t^m)^{-1/m}.
struct OrderPNormalForm {
    int m = 0;
    FieldElement c;
};

/// Reads (m, c) off the leading term of sigma(t) - t. Requires sigma in N(k) of
/// order p at its precision, and precision >= 2(m + 2).
OrderPNormalForm order_p_normal_form(const Automorphism& sigma);

/// t (1 + c t^m)^{-1/m} modulo t^precision. Requires p not dividing m, c != 0.
Automorphism make_order_p(int m, const FieldElement& c, int precision);

enum class ConjugacyMode {
    nottingham,  // conjugate by elements of N(k)
    full_aut,    // conjugate by elements of Aut(k[[t]])
};

bool conjugacy_test_order_p(const Automorphism& sigma, const Automorphism& other, ConjugacyMode mode);

/// m-dispersal f(t) -> f(t^m)^{1/m}. The result is known modulo t^{m(N-1)+1}.
Automorphism dispersal(const Automorphism& sigma, int m);

/// beta = -sum_{i>=0} alpha^{p^i}, so that beta^p - beta = alpha. Requires v(alpha) >= 1.
TruncatedSeries artin_schreier_series(const TruncatedSeries& alpha);

/// (b^2 t + (b+1) t^2 + beta) / (b^2 + t^2) with beta^2 - beta = t^3 + (b^2+b+1) t^2.
/// Characteristic 2 only.
Automorphism sigma_b(const FieldElement& b, int precision);

/// sigma_b and sigma_{b'} are conjugate iff b - b' lies in wp(k).
bool sigma_conjugacy_test(const FieldElement& b, const FieldElement& b_prime);

}  // namespace nk

#endif
