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

#ifndef NKAUT_CURVES_HPP
#define NKAUT_CURVES_HPP

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nkaut/field.hpp"
#include "nkaut/nottingham.hpp"
#include "nkaut/series.hpp"

namespace nk {

/// z^2 - z = w^3 + (b^2+b+1) w^2 + a over a field of characteristic 2, with the
/// order 4 automorphism (w, z) -> (w+1, z+w+b) fixing the point at infinity O.
class EabCurve {
   public:
    EabCurve(FieldElement a, FieldElement b);

    const Field& field() const noexcept { return a_.field(); }
    const FieldElement& a() const noexcept { return a_; }
    const FieldElement& b() const noexcept { return b_; }
    /// w^3 + (b^2+b+1) w^2 + a.
    Coeff rhs(const Coeff& w) const noexcept;
    bool contains(const Coeff& w, const Coeff& z) const noexcept;

   private:
    FieldElement a_;
    FieldElement b_;
};

struct CurvePoint {
    bool infinity = false;
    Coeff w{};
    Coeff z{};

    friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
};

/// Affine points ordered by w then z (lexicographic coordinates), followed by O.
/// Requires q <= 2^16.
std::vector<CurvePoint> eab_points(const EabCurve& curve);

/// A map on affine points, used in place of the curve's own automorphism.
using AffineMap = std::function<std::pair<Coeff, Coeff>(const Coeff& w, const Coeff& z)>;

struct CheckReport {
    bool pass = false;
    std::string detail;  // first counterexample when !pass
};

/// Checks on every point that sigma lands on the curve, sigma^2 = (w, z+1),
/// sigma^4 = id, and that O is the only fixed point of sigma and sigma^2.
CheckReport eab_verify_action(const EabCurve& curve, const std::optional<AffineMap>& map = std::nullopt);

/// The new uniformizer sigma(z)/sigma(w)^2 at O, as a series in t = z/w^2, from
/// w = (1+beta)/t^2 and z = (1+beta)^2/t^3 on E_{0,b}.
Automorphism eab_local_expansion(const FieldElement& b, int precision);

struct BranchPoint {
    std::string label;
    long long multiplicity = 0;
};

/// The cyclic cover z^n = f of a curve of genus base_genus, with f given by its
/// divisor.
struct SuperellipticCover {
    long long n = 0;
    long long base_genus = 0;
    std::vector<BranchPoint> branch;
};

/// Hurwitz for z^n = f: 2g - 2 = n(2 g0 - 2) + sum_s (n/e_s)(e_s - 1) with
/// e_s = n / gcd(n, m_s). If p is given, it must not divide n.
long long superelliptic_genus(const SuperellipticCover& cover, std::optional<int> p = std::nullopt);

struct ExampleCurve {
    std::string name;
    std::string equation;
    int p = 0;
    SuperellipticCover cover;
    long long expected_genus = 0;
};

/// The cover z^n = t^q - t of P^1 for a prime power q and n prime to q.
ExampleCurve q_cover(long long q, long long n);
/// q_cover with n > 1 dividing q + 1, the case carrying the HKG structure.
ExampleCurve q_curve(long long q, long long n);
/// z^3 = t^4 + t over u^2 + u = t^3 in characteristic 2.
ExampleCurve genus10_curve();
/// z^2 = u over u^2 = t^3 - t in characteristic 3, i.e. z^4 = t^3 - t.
ExampleCurve genus3_curve();
/// "q_curve(q,n)", "genus10" or "genus3".
ExampleCurve example_curve(const std::string& name);

struct ConjugatorReport {
    bool pass = false;
    std::string detail;
    TruncatedSeries f;  // in W = 1/w'
    TruncatedSeries h;
};

/// Builds f = c + f2 (W^2 + W^3 + ...) and h = c^2 w' + sum_{i>=1} h_i W^i so that
/// (w, z) = (w' + f, z' + h) maps E_{a',b'} to E_{a,b}, and checks
/// h^2 - h = R and h + f + b = b' + h(w'+1) modulo W^precision.
/// Requires c^2 - c = b - b'.
ConjugatorReport verify_order4_conjugator(const FieldElement& a, const FieldElement& b, const FieldElement& a_prime,
                                          const FieldElement& b_prime, const FieldElement& c, int precision);

}  // namespace nk

#endif
