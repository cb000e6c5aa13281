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

#include "nkaut/curves.hpp"

#include <numeric>
#include <regex>

#include "checked.hpp"

namespace nk {

namespace {

void require_char2(const Field& field) {
    if (field.characteristic() != 2) throw Error("E_{a,b} needs characteristic 2");
}

Coeff k_of(const Field& field, const Coeff& b) {
    return field.add(field.add(field.mul(b, b), b), field.one());
}

std::string coords_text(const Coeff& c, int r) {
    std::string out;
    for (int i = 0; i < r; ++i) out += (i ? "," : "") + std::to_string(c[i]);
    return out;
}

std::string point_text(const Coeff& w, const Coeff& z, int r) {
    return "(w=" + coords_text(w, r) + " z=" + coords_text(z, r) + ")";
}

// First exponent below the precision where the series is nonzero, as text.
std::string first_mismatch(const TruncatedSeries& diff) { return "W^" + std::to_string(diff.valuation()); }

}  // namespace

EabCurve::EabCurve(FieldElement a, FieldElement b) : a_(std::move(a)), b_(std::move(b)) {
    if (!(a_.field() == b_.field())) throw Error("a and b lie in different fields");
    require_char2(a_.field());
}

Coeff EabCurve::rhs(const Coeff& w) const noexcept {
    const Field& f = field();
    const Coeff w2 = f.mul(w, w);
    return f.add(f.add(f.mul(w2, w), f.mul(k_of(f, b_.value()), w2)), a_.value());
}

bool EabCurve::contains(const Coeff& w, const Coeff& z) const noexcept {
    const Field& f = field();
    return f.sub(f.mul(z, z), z) == rhs(w);
}

std::vector<CurvePoint> eab_points(const EabCurve& curve) {
    const Field& f = curve.field();
    if (!f.enumerable()) throw Error("point enumeration needs q <= 65536");
    std::vector<CurvePoint> pts;
    const std::uint64_t q = f.size();
    for (std::uint64_t i = 0; i < q; ++i) {
        const Coeff w = f.at_index(i);
        const auto z0 = f.wp_solve(curve.rhs(w));
        if (!z0) continue;
        pts.push_back({false, w, *z0});
        pts.push_back({false, w, f.add(*z0, f.one())});
    }
    pts.push_back({true, {}, {}});
    return pts;
}

CheckReport eab_verify_action(const EabCurve& curve, const std::optional<AffineMap>& map) {
    const Field& f = curve.field();
    const int r = f.degree();
    const Coeff b = curve.b().value();
    const AffineMap sigma = map ? *map : AffineMap([&](const Coeff& w, const Coeff& z) {
        return std::pair{f.add(w, f.one()), f.add(f.add(z, w), b)};
    });
    for (const CurvePoint& pt : eab_points(curve)) {
        if (pt.infinity) continue;
        const std::string at = point_text(pt.w, pt.z, r);
        auto cur = std::pair{pt.w, pt.z};
        std::pair<Coeff, Coeff> orbit[5];
        orbit[0] = cur;
        for (int k = 1; k <= 4; ++k) {
            cur = sigma(cur.first, cur.second);
            if (!curve.contains(cur.first, cur.second))
                return {false, "sigma^" + std::to_string(k) + at + " = " + point_text(cur.first, cur.second, r) +
                                   " is not on the curve"};
            orbit[k] = cur;
        }
        if (orbit[1] == orbit[0]) return {false, "sigma fixes " + at};
        if (orbit[2] == orbit[0]) return {false, "sigma^2 fixes " + at};
        if (orbit[2] != std::pair{pt.w, f.add(pt.z, f.one())})
            return {false, "sigma^2" + at + " = " + point_text(orbit[2].first, orbit[2].second, r) + ", not (w, z+1)"};
        if (orbit[4] != orbit[0])
            return {false, "sigma^4" + at + " = " + point_text(orbit[4].first, orbit[4].second, r)};
    }
    return {true, ""};
}

Automorphism eab_local_expansion(const FieldElement& b, int precision) {
    const Field& f = b.field();
    require_char2(f);
    if (precision < 2) throw Error("precision must be at least 2");
    const int work = precision + 1;
    const TruncatedSeries alpha = TruncatedSeries::monomial(f, f.one(), 3, work) +
                                  TruncatedSeries::monomial(f, k_of(f, b.value()), 2, work);
    const TruncatedSeries one = TruncatedSeries::constant(f, f.one(), work);
    const TruncatedSeries u = one + artin_schreier_series(alpha);
    const TruncatedSeries w = shift_mul(u, -2);
    const TruncatedSeries z = shift_mul(u * u, -3);

    const TruncatedSeries lhs = z * z - z;
    const TruncatedSeries rhs = w * w * w + (w * w).scaled(k_of(f, b.value()));
    if (!(lhs - rhs).is_zero()) throw Error("internal: reconstructed (w, z) is not on E_{0,b}");
    if (!(z / (w * w) - TruncatedSeries::variable(f, work)).is_zero())
        throw Error("internal: z/w^2 does not recover t");

    const TruncatedSeries sw = w + TruncatedSeries::constant(f, f.one(), work);
    const TruncatedSeries sz = z + w + TruncatedSeries::constant(f, b.value(), work);
    return Automorphism((sz / (sw * sw)).truncated(precision));
}

long long superelliptic_genus(const SuperellipticCover& cover, std::optional<int> p) {
    using detail::checked_add;
    using detail::checked_mul;
    const long long n = cover.n;
    if (n < 1) throw Error("cover degree n must be positive");
    if (cover.base_genus < 0) throw Error("base genus must be nonnegative");
    if (p && n % *p == 0) throw Error("p divides n; the cover is not tame");
    long long total = 0;
    for (const BranchPoint& s : cover.branch) total = checked_add(total, s.multiplicity);
    if (total != 0) throw Error("branch multiplicities sum to " + std::to_string(total) + ", not 0");
    long long rhs = checked_mul(n, 2 * cover.base_genus - 2);
    for (const BranchPoint& s : cover.branch) {
        const long long e = n / std::gcd(n, s.multiplicity);
        rhs = checked_add(rhs, (n / e) * (e - 1));
    }
    if (rhs % 2 != 0 || rhs + 2 < 0) throw Error("branch data gives 2g - 2 = " + std::to_string(rhs));
    return (rhs + 2) / 2;
}

ExampleCurve q_cover(long long q, long long n) {
    long long p = 2;
    while (p <= q && q % p != 0) ++p;
    long long rest = q;
    while (q > 1 && rest % p == 0) rest /= p;
    if (q < 2 || rest != 1 || p > kMaxCharacteristic) throw Error("q must be a prime power");
    if (n < 1 || n % p == 0) throw Error("q_cover needs n >= 1 prime to q");
    ExampleCurve ex;
    ex.name = "q_cover(" + std::to_string(q) + "," + std::to_string(n) + ")";
    ex.equation = "z^" + std::to_string(n) + " = t^" + std::to_string(q) + " - t";
    ex.p = static_cast<int>(p);
    ex.cover.n = n;
    ex.cover.base_genus = 0;
    for (long long i = 0; i < q; ++i) ex.cover.branch.push_back({"t" + std::to_string(i), 1});
    ex.cover.branch.push_back({"inf", -q});
    ex.expected_genus = (n - 1) * (q - 1) / 2;
    return ex;
}

ExampleCurve q_curve(long long q, long long n) {
    if (n <= 1 || (q + 1) % n != 0) throw Error("q_curve needs n > 1 dividing q + 1");
    ExampleCurve ex = q_cover(q, n);
    ex.name = "q_curve(" + std::to_string(q) + "," + std::to_string(n) + ")";
    return ex;
}

ExampleCurve genus10_curve() {
    ExampleCurve ex;
    ex.name = "genus10";
    ex.equation = "z^3 = t^4 + t over u^2 + u = t^3";
    ex.p = 2;
    ex.cover.n = 3;
    ex.cover.base_genus = 1;
    // t^4 + t has simple zeros at the eight affine points of Y(F_4) and a pole
    // of order 8 at the origin.
    for (int i = 0; i < 8; ++i) ex.cover.branch.push_back({"P" + std::to_string(i), 1});
    ex.cover.branch.push_back({"O", -8});
    ex.expected_genus = 10;
    return ex;
}

ExampleCurve genus3_curve() {
    ExampleCurve ex;
    ex.name = "genus3";
    ex.equation = "z^2 = u over u^2 = t^3 - t";
    ex.p = 3;
    ex.cover.n = 2;
    ex.cover.base_genus = 1;
    for (int i = 0; i < 3; ++i) ex.cover.branch.push_back({"T" + std::to_string(i), 1});
    ex.cover.branch.push_back({"O", -3});
    ex.expected_genus = 3;
    return ex;
}

ExampleCurve example_curve(const std::string& name) {
    if (name == "genus10") return genus10_curve();
    if (name == "genus3") return genus3_curve();
    static const std::regex re(R"(q_curve\(\s*(\d+)\s*,\s*(\d+)\s*\))");
    std::smatch m;
    if (std::regex_match(name, m, re)) {
        try {
            return q_curve(std::stoll(m[1]), std::stoll(m[2]));
        } catch (const std::out_of_range&) {
            throw Error("q_curve arguments out of range");
        }
    }
    throw ParseError("unknown example '" + name + "' (expected q_curve(q,n), genus10 or genus3)");
}

ConjugatorReport verify_order4_conjugator(const FieldElement& a, const FieldElement& b, const FieldElement& a_prime,
                                          const FieldElement& b_prime, const FieldElement& c, int precision) {
    const Field& F = a.field();
    require_char2(F);
    for (const FieldElement* e : {&b, &a_prime, &b_prime, &c})
        if (!(e->field() == F)) throw Error("conjugator inputs lie in different fields");
    if (precision < 1) throw Error("precision must be positive");
    if (F.wp(c.value()) != F.sub(b.value(), b_prime.value()))
        throw Error("c^2 - c != b - b'; no conjugator of this shape");

    const int work = precision + 4;
    const auto mono = [&](const Coeff& v, int e) { return TruncatedSeries::monomial(F, v, e, work); };
    const Coeff one = F.one();
    const Coeff cc = c.value();
    const Coeff c2 = F.mul(cc, cc);
    const Coeff k = k_of(F, b.value());
    const Coeff kp = k_of(F, b_prime.value());

    // f2 = c^3 + (b^2+b+1) c^2 + a + a' kills the constant term of R.
    const Coeff f2 = F.add(F.add(F.mul(c2, cc), F.mul(k, c2)), F.add(a.value(), a_prime.value()));
    const TruncatedSeries vinv =
        TruncatedSeries::from_coeffs(F, 2, std::vector<Coeff>(work - 2, one), work);  // 1/(w'^2 + w')
    const TruncatedSeries f = mono(cc, 0) + vinv.scaled(f2);

    const TruncatedSeries wp = mono(one, -1);
    const TruncatedSeries x = wp + f;
    const TruncatedSeries R = x * x * x - wp * wp * wp + (x * x).scaled(k) - (wp * wp).scaled(kp) +
                              mono(F.sub(a.value(), a_prime.value()), 0);

    // h = c^2 w' + sum h_i W^i with h_i = R_i + h_{i/2}^2.
    const int hn = R.precision();
    std::vector<Coeff> hc(hn + 1);
    hc[0] = c2;
    for (int i = 1; i < hn; ++i) {
        Coeff v = R.coeff(i);
        if (i % 2 == 0) v = F.add(v, F.mul(hc[i / 2 + 1], hc[i / 2 + 1]));
        hc[i + 1] = v;
    }
    const TruncatedSeries h = TruncatedSeries::from_coeffs(F, -1, hc, hn);
    const TruncatedSeries tail = TruncatedSeries::from_coeffs(F, 1, std::vector<Coeff>(hc.begin() + 2, hc.end()), hn);

    ConjugatorReport report{false, "", f.truncated(precision), h.truncated(precision)};
    const TruncatedSeries eq = (h * h - h - R).truncated(precision);
    if (!eq.is_zero()) {
        report.detail = "h^2 - h != R at " + first_mismatch(eq);
        return report;
    }
    const TruncatedSeries W = mono(one, 1);
    const TruncatedSeries shifted_w = W / (mono(one, 0) + W);  // 1/(w'+1)
    const TruncatedSeries h_shift = mono(c2, -1) + mono(c2, 0) + compose(tail, shifted_w);
    const TruncatedSeries lhs = h + f + mono(b.value(), 0);
    const TruncatedSeries rhs = h_shift + mono(b_prime.value(), 0);
    const TruncatedSeries diff = (lhs - rhs).truncated(precision);
    if (!diff.is_zero()) {
        report.detail = "h + f + b != b' + h(w'+1) at " + first_mismatch(diff);
        return report;
    }
    report.pass = true;
    return report;
}

}  // namespace nk
