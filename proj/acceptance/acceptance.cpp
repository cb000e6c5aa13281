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

#include "acceptance.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <ostream>
#include <random>
#include <utility>

#include "nkaut/curves.hpp"
#include "nkaut/nottingham.hpp"
#include "nkaut/ramification.hpp"
#include "nkaut/text.hpp"

namespace nk::acceptance {

namespace {

using Rng = std::mt19937_64;

// rng() % n keeps the stream identical across standard libraries.
std::uint64_t below(Rng& rng, std::uint64_t n) { return rng() % n; }

Coeff random_coeff(const Field& f, Rng& rng) {
    std::vector<long long> c(f.degree());
    for (auto& e : c) e = static_cast<long long>(below(rng, f.characteristic()));
    return f.from_coords(c);
}

Coeff random_nonzero(const Field& f, Rng& rng) {
    while (true) {
        const Coeff c = random_coeff(f, rng);
        if (!Field::is_zero(c)) return c;
    }
}

// Random series with exact valuation v (when v < n).
TruncatedSeries random_series(const Field& f, int v, int n, Rng& rng) {
    if (v >= n) return TruncatedSeries::zero(f, n);
    std::vector<Coeff> c(n - v);
    c[0] = random_nonzero(f, rng);
    for (std::size_t i = 1; i < c.size(); ++i) c[i] = random_coeff(f, rng);
    return TruncatedSeries::from_coeffs(f, v, std::move(c), n);
}

// t + O(t^2) with random higher terms.
Automorphism random_nottingham(const Field& f, int n, Rng& rng) {
    std::vector<Coeff> c(n - 1);
    c[0] = f.one();
    for (std::size_t i = 1; i < c.size(); ++i) c[i] = random_coeff(f, rng);
    return Automorphism(TruncatedSeries::from_coeffs(f, 1, std::move(c), n));
}

Field random_small_field(Rng& rng) {
    static const int primes[] = {2, 3, 5, 7};
    return Field::make(primes[below(rng, 4)], 1 + static_cast<int>(below(rng, 3)));
}

int random_prime_to(int p, int max, Rng& rng) {
    while (true) {
        const int m = 1 + static_cast<int>(below(rng, max));
        if (m % p != 0) return m;
    }
}

std::vector<Coeff> all_elements(const Field& f) {
    std::vector<Coeff> out;
    for (std::uint64_t i = 0; i < f.size(); ++i) out.push_back(f.at_index(i));
    return out;
}

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
};

Outcome sigma0_golden() {
    const Field f2 = Field::make(2);
    const TruncatedSeries listed = TruncatedSeries::from_exponents(f2, {1, 2, 6, 12, 14, 24, 26, 28, 30}, 31);
    const TruncatedSeries got = sigma_b(f2.element(0), 31).action();
    Outcome out;
    if (got == listed) {
        out.detail = "sigma_b(0) = t + t^2 + t^6 + t^12 + t^14 + t^24 + ... mod t^31";
        return out;
    }
    std::string exps;
    for (int e = 1; e < 31; ++e)
        if (!Field::is_zero(got.coeff(e))) exps += (exps.empty() ? "" : ",") + std::to_string(e);
    std::string why = "sigma_b(0) mod t^31 has exponents " + exps + ", not 1,2,6,12,14,24,26,28,30";
    if (sigma_b(f2.element(1), 31).action() == listed) why += "; the listed expansion is sigma_b(1)";
    out.fail(why);
    return out;
}

Outcome sigma1_inverse() {
    const Field f2 = Field::make(2);
    const int n = 47;
    std::vector<Coeff> s0(n - 1);
    s0[0] = s0[1] = f2.one();
    for (int j = 0; 6 * (1 << j) < n; ++j)
        for (int l = 0; l < (1 << j); ++l) {
            const int e = 6 * (1 << j) + 2 * l;
            if (e < n) s0[e - 1] = f2.add(s0[e - 1], f2.one());
        }
    std::vector<Coeff> s1(n - 1);
    for (int i = 0; 3 * (1 << i) - 2 < n; ++i) s1[3 * (1 << i) - 3] = f2.add(s1[3 * (1 << i) - 3], f2.one());
    for (int j = 2; (1 << j) - 2 < n; ++j) s1[(1 << j) - 3] = f2.add(s1[(1 << j) - 3], f2.one());
    const TruncatedSeries sigma0 = TruncatedSeries::from_coeffs(f2, 1, s0, n);
    const TruncatedSeries sigma1 = TruncatedSeries::from_coeffs(f2, 1, s1, n);
    Outcome out;
    if (!(reversion(sigma0) == sigma1)) out.fail("reversion(sigma_0) differs from the listed sigma_1");
    if (!Automorphism(compose(sigma0, sigma1)).is_identity()) out.fail("sigma_0(sigma_1(t)) != t mod t^47");
    if (out.pass) out.detail = "reversion(sigma_0) = sigma_1 and sigma_0(sigma_1(t)) = t mod t^47";
    return out;
}

std::vector<FieldElement> test_bs() {
    std::vector<FieldElement> bs;
    for (int r : {1, 2, 4}) {
        const Field f = Field::make(2, r);
        for (const Coeff& c : all_elements(f)) bs.push_back(f.element(c));
    }
    return bs;
}

Outcome order4_suite() {
    Outcome out;
    int count = 0;
    for (const FieldElement& b : test_bs()) {
        const std::string tag = " for b=" + format_element(b) + " over " + format_field(b.field());
        const Automorphism s = sigma_b(b, 256);
        const Automorphism s2 = aut_compose(s, s);
        if (s2.is_identity()) out.fail("sigma_b^2 = id" + tag);
        if (!aut_compose(s2, s2).is_identity()) out.fail("sigma_b^4 != id" + tag);
        const Automorphism inv = sigma_b(b + b.field().element(1), 256);
        if (!aut_compose(s, inv).is_identity()) out.fail("sigma_b o sigma_{b+1} != id" + tag);
        ++count;
    }
    if (out.pass) out.detail = std::to_string(count) + " values of b over F_2, F_4, F_16 at precision 256";
    return out;
}

Outcome ramification_of_sigma() {
    Outcome out;
    const RamificationProfile expected{2, 2, {1, 3}, {1, 1}, {1, 2}, 8};
    int count = 0;
    for (const FieldElement& b : test_bs()) {
        const RamificationProfile prof = ramification_profile(sigma_b(b, 64), 2);
        if (!(prof == expected)) out.fail(format_profile(prof) + " for b=" + format_element(b));
        ++count;
    }
    if (hkg_genus(4, 8) != Rational(1)) out.fail("hkg_genus(4, 8) = " + to_string(hkg_genus(4, 8)));
    if (different_lower_bound(2, 2) != Rational(8))
        out.fail("different_lower_bound(2, 2) = " + to_string(different_lower_bound(2, 2)));
    if (out.pass) out.detail = format_profile(expected) + " for " + std::to_string(count) + " b; hkg_genus(4,8) = 1";
    return out;
}

Outcome expansion_vs_formula() {
    Outcome out;
    const Field f2 = Field::make(2);
    const Field f4 = Field::make(2, 2);
    for (const FieldElement& b : {f2.element(0), f2.element(1), f4.element(f4.x())}) {
        if (!(eab_local_expansion(b, 64) == sigma_b(b, 64)))
            out.fail("expansion differs from sigma_b for b=" + format_element(b) + " over " + format_field(b.field()));
    }
    if (out.pass) out.detail = "b = 0, 1 over F_2 and b = x over F_4 agree mod t^64";
    return out;
}

Outcome normal_forms(std::uint64_t seed) {
    Rng rng(seed);
    Outcome out;
    int positives = 0, negatives = 0;
    static const int primes[] = {2, 3, 5};
    for (int trial = 0; trial < 200 && out.pass; ++trial) {
        const int p = primes[below(rng, 3)];
        const Field f = Field::make(p, 1 + static_cast<int>(below(rng, 3)));
        const int m = random_prime_to(p, 9, rng);
        const FieldElement c = f.element(random_nonzero(f, rng));
        const int n = 2 * (m + 2) + 4;
        const Automorphism sigma = make_order_p(m, c, n);
        const Automorphism tau = random_nottingham(f, n, rng);
        const OrderPNormalForm nf = order_p_normal_form(aut_conjugate(sigma, tau));
        const std::string tag = " (trial " + std::to_string(trial) + ", " + format_field(f) + ", m=" +
                                std::to_string(m) + ", c=" + format_element(c) + ")";
        if (nf.m != m || !(nf.c == c)) {
            out.fail("extraction gave " + format_normal_form(nf) + tag);
            break;
        }
        // Conjugating by t -> lambda t moves c within its class mod k^{x m}.
        const Automorphism scaled = aut_conjugate(sigma, Automorphism::scaling(f, random_nonzero(f, rng), n));
        if (!conjugacy_test_order_p(sigma, scaled, ConjugacyMode::full_aut))
            out.fail("full_aut rejected a scaling conjugate" + tag);
        const FieldElement lambda = f.element(random_nonzero(f, rng));
        if (!conjugacy_test_order_p(sigma, make_order_p(m, c * lambda.pow(m), n), ConjugacyMode::full_aut))
            out.fail("full_aut rejected c' = c lambda^m" + tag);
        ++positives;
        // A non-m-th power g, if one exists, gives a negative pair.
        for (int tries = 0; tries < 64; ++tries) {
            const Coeff g = random_nonzero(f, rng);
            const uint128 q1 = f.order() - 1;
            uint128 gcd = q1, b = static_cast<uint128>(m);
            while (b != 0) gcd = std::exchange(b, gcd % b);
            if (f.is_one(f.pow(g, q1 / gcd))) continue;
            const Automorphism other = make_order_p(m, c * f.element(g), n);
            if (conjugacy_test_order_p(sigma, other, ConjugacyMode::full_aut))
                out.fail("full_aut accepted c' = c g with g not an m-th power" + tag);
            if (conjugacy_test_order_p(sigma, other, ConjugacyMode::nottingham))
                out.fail("N_k mode accepted different c" + tag);
            ++negatives;
            break;
        }
    }
    if (out.pass)
        out.detail = "200 conjugated normal forms recovered; " + std::to_string(positives) + " positive and " +
                     std::to_string(negatives) + " negative full_aut pairs";
    return out;
}

Outcome break_lemma() {
    Outcome out;
    std::string summary;
    for (const auto& [p, n] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 2}}) {
        const auto seqs = enumerate_upper_breaks(p, n, 64);
        long long best = -1;
        for (const auto& s : seqs) {
            const long long d = different_from_upper_breaks(p, s);
            if (best < 0 || d < best) best = d;
        }
        const Rational bound = different_lower_bound(p, n);
        const std::string tag = "(p,n)=(" + std::to_string(p) + "," + std::to_string(n) + ")";
        if (seqs.empty() || Rational(best) != bound)
            out.fail(tag + ": min different " + std::to_string(best) + " vs bound " + to_string(bound));
        summary += (summary.empty() ? "" : ", ") + tag + " min " + std::to_string(best);
    }
    if (out.pass) out.detail = summary + " equal the lower bounds";
    return out;
}

Outcome genus_table() {
    Outcome out;
    std::string summary;
    const auto check = [&](const std::string& name, const SuperellipticCover& cover, int p, long long expected) {
        const long long g = superelliptic_genus(cover, p);
        if (g != expected)
            out.fail(name + ": genus " + std::to_string(g) + ", expected " + std::to_string(expected));
        summary += (summary.empty() ? "" : ", ") + name + "=" + std::to_string(g);
    };
    check("z^4=t^3-t", parse_cover("COVER n=4 g0=0 branch=1,1,1,-3"), 3, 3);
    const ExampleCurve g3 = genus3_curve();
    check(g3.name, g3.cover, g3.p, 3);
    const ExampleCurve g10 = genus10_curve();
    check(g10.name, g10.cover, g10.p, 10);
    for (const auto& [q, n] : {std::pair{3LL, 4LL}, {4LL, 3LL}, {8LL, 9LL}, {4LL, 5LL}}) {
        // n = 3 does not divide q + 1 = 5: no HKG example, but z^3 = t^4 - t is
        // still a cyclic cover with the same Hurwitz count.
        const ExampleCurve ex = (q + 1) % n == 0 ? q_curve(q, n) : q_cover(q, n);
        check(ex.name, ex.cover, ex.p, (n - 1) * (q - 1) / 2);
    }
    if (out.pass) out.detail = summary;
    return out;
}

Outcome eab_actions(std::uint64_t seed) {
    Rng rng(seed);
    Outcome out;
    int curves = 0;
    const auto run = [&](const FieldElement& a, const FieldElement& b) {
        const EabCurve curve(a, b);
        const CheckReport rep = eab_verify_action(curve);
        if (!rep.pass) out.fail(format_curve(curve) + ": " + rep.detail);
        ++curves;
    };
    for (int r : {1, 2}) {
        const Field f = Field::make(2, r);
        for (const Coeff& a : all_elements(f))
            for (const Coeff& b : all_elements(f)) run(f.element(a), f.element(b));
    }
    const Field f64 = Field::make(2, 6);
    for (int i = 0; i < 20; ++i) {
        const Coeff a = random_coeff(f64, rng);
        run(f64.element(a), f64.element(random_coeff(f64, rng)));
    }
    if (out.pass) out.detail = std::to_string(curves) + " curves, no counterexample";
    return out;
}

Outcome conjugators(std::uint64_t seed) {
    Rng rng(seed);
    Outcome out;
    int runs = 0;
    for (int r : {2, 4}) {
        const Field f = Field::make(2, r);
        for (int i = 0; i < 50; ++i) {
            const FieldElement a = f.element(random_coeff(f, rng));
            const FieldElement ap = f.element(random_coeff(f, rng));
            const FieldElement b = f.element(random_coeff(f, rng));
            const FieldElement c = f.element(random_coeff(f, rng));
            const FieldElement bp = b - wp_apply(c);
            const ConjugatorReport rep = verify_order4_conjugator(a, b, ap, bp, c, 32);
            if (!rep.pass)
                out.fail("a=" + format_element(a) + " b=" + format_element(b) + " a'=" + format_element(ap) +
                         " c=" + format_element(c) + " over " + format_field(f) + ": " + rep.detail);
            ++runs;
        }
    }
    const Field f2 = Field::make(2), f4 = Field::make(2, 2);
    if (sigma_conjugacy_test(f2.element(0), f2.element(1))) out.fail("sigma_0 ~ sigma_1 over F_2");
    if (!sigma_conjugacy_test(f4.element(0), f4.element(1))) out.fail("sigma_0 !~ sigma_1 over F_4");
    if (out.pass) out.detail = std::to_string(runs) + " conjugators verified mod W^32; (0,1) false over F_2, true over F_4";
    return out;
}

Outcome theorem_bounds() {
    Outcome out;
    const GenusBounds eq = genus_bounds(2, 2, 2);
    if (eq.upper != 1 || eq.lower != Rational(1)) out.fail("genus_bounds(2,2,2) upper/lower not 1/1");
    if (!eq.degree_bound_exact || eq.degree_bound_value != Rational(2)) out.fail("genus_bounds(2,2,2) bound not 2");
    if (!eq.consistent || !eq.degree_ok) out.fail("genus_bounds(2,2,2) not consistent");
    const GenusBounds bad = genus_bounds(2, 3, 2);
    if (bad.consistent) out.fail("genus_bounds(2,3,2) reported consistent");
    if (out.pass)
        out.detail = "(2,2,2): upper 1, lower 1, bound 2; (2,3,2): lower " + to_string(bad.lower) + " > upper " +
                     std::to_string(bad.upper);
    return out;
}

Outcome property_suites(std::uint64_t seed) {
    Rng rng(seed);
    Outcome out;
    constexpr int kCases = 1000;
    const auto suite = [&](const std::string& name, const std::function<bool(int)>& body) {
        for (int i = 0; i < kCases && out.pass; ++i)
            if (!body(i)) out.fail(name + " failed on case " + std::to_string(i));
    };

    suite("ring laws", [&](int) {
        const Field f = random_small_field(rng);
        const auto draw = [&] {
            const int v = static_cast<int>(below(rng, 7)) - 3;
            return random_series(f, v, v + 1 + static_cast<int>(below(rng, 96)), rng);
        };
        const TruncatedSeries a = draw(), b = draw(), c = draw();
        return congruent(a * b, b * a) && congruent((a * b) * c, a * (b * c)) &&
               congruent(a * (b + c), a * b + a * c) && (a * b).valuation() == a.valuation() + b.valuation();
    });
    suite("composition associativity", [&](int) {
        const Field f = random_small_field(rng);
        const int n = 2 + static_cast<int>(below(rng, 47));
        const TruncatedSeries a = random_series(f, 1, n, rng), b = random_series(f, 1, n, rng),
                              c = random_series(f, 1, n, rng);
        return compose(compose(a, b), c) == compose(a, compose(b, c));
    });
    suite("reversion round trip", [&](int) {
        const Field f = random_small_field(rng);
        const int n = 2 + static_cast<int>(below(rng, 127));
        const TruncatedSeries a = random_series(f, 1, n, rng);
        const TruncatedSeries g = reversion(a);
        const TruncatedSeries t = TruncatedSeries::variable(f, n);
        return compose(a, g) == t && compose(g, a) == t;
    });
    suite("root round trip", [&](int) {
        const Field f = random_small_field(rng);
        const int n = 1 + static_cast<int>(below(rng, 128));
        const int m = random_prime_to(f.characteristic(), 12, rng);
        TruncatedSeries u = random_series(f, 0, n, rng);
        u = u.scaled(f.inv(u.leading()));
        return power(nth_root(u, m), m) == u;
    });
    suite("wp solver", [&](int) {
        static const int primes[] = {2, 3, 5, 7, 97};
        const Field f = Field::make(primes[below(rng, 5)], 1 + static_cast<int>(below(rng, 6)));
        const Coeff a = random_coeff(f, rng);
        const auto c = f.wp_solve(a);
        return c.has_value() == (f.trace(a) == 0) && (!c || f.wp(*c) == a);
    });
    suite("dispersal homomorphism", [&](int) {
        const Field f = random_small_field(rng);
        const int n = 2 + static_cast<int>(below(rng, 23));
        const int m = random_prime_to(f.characteristic(), 5, rng);
        const Automorphism s = random_nottingham(f, n, rng), t = random_nottingham(f, n, rng);
        const Automorphism lhs = dispersal(aut_compose(s, t), m);
        const Automorphism rhs = aut_compose(dispersal(s, m), dispersal(t, m));
        const bool kernel = s.is_identity() == dispersal(s, m).is_identity();
        return lhs == rhs && dispersal(Automorphism::identity(f, n), m).is_identity() && kernel;
    });
    if (out.pass) out.detail = "6 suites x " + std::to_string(kCases) + " cases, seed " + std::to_string(seed);
    return out;
}

struct Criterion {
    const char* title;
    std::function<Outcome(std::uint64_t)> run;
};

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> all = {
        {"sigma_0 golden expansion", [](std::uint64_t) { return sigma0_golden(); }},
        {"sigma_1 inverse identity", [](std::uint64_t) { return sigma1_inverse(); }},
        {"order-4 suite", [](std::uint64_t) { return order4_suite(); }},
        {"ramification of sigma_b", [](std::uint64_t) { return ramification_of_sigma(); }},
        {"expansion vs formula", [](std::uint64_t) { return expansion_vs_formula(); }},
        {"order-p normal form", normal_forms},
        {"break-sequence lemma", [](std::uint64_t) { return break_lemma(); }},
        {"genus table", [](std::uint64_t) { return genus_table(); }},
        {"E_{a,b} action suite", eab_actions},
        {"conjugator construction", conjugators},
        {"genus bound arithmetic", [](std::uint64_t) { return theorem_bounds(); }},
        {"library property suites", property_suites},
    };
    return all;
}

}  // namespace

CriterionResult run_criterion(int id, std::uint64_t seed) {
    if (id < 1 || id > kCriterionCount) throw Error("no acceptance criterion " + std::to_string(id));
    const Criterion& c = criteria()[id - 1];
    CriterionResult res;
    res.id = id;
    res.title = c.title;
    const auto start = std::chrono::steady_clock::now();
    try {
        const Outcome o = c.run(seed + static_cast<std::uint64_t>(id));
        res.pass = o.pass;
        res.detail = o.detail;
    } catch (const std::exception& e) {
        res.pass = false;
        res.detail = std::string("exception: ") + e.what();
    }
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return res;
}

std::vector<CriterionResult> run_all(std::uint64_t seed) {
    std::vector<CriterionResult> out;
    for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id, seed));
    return out;
}

bool print_results(std::ostream& out, const std::vector<CriterionResult>& results, bool with_timing) {
    int passed = 0;
    for (const CriterionResult& r : results) {
        out << (r.pass ? "PASS" : "FAIL") << " " << std::setw(2) << std::setfill('0') << r.id << std::setfill(' ')
            << " " << r.title << ": " << r.detail;
        if (with_timing) out << " [" << std::fixed << std::setprecision(2) << r.seconds << "s]";
        out << "\n";
        passed += r.pass ? 1 : 0;
    }
    out << passed << "/" << results.size() << " criteria passed\n";
    return passed == static_cast<int>(results.size());
}

}  // namespace nk::acceptance
