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

#include <gtest/gtest.h>

#include <random>

#include "nkaut/nottingham.hpp"
#include "oracles.hpp"

using nk::Automorphism;
using nk::Coeff;
using nk::Field;
using nk::TruncatedSeries;

namespace {

TruncatedSeries ser(const Field& f, std::initializer_list<int> exps, int n) {
    return TruncatedSeries::from_exponents(f, exps, n);
}

// The double sum t + t^2 + sum_j sum_{l < 2^j} t^{6 2^j + 2l}.
TruncatedSeries double_sum(int n) {
    const Field f = Field::make(2);
    std::vector<Coeff> c(n - 1);
    c[0] = c[1] = f.one();
    for (int j = 0; 6 * (1 << j) < n; ++j)
        for (int l = 0; l < (1 << j) && 6 * (1 << j) + 2 * l < n; ++l) c[6 * (1 << j) + 2 * l - 1] = f.one();
    return TruncatedSeries::from_coeffs(f, 1, c, n);
}

// t (1 + c t)^{-1} expanded by hand: t - c t^2 + c^2 t^3 - ...
Automorphism geometric(const Field& f, const Coeff& c, int n) {
    std::vector<Coeff> co(n - 1);
    Coeff pw = f.one();
    for (int i = 0; i < n - 1; ++i) {
        co[i] = (i % 2 == 0) ? pw : f.neg(pw);
        pw = f.mul(pw, c);
    }
    return Automorphism(TruncatedSeries::from_coeffs(f, 1, co, n));
}

Automorphism random_nottingham(const Field& f, int n, std::mt19937_64& rng) {
    std::vector<Coeff> c(n - 1);
    c[0] = f.one();
    for (std::size_t i = 1; i < c.size(); ++i) {
        std::vector<long long> e(f.degree());
        for (auto& d : e) d = static_cast<long long>(rng() % f.characteristic());
        c[i] = f.from_coords(e);
    }
    return Automorphism(TruncatedSeries::from_coeffs(f, 1, c, n));
}

}  // namespace

TEST(Automorphism, Validation) {
    const Field f = Field::make(3);
    EXPECT_THROW(Automorphism(ser(f, {2}, 6)), nk::Error);
    EXPECT_THROW(Automorphism(TruncatedSeries::zero(f, 6)), nk::Error);
    EXPECT_TRUE(Automorphism(ser(f, {1, 2}, 6)).in_nottingham());
    EXPECT_FALSE(Automorphism::scaling(f, f.from_int(2), 6).in_nottingham());
}

TEST(AutCompose, Examples) {
    const Field f = Field::make(2);
    const Automorphism s(double_sum(64));
    EXPECT_EQ(nk::aut_compose(s, Automorphism::identity(f, 64)), s);
    EXPECT_TRUE(nk::aut_power(s, 4).is_identity());
    const Field f9 = Field::make(3, 2);
    const Coeff a = f9.x(), b = f9.add(f9.x(), f9.one());
    EXPECT_EQ(nk::aut_compose(Automorphism::scaling(f9, a, 10), Automorphism::scaling(f9, b, 10)),
              Automorphism::scaling(f9, f9.mul(a, b), 10));
    EXPECT_THROW(nk::aut_compose(s, Automorphism::identity(f9, 64)), nk::Error);
}

TEST(AutInverse, Examples) {
    const Field f = Field::make(5);
    EXPECT_TRUE(nk::aut_inverse(Automorphism::identity(f, 20)).is_identity());
    EXPECT_EQ(nk::aut_inverse(Automorphism(double_sum(40))).action(),
              ser(Field::make(2), {1, 2, 4, 6, 10, 14, 22, 30}, 40));
    const Automorphism s = nk::sigma_b(Field::make(2, 2).element(1), 64);
    EXPECT_TRUE(nk::aut_power(s, 4).is_identity());
    EXPECT_EQ(nk::aut_power(s, -1), nk::aut_power(s, 3));
}

TEST(AutOrder, Examples) {
    const Field f = Field::make(2);
    const auto id = nk::aut_order(Automorphism::identity(f, 30), 10);
    EXPECT_EQ(id.order, 1);
    const auto g = nk::aut_order(geometric(f, f.one(), 64), 8);
    EXPECT_EQ(g.order, 2);
    EXPECT_EQ(g.precision, 64);
    const auto s = nk::aut_order(nk::sigma_b(f.element(0), 256), 8);
    EXPECT_EQ(s.order, 4);
    EXPECT_EQ(s.precision, 256);
    // t + t^4 over F_3 has infinite order (its first break is divisible by p),
    // but sigma^27 is t modulo t^60, so that is the order at precision 60.
    const Automorphism inf(ser(Field::make(3), {1, 4}, 60));
    const auto none = nk::aut_order(inf, 8);
    EXPECT_FALSE(none.order.has_value());
    EXPECT_EQ(none.precision, 60);
    EXPECT_EQ(nk::aut_order(inf, 27).order, 27);
}

TEST(NormalForm, Examples) {
    const Field f2 = Field::make(2);
    const auto nf = nk::order_p_normal_form(geometric(f2, f2.one(), 20));
    EXPECT_EQ(nf.m, 1);
    EXPECT_TRUE(nf.c.is_one());
    std::mt19937_64 rng(17);
    for (const Field& f : {Field::make(2, 3), Field::make(3, 2), Field::make(5, 1)}) {
        for (int i = 0; i < 20; ++i) {
            int m = 1 + static_cast<int>(rng() % 9);
            if (m % f.characteristic() == 0) ++m;
            Coeff c{};
            while (Field::is_zero(c)) c = f.at_index(rng() % f.size());
            const auto got = nk::order_p_normal_form(nk::make_order_p(m, f.element(c), 2 * (m + 2)));
            EXPECT_EQ(got.m, m);
            EXPECT_EQ(got.c, f.element(c));
        }
    }
}

TEST(NormalForm, ConjugationInvariantOverF8) {
    const Field f8 = Field::make(2, 3);
    std::mt19937_64 rng(23);
    for (std::uint64_t ci = 1; ci < 8; ++ci) {
        const Automorphism s = nk::make_order_p(3, f8.element(f8.at_index(ci)), 24);
        const Automorphism tau = random_nottingham(f8, 24, rng);
        const auto nf = nk::order_p_normal_form(nk::aut_conjugate(s, tau));
        EXPECT_EQ(nf.m, 3);
        EXPECT_EQ(nf.c, f8.element(f8.at_index(ci)));
    }
}

TEST(NormalForm, Errors) {
    const Field f = Field::make(2);
    EXPECT_THROW(nk::order_p_normal_form(Automorphism::scaling(Field::make(3), Field::make(3).from_int(2), 20)),
                 nk::Error);
    EXPECT_THROW(nk::order_p_normal_form(Automorphism::identity(f, 20)), nk::Error);
    EXPECT_THROW(nk::order_p_normal_form(nk::make_order_p(5, f.element(1), 8)), nk::PrecisionError);
    // sigma_b has order 4: its break m = 1 is odd, but sigma^2 != id.
    EXPECT_THROW(nk::order_p_normal_form(nk::sigma_b(f.element(0), 40)), nk::Error);
}

TEST(MakeOrderP, Examples) {
    const Field f2 = Field::make(2);
    EXPECT_EQ(nk::make_order_p(1, f2.element(1), 12).action(), ser(f2, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}, 12));
    const Field f = Field::make(5, 2);
    const Automorphism s = nk::make_order_p(4, f.element(f.x()), 40);
    EXPECT_TRUE(nk::aut_power(s, 5).is_identity());
    EXPECT_FALSE(s.is_identity());
    const Automorphism d = nk::dispersal(nk::make_order_p(1, f.element(f.x()), 12), 4);
    EXPECT_EQ(d, nk::make_order_p(4, f.element(f.x()), d.precision()));
    EXPECT_THROW(nk::make_order_p(5, f.element(1), 10), nk::Error);
    EXPECT_THROW(nk::make_order_p(2, f.element(0), 10), nk::Error);
}

TEST(ConjugacyTest, Examples) {
    const Field f4 = Field::make(2, 2);
    const Automorphism s = nk::make_order_p(3, f4.element(f4.x()), 20);
    EXPECT_TRUE(nk::conjugacy_test_order_p(s, s, nk::ConjugacyMode::nottingham));
    EXPECT_TRUE(nk::conjugacy_test_order_p(s, s, nk::ConjugacyMode::full_aut));
    const Automorphism one = nk::make_order_p(3, f4.element(1), 20);
    EXPECT_FALSE(nk::conjugacy_test_order_p(s, one, nk::ConjugacyMode::nottingham));
    EXPECT_FALSE(nk::conjugacy_test_order_p(s, one, nk::ConjugacyMode::full_aut));
    // m = 1: every c is a first power.
    const Automorphism s1 = nk::make_order_p(1, f4.element(f4.x()), 20);
    EXPECT_TRUE(nk::conjugacy_test_order_p(s1, nk::make_order_p(1, f4.element(1), 20), nk::ConjugacyMode::full_aut));
    const Field f2 = Field::make(2);
    std::mt19937_64 rng(31);
    const Automorphism g = geometric(f2, f2.one(), 20);
    const Automorphism h = nk::aut_conjugate(g, random_nottingham(f2, 20, rng));
    EXPECT_TRUE(nk::conjugacy_test_order_p(g, h, nk::ConjugacyMode::nottingham));
    EXPECT_TRUE(nk::conjugacy_test_order_p(g, h, nk::ConjugacyMode::full_aut));
}

TEST(Dispersal, Examples) {
    const Field f = Field::make(3);
    std::mt19937_64 rng(37);
    const Automorphism s = random_nottingham(f, 15, rng);
    EXPECT_EQ(nk::dispersal(s, 1), s);
    const Automorphism d = nk::dispersal(geometric(f, f.one(), 15), 4);
    EXPECT_EQ(d, nk::make_order_p(4, f.element(1), d.precision()));
    EXPECT_THROW(nk::dispersal(s, 3), nk::Error);
}

TEST(Dispersal, Homomorphism) {
    std::mt19937_64 rng(41);
    for (const Field& f : {Field::make(2, 2), Field::make(5)}) {
        for (int i = 0; i < 20; ++i) {
            const Automorphism a = random_nottingham(f, 12, rng), b = random_nottingham(f, 12, rng);
            for (int m : {3, 7}) {
                EXPECT_EQ(nk::dispersal(nk::aut_compose(a, b), m),
                          nk::aut_compose(nk::dispersal(a, m), nk::dispersal(b, m)));
            }
        }
    }
}

TEST(ArtinSchreier, Examples) {
    const Field f = Field::make(2);
    EXPECT_TRUE(nk::artin_schreier_series(TruncatedSeries::zero(f, 9)).is_zero());
    const TruncatedSeries alpha = ser(f, {2, 3}, 9);
    const TruncatedSeries beta = nk::artin_schreier_series(alpha);
    EXPECT_EQ(beta, ser(f, {2, 3, 4, 6, 8}, 9));
    EXPECT_EQ(nk::frobenius(beta).truncated(9) - beta, alpha);
    EXPECT_THROW(nk::artin_schreier_series(ser(f, {0, 1}, 9)), nk::Error);
}

TEST(ArtinSchreier, DefiningIdentityOddCharacteristic) {
    std::mt19937_64 rng(43);
    for (const Field& f : {Field::make(3, 2), Field::make(7)}) {
        for (int i = 0; i < 20; ++i) {
            const int v = 1 + static_cast<int>(rng() % 4);
            std::vector<Coeff> c(30 - v);
            for (auto& x : c) x = f.at_index(rng() % f.size());
            if (Field::is_zero(c[0])) c[0] = f.one();
            const TruncatedSeries alpha = TruncatedSeries::from_coeffs(f, v, c, 30);
            const TruncatedSeries beta = nk::artin_schreier_series(alpha);
            EXPECT_EQ(nk::frobenius(beta).truncated(30) - beta, alpha);
            EXPECT_EQ(beta.valuation(), alpha.valuation());
        }
    }
}

TEST(SigmaB, ClosedFormOverF2) {
    const Field f = Field::make(2);
    // At b = 0 the closed form reduces to (t^2 + beta)/t^2; at b = 1 to (t + beta)/(1 + t^2).
    const TruncatedSeries beta = nk::artin_schreier_series(ser(f, {2, 3}, 42));
    EXPECT_EQ(nk::sigma_b(f.element(0), 40).action(), nk::shift_mul(ser(f, {2}, 42) + beta, -2));
    EXPECT_EQ(nk::sigma_b(f.element(1), 40).action(),
              ((ser(f, {1}, 42) + beta) / ser(f, {0, 2}, 42)).truncated(40));
}

TEST(SigmaB, DoubleSumIsSigmaOne) {
    const Field f = Field::make(2);
    // The double sum is the closed form at b = 1; its inverse is the closed form at b = 0.
    EXPECT_EQ(nk::sigma_b(f.element(1), 64).action(), double_sum(64));
    EXPECT_EQ(nk::sigma_b(f.element(0), 31).action(), ser(f, {1, 2, 4, 6, 10, 14, 22, 30}, 31));
}

TEST(SigmaB, InverseIsSigmaBPlusOne) {
    for (int r : {1, 2, 3}) {
        const Field f = Field::make(2, r);
        for (std::uint64_t i = 0; i < f.size(); ++i) {
            const nk::FieldElement b = f.element(f.at_index(i));
            EXPECT_TRUE(nk::aut_compose(nk::sigma_b(b, 128), nk::sigma_b(b + f.element(1), 128)).is_identity());
        }
    }
}

TEST(SigmaB, OrderFourOverF4) {
    const Field f4 = Field::make(2, 2);
    const Automorphism s = nk::sigma_b(f4.element(f4.x()), 128);
    EXPECT_EQ(nk::aut_order(s, 8).order, 4);
    const TruncatedSeries d2 = nk::aut_power(s, 2).action() - TruncatedSeries::variable(f4, 128);
    EXPECT_EQ(d2.valuation(), 4);
    EXPECT_THROW(nk::sigma_b(Field::make(3).element(1), 20), nk::Error);
}

TEST(SigmaConjugacy, Examples) {
    const Field f2 = Field::make(2), f4 = Field::make(2, 2);
    EXPECT_TRUE(nk::sigma_conjugacy_test(f4.element(f4.x()), f4.element(f4.x())));
    EXPECT_FALSE(nk::sigma_conjugacy_test(f2.element(0), f2.element(1)));
    EXPECT_TRUE(nk::sigma_conjugacy_test(f4.element(0), f4.element(1)));
}

TEST(SigmaConjugacy, TwoClasses) {
    for (int r = 1; r <= 6; ++r) {
        const Field f = Field::make(2, r);
        const nk::FieldElement zero = f.element(0);
        std::uint64_t with_zero = 0;
        for (std::uint64_t i = 0; i < f.size(); ++i) {
            const nk::FieldElement b = f.element(f.at_index(i));
            if (nk::sigma_conjugacy_test(b, zero)) ++with_zero;
            // Transitivity through zero.
            for (std::uint64_t j = 0; j < f.size(); j += 7) {
                const nk::FieldElement c = f.element(f.at_index(j));
                EXPECT_EQ(nk::sigma_conjugacy_test(b, c),
                          nk::sigma_conjugacy_test(b, zero) == nk::sigma_conjugacy_test(c, zero));
            }
        }
        EXPECT_EQ(with_zero, f.size() / 2);
    }
}
