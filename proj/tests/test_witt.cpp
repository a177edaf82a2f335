/*
   Copyright 2026 The bkt Authors

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

#include "bkt/witt.hpp"

using namespace bkt;

namespace {

HahnElement t(unsigned p, Rational q, std::int64_t c = 1) { return HahnElement::monomial(p, c, q); }

// Teichmuller lift of x in F_p to Z/p^k: x^{p^{k-1}} is already stable mod p^k.
std::uint64_t omega(std::uint64_t x, unsigned p, std::uint64_t mod, unsigned k) {
    std::uint64_t r = x % mod;
    for (unsigned i = 1; i < k; ++i) {
        std::uint64_t s = 1;
        for (unsigned e = 0; e < p; ++e) s = s * r % mod;
        r = s;
    }
    return r;
}

std::uint64_t eval_mod_p(const std::vector<std::uint32_t>& q, std::uint64_t x, std::uint64_t y, unsigned p) {
    std::uint64_t s = 0;
    const std::size_t d = q.size() - 1;
    for (std::size_t k = 0; k <= d; ++k) {
        std::uint64_t m = q[k];
        for (std::size_t i = 0; i < k; ++i) m = m * x % p;
        for (std::size_t i = k; i < d; ++i) m = m * y % p;
        s = (s + m) % p;
    }
    return s;
}

HahnElement random_hahn(std::mt19937_64& rng, unsigned p, unsigned max_terms) {
    std::vector<std::pair<Rational, std::int64_t>> ts;
    const unsigned n = rng() % (max_terms + 1);
    for (unsigned i = 0; i < n; ++i)
        ts.emplace_back(Rational(static_cast<std::int64_t>(rng() % 6), 1 + rng() % 3),
                        static_cast<std::int64_t>(1 + rng() % (p - 1)));
    return HahnElement::from_terms(p, ts);
}

WittVector random_witt(std::mt19937_64& rng, unsigned p, unsigned L, unsigned max_terms) {
    std::vector<HahnElement> c;
    for (unsigned i = 0; i < L; ++i) c.push_back(random_hahn(rng, p, max_terms));
    return WittVector(p, c);
}

WittVector zero_vec(unsigned p, unsigned L) { return WittVector::teichmuller(HahnElement(p), L); }

}  // namespace

TEST(Hahn, Arithmetic) {
    EXPECT_EQ(t(3, Rational(3, 2)) * t(3, Rational(1, 2)), t(3, Rational(2)));
    auto r = t(3, Rational(3, 2)).truncated(Rational(9)).p_root();
    EXPECT_EQ(r.terms().front().first, Rational(1, 2));
    EXPECT_EQ(*r.cutoff(), Rational(3));
    auto x = t(3, Rational(1, 2)) + t(3, Rational(1));
    EXPECT_EQ(x * x * x, t(3, Rational(3, 2)) + t(3, Rational(3)));
    EXPECT_EQ(x.pow(3), x.frobenius());
    EXPECT_EQ(x.pow(7), x.frobenius() * x.frobenius() * x);
    EXPECT_EQ(x - x, HahnElement(3));
    EXPECT_EQ(to_string(x.truncated(Rational(5))), "1*t^(1/2) + 1*t [< 5]");
}

TEST(Hahn, TruncatedProductKeepsKnownTerms) {
    // (1 + t) known below 2, times t: known below 3
    auto a = (HahnElement::constant(2, 1) + t(2, Rational(1))).truncated(Rational(2));
    auto b = a * t(2, Rational(1));
    EXPECT_EQ(*b.cutoff(), Rational(3));
    EXPECT_EQ(b.terms().size(), 2u);
}

TEST(Witt, QPolysSmall) {
    auto Q2 = q_polys(2, 1);
    EXPECT_EQ(Q2[0], (std::vector<std::uint32_t>{1, 1}));
    EXPECT_EQ(Q2[1], (std::vector<std::uint32_t>{0, 1, 0}));
    auto Q3 = q_polys(3, 1);
    EXPECT_EQ(Q3[1], (std::vector<std::uint32_t>{0, 2, 2, 0}));
    EXPECT_THROW(q_polys(3, 8), BudgetExceeded);
}

TEST(Witt, QPolysShape) {
    for (auto [p, imax] : {std::pair{2u, 4u}, {3u, 4u}, {5u, 3u}}) {
        auto Q = q_polys(p, imax);
        std::uint64_t d = 1;
        for (unsigned i = 0; i <= imax; ++i, d *= p) {
            ASSERT_EQ(Q[i].size(), d + 1);
            if (i == 0) continue;
            EXPECT_EQ(Q[i][0], 0u);
            EXPECT_EQ(Q[i][d], 0u);
            // edge coefficients are units; for odd p they are -1
            EXPECT_EQ(Q[i][1], p == 2 ? 1u : p - 1);
            EXPECT_EQ(Q[i][d - 1], p == 2 ? 1u : p - 1);
        }
    }
}

TEST(Witt, QPolysMatchTeichmullerAdditionInZp) {
    // omega(x) + omega(y) = sum p^i omega(Q_i(x, y)) in Z_p for x, y in F_p.
    for (auto [p, imax] : {std::pair{2u, 4u}, {3u, 4u}, {5u, 3u}}) {
        auto Q = q_polys(p, imax);
        std::uint64_t mod = 1;
        for (unsigned i = 0; i <= imax; ++i) mod *= p;
        const unsigned k = imax + 1;
        for (std::uint64_t x = 0; x < p; ++x)
            for (std::uint64_t y = 0; y < p; ++y) {
                std::uint64_t rhs = 0, pi = 1;
                for (unsigned i = 0; i <= imax; ++i, pi *= p)
                    rhs = (rhs + pi * omega(eval_mod_p(Q[i], x, y, p), p, mod, k)) % mod;
                EXPECT_EQ((omega(x, p, mod, k) + omega(y, p, mod, k)) % mod, rhs) << p << " " << x << " " << y;
            }
    }
}

TEST(Witt, TeichmullerBasics) {
    auto x = t(3, Rational(1, 2)) + t(3, Rational(2));
    auto X = WittVector::teichmuller(x, 3);
    EXPECT_EQ(witt_add(X, zero_vec(3, 3)), X);
    auto Y = WittVector::teichmuller(t(3, Rational(1, 3), 2), 3);
    EXPECT_EQ(witt_mul(X, Y), WittVector::teichmuller(x * t(3, Rational(1, 3), 2), 3));
    EXPECT_EQ(witt_neg(WittVector::teichmuller(HahnElement::constant(3, 1), 2)),
              WittVector::teichmuller(HahnElement::constant(3, 2), 2));
    EXPECT_THROW(witt_neg(zero_vec(2, 2)), OddPrimeRequired);
}

TEST(Witt, AddingPTimesShifts) {
    std::mt19937_64 rng(8);
    for (unsigned p : {2u, 3u})
        for (int trial = 0; trial < 10; ++trial) {
            const unsigned L = 3;
            auto x = random_witt(rng, p, L, 2);
            auto s = x;
            for (unsigned k = 1; k < p; ++k) s = witt_add(s, x);
            std::vector<HahnElement> shifted{HahnElement(p)};
            for (unsigned i = 0; i + 1 < L; ++i) shifted.push_back(x.coord(i));
            EXPECT_EQ(s, WittVector(p, shifted));
        }
    // [t] + [t] at p = 2
    auto tt = WittVector::teichmuller(t(2, Rational(1)), 2);
    EXPECT_EQ(witt_add(tt, tt), WittVector(2, {HahnElement(2), t(2, Rational(1))}));
}

TEST(Witt, RingAxioms) {
    std::mt19937_64 rng(2026);
    for (unsigned p : {2u, 3u})
        for (int trial = 0; trial < 15; ++trial) {
            auto a = random_witt(rng, p, 3, 3), b = random_witt(rng, p, 3, 3), c = random_witt(rng, p, 3, 3);
            EXPECT_EQ(witt_add(a, b), witt_add(b, a));
            EXPECT_EQ(witt_add(witt_add(a, b), c), witt_add(a, witt_add(b, c)));
            EXPECT_EQ(witt_mul(a, b), witt_mul(b, a));
            EXPECT_EQ(witt_mul(a, witt_add(b, c)), witt_add(witt_mul(a, b), witt_mul(a, c)));
            if (p != 2) EXPECT_EQ(witt_add(a, witt_neg(a)), zero_vec(p, 3));
        }
}

TEST(Witt, MuValuations) {
    auto mu = mu_expansion(3, 1, 3);
    ASSERT_EQ(mu.length(), 3u);
    for (unsigned ell = 0; ell < 3; ++ell) {
        ASSERT_TRUE(mu.coord(ell).valuation().has_value());
        EXPECT_EQ(*mu.coord(ell).valuation(), mu_predicted(3, 1, ell));
        EXPECT_GT(*mu.precision(ell), mu_predicted(3, 1, ell));
    }
    EXPECT_EQ(*mu.coord(2).valuation(), Rational(1, 6));
    auto mu5 = mu_expansion(5, 1, 3);
    EXPECT_EQ(*mu5.coord(1).valuation(), Rational(1, 4));
    EXPECT_EQ(*mu5.coord(2).valuation(), Rational(1, 20));
    EXPECT_THROW(mu_expansion(2, 1, 3), OddPrimeRequired);
}

TEST(Witt, MuSquared) {
    auto mu2 = mu_expansion(3, 2, 5);
    EXPECT_EQ(*mu2.coord(0).valuation(), Rational(3));
    EXPECT_EQ(*mu2.coord(2).valuation(), Rational(1));
    EXPECT_EQ(*mu2.coord(4).valuation(), Rational(1, 3));
}

TEST(Witt, MuModelIndependence) {
    for (unsigned j : {1u, 2u}) {
        const unsigned L = 2 * j + 1;
        auto plain = mu_expansion(3, j, L);
        auto model = mu_expansion(3, j, L, {}, t(3, Rational(3, 2)) + t(3, Rational(2)));
        for (unsigned ell = 0; j * ell < L; ++ell)
            EXPECT_EQ(*model.coord(j * ell).valuation(), *plain.coord(j * ell).valuation());
    }
}
