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

#include "bkt/bk_ring.hpp"

using namespace bkt;
using W = std::uint64_t;

namespace {

// Integer polynomial product over Z, reduced only at the end.
std::vector<BigInt> schoolbook(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
    std::vector<BigInt> r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k) r[i + k] += a[i] * b[k];
    return r;
}

PrecSeries<W> random_series(const ParamsPtr<W>& rp, std::mt19937_64& rng, unsigned max_deg) {
    std::vector<W> c(rp->M, 0);
    for (unsigned i = 0; i <= max_deg && i < rp->M; ++i) c[i] = rng() % rp->zmod.modulus();
    return PrecSeries<W>(rp, c);
}

}  // namespace

TEST(BkRing, AdditionAndIdentity) {
    auto rp = make_eisenstein<W>(3, 4, 16, 4);
    auto u = PrecSeries<W>::pu(rp, 0, 1);
    auto p = PrecSeries<W>::constant(rp, 3);
    EXPECT_EQ(to_string((u + p) + u), "2*u^1 + 3");
    auto E = PrecSeries<W>::eisenstein(rp);
    EXPECT_EQ(E * PrecSeries<W>::constant(rp, 1), E);
    EXPECT_EQ(to_string(E), "1*u^4 + 3");
}

TEST(BkRing, SquareOfEisensteinMatchesSchoolbook) {
    auto rp = make_eisenstein<W>(3, 4, 16, 4);
    auto E = PrecSeries<W>::eisenstein(rp);
    auto sq = schoolbook({3, 0, 0, 0, 1}, {3, 0, 0, 0, 1});
    std::vector<W> expect(16, 0);
    for (std::size_t i = 0; i < sq.size(); ++i) expect[i] = rp->zmod.from_big(sq[i]);
    EXPECT_EQ((E * E).coeffs(), expect);
    EXPECT_EQ(to_string(E * E), "1*u^8 + 6*u^4 + 9");
}

TEST(BkRing, ProductAgreesWithSchoolbookOnRandomInputs) {
    auto rp = make_eisenstein<W>(5, 6, 12, 3);
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        auto a = random_series(rp, rng, 11), b = random_series(rp, rng, 11);
        std::vector<BigInt> ab(a.coeffs().begin(), a.coeffs().end()), bb(b.coeffs().begin(), b.coeffs().end());
        auto full = schoolbook(ab, bb);
        for (unsigned i = 0; i < rp->M; ++i) ASSERT_EQ((a * b)[i], rp->zmod.from_big(full[i]));
    }
}

TEST(BkRing, RingAxiomsOnRandomTriples) {
    std::mt19937_64 rng(11);
    for (auto [p, N, M] : {std::tuple{2u, 5u, 9u}, {3u, 3u, 7u}, {5u, 8u, 20u}}) {
        auto rp = make_eisenstein<W>(p, N, M, 2);
        for (int trial = 0; trial < 30; ++trial) {
            auto a = random_series(rp, rng, M), b = random_series(rp, rng, M), c = random_series(rp, rng, M);
            EXPECT_EQ((a * b) * c, a * (b * c));
            EXPECT_EQ(a * b, b * a);
            EXPECT_EQ(a * (b + c), a * b + a * c);
            EXPECT_EQ((a + b) - b, a);
        }
    }
}

TEST(BkRing, Frobenius) {
    auto rp = make_eisenstein<W>(3, 4, 16, 4);
    auto x = parse_series<W>("1*u^2 + 3*u^1", rp);
    EXPECT_EQ(to_string(frobenius(x)), "1*u^6 + 3*u^3");
    EXPECT_EQ(frobenius(PrecSeries<W>::constant(rp, 7)), PrecSeries<W>::constant(rp, 7));
    EXPECT_EQ(to_string(frobenius(PrecSeries<W>::eisenstein(rp))), "1*u^12 + 3");
}

TEST(BkRing, FrobeniusIsARingHomomorphismBelowPrecision) {
    auto rp = make_eisenstein<W>(3, 6, 30, 2);
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        // deg a + deg b < M / p keeps the products inside the window.
        auto a = random_series(rp, rng, 4), b = random_series(rp, rng, 4);
        EXPECT_EQ(frobenius(a * b), frobenius(a) * frobenius(b));
        EXPECT_EQ(frobenius(a + b), frobenius(a) + frobenius(b));
    }
}

TEST(BkRing, EisensteinConstruction) {
    auto rp = make_eisenstein<W>(3, 4, 10, 4);
    EXPECT_EQ(rp->E, (std::vector<W>{3, 0, 0, 0, 1}));

    auto rp2 = make_eisenstein<W>(2, 5, 10, std::vector<BigInt>{2, 2, 0, 1});
    EXPECT_EQ(rp2->e, 3u);
    EXPECT_EQ(to_string(PrecSeries<W>::eisenstein(rp2)), "1*u^3 + 2*u^1 + 2");

    EXPECT_THROW(make_eisenstein<W>(3, 4, 10, std::vector<BigInt>{9, 0, 1}), NotEisenstein);
    EXPECT_THROW(make_eisenstein<W>(3, 4, 10, std::vector<BigInt>{3, 1, 1}), NotEisenstein);
    EXPECT_THROW(make_eisenstein<W>(3, 4, 10, std::vector<BigInt>{3, 0, 3}), NotEisenstein);
    EXPECT_THROW(make_eisenstein<W>(4, 4, 10, 2), std::invalid_argument);
    EXPECT_THROW(make_eisenstein<W>(3, 1, 10, 2), std::invalid_argument);
    EXPECT_THROW(make_eisenstein<W>(3, 4, 4, 4), std::invalid_argument);
}

TEST(BkRing, EisensteinShapeModPAndModU) {
    // E = u^e * unit mod p, E = p * unit mod u.
    for (unsigned p : {2u, 3u, 5u})
        for (unsigned e = 1; e <= 6; ++e) {
            auto rp = make_eisenstein<W>(p, 6, 3 * e + 1, e);
            for (unsigned i = 0; i < e; ++i) EXPECT_EQ(rp->E[i] % p, 0u);
            EXPECT_NE(rp->E[e] % p, 0u);
            EXPECT_EQ(rp->zmod.val(rp->E[0]), 1u);
        }
}

TEST(BkRing, MismatchedParamsThrow) {
    auto a = PrecSeries<W>::constant(make_eisenstein<W>(3, 4, 10, 2), 1);
    auto b = PrecSeries<W>::constant(make_eisenstein<W>(3, 5, 10, 2), 1);
    EXPECT_THROW(a + b, MismatchedParams);
    EXPECT_THROW(a * b, MismatchedParams);
}

TEST(BkRing, LiteralGrammar) {
    auto rp = make_eisenstein<W>(3, 4, 10, 4);
    EXPECT_EQ(to_string(parse_series<W>("1*u^4 + 3", rp)), "1*u^4 + 3");
    EXPECT_EQ(to_string(parse_series<W>("-1", rp)), "80");
    EXPECT_EQ(to_string(parse_series<W>("2*u^1+2*u^1", rp)), "4*u^1");
    EXPECT_EQ(to_string(parse_series<W>("1*u^30", rp)), "0");
    EXPECT_THROW(parse_series<W>("u^2", rp), ParseError);
    EXPECT_THROW(parse_series<W>("1*u^", rp), ParseError);
    EXPECT_THROW(parse_series<W>("", rp), ParseError);
}

TEST(BkRing, BigIntegerResidues) {
    // 3^60 overflows a machine word.
    auto rp = make_eisenstein<BigInt>(3, 60, 12, 4);
    auto E = PrecSeries<BigInt>::eisenstein(rp);
    auto big = E.pow(40);
    EXPECT_EQ(big[0], boost::multiprecision::pow(BigInt(3), 40));
    EXPECT_EQ(to_string(E * E), "1*u^8 + 6*u^4 + 9");
    EXPECT_THROW(make_eisenstein<W>(3, 60, 12, 4), std::invalid_argument);
}
