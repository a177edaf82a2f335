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

#include "bkt/newton.hpp"

using namespace bkt;
using V = NewtonPolygon::Vertex;

namespace {

HahnElement t(unsigned p, Rational q, std::int64_t c = 1) { return HahnElement::monomial(p, c, q); }

NewtonPolygon poly(std::vector<V> v, bool complete = true) { return NewtonPolygon{std::move(v), complete}; }

// Short random vector: a few coordinates, one or two terms each, the rest zero.
WittVector random_short(std::mt19937_64& rng, unsigned p, unsigned L, unsigned used, const Rational& budget) {
    std::vector<HahnElement> c(L, HahnElement(p));
    for (unsigned i = 0; i < used; ++i) {
        if (rng() % 4 == 0) continue;
        Rational q(static_cast<std::int64_t>(rng() % 7), 1 + rng() % 2);
        c[i] = t(p, q, 1 + rng() % (p - 1));
        if (rng() % 2) c[i] = c[i] + t(p, q + Rational(1 + rng() % 3), 1);
    }
    if (c[0].is_exact_zero() && c[1].is_exact_zero()) c[0] = t(p, Rational(2));
    return WittVector(p, c, budget);
}

}  // namespace

TEST(Newton, Hull) {
    auto P = newt_of_points({{0, Rational(1)}, {1, Rational(1)}, {2, Rational(0)}}, true);
    EXPECT_EQ(P.vertices, (std::vector<V>{{0, Rational(1)}, {2, Rational(0)}}));
    auto T = newt_of_witt(WittVector::teichmuller(t(3, Rational(5, 2)), 3), true);
    EXPECT_EQ(T.vertices, (std::vector<V>{{0, Rational(5, 2)}}));
    EXPECT_EQ(T.eval(Rational(7)), Rational(5, 2));
    // rising points after the minimum are ignored
    auto R = newt_of_points({{0, Rational(2)}, {1, Rational(0)}, {2, Rational(3)}}, true);
    EXPECT_EQ(R.vertices, (std::vector<V>{{0, Rational(2)}, {1, Rational(0)}}));
}

TEST(Newton, MuPolygon) {
    auto P = newt_of_witt(mu_expansion(3, 1, 4));
    EXPECT_FALSE(P.complete);
    EXPECT_EQ(P.vertices, (std::vector<V>{{0, Rational(3, 2)}, {1, Rational(1, 2)}, {2, Rational(1, 6)},
                                          {3, Rational(1, 18)}}));
}

TEST(Newton, ImpreciseCoordinateIsRejected) {
    std::vector<HahnElement> c{t(3, Rational(1)), HahnElement(3).truncated(Rational(1, 2))};
    EXPECT_THROW(newt_of_witt(WittVector(3, c)), ImpreciseCoordinate);
    std::vector<HahnElement> ok{t(3, Rational(1)), HahnElement(3).truncated(Rational(2))};
    EXPECT_NO_THROW(newt_of_witt(WittVector(3, ok)));
}

TEST(Newton, Convolution) {
    EXPECT_EQ(np_convolve(poly({{0, Rational(2)}}), poly({{0, Rational(3)}})).vertices,
              (std::vector<V>{{0, Rational(5)}}));
    auto P = poly({{0, Rational(3)}, {1, Rational(1)}, {3, Rational(0)}});
    EXPECT_EQ(np_convolve(P, poly({{0, Rational(0)}})), P);
    auto Q = poly({{0, Rational(1)}, {2, Rational(0)}});
    // slopes -2, -1/2, -1/2 -> one merged edge of length 4
    EXPECT_EQ(np_convolve(P, Q).vertices, (std::vector<V>{{0, Rational(4)}, {1, Rational(2)}, {5, Rational(0)}}));
    // incomplete operand: nothing at or flatter than its last known slope
    auto Pi = poly({{0, Rational(3)}, {1, Rational(1)}}, false);
    EXPECT_EQ(np_convolve(Pi, Q).vertices, (std::vector<V>{{0, Rational(4)}, {1, Rational(2)}}));
    EXPECT_FALSE(np_convolve(Pi, Q).complete);
}

TEST(Newton, Scaling) {
    auto P = newt_of_witt(mu_expansion(3, 1, 3));
    EXPECT_EQ(scale_polygon(P, 1), P);
    EXPECT_EQ(scale_polygon(P, 2).vertices,
              (std::vector<V>{{0, Rational(3)}, {2, Rational(1)}, {4, Rational(1, 3)}}));
    EXPECT_EQ(scale_polygon(poly({{0, Rational(2)}}), 3).vertices, (std::vector<V>{{0, Rational(6)}}));
    // mu * mu, computed independently, agrees with both
    auto mu2 = newt_of_witt(mu_expansion(3, 2, 5)).restricted(4);
    EXPECT_EQ(mu2, scale_polygon(P, 2).restricted(4));
    EXPECT_EQ(mu2, np_convolve(P, P).restricted(4));
}

TEST(Newton, MultiplicativityOnShortVectors) {
    std::mt19937_64 rng(11);
    for (unsigned p : {2u, 3u})
        for (int trial = 0; trial < 25; ++trial) {
            const unsigned L = 5;
            const Rational B(30 * 81);
            auto y = random_short(rng, p, L, 2, B), z = random_short(rng, p, L, 2, B);
            auto conv = np_convolve(newt_of_witt(y, true), newt_of_witt(z, true));
            auto prod = witt_mul(y, z);
            auto chk = check_product_polygon(prod, conv);
            EXPECT_TRUE(chk.ok()) << "p=" << p << " trial=" << trial;
            EXPECT_EQ(newt_of_witt(prod, true), conv);
        }
}

TEST(Newton, TeichmullerUnitInvariance) {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 20; ++trial) {
        auto y = random_short(rng, 3, 4, 3, Rational(400));
        auto unit = WittVector::teichmuller(HahnElement::constant(3, 2) + t(3, Rational(1, 2)), 4, Rational(400));
        EXPECT_EQ(newt_of_witt(witt_mul(unit, y), true), newt_of_witt(y, true));
    }
}

TEST(Newton, MuLemma) {
    auto r = verify_mu_lemma(3, 1, 2);
    EXPECT_TRUE(r.pass());
    EXPECT_EQ(*r.rows[2].computed, Rational(1, 6));
    EXPECT_TRUE(r.statement_indexing);
    EXPECT_FALSE(r.shifted_indexing);
    auto r3 = verify_mu_lemma(3, 3, 2);
    EXPECT_TRUE(r3.pass());
    EXPECT_EQ(r3.rows[1].index, 3u);
    EXPECT_EQ(*r3.rows[1].computed, Rational(3, 2));
    EXPECT_EQ(*r3.rows[2].computed, Rational(1, 2));
    auto r5 = verify_mu_lemma(5, 1, 2);
    EXPECT_TRUE(r5.pass());
    EXPECT_EQ(*r5.rows[1].computed, Rational(1, 4));
}
