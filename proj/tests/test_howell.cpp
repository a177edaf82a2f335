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
#include <set>

#include "bkt/howell.hpp"

using namespace bkt;
using W = std::uint64_t;
using Row = std::vector<W>;

namespace {

// Closure of {0} under adding generators: the whole span, by enumeration.
std::set<Row> enumerate_span(const Zmod<W>& z, unsigned n, const std::vector<Row>& gens) {
    std::set<Row> span{Row(n, 0)};
    std::vector<Row> frontier{Row(n, 0)};
    while (!frontier.empty()) {
        std::vector<Row> next;
        for (const auto& v : frontier)
            for (const auto& g : gens) {
                Row w(n);
                for (unsigned c = 0; c < n; ++c) w[c] = z.add(v[c], g[c]);
                if (span.insert(w).second) next.push_back(std::move(w));
            }
        frontier = std::move(next);
    }
    return span;
}

std::vector<Row> all_vectors(const Zmod<W>& z, unsigned n) {
    std::vector<Row> out{Row(n, 0)};
    for (unsigned c = 0; c < n; ++c) {
        std::vector<Row> next;
        for (const auto& v : out)
            for (W x = 0; x < z.modulus(); ++x) {
                Row w = v;
                w[c] = x;
                next.push_back(std::move(w));
            }
        out = std::move(next);
    }
    return out;
}

unsigned long long log_p(unsigned long long x, unsigned p) {
    unsigned long long k = 0;
    while (x > 1) {
        x /= p;
        ++k;
    }
    return k;
}

}  // namespace

TEST(Howell, MembershipAgreesWithEnumeration) {
    std::mt19937_64 rng(2024);
    for (auto [p, N, n] : {std::tuple{2u, 3u, 4u}, {2u, 4u, 3u}, {3u, 2u, 4u}, {3u, 4u, 2u}, {5u, 2u, 3u}}) {
        Zmod<W> z(p, N);
        auto universe = all_vectors(z, n);
        for (int trial = 0; trial < 6; ++trial) {
            std::vector<Row> gens;
            for (unsigned g = 0; g < 1 + rng() % 3; ++g) {
                Row r(n);
                for (auto& x : r) x = (rng() % 3 == 0) ? 0 : z.mul(rng() % z.modulus(), z.pow_p(rng() % N));
                gens.push_back(r);
            }
            HowellForm<W> H(z, n, gens);
            auto span = enumerate_span(z, n, gens);
            for (const auto& v : universe) ASSERT_EQ(H.contains(v), span.count(v) == 1);
            EXPECT_EQ(H.log_size(), log_p(span.size(), p));

            // Preimage under multiplication by p, by definition.
            auto pre = H.preimage_times_p();
            for (const auto& v : universe) {
                Row pv(n);
                for (unsigned c = 0; c < n; ++c) pv[c] = z.mul(v[c], p);
                ASSERT_EQ(pre.contains(v), span.count(pv) == 1);
            }
        }
    }
}

TEST(Howell, FormIsCanonical) {
    Zmod<W> z(3, 3);
    std::vector<Row> g1{{3, 1, 0}, {0, 9, 2}};
    // Same span, different generators.
    std::vector<Row> g2{{6, 2, 0}, {3, 10, 2}, {0, 9, 2}};
    EXPECT_EQ(HowellForm<W>(z, 3, g1), HowellForm<W>(z, 3, g2));
    EXPECT_FALSE(HowellForm<W>(z, 3, g1) == HowellForm<W>(z, 3, {{3, 1, 0}}));
}

TEST(Howell, AnnihilatorRowsAreAdded) {
    // span{(p, 1)} over Z/p^2 contains (0, p) = p * (p, 1).
    Zmod<W> z(2, 2);
    HowellForm<W> H(z, 2, {{2, 1}});
    EXPECT_TRUE(H.contains(Row{0, 2}));
    EXPECT_FALSE(H.contains(Row{0, 1}));
    ASSERT_EQ(H.rows().size(), 2u);
    EXPECT_EQ(H.pivot_col(1), 1u);
    EXPECT_EQ(H.pivot_val(1), 1u);
}

TEST(Howell, ProjectionDropsPrecision) {
    Zmod<W> z(3, 3);
    HowellForm<W> H(z, 3, {{9, 1, 0}});
    auto P = H.project(2, 2);
    EXPECT_TRUE(P.contains(Row{0, 1}));
    EXPECT_EQ(P.zmod().precision(), 2u);
}
