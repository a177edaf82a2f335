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

#ifndef BKT_NEWTON_HPP
#define BKT_NEWTON_HPP

#include <algorithm>
#include <optional>
#include <vector>

#include "bkt/witt.hpp"

namespace bkt {

/*
 * Convex non-increasing polygon through its vertices, flat after the last
 * one. `complete` is false when the data came from a finite window of an
 * infinite expansion: points past the window could still pull it down.
 */
struct NewtonPolygon {
    struct Vertex {
        std::int64_t index;
        Rational value;
        friend bool operator==(const Vertex&, const Vertex&) = default;
    };

    std::vector<Vertex> vertices;
    bool complete = true;

    bool empty() const { return vertices.empty(); }

    // Value at x >= first index.
    Rational eval(const Rational& x) const {
        const auto& v = vertices;
        if (x <= Rational(v.front().index)) return v.front().value;
        for (std::size_t i = 1; i < v.size(); ++i)
            if (x <= Rational(v[i].index)) {
                const Rational s = (v[i].value - v[i - 1].value) / Rational(v[i].index - v[i - 1].index);
                return v[i - 1].value + s * (x - Rational(v[i - 1].index));
            }
        return v.back().value;
    }

    Rational slope(std::size_t edge) const {
        return (vertices[edge + 1].value - vertices[edge].value) /
               Rational(vertices[edge + 1].index - vertices[edge].index);
    }

    // Cut at index `upto`, adding a vertex there if it falls inside an edge.
    NewtonPolygon restricted(std::int64_t upto) const {
        NewtonPolygon r;
        r.complete = false;
        for (const auto& v : vertices) {
            if (v.index > upto) {
                if (!r.vertices.empty() && r.vertices.back().index < upto)
                    r.vertices.push_back({upto, eval(Rational(upto))});
                break;
            }
            r.vertices.push_back(v);
        }
        return r;
    }

    friend bool operator==(const NewtonPolygon&, const NewtonPolygon&) = default;
};

/*
 * Lower convex hull of the points, kept up to the first point of minimal
 * value. A monotone chain suffices since indices arrive sorted.
 */
inline NewtonPolygon newt_of_points(const std::vector<std::pair<std::int64_t, Rational>>& pts, bool complete) {
    NewtonPolygon P;
    P.complete = complete;
    if (pts.empty()) return P;
    std::size_t last = 0;
    for (std::size_t i = 1; i < pts.size(); ++i)
        if (pts[i].second < pts[last].second) last = i;
    auto& h = P.vertices;
    for (std::size_t i = 0; i <= last; ++i) {
        const NewtonPolygon::Vertex c{pts[i].first, pts[i].second};
        while (h.size() >= 2) {
            const auto& a = h[h.size() - 2];
            const auto& b = h.back();
            // drop b if it lies on or above the segment a-c
            if ((b.value - a.value) * Rational(c.index - a.index) >= (c.value - a.value) * Rational(b.index - a.index))
                h.pop_back();
            else
                break;
        }
        h.push_back(c);
    }
    return P;
}

/*
 * Polygon of the points (n, v(y_n)). A coordinate known only to be zero below
 * some bound must not be able to reach under the polygon.
 */
inline NewtonPolygon newt_of_witt(const WittVector& y, bool complete = false) {
    std::vector<std::pair<std::int64_t, Rational>> pts;
    for (unsigned n = 0; n < y.length(); ++n)
        if (auto v = y.coord(n).valuation()) pts.emplace_back(n, *v);
    auto P = newt_of_points(pts, complete);
    for (unsigned n = 0; n < y.length(); ++n) {
        const auto& x = y.coord(n);
        if (x.has_terms() || x.exact()) continue;
        if (P.empty() || Rational(n) < Rational(P.vertices.front().index) || *x.cutoff() < P.eval(Rational(n)))
            throw ImpreciseCoordinate("coordinate " + std::to_string(n) + " is only known below " +
                                      to_string(*x.cutoff()));
    }
    return P;
}

/*
 * Infimal convolution: start at the sum of the first vertices and lay the
 * edges of both polygons down in order of slope. An incomplete operand may
 * continue with edges no steeper than its last known one, so the result
 * stops before anything flatter than that.
 */
inline NewtonPolygon np_convolve(const NewtonPolygon& P, const NewtonPolygon& Q) {
    NewtonPolygon R;
    R.complete = P.complete && Q.complete;
    if (P.empty() || Q.empty()) return R;
    struct Edge {
        std::int64_t len;
        Rational slope;
    };
    std::vector<Edge> edges;
    std::optional<Rational> limit;  // edges flatter than this are unknown
    for (const auto* X : {&P, &Q}) {
        for (std::size_t i = 0; i + 1 < X->vertices.size(); ++i)
            edges.push_back({X->vertices[i + 1].index - X->vertices[i].index, X->slope(i)});
        if (!X->complete) {
            const Rational s = X->vertices.size() >= 2 ? X->slope(X->vertices.size() - 2) : Rational(-1000000000);
            limit = limit ? std::min(*limit, s) : s;
        }
    }
    std::stable_sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) { return a.slope < b.slope; });
    R.vertices.push_back({P.vertices.front().index + Q.vertices.front().index,
                          P.vertices.front().value + Q.vertices.front().value});
    for (const auto& e : edges) {
        if (limit && e.slope > *limit) break;
        auto& last = R.vertices.back();
        const NewtonPolygon::Vertex next{last.index + e.len, last.value + e.slope * Rational(e.len)};
        if (R.vertices.size() >= 2) {
            const auto& prev = R.vertices[R.vertices.size() - 2];
            if ((last.value - prev.value) / Rational(last.index - prev.index) == e.slope) {
                last = next;  // collinear: extend
                continue;
            }
        }
        R.vertices.push_back(next);
    }
    return R;
}

inline NewtonPolygon scale_polygon(const NewtonPolygon& P, unsigned j) {
    NewtonPolygon R = P;
    for (auto& v : R.vertices) {
        v.index *= j;
        v.value *= Rational(j);
    }
    return R;
}

/*
 * Checks a product's polygon against the convolution of its factors' on the
 * window: every point on or above, every vertex of the convolution attained.
 */
struct MultiplicativityCheck {
    bool points_above = true;
    bool vertices_attained = true;
    bool ok() const { return points_above && vertices_attained; }
};

inline MultiplicativityCheck check_product_polygon(const WittVector& product, const NewtonPolygon& conv) {
    MultiplicativityCheck r;
    if (conv.empty()) return r;
    for (unsigned n = 0; n < product.length(); ++n) {
        const auto& x = product.coord(n);
        const bool in_range = Rational(n) >= Rational(conv.vertices.front().index);
        if (auto v = x.valuation()) {
            if (!in_range || *v < conv.eval(Rational(n))) r.points_above = false;
        } else if (!x.exact() && in_range && *x.cutoff() < conv.eval(Rational(n))) {
            r.points_above = false;  // cannot certify
        }
    }
    for (const auto& vx : conv.vertices) {
        if (vx.index >= product.length()) break;
        auto v = product.coord(static_cast<unsigned>(vx.index)).valuation();
        if (!v || *v != vx.value) r.vertices_attained = false;
    }
    return r;
}

struct MuLemmaRow {
    unsigned ell;
    unsigned index;
    std::optional<Rational> computed;
    Rational expected;
    Rational known_below;
    bool pass;
};

struct MuLemmaReport {
    unsigned p, j, ell_max, levels;
    Rational budget;
    std::vector<MuLemmaRow> rows;
    bool scaling_ok;          // scale(Newt(mu), j) = Newt(mu^j) on the window
    bool statement_indexing;  // v(x_l) = p / (p^l (p - 1)) for mu itself
    bool shifted_indexing;    // v(x_n) = p / (p^{n-1} (p - 1)) for mu itself
    bool pass() const {
        return scaling_ok && std::all_of(rows.begin(), rows.end(), [](const MuLemmaRow& r) { return r.pass; });
    }
};

inline MuLemmaReport verify_mu_lemma(unsigned p, unsigned j, unsigned ell_max) {
    const unsigned L = j * ell_max + 1;
    MuLemmaReport rep{p, j, ell_max, L, mu_default_budget(p, j, L), {}, true, true, true};
    const auto muj = mu_expansion(p, j, L, rep.budget);
    for (unsigned ell = 0; ell <= ell_max; ++ell) {
        const unsigned n = j * ell;
        MuLemmaRow row{ell, n, muj.coord(n).valuation(), mu_predicted(p, j, ell), *muj.precision(n), false};
        row.pass = row.computed && *row.computed == row.expected && row.known_below > row.expected;
        rep.rows.push_back(row);
    }
    const auto mu = mu_expansion(p, 1, L, rep.budget);
    rep.scaling_ok = scale_polygon(newt_of_witt(mu), j).restricted(L - 1) == newt_of_witt(muj).restricted(L - 1);
    for (unsigned n = 0; n < L; ++n) {
        const auto v = mu.coord(n).valuation();
        rep.statement_indexing = rep.statement_indexing && v && *v == mu_predicted(p, 1, n);
        if (n >= 1) rep.shifted_indexing = rep.shifted_indexing && v && *v == mu_predicted(p, 1, n - 1);
    }
    return rep;
}

}  // namespace bkt

#endif
