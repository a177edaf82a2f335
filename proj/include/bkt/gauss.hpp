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

#ifndef BKT_GAUSS_HPP
#define BKT_GAUSS_HPP

#include <algorithm>
#include <vector>

#include "bkt/ideal.hpp"
#include "bkt/rational.hpp"

namespace bkt {

struct Line {
    Rational slope;
    Rational intercept;

    Rational at(const Rational& r) const { return slope * r + intercept; }
    friend bool operator==(const Line&, const Line&) = default;
};

/*
 * r -> min over lines on [0, oo). Slopes are naturals for characteristic
 * functions of ideals; h has rational slopes, which the flag records.
 */
class PLFunction {
public:
    struct Piece {
        Rational from;  // piece is valid on [from, next piece's from]
        Line line;
    };

    explicit PLFunction(std::vector<Line> lines, bool natural_slopes = true)
        : lines_(std::move(lines)), natural_(natural_slopes) {
        if (lines_.empty()) lines_.push_back({Rational(0), Rational(0)});
        build_envelope();
    }

    const std::vector<Line>& lines() const { return lines_; }
    bool natural_slopes() const { return natural_; }
    const std::vector<Piece>& pieces() const { return env_; }

    std::vector<Rational> breakpoints() const {
        std::vector<Rational> b;
        for (std::size_t i = 1; i < env_.size(); ++i) b.push_back(env_[i].from);
        return b;
    }

    Rational eval(const Rational& r) const {
        Rational v = lines_.front().at(r);
        for (const auto& l : lines_) v = std::min(v, l.at(r));
        return v;
    }

    const Line& final_line() const { return env_.back().line; }

private:
    void build_envelope() {
        auto cur = *std::min_element(lines_.begin(), lines_.end(), [](const Line& a, const Line& b) {
            return a.intercept != b.intercept ? a.intercept < b.intercept : a.slope < b.slope;
        });
        env_.push_back({Rational(0), cur});
        for (;;) {
            // next line to take over: earliest crossing, flattest on ties
            const Line* next = nullptr;
            Rational at;
            for (const auto& l : lines_) {
                if (l.slope >= cur.slope) continue;
                Rational x = (l.intercept - cur.intercept) / (cur.slope - l.slope);
                if (x < env_.back().from) x = env_.back().from;
                if (!next || x < at || (x == at && l.slope < next->slope)) {
                    next = &l;
                    at = x;
                }
            }
            if (!next) break;
            cur = *next;
            if (at == env_.back().from)
                env_.back().line = cur;
            else
                env_.push_back({at, cur});
        }
    }

    std::vector<Line> lines_;
    bool natural_;
    std::vector<Piece> env_;
};

inline Rational pl_eval(const PLFunction& f, const Rational& r) { return f.eval(r); }

// f <= g on [0, oo): at 0, at every breakpoint, and eventually.
inline bool pl_leq(const PLFunction& f, const PLFunction& g) {
    std::vector<Rational> pts{Rational(0)};
    for (const auto& b : f.breakpoints()) pts.push_back(b);
    for (const auto& b : g.breakpoints()) pts.push_back(b);
    for (const auto& r : pts)
        if (f.eval(r) > g.eval(r)) return false;
    return f.final_line().slope <= g.final_line().slope;
}

inline PLFunction pl_frobenius_rescale(const PLFunction& f, unsigned p) {
    std::vector<Line> out;
    for (const auto& l : f.lines()) out.push_back({l.slope * Rational(p), l.intercept});
    return PLFunction(std::move(out), f.natural_slopes());
}

// Lines sigma/p^n r + n j for n < pieces.
inline PLFunction h_function(unsigned p, unsigned sigma, unsigned j, unsigned pieces) {
    if (sigma == 0) return PLFunction({{Rational(0), Rational(0)}}, false);
    std::vector<Line> out;
    std::int64_t pn = 1;
    for (unsigned n = 0; n < std::max(1u, pieces); ++n, pn *= p)
        out.push_back({Rational(sigma, pn), Rational(static_cast<std::int64_t>(n) * j)});
    return PLFunction(std::move(out), false);
}

// Enough pieces that h agrees with its truncation wherever it can sit below rho.
inline unsigned h_pieces_for(unsigned rho, unsigned j) { return rho / std::max(1u, j) + 2; }

inline PLFunction g_function(unsigned e, unsigned j) {
    return PLFunction({{Rational(static_cast<std::int64_t>(e) * j), Rational(0)}, {Rational(0), Rational(j)}});
}

template <class Int>
Rational v_r_element(const PrecSeries<Int>& x, const Rational& r) {
    const auto& z = x.params()->zmod;
    bool any = false;
    Rational v;
    for (unsigned i = 0; i < x.coeffs().size(); ++i) {
        if (x[i] == 0) continue;
        Rational t = Rational(z.val(x[i])) + Rational(i) * r;
        if (!any || t < v) v = t;
        any = true;
    }
    if (!any) throw ZeroElement();
    return v;
}

template <class Int>
PLFunction f_of_ideal(const CofiniteIdeal<Int>& J) {
    const auto m = hull_exponents(J);
    std::vector<Line> out;
    for (unsigned i = 0; i < m.size(); ++i)
        if (m[i] < J.params()->N()) out.push_back({Rational(i), Rational(m[i])});
    return PLFunction(std::move(out));
}

template <class Int>
unsigned rho_from_f(const CofiniteIdeal<Int>& J, unsigned j) {
    const unsigned p = J.params()->p();
    const Rational v = f_of_ideal(J).eval(Rational(static_cast<std::int64_t>(p) * j, p - 1));
    const unsigned rho = invariants(J).rho;
    if (!is_integer(v) || v != Rational(rho))
        throw StabilizationFailure("f_J(pj/(p-1)) = " + to_string(v) + " but rho = " + std::to_string(rho));
    return rho;
}

}  // namespace bkt

#endif
