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

#ifndef BKT_IDEAL_HPP
#define BKT_IDEAL_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bk_ring.hpp"
#include "errors.hpp"
#include "howell.hpp"

namespace bkt {

/// The Z/p^N-span of {g u^k} inside (Z/p^N)^M: the image of the ideal (gens).
template <class Int>
HowellForm<Int> ideal_span(const std::vector<PrecSeries<Int>>& gens, const ParamsPtr<Int>& params) {
    std::vector<std::vector<Int>> rows;
    for (const auto& g : gens) {
        if (!(*g.params() == *params)) throw MismatchedParams();
        unsigned low = 0;
        while (low < g.size() && g[low] == 0) ++low;
        for (unsigned k = 0; low + k < params->M; ++k) rows.push_back(g.shifted(k).coeffs());
    }
    return HowellForm<Int>(params->zmod, params->M, std::move(rows));
}

/*
 * A cofinite ideal J of the Breuil-Kisin ring, held through its image in
 * (Z/p^N)[u]/(u^M).
 *
 * Construction certifies p^a in J for some a < N and u^b in J for some b < M.
 * Then (p^N, u^M) lies in m * (p^a, u^b), so by Nakayama it lies in J itself,
 * and every membership verdict against the truncated image is a verdict
 * about J. An ideal without such a certificate is rejected.
 */
template <class Int>
class CofiniteIdeal {
   public:
    explicit CofiniteIdeal(std::vector<PrecSeries<Int>> gens) {
        if (gens.empty()) throw std::invalid_argument("an ideal needs at least one generator");
        params_ = gens.front().params();
        basis_.emplace(ideal_span(gens, params_));
        gens_ = std::move(gens);
        certify();
    }

    /// From a span already known to be closed under multiplication by u.
    static CofiniteIdeal from_span(ParamsPtr<Int> params, HowellForm<Int> span) {
        CofiniteIdeal J;
        J.params_ = std::move(params);
        for (const auto& r : span.rows()) J.gens_.emplace_back(J.params_, r);
        if (J.gens_.empty()) J.gens_.emplace_back(J.params_);
        J.basis_.emplace(std::move(span));
        J.certify();
        return J;
    }

    const ParamsPtr<Int>& params() const noexcept { return params_; }
    const std::vector<PrecSeries<Int>>& generators() const noexcept { return gens_; }
    const HowellForm<Int>& basis() const noexcept { return *basis_; }

    /// Minimal K with (p, u)^K contained in J.
    unsigned witness() const noexcept { return witness_; }
    /// Minimal a with p^a in J.
    unsigned p_exponent() const noexcept { return p_exp_; }
    /// Minimal b with u^b in J.
    unsigned u_exponent() const noexcept { return u_exp_; }

    bool contains(const PrecSeries<Int>& x) const {
        if (!(*x.params() == *params_)) throw MismatchedParams();
        return basis_->contains(x.coeffs());
    }

    /// p^a u^b in J; monomials that vanish at this precision lie in J.
    bool contains_monomial(unsigned a, unsigned b) const {
        if (a >= params_->N() || b >= params_->M) return true;
        return contains(PrecSeries<Int>::pu(params_, a, b));
    }

    bool contains(const CofiniteIdeal& other) const { return basis_->contains(other.basis()); }

    bool is_unit() const { return p_exp_ == 0; }

    friend bool operator==(const CofiniteIdeal& a, const CofiniteIdeal& b) { return a.basis() == b.basis(); }

   private:
    CofiniteIdeal() = default;

    void certify() {
        const unsigned N = params_->N(), M = params_->M;
        std::optional<unsigned> a, b;
        for (unsigned k = 0; k < N && !a; ++k)
            if (contains(PrecSeries<Int>::pu(params_, k, 0))) a = k;
        for (unsigned k = 0; k < M && !b; ++k)
            if (contains(PrecSeries<Int>::pu(params_, 0, k))) b = k;
        if (!a || !b)
            throw NotCofiniteAtPrecision("no power of " + std::string(!a ? "p" : "u") +
                                         " below the precision bound lies in the ideal; raise N and M");
        p_exp_ = *a;
        u_exp_ = *b;
        witness_ = 0;
        while (!diagonal_in(witness_)) ++witness_;
    }

    bool diagonal_in(unsigned K) const {
        for (unsigned a = 0; a <= K; ++a)
            if (!contains_monomial(a, K - a)) return false;
        return true;
    }

    ParamsPtr<Int> params_;
    std::vector<PrecSeries<Int>> gens_;
    std::optional<HowellForm<Int>> basis_;
    unsigned p_exp_ = 0;
    unsigned u_exp_ = 0;
    unsigned witness_ = 0;
};

template <class Int>
CofiniteIdeal<Int> monomial_ideal(const ParamsPtr<Int>& params, const std::vector<std::pair<unsigned, unsigned>>& pu) {
    std::vector<PrecSeries<Int>> gens;
    for (auto [a, b] : pu) gens.push_back(PrecSeries<Int>::pu(params, a, b));
    return CofiniteIdeal<Int>(std::move(gens));
}

template <class Int>
CofiniteIdeal<Int> unit_ideal(const ParamsPtr<Int>& params) {
    return CofiniteIdeal<Int>({PrecSeries<Int>::constant(params, 1)});
}

template <class Int>
CofiniteIdeal<Int> ideal_sum(const CofiniteIdeal<Int>& A, const CofiniteIdeal<Int>& B) {
    auto gens = A.generators();
    gens.insert(gens.end(), B.generators().begin(), B.generators().end());
    return CofiniteIdeal<Int>(std::move(gens));
}

/// Truncated image of f * J; well defined whether or not f * J is cofinite.
template <class Int>
HowellForm<Int> scaled_span(const CofiniteIdeal<Int>& J, const PrecSeries<Int>& f) {
    std::vector<PrecSeries<Int>> gens;
    for (const auto& g : J.generators()) gens.push_back(g * f);
    return ideal_span(gens, J.params());
}

/// f * J as a cofinite ideal; throws NotCofiniteAtPrecision when f is not a unit.
template <class Int>
CofiniteIdeal<Int> ideal_scale(const CofiniteIdeal<Int>& J, const PrecSeries<Int>& f) {
    std::vector<PrecSeries<Int>> gens;
    for (const auto& g : J.generators()) gens.push_back(g * f);
    return CofiniteIdeal<Int>(std::move(gens));
}

/// phi(J) * S. Needs p * u_exponent(J) < M so the image certifies itself.
template <class Int>
CofiniteIdeal<Int> frobenius_ideal(const CofiniteIdeal<Int>& J) {
    const auto& rp = *J.params();
    if (static_cast<unsigned long long>(rp.p()) * J.u_exponent() >= rp.M)
        throw InsufficientPrecision("Frobenius image needs M > p * " + std::to_string(J.u_exponent()) +
                                    ", have M = " + std::to_string(rp.M));
    std::vector<PrecSeries<Int>> gens;
    for (const auto& g : J.generators()) gens.push_back(frobenius(g));
    return CofiniteIdeal<Int>(std::move(gens));
}

/*
 * (J : p). Because (p^N, u^M) lies in J, f lies in (J : p) exactly when
 * p f mod (p^N, u^M) lies in the image of J, so the preimage of the image
 * under multiplication by p is the image of (J : p) at the same precision.
 */
template <class Int>
CofiniteIdeal<Int> colon_p(const CofiniteIdeal<Int>& J) {
    if (J.params()->N() < 2) throw InsufficientPrecision("colon by p needs N >= 2");
    return CofiniteIdeal<Int>::from_span(J.params(), J.basis().preimage_times_p());
}

struct IdealInvariants {
    unsigned sigma;  // J + (p) = (p, u^sigma)
    unsigned rho;    // J + (u) = (u, p^rho)
    unsigned long long length;

    friend bool operator==(const IdealInvariants&, const IdealInvariants&) = default;
};

template <class Int>
IdealInvariants invariants(const CofiniteIdeal<Int>& J) {
    const auto& H = J.basis();
    const unsigned p = J.params()->p();
    // rho: smallest valuation of a constant term, i.e. the pivot in column 0.
    const unsigned rho = H.valuation_at(0);

    // sigma: the smallest leading index of the span reduced mod p, which is
    // already attained by one of the spanning rows.
    unsigned sigma = J.params()->M;
    for (const auto& r : H.rows())
        for (unsigned c = 0; c < r.size() && c < sigma; ++c)
            if (r[c] % p != 0) {
                sigma = c;
                break;
            }
    return {sigma, rho, H.log_index()};
}

/*
 * Monomial hull: for each degree i, the smallest p-adic valuation of the
 * u^i coefficient over all of J. That coordinate projection is the ideal of
 * Z/p^N generated by the coordinates of any spanning set, so the minimum over
 * the basis rows is attained.
 */
template <class Int>
std::vector<unsigned> hull_exponents(const CofiniteIdeal<Int>& J) {
    const auto& rp = *J.params();
    std::vector<unsigned> m(rp.M, rp.N());
    for (const auto& r : J.basis().rows())
        for (unsigned i = 0; i < rp.M; ++i) m[i] = std::min(m[i], rp.zmod.val(r[i]));
    return m;
}

template <class Int>
CofiniteIdeal<Int> monomial_hull(const CofiniteIdeal<Int>& J) {
    const auto m = hull_exponents(J);
    std::vector<std::pair<unsigned, unsigned>> mons;
    for (unsigned i = 0; i < m.size(); ++i)
        if (m[i] < J.params()->N()) mons.emplace_back(m[i], i);
    return monomial_ideal(J.params(), mons);
}

struct SituationReport {
    bool cond_A = false;          // E^j J inside phi(J) S
    std::optional<bool> cond_B;   // E^ell phi(J) inside J, when ell is given
};

template <class Int>
SituationReport situation_check(const CofiniteIdeal<Int>& J, unsigned j, std::optional<unsigned> ell = {}) {
    const auto& rp = *J.params();
    const unsigned top = std::max(j, ell.value_or(0));
    if (static_cast<unsigned long long>(rp.e) * top >= rp.M)
        throw InsufficientPrecision("E^" + std::to_string(top) + " is not representable below u^M");
    const auto phiJ = frobenius_ideal(J);
    const auto E = PrecSeries<Int>::eisenstein(J.params());
    SituationReport rep;
    const auto Ej = E.pow(j);
    rep.cond_A = std::all_of(J.generators().begin(), J.generators().end(),
                             [&](const auto& g) { return phiJ.contains(Ej * g); });
    if (ell) {
        const auto El = E.pow(*ell);
        rep.cond_B = std::all_of(J.generators().begin(), J.generators().end(),
                                 [&](const auto& g) { return J.contains(El * frobenius(g)); });
    }
    return rep;
}

}  // namespace bkt

#endif
