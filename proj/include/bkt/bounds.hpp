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

#ifndef BKT_BOUNDS_HPP
#define BKT_BOUNDS_HPP

#include <algorithm>
#include <optional>

#include "bkt/ideal.hpp"
#include "bkt/rational.hpp"

namespace bkt {

/*
 * n is the least natural number with e j < p^n (p - 1). When n = 0 we have
 * sigma = 0, so J contains a unit and every bound collapses to 0.
 */
struct BoundInputs {
    unsigned p, e, j, n;

    BoundInputs(unsigned p_, unsigned e_, unsigned j_) : p(p_), e(e_), j(j_), n(0) {
        const unsigned long long ej = 1ULL * e * j;
        unsigned long long pn = 1;
        while (ej >= pn * (p - 1)) {
            pn *= p;
            ++n;
        }
    }

    unsigned long long sigma_max() const { return 1ULL * e * j / (p - 1); }
};

namespace detail {
inline unsigned long long ipow(unsigned long long b, unsigned k) {
    unsigned long long r = 1;
    while (k--) r *= b;
    return r;
}
}  // namespace detail

// Smallest c with p^c in (u^a, E^b). Needs a < M, e b < M and N above ceil(a/e) + b.
template <class Int>
unsigned c_exact(unsigned a, unsigned b, const ParamsPtr<Int>& params) {
    const auto& rp = *params;
    if (a == 0 || b == 0) return 0;
    if (a >= rp.M || 1ULL * rp.e * b >= rp.M)
        throw InsufficientPrecision("c(a, b) needs a < M and e b < M");
    const auto span = ideal_span<Int>({PrecSeries<Int>::pu(params, 0, a), PrecSeries<Int>::eisenstein(params).pow(b)},
                                      params);
    // p^c lies in the span iff the column-0 entry of the canonical form divides it.
    for (unsigned c = 0; c < rp.N(); ++c)
        if (span.contains(PrecSeries<Int>::pu(params, c, 0).coeffs())) return c;
    throw InsufficientPrecision("no power of p below p^N lies in (u^a, E^b)");
}

// Same, at a precision chosen large enough for the answer.
template <class Int = std::uint64_t>
unsigned c_exact(unsigned p, unsigned e, unsigned a, unsigned b, const std::vector<BigInt>& E = {}) {
    if (a == 0 || b == 0) return 0;
    const unsigned M = std::max<unsigned>(a, e * b) + 1;
    const unsigned N = (a + e - 1) / e + b + 2;
    auto params = E.empty() ? make_eisenstein<Int>(p, N, M, e) : make_eisenstein<Int>(p, N, M, E);
    return c_exact(a, b, params);
}

inline unsigned c_estimate(unsigned a, unsigned b, unsigned e) {
    if (b == 0) return 0;
    return (a + e - 1) / e + b - 1;
}

inline unsigned long long rho_bound_argument_one(unsigned p, unsigned e, unsigned j) {
    const BoundInputs in(p, e, j);
    if (in.n == 0) return 0;
    unsigned long long s = 0, pi = 1;
    for (unsigned i = 1; i < in.n; ++i) {
        pi *= p;
        s += pi / e;
    }
    return s + (in.sigma_max() + 1) / e + 1ULL * in.n * j;
}

inline Rational rho_bound_argument_two(unsigned p, unsigned e, unsigned j, std::optional<unsigned> sigma = {}) {
    const BoundInputs in(p, e, j);
    if (in.n == 0) return Rational(0);
    const auto s = static_cast<std::int64_t>(sigma ? *sigma : in.sigma_max());
    const auto den = static_cast<std::int64_t>(detail::ipow(p, in.n - 1) * (p - 1));
    return (Rational(s, den) + Rational(in.n)) * Rational(j);
}

inline unsigned long long d_bound(unsigned p, unsigned e, unsigned j) {
    if (j == 0) return 0;
    return std::min<unsigned long long>(rho_bound_argument_one(p, e, j),
                                        static_cast<unsigned long long>(floor(rho_bound_argument_two(p, e, j))));
}

// Least n making the j = 1 bound applicable, plus one when p = 2.
inline unsigned j1_special(unsigned p, unsigned e) {
    unsigned n = 0;
    unsigned long long pn = 1;
    if (p == 2) {
        while (e >= pn) {
            pn *= 2;
            ++n;
        }
        return n + 1;
    }
    while (e >= pn * (p - 1)) {
        pn *= p;
        ++n;
    }
    return n;
}

inline unsigned long long crys_constant(unsigned p, unsigned e, unsigned i) {
    return 2 * d_bound(p, e, i - 1) + d_bound(p, e, i);
}

struct BoundednessReport {
    unsigned long long exponent;     // (rho + max(j, ell)) sigma
    bool p_power_in_J;
    unsigned long long length;
    unsigned long long length_bound;  // (rho + max(j, ell)) sigma^2
    bool length_ok;
    bool diagonal_in_J;              // (u, p)^{length_bound} inside J

    bool all() const { return p_power_in_J && length_ok && diagonal_in_J; }
};

/*
 * Monomials past the truncation are members: certification already put
 * p^a and u^b with a < N, b < M into J.
 */
template <class Int>
BoundednessReport verify_boundedness(const CofiniteIdeal<Int>& J, unsigned j, unsigned ell) {
    const auto inv = invariants(J);
    const unsigned long long t = inv.rho + std::max(j, ell);
    BoundednessReport r{};
    r.exponent = t * inv.sigma;
    r.length_bound = t * inv.sigma * inv.sigma;
    r.length = inv.length;
    r.length_ok = r.length <= r.length_bound;
    const unsigned N = J.params()->N(), M = J.params()->M;
    r.p_power_in_J = J.contains_monomial(static_cast<unsigned>(std::min<unsigned long long>(r.exponent, N)), 0);
    r.diagonal_in_J = true;
    // Only a < N and b < M need checking.
    for (unsigned long long a = 0; a < N && a <= r.length_bound && r.diagonal_in_J; ++a) {
        const unsigned long long b = r.length_bound - a;
        if (b < M) r.diagonal_in_J = J.contains_monomial(static_cast<unsigned>(a), static_cast<unsigned>(b));
    }
    return r;
}

}  // namespace bkt

#endif
