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

#ifndef BKT_WITT_HPP
#define BKT_WITT_HPP

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "bkt/hahn.hpp"

namespace bkt {

/*
 * Q_i(X, Y) mod p, homogeneous of degree p^i, stored by the power of X:
 * coeffs[i][k] multiplies X^k Y^{p^i - k}.
 */
struct QPolys {
    unsigned p = 2;
    std::vector<std::vector<std::uint32_t>> coeffs;

    unsigned levels() const { return static_cast<unsigned>(coeffs.size()); }
    const std::vector<std::uint32_t>& operator[](unsigned i) const { return coeffs.at(i); }
};

namespace detail {

using Poly = std::vector<std::uint64_t>;

inline Poly poly_mul(const Poly& a, const Poly& b, std::uint64_t mod) {
    Poly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t k = 0; k < b.size(); ++k) c[i + k] = (c[i + k] + a[i] * b[k]) % mod;
    }
    return c;
}

inline Poly poly_pow(Poly a, std::uint64_t k, std::uint64_t mod) {
    Poly r{1 % mod};
    while (k) {
        if (k & 1) r = poly_mul(r, a, mod);
        k >>= 1;
        if (k) a = poly_mul(a, a, mod);
    }
    return r;
}

constexpr std::uint64_t kMaxQDegree = 2187;

}  // namespace detail

/*
 * p^n Q_n = X^{p^n} + Y^{p^n} - sum_{i<n} p^i Q_i^{p^{n-i}}, worked mod p^{n+1}.
 * Any lift of Q_i mod p gives Q_i^{p^{n-i}} correctly mod p^{n-i+1}, which is
 * all the recursion needs.
 */
inline QPolys q_polys(unsigned p, unsigned i_max) {
    std::uint64_t d = 1;
    for (unsigned i = 0; i < i_max; ++i) {
        d *= p;
        if (d > detail::kMaxQDegree) throw BudgetExceeded("Q_i degree above the polynomial budget");
    }
    QPolys Q;
    Q.p = p;
    Q.coeffs.push_back({1, 1});
    std::uint64_t pn = 1;
    for (unsigned n = 1; n <= i_max; ++n) {
        pn *= p;
        const std::uint64_t mod = pn * p;
        detail::Poly s(pn + 1, 0);
        s[0] = s[pn] = 1;
        std::uint64_t pi = 1, deg = pn;
        for (unsigned i = 0; i < n; ++i) {
            detail::Poly lift(Q.coeffs[i].begin(), Q.coeffs[i].end());
            auto t = detail::poly_pow(lift, deg, mod);  // deg = p^{n-i}
            deg /= p;
            for (std::size_t k = 0; k < s.size(); ++k) s[k] = (s[k] + mod - (pi * t[k]) % mod) % mod;
            pi *= p;
        }
        std::vector<std::uint32_t> q(pn + 1);
        for (std::size_t k = 0; k < s.size(); ++k) {
            if (s[k] % pn != 0) throw Error("Q_n recursion: coefficient not divisible by p^n");
            q[k] = static_cast<std::uint32_t>((s[k] / pn) % p);
        }
        Q.coeffs.push_back(std::move(q));
    }
    return Q;
}

// Shared read-only table, grown on demand.
inline std::shared_ptr<const QPolys> q_table(unsigned p, unsigned i_max) {
    static std::mutex mu;
    static std::map<unsigned, std::shared_ptr<const QPolys>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[p];
    if (!slot || slot->levels() <= i_max) slot = std::make_shared<const QPolys>(q_polys(p, i_max));
    return slot;
}

/*
 * Q(a, b) for a homogeneous Q given by coefficients, dropping every monomial
 * whose valuation is provably at least `cut`.
 */
inline HahnElement q_eval(const std::vector<std::uint32_t>& q, const HahnElement& a, const HahnElement& b,
                          std::optional<Rational> cut) {
    const unsigned p = a.prime();
    const std::size_t d = q.size() - 1;
    if (a.is_exact_zero() || b.is_exact_zero()) {
        // Q_i(X, 0) and Q_i(0, Y) vanish for i > 0; only the linear case survives.
        if (d == 1) return (a.scaled(q[1]) + b.scaled(q[0])).truncated(cut);
        return HahnElement(p);
    }
    const Rational va = *a.valuation_lower_bound(), vb = *b.valuation_lower_bound();
    auto beyond = [&](const Rational& v) { return cut && v >= *cut; };

    std::vector<HahnElement> apow{HahnElement::constant(p, 1).truncated(cut)}, bpow{apow.front()};
    auto power = [&](std::vector<HahnElement>& pw, const HahnElement& x, std::size_t k) -> const HahnElement& {
        while (pw.size() <= k) pw.push_back((pw.back() * x).truncated(cut));
        return pw[k];
    };

    HahnElement sum(p);
    sum = sum.truncated(cut);
    for (std::size_t k = 0; k <= d; ++k) {
        if (q[k] == 0) continue;
        if (beyond(va * Rational(static_cast<std::int64_t>(k)) + vb * Rational(static_cast<std::int64_t>(d - k))))
            continue;
        sum = sum + (power(apow, a, k) * power(bpow, b, d - k)).truncated(cut).scaled(q[k]);
    }
    return sum;
}

/*
 * Teichmuller expansion sum p^i [x_i], truncated at length L. A budget B
 * means coordinate i is only tracked below t^{B / p^i}, because the carries
 * into level i are p^k-th roots of data from level i - k.
 */
class WittVector {
public:
    WittVector(unsigned p, std::vector<HahnElement> coords, std::optional<Rational> budget = {})
        : p_(p), x_(std::move(coords)), budget_(budget) {
        if (x_.empty()) throw Error("Witt vectors need at least one coordinate");
        for (unsigned n = 0; n < x_.size(); ++n)
            if (!x_[n].is_exact_zero()) x_[n] = x_[n].truncated(level_cutoff(n));
    }

    static WittVector teichmuller(const HahnElement& x, unsigned L, std::optional<Rational> budget = {}) {
        std::vector<HahnElement> c(L, HahnElement(x.prime()));
        c[0] = x;
        return WittVector(x.prime(), std::move(c), budget);
    }

    unsigned prime() const { return p_; }
    unsigned length() const { return static_cast<unsigned>(x_.size()); }
    const std::vector<HahnElement>& coords() const { return x_; }
    const HahnElement& coord(unsigned n) const { return x_.at(n); }
    const std::optional<Rational>& budget() const { return budget_; }

    std::optional<Rational> level_cutoff(unsigned n) const {
        if (!budget_) return std::nullopt;
        Rational c = *budget_;
        for (unsigned i = 0; i < n; ++i) c /= Rational(p_);
        return c;
    }

    // Coordinate n is exact below this valuation; nullopt if exact.
    std::optional<Rational> precision(unsigned n) const { return x_.at(n).cutoff(); }

    friend bool operator==(const WittVector& a, const WittVector& b) {
        return a.p_ == b.p_ && a.x_ == b.x_ && a.budget_ == b.budget_;
    }

private:
    unsigned p_;
    std::vector<HahnElement> x_;
    std::optional<Rational> budget_;
};

namespace detail {

inline void check_compatible(const WittVector& a, const WittVector& b) {
    if (a.prime() != b.prime() || a.length() != b.length())
        throw Error("Witt vectors of different prime or length");
}

inline std::optional<Rational> min_budget(const std::optional<Rational>& a, const std::optional<Rational>& b) {
    if (!a) return b;
    if (!b) return a;
    return std::min(*a, *b);
}

/*
 * Sum of p^n [y] over all y in bucket n. Folding y into the running sum s at
 * level n leaves s + y there and carries [Q_m(s, y)^{1/p^m}] to level n + m.
 */
inline WittVector fold_buckets(unsigned p, std::vector<std::vector<HahnElement>> buckets,
                               std::optional<Rational> budget) {
    const unsigned L = static_cast<unsigned>(buckets.size());
    WittVector shape = WittVector::teichmuller(HahnElement(p), L, budget);
    const auto Q = q_table(p, L - 1);
    std::vector<HahnElement> out(L, HahnElement(p));
    for (unsigned n = 0; n < L; ++n) {
        const auto cut = shape.level_cutoff(n);
        bool started = false;
        HahnElement s(p);
        for (auto& y : buckets[n]) {
            if (y.is_exact_zero()) continue;
            if (!started) {
                s = std::move(y);
                started = true;
                continue;
            }
            const Rational vs = *s.valuation_lower_bound(), vy = *y.valuation_lower_bound();
            const Rational lo = std::min(vs, vy), hi = std::max(vs, vy);
            std::int64_t pm = 1;
            for (unsigned m = 1; n + m < L; ++m) {
                pm *= p;
                // every monomial of Q_m has valuation >= (p^m - 1) lo + hi
                if (cut && Rational(pm - 1) * lo + hi >= *cut) break;
                auto c = q_eval((*Q)[m], s, y, cut).p_root(m);
                if (!c.is_exact_zero()) buckets[n + m].push_back(std::move(c));
            }
            s = (s + y).truncated(cut);
        }
        if (started) out[n] = std::move(s);
    }
    return WittVector(p, std::move(out), budget);
}

}  // namespace detail

inline WittVector witt_add(const WittVector& a, const WittVector& b) {
    detail::check_compatible(a, b);
    std::vector<std::vector<HahnElement>> buckets(a.length());
    for (unsigned n = 0; n < a.length(); ++n) buckets[n] = {a.coord(n), b.coord(n)};
    return detail::fold_buckets(a.prime(), std::move(buckets), detail::min_budget(a.budget(), b.budget()));
}

// p^i [a_i] p^k [b_k] = p^{i+k} [a_i b_k]
inline WittVector witt_mul(const WittVector& a, const WittVector& b) {
    detail::check_compatible(a, b);
    const unsigned L = a.length();
    const auto budget = detail::min_budget(a.budget(), b.budget());
    const WittVector shape = WittVector::teichmuller(HahnElement(a.prime()), L, budget);
    std::vector<std::vector<HahnElement>> buckets(L);
    for (unsigned i = 0; i < L; ++i)
        for (unsigned k = 0; i + k < L; ++k) {
            if (a.coord(i).is_exact_zero() || b.coord(k).is_exact_zero()) continue;
            buckets[i + k].push_back((a.coord(i) * b.coord(k)).truncated(shape.level_cutoff(i + k)));
        }
    return detail::fold_buckets(a.prime(), std::move(buckets), budget);
}

// For odd p, -1 is the Teichmuller lift [-1], so negation is coordinatewise.
inline WittVector witt_neg(const WittVector& a) {
    if (a.prime() == 2) throw OddPrimeRequired();
    std::vector<HahnElement> c;
    for (const auto& x : a.coords()) c.push_back(-x);
    return WittVector(a.prime(), std::move(c), a.budget());
}

inline WittVector witt_sub(const WittVector& a, const WittVector& b) { return witt_add(a, witt_neg(b)); }

inline WittVector witt_pow(const WittVector& a, unsigned j) {
    WittVector r = a;
    for (unsigned k = 1; k < j; ++k) r = witt_mul(r, a);
    return r;
}

// Valuation of the j-th power's coordinate j l predicted for mu.
inline Rational mu_predicted(unsigned p, unsigned j, unsigned ell) {
    std::int64_t pl = 1;
    for (unsigned i = 0; i < ell; ++i) pl *= p;
    return Rational(static_cast<std::int64_t>(j) * p, pl * (p - 1));
}

/*
 * Smallest sensible budget doubled: level j l must be known past the
 * predicted valuation there, and level n sits at budget / p^n.
 */
inline Rational mu_default_budget(unsigned p, unsigned j, unsigned L) {
    Rational need(0);
    for (unsigned ell = 0; j * ell < L; ++ell) {
        Rational v = mu_predicted(p, j, ell);
        for (unsigned i = 0; i < j * ell; ++i) v *= Rational(p);
        need = std::max(need, v);
    }
    return need * Rational(2);
}

/*
 * mu = [eps] - 1 with eps = 1 + t^{p/(p-1)} (or 1 + the supplied model of
 * eps - 1), then mu^j by repeated multiplication.
 */
inline WittVector mu_expansion(unsigned p, unsigned j, unsigned L, std::optional<Rational> budget = {},
                               std::optional<HahnElement> eps_minus_one = {}) {
    if (p == 2) throw OddPrimeRequired();
    if (L == 0) throw Error("mu expansion needs at least one level");
    const Rational B = budget ? *budget : mu_default_budget(p, std::max(1u, j), L);
    const HahnElement em1 = eps_minus_one ? *eps_minus_one
                                          : HahnElement::monomial(p, 1, Rational(p, p - 1));
    const auto eps = HahnElement::constant(p, 1) + em1;
    const auto mu = witt_add(WittVector::teichmuller(eps, L, B),
                             witt_neg(WittVector::teichmuller(HahnElement::constant(p, 1), L, B)));
    return witt_pow(mu, std::max(1u, j));
}

}  // namespace bkt

#endif
