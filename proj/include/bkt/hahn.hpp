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

#ifndef BKT_HAHN_HPP
#define BKT_HAHN_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bkt/errors.hpp"
#include "bkt/rational.hpp"

namespace bkt {

/*
 * Finite sums of c t^q with c in F_p and q >= 0 rational. A cutoff C means
 * only the terms below t^C are known; no cutoff means the element is exact.
 * Exponents are stored as integer numerators over one shared denominator.
 */
class HahnElement {
public:
    struct Term {
        std::int64_t num;
        std::uint32_t coeff;
        friend bool operator==(const Term&, const Term&) = default;
    };

    explicit HahnElement(unsigned p = 2) : p_(p) {}

    static HahnElement monomial(unsigned p, std::int64_t coeff, const Rational& q,
                                std::optional<Rational> cutoff = {}) {
        HahnElement x(p);
        x.den_ = q.denominator();
        const auto c = static_cast<std::uint32_t>(((coeff % static_cast<std::int64_t>(p)) + p) % p);
        if (c) x.terms_.push_back({q.numerator(), c});
        x.cutoff_ = cutoff;
        x.tidy();
        return x;
    }

    static HahnElement constant(unsigned p, std::int64_t c) { return monomial(p, c, Rational(0)); }

    // Build from (exponent, coefficient) pairs in any order.
    static HahnElement from_terms(unsigned p, const std::vector<std::pair<Rational, std::int64_t>>& ts,
                                  std::optional<Rational> cutoff = {}) {
        HahnElement x(p);
        for (const auto& [q, c] : ts) x = x + monomial(p, c, q);
        return x.truncated(cutoff);
    }

    unsigned prime() const { return p_; }
    std::int64_t denominator() const { return den_; }
    const std::vector<Term>& raw_terms() const { return terms_; }
    const std::optional<Rational>& cutoff() const { return cutoff_; }

    std::vector<std::pair<Rational, std::uint32_t>> terms() const {
        std::vector<std::pair<Rational, std::uint32_t>> out;
        for (const auto& t : terms_) out.emplace_back(Rational(t.num, den_), t.coeff);
        return out;
    }

    bool exact() const { return !cutoff_; }
    bool has_terms() const { return !terms_.empty(); }
    bool is_exact_zero() const { return terms_.empty() && !cutoff_; }

    // The valuation, when some term survives below the cutoff.
    std::optional<Rational> valuation() const {
        if (terms_.empty()) return std::nullopt;
        return Rational(terms_.front().num, den_);
    }

    // A lower bound for the valuation; nullopt stands for infinity.
    std::optional<Rational> valuation_lower_bound() const {
        if (!terms_.empty()) return Rational(terms_.front().num, den_);
        return cutoff_;
    }

    HahnElement truncated(std::optional<Rational> c) const {
        HahnElement x = *this;
        if (c && (!x.cutoff_ || *c < *x.cutoff_)) {
            x.cutoff_ = c;
            x.tidy();
        }
        return x;
    }

    friend HahnElement operator+(const HahnElement& a, const HahnElement& b) {
        HahnElement x(a.p_);
        x.den_ = std::lcm(a.den_, b.den_);
        const std::int64_t fa = x.den_ / a.den_, fb = x.den_ / b.den_;
        x.terms_.reserve(a.terms_.size() + b.terms_.size());
        auto i = a.terms_.begin(), j = b.terms_.begin();
        while (i != a.terms_.end() || j != b.terms_.end()) {
            if (j == b.terms_.end() || (i != a.terms_.end() && i->num * fa < j->num * fb)) {
                x.terms_.push_back({i->num * fa, i->coeff});
                ++i;
            } else if (i == a.terms_.end() || j->num * fb < i->num * fa) {
                x.terms_.push_back({j->num * fb, j->coeff});
                ++j;
            } else {
                auto c = (i->coeff + j->coeff) % a.p_;
                if (c) x.terms_.push_back({i->num * fa, c});
                ++i, ++j;
            }
        }
        x.cutoff_ = min_cutoff(a.cutoff_, b.cutoff_);
        x.tidy();
        return x;
    }

    HahnElement operator-() const {
        HahnElement x = *this;
        for (auto& t : x.terms_) t.coeff = (p_ - t.coeff) % p_;
        return x;
    }

    friend HahnElement operator-(const HahnElement& a, const HahnElement& b) { return a + (-b); }

    HahnElement scaled(std::uint32_t c) const {
        c %= p_;
        HahnElement x = *this;
        if (c == 0) {
            x.terms_.clear();
            return x;
        }
        for (auto& t : x.terms_) t.coeff = static_cast<std::uint32_t>((1ULL * t.coeff * c) % p_);
        return x;
    }

    /*
     * Terms of a times b are known below Ca + v(b) and Cb + v(a), using
     * lower bounds for the valuations. Everything is integral, so this is
     * never worse than the smaller cutoff.
     */
    friend HahnElement operator*(const HahnElement& a, const HahnElement& b) {
        if (a.is_exact_zero() || b.is_exact_zero()) return HahnElement(a.p_);
        std::optional<Rational> c;
        if (a.cutoff_) c = *a.cutoff_ + *b.valuation_lower_bound();
        if (b.cutoff_) c = min_cutoff(c, *b.cutoff_ + *a.valuation_lower_bound());

        HahnElement x(a.p_);
        x.den_ = std::lcm(a.den_, b.den_);
        const std::int64_t fa = x.den_ / a.den_, fb = x.den_ / b.den_;
        // numerator bound for the cutoff, in units of 1/den
        std::optional<std::int64_t> lim;
        if (c) lim = ceil(*c * Rational(x.den_));
        std::vector<Term> raw;
        for (const auto& s : a.terms_) {
            const std::int64_t sa = s.num * fa;
            if (lim && sa + (b.terms_.empty() ? 0 : b.terms_.front().num * fb) >= *lim) break;
            for (const auto& t : b.terms_) {
                const std::int64_t e = sa + t.num * fb;
                if (lim && e >= *lim) break;
                raw.push_back({e, static_cast<std::uint32_t>((1ULL * s.coeff * t.coeff) % a.p_)});
            }
        }
        std::sort(raw.begin(), raw.end(), [](const Term& u, const Term& v) { return u.num < v.num; });
        for (std::size_t i = 0; i < raw.size();) {
            std::uint64_t sum = 0;
            std::size_t k = i;
            for (; k < raw.size() && raw[k].num == raw[i].num; ++k) sum += raw[k].coeff;
            if (sum % a.p_) x.terms_.push_back({raw[i].num, static_cast<std::uint32_t>(sum % a.p_)});
            i = k;
        }
        x.cutoff_ = c;
        x.tidy();
        return x;
    }

    // x^{p^k}: exponents scale, coefficients are fixed by Frobenius.
    HahnElement frobenius(unsigned k = 1) const {
        HahnElement x = *this;
        std::int64_t f = 1;
        for (unsigned i = 0; i < k; ++i) f *= p_;
        for (auto& t : x.terms_) t.num *= f;
        if (x.cutoff_) x.cutoff_ = *x.cutoff_ * Rational(f);
        x.tidy();
        return x;
    }

    // x^{1/p^k}
    HahnElement p_root(unsigned k = 1) const {
        HahnElement x = *this;
        std::int64_t f = 1;
        for (unsigned i = 0; i < k; ++i) f *= p_;
        x.den_ *= f;
        if (x.cutoff_) x.cutoff_ = *x.cutoff_ / Rational(f);
        x.tidy();
        return x;
    }

    HahnElement pow(unsigned long long k) const {
        HahnElement result = constant(p_, 1), base = *this;
        // base-p digits: x^{d p^r} = (x^{p^r})^d
        while (k) {
            for (unsigned d = 0; d < k % p_; ++d) result = result * base;
            k /= p_;
            if (k) base = base.frobenius();
        }
        return result;
    }

    friend bool operator==(const HahnElement& a, const HahnElement& b) {
        return a.p_ == b.p_ && a.den_ == b.den_ && a.terms_ == b.terms_ && a.cutoff_ == b.cutoff_;
    }

    // Agreement of the known terms below both cutoffs.
    bool agrees_with(const HahnElement& o) const {
        auto c = min_cutoff(cutoff_, o.cutoff_);
        return truncated(c).terms() == o.truncated(c).terms();
    }

private:
    static std::optional<Rational> min_cutoff(const std::optional<Rational>& a, const std::optional<Rational>& b) {
        if (!a) return b;
        if (!b) return a;
        return std::min(*a, *b);
    }

    // Drop terms at or past the cutoff and shrink the denominator.
    void tidy() {
        if (cutoff_) {
            const Rational c = *cutoff_;
            while (!terms_.empty() && Rational(terms_.back().num, den_) >= c) terms_.pop_back();
        }
        std::int64_t g = den_;
        for (const auto& t : terms_) {
            g = std::gcd(g, t.num);
            if (g == 1) break;
        }
        if (g > 1) {
            den_ /= g;
            for (auto& t : terms_) t.num /= g;
        }
    }

    unsigned p_;
    std::int64_t den_ = 1;
    std::vector<Term> terms_;
    std::optional<Rational> cutoff_;
};

inline std::string to_string(const HahnElement& x) {
    std::string s;
    for (const auto& [q, c] : x.terms()) {
        if (!s.empty()) s += " + ";
        s += std::to_string(c);
        if (q == Rational(1))
            s += "*t";
        else if (q != Rational(0))
            s += "*t^" + (is_integer(q) ? to_string(q) : "(" + to_string(q) + ")");
    }
    if (s.empty()) s = "0";
    if (x.cutoff()) s += " [< " + to_string(*x.cutoff()) + "]";
    return s;
}

}  // namespace bkt

#endif
