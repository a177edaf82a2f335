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

#ifndef BKT_BK_RING_HPP
#define BKT_BK_RING_HPP

#include <algorithm>
#include <cctype>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "zmod.hpp"

namespace bkt {

/*
 * The truncated Breuil-Kisin ring (Z/p^N)[u]/(u^M) over the residue field F_p,
 * together with a fixed Eisenstein polynomial E of degree e.
 */
template <class Int>
struct RingParams {
    Zmod<Int> zmod;
    unsigned M;
    unsigned e;
    std::vector<Int> E;  // coefficient of u^i at index i, size e + 1

    unsigned p() const noexcept { return zmod.prime(); }
    unsigned N() const noexcept { return zmod.precision(); }

    friend bool operator==(const RingParams& a, const RingParams& b) {
        return a.zmod == b.zmod && a.M == b.M && a.e == b.e && a.E == b.E;
    }
};

template <class Int>
using ParamsPtr = std::shared_ptr<const RingParams<Int>>;

namespace detail {

template <class Int>
void check_eisenstein(const RingParams<Int>& rp) {
    const auto& z = rp.zmod;
    if (rp.E.size() != rp.e + 1) throw NotEisenstein("E must have exactly e + 1 coefficients");
    if (!z.is_unit(rp.E[rp.e])) throw NotEisenstein("leading coefficient of E is not a unit");
    if (z.val(rp.E[0]) != 1)
        throw NotEisenstein("constant term of E must have p-adic valuation exactly 1, got " +
                            std::to_string(z.val(rp.E[0])));
    for (unsigned i = 1; i < rp.e; ++i)
        if (z.val(rp.E[i]) == 0) throw NotEisenstein("coefficient of u^" + std::to_string(i) + " is not divisible by p");
}

template <class Int>
ParamsPtr<Int> finish_params(RingParams<Int> rp) {
    if (rp.N() < 2) throw std::invalid_argument("p-adic precision N must exceed 1");
    if (rp.e < 1) throw std::invalid_argument("Eisenstein degree e must be at least 1");
    if (rp.e >= rp.M) throw std::invalid_argument("u-adic precision M must exceed e");
    check_eisenstein(rp);
    return std::make_shared<const RingParams<Int>>(std::move(rp));
}

}  // namespace detail

/// Default choice E = u^e + p.
template <class Int>
ParamsPtr<Int> make_eisenstein(unsigned p, unsigned N, unsigned M, unsigned e) {
    RingParams<Int> rp{Zmod<Int>(p, N), M, e, {}};
    rp.E.assign(e + 1, Int(0));
    rp.E[0] = rp.zmod.from_signed(p);
    rp.E[e] = rp.zmod.add(rp.E[e], Int(1));
    return detail::finish_params(std::move(rp));
}

/// Custom coefficients, lowest degree first; e is deduced from their count.
template <class Int>
ParamsPtr<Int> make_eisenstein(unsigned p, unsigned N, unsigned M, const std::vector<BigInt>& coeffs) {
    if (coeffs.size() < 2) throw NotEisenstein("E needs degree at least 1");
    RingParams<Int> rp{Zmod<Int>(p, N), M, static_cast<unsigned>(coeffs.size() - 1), {}};
    for (const auto& c : coeffs) rp.E.push_back(rp.zmod.from_big(c));
    return detail::finish_params(std::move(rp));
}

/// An element of the truncated ring: exactly M residues, coefficient of u^i at index i.
template <class Int>
class PrecSeries {
   public:
    explicit PrecSeries(ParamsPtr<Int> params) : params_(std::move(params)), c_(params_->M, Int(0)) {}
    PrecSeries(ParamsPtr<Int> params, std::vector<Int> coeffs) : params_(std::move(params)), c_(std::move(coeffs)) {
        c_.resize(params_->M, Int(0));
    }

    static PrecSeries monomial(ParamsPtr<Int> params, const Int& c, unsigned deg) {
        PrecSeries s(std::move(params));
        if (deg < s.c_.size()) s.c_[deg] = s.zmod().from_big(BigInt(c));
        return s;
    }
    static PrecSeries constant(ParamsPtr<Int> params, long long c) {
        PrecSeries s(std::move(params));
        s.c_[0] = s.zmod().from_signed(c);
        return s;
    }
    /// p^a u^b
    static PrecSeries pu(ParamsPtr<Int> params, unsigned a, unsigned b) {
        PrecSeries s(std::move(params));
        if (b < s.c_.size()) s.c_[b] = s.zmod().pow_p(a);
        return s;
    }
    static PrecSeries eisenstein(ParamsPtr<Int> params) {
        std::vector<Int> c = params->E;
        return PrecSeries(std::move(params), std::move(c));
    }

    const ParamsPtr<Int>& params() const noexcept { return params_; }
    const Zmod<Int>& zmod() const noexcept { return params_->zmod; }
    unsigned size() const noexcept { return static_cast<unsigned>(c_.size()); }
    const std::vector<Int>& coeffs() const noexcept { return c_; }
    const Int& operator[](unsigned i) const { return c_[i]; }

    bool is_zero() const {
        return std::all_of(c_.begin(), c_.end(), [](const Int& x) { return x == 0; });
    }
    /// Index of the highest nonzero coefficient, or -1.
    int degree() const {
        for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i)
            if (c_[i] != 0) return i;
        return -1;
    }

    PrecSeries& operator+=(const PrecSeries& o) {
        check(o);
        for (unsigned i = 0; i < size(); ++i) c_[i] = zmod().add(c_[i], o.c_[i]);
        return *this;
    }
    PrecSeries& operator-=(const PrecSeries& o) {
        check(o);
        for (unsigned i = 0; i < size(); ++i) c_[i] = zmod().sub(c_[i], o.c_[i]);
        return *this;
    }
    PrecSeries operator-() const {
        PrecSeries r = *this;
        for (auto& x : r.c_) x = zmod().neg(x);
        return r;
    }
    PrecSeries scaled(const Int& s) const {
        PrecSeries r = *this;
        for (auto& x : r.c_) x = zmod().mul(x, s);
        return r;
    }
    /// Multiplication by u^k, dropping degrees >= M.
    PrecSeries shifted(unsigned k) const {
        PrecSeries r(params_);
        for (unsigned i = 0; i + k < size(); ++i) r.c_[i + k] = c_[i];
        return r;
    }

    friend PrecSeries operator+(PrecSeries a, const PrecSeries& b) { return a += b; }
    friend PrecSeries operator-(PrecSeries a, const PrecSeries& b) { return a -= b; }
    friend PrecSeries operator*(const PrecSeries& a, const PrecSeries& b) {
        a.check(b);
        const auto& z = a.zmod();
        const unsigned M = a.size();
        PrecSeries r(a.params_);
        for (unsigned i = 0; i < M; ++i) {
            if (a.c_[i] == 0) continue;
            for (unsigned k = 0; i + k < M; ++k) {
                if (b.c_[k] == 0) continue;
                r.c_[i + k] = z.add(r.c_[i + k], z.mul(a.c_[i], b.c_[k]));
            }
        }
        return r;
    }
    PrecSeries& operator*=(const PrecSeries& o) { return *this = *this * o; }

    PrecSeries pow(unsigned k) const {
        PrecSeries r = constant(params_, 1), b = *this;
        while (k) {
            if (k & 1) r *= b;
            b *= b;
            k >>= 1;
        }
        return r;
    }

    friend bool operator==(const PrecSeries& a, const PrecSeries& b) {
        return *a.params_ == *b.params_ && a.c_ == b.c_;
    }

   private:
    void check(const PrecSeries& o) const {
        if (params_ != o.params_ && !(*params_ == *o.params_)) throw MismatchedParams();
    }

    ParamsPtr<Int> params_;
    std::vector<Int> c_;
};

/// Frobenius: identity on coefficients (residue field F_p), u -> u^p.
template <class Int>
PrecSeries<Int> frobenius(const PrecSeries<Int>& a) {
    const unsigned p = a.params()->p();
    std::vector<Int> c(a.size(), Int(0));
    for (unsigned i = 0; static_cast<unsigned long long>(i) * p < a.size(); ++i) c[i * p] = a[i];
    return PrecSeries<Int>(a.params(), std::move(c));
}

/// Literal form "c*u^k + ... + c0", highest degree first; "0" for zero.
template <class Int>
std::string to_string(const PrecSeries<Int>& a) {
    std::string out;
    for (int i = a.degree(); i >= 0; --i) {
        if (a[i] == 0) continue;
        if (!out.empty()) out += " + ";
        out += int_to_string(a[i]);
        if (i > 0) out += "*u^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

template <class Int>
std::ostream& operator<<(std::ostream& os, const PrecSeries<Int>& a) {
    return os << to_string(a);
}

/*
 * Series literal grammar:
 *   poly := term ("+" term)*
 *   term := INT ("*u^" INT)?
 * INT may carry a leading '-'. Whitespace is ignored. Repeated degrees add up.
 * Returned as (degree, integer) pairs so callers can reduce into any ring.
 */
inline std::vector<std::pair<unsigned, BigInt>> parse_terms(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw ParseError("empty series literal");
    std::vector<std::pair<unsigned, BigInt>> terms;
    std::size_t pos = 0;
    auto read_int = [&](bool allow_sign) {
        std::size_t start = pos;
        if (allow_sign && pos < s.size() && s[pos] == '-') ++pos;
        std::size_t digits = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == digits) throw ParseError("expected integer at offset " + std::to_string(start) + " in '" + s + "'");
        return BigInt(s.substr(start, pos - start));
    };
    while (true) {
        BigInt c = read_int(true);
        unsigned deg = 0;
        if (s.compare(pos, 3, "*u^") == 0) {
            pos += 3;
            BigInt d = read_int(false);
            if (d > 100000) throw ParseError("exponent too large");
            deg = static_cast<unsigned>(d);
        }
        terms.emplace_back(deg, c);
        if (pos == s.size()) break;
        if (s[pos] != '+') throw ParseError("unexpected '" + std::string(1, s[pos]) + "' in '" + s + "'");
        ++pos;
    }
    return terms;
}

template <class Int>
PrecSeries<Int> parse_series(const std::string& text, const ParamsPtr<Int>& params) {
    PrecSeries<Int> r(params);
    for (const auto& [deg, c] : parse_terms(text)) {
        if (deg >= params->M) continue;
        r += PrecSeries<Int>(params, [&] {
            std::vector<Int> v(params->M, Int(0));
            v[deg] = params->zmod.from_big(c);
            return v;
        }());
    }
    return r;
}

}  // namespace bkt

#endif
