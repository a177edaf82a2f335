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

#ifndef BKT_ZMOD_HPP
#define BKT_ZMOD_HPP

#include <cstdint>
#include <string>
#include <type_traits>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"

namespace bkt {

using BigInt = boost::multiprecision::cpp_int;

/* Word-size residues need p^N < 2^62 so that sums never wrap. */
inline constexpr unsigned word_modulus_bits = 62;

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}
inline BigInt mulmod(const BigInt& a, const BigInt& b, const BigInt& m) { return a * b % m; }

template <class Int>
Int from_big(const BigInt& x) {
    if constexpr (std::is_same_v<Int, BigInt>)
        return x;
    else
        return static_cast<Int>(x);
}

inline std::int64_t inverse_mod_small(std::int64_t a, std::int64_t p) {
    std::int64_t r0 = p, r1 = ((a % p) + p) % p, s0 = 0, s1 = 1;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t t = r0 - q * r1;
        r0 = r1;
        r1 = t;
        t = s0 - q * s1;
        s0 = s1;
        s1 = t;
    }
    return ((s0 % p) + p) % p;
}

}  // namespace detail

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// True when p^N fits the word-size fast path.
inline bool fits_word(unsigned p, unsigned N) {
    BigInt m = boost::multiprecision::pow(BigInt(p), N);
    return m < (BigInt(1) << word_modulus_bits);
}

/// The residue ring Z/p^N with representatives in [0, p^N).
template <class Int>
class Zmod {
   public:
    Zmod(unsigned p, unsigned N) : p_(p), N_(N) {
        if (!is_prime(p)) throw std::invalid_argument("p must be prime, got " + std::to_string(p));
        if (N < 1) throw std::invalid_argument("p-adic precision N must be at least 1");
        if constexpr (!std::is_same_v<Int, BigInt>) {
            if (!fits_word(p, N))
                throw std::invalid_argument("p^N too large for word residues; use the BigInt instantiation");
        }
        powers_.reserve(N + 1);
        Int x = 1;
        for (unsigned k = 0; k <= N; ++k) {
            powers_.push_back(x);
            x *= Int(p);
        }
    }

    unsigned prime() const noexcept { return p_; }
    unsigned precision() const noexcept { return N_; }
    const Int& modulus() const noexcept { return powers_[N_]; }

    /// p^k as a residue; zero once k >= N.
    Int pow_p(unsigned k) const { return k >= N_ ? Int(0) : powers_[k]; }

    Int from_signed(long long x) const {
        if (x >= 0) return Int(static_cast<unsigned long long>(x)) % modulus();
        Int r = Int(static_cast<unsigned long long>(-(x + 1)) + 1ULL) % modulus();
        return r == 0 ? r : Int(modulus() - r);
    }
    Int from_big(const BigInt& x) const {
        BigInt m = BigInt(modulus());
        BigInt r = x % m;
        if (r < 0) r += m;
        return detail::from_big<Int>(r);
    }

    Int add(const Int& a, const Int& b) const {
        Int s = a + b;
        return s >= modulus() ? Int(s - modulus()) : s;
    }
    Int sub(const Int& a, const Int& b) const { return a >= b ? Int(a - b) : Int(a + (modulus() - b)); }
    Int neg(const Int& a) const { return a == 0 ? a : Int(modulus() - a); }
    Int mul(const Int& a, const Int& b) const { return detail::mulmod(a, b, modulus()); }

    /// p-adic valuation of a residue; N for zero.
    unsigned val(Int a) const {
        if (a == 0) return N_;
        unsigned k = 0;
        while (a % p_ == 0) {
            a /= p_;
            ++k;
        }
        return k;
    }

    bool is_unit(const Int& a) const { return a % p_ != 0; }

    /// Exact quotient a / p^k; requires val(a) >= k.
    Int div_pow_p(const Int& a, unsigned k) const { return a / powers_[k]; }

    Int unit_inverse(const Int& a) const {
        if (!is_unit(a)) throw std::invalid_argument("inverse of a non-unit residue");
        auto a_mod_p = static_cast<std::int64_t>(static_cast<unsigned long long>(a % p_));
        Int x = Int(static_cast<unsigned long long>(detail::inverse_mod_small(a_mod_p, p_)));
        // Newton lifting doubles the number of correct p-adic digits each step.
        for (unsigned digits = 1; digits < N_; digits *= 2) x = mul(x, sub(Int(2), mul(a, x)));
        return x;
    }

    friend bool operator==(const Zmod& a, const Zmod& b) { return a.p_ == b.p_ && a.N_ == b.N_; }

   private:
    unsigned p_;
    unsigned N_;
    std::vector<Int> powers_;
};

template <class Int>
std::string int_to_string(const Int& x) {
    if constexpr (std::is_same_v<Int, BigInt>)
        return x.str();
    else
        return std::to_string(x);
}

}  // namespace bkt

#endif
