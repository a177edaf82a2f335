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

#ifndef BKT_RATIONAL_HPP
#define BKT_RATIONAL_HPP

#include <cstdint>
#include <ostream>
#include <sstream>
#include <string>

#include <boost/rational.hpp>

namespace bkt {

using Rational = boost::rational<std::int64_t>;

inline std::int64_t floor(const Rational& r) {
    std::int64_t q = r.numerator() / r.denominator();
    if (r.numerator() < 0 && q * r.denominator() != r.numerator()) --q;
    return q;
}

inline std::int64_t ceil(const Rational& r) { return -floor(-r); }

inline bool is_integer(const Rational& r) { return r.denominator() == 1; }

// Exact text form: "a" for integers, "a/b" otherwise. Never a decimal.
inline std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << r.numerator();
    if (r.denominator() != 1) os << '/' << r.denominator();
    return os.str();
}

// Accepts "a", "-a" or "a/b".
inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(std::stoll(s));
    return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

}  // namespace bkt

#endif
