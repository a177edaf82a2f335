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

#ifndef BKT_ERRORS_HPP
#define BKT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bkt {

class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/* ring construction and parsing */
class NotEisenstein : public Error {
   public:
    using Error::Error;
};
class MismatchedParams : public Error {
   public:
    MismatchedParams() : Error("operands live in different truncated rings") {}
};
class ParseError : public Error {
   public:
    using Error::Error;
};

/* precision discipline */
class NotCofiniteAtPrecision : public Error {
   public:
    using Error::Error;
};
class InsufficientPrecision : public Error {
   public:
    using Error::Error;
};
class StabilizationFailure : public Error {
   public:
    using Error::Error;
};
class ZeroElement : public Error {
   public:
    ZeroElement() : Error("valuation of the zero element") {}
};

/* Witt vectors and Newton polygons */
class PrecisionUnderflow : public Error {
   public:
    using Error::Error;
};
class OddPrimeRequired : public Error {
   public:
    OddPrimeRequired() : Error("operation requires an odd prime") {}
};
class BudgetExceeded : public Error {
   public:
    using Error::Error;
};
class ImpreciseCoordinate : public Error {
   public:
    using Error::Error;
};

}  // namespace bkt

#endif
