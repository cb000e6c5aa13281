/*
   Copyright 2026 The nkaut Authors

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

#ifndef NKAUT_RATIONAL_HPP
#define NKAUT_RATIONAL_HPP

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace nk {

using Rational = boost::rational<std::int64_t>;

inline bool is_integral(const Rational& r) { return r.denominator() == 1; }

/// "n" for integers, "n/d" otherwise.
inline std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace nk

#endif
