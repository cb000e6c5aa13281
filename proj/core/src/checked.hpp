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

#ifndef NKAUT_SRC_CHECKED_HPP
#define NKAUT_SRC_CHECKED_HPP

#include "nkaut/error.hpp"

namespace nk::detail {

inline long long checked_mul(long long a, long long b) {
    long long out = 0;
    if (__builtin_mul_overflow(a, b, &out)) throw Error("integer overflow");
    return out;
}

inline long long checked_add(long long a, long long b) {
    long long out = 0;
    if (__builtin_add_overflow(a, b, &out)) throw Error("integer overflow");
    return out;
}

inline long long checked_pow(long long base, int e) {
    long long out = 1;
    for (int i = 0; i < e; ++i) out = checked_mul(out, base);
    return out;
}

}  // namespace nk::detail

#endif
