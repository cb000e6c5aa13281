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

#ifndef NKAUT_SRC_FIELD_DATA_HPP
#define NKAUT_SRC_FIELD_DATA_HPP

#include <cstdint>
#include <vector>

#include "nkaut/field.hpp"

namespace nk::detail {

struct FieldData {
    int p = 2;
    int r = 1;
    std::vector<int> modulus;  // r + 1 entries, constant first, monic
    uint128 q = 2;

    // Log/antilog tables, present when q <= kMaxEnumerableOrder.
    bool tables = false;
    std::uint32_t q_minus_1 = 1;
    std::vector<std::int32_t> log;  // indexed by pack(); -1 for zero
    std::vector<Coeff> exp;         // 2(q-1) entries so sums of logs need no reduction

    std::uint32_t pack(const Coeff& a) const noexcept {
        std::uint32_t code = 0;
        for (int i = r - 1; i >= 0; --i) code = code * static_cast<std::uint32_t>(p) + a[i];
        return code;
    }
    std::int32_t log_of(const Coeff& a) const noexcept { return log[pack(a)]; }
};

}  // namespace nk::detail

#endif
