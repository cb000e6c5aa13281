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

#ifndef NKAUT_FIELD_HPP
#define NKAUT_FIELD_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nkaut/error.hpp"

namespace nk {

__extension__ using uint128 = unsigned __int128;
__extension__ using int128 = __int128;

inline constexpr int kMaxExtensionDegree = 16;
inline constexpr int kMaxCharacteristic = 97;

/// Fields up to this size get log/antilog tables and may be enumerated.
inline constexpr std::uint64_t kMaxEnumerableOrder = std::uint64_t{1} << 16;

/// Coordinates e_0, ..., e_{r-1} of an element in the power basis 1, x, ..., x^{r-1}.
/// Entries past the extension degree are always zero.
using Coeff = std::array<std::uint8_t, kMaxExtensionDegree>;

namespace detail {
struct FieldData;
}

class FieldElement;

/**
 * The finite field F_p[x]/(modulus) with p <= 97 and degree r <= 16.
 *
 * A Field is a cheap handle to shared immutable state. Raw arithmetic works on
 * Coeff values and is what the series code uses in its inner loops; FieldElement
 * wraps a Coeff together with its field for checked, operator-based use.
 */
class Field {
   public:
    /// Builds F_{p^r}. Without a modulus, r = 1 uses x and r > 1 uses the
    /// lexicographically first monic irreducible of degree r, comparing the
    /// coefficient sequences c_0, c_1, ..., c_{r-1} constant term first.
    static Field make(int p, int r = 1, std::optional<std::vector<int>> modulus = std::nullopt);

    int characteristic() const noexcept;
    int degree() const noexcept;
    /// r + 1 coefficients, constant term first, monic.
    const std::vector<int>& modulus() const noexcept;
    uint128 order() const noexcept;
    /// q as a 64-bit integer. Throws Error when q >= 2^64.
    std::uint64_t size() const;
    bool enumerable() const noexcept;

    friend bool operator==(const Field& a, const Field& b) noexcept;

    Coeff zero() const noexcept { return {}; }
    Coeff one() const noexcept;
    /// Image of an integer in the prime field.
    Coeff from_int(long long v) const noexcept;
    /// The class of x (the generator of the power basis).
    Coeff x() const noexcept;
    /// Validates and reduces raw coordinates. Throws Error on a length mismatch.
    Coeff from_coords(const std::vector<long long>& coords) const;

    static bool is_zero(const Coeff& a) noexcept;
    bool is_one(const Coeff& a) const noexcept;
    /// True iff a lies in the prime field.
    static bool is_prime_field_element(const Coeff& a) noexcept;

    Coeff add(const Coeff& a, const Coeff& b) const noexcept;
    Coeff sub(const Coeff& a, const Coeff& b) const noexcept;
    Coeff neg(const Coeff& a) const noexcept;
    Coeff mul(const Coeff& a, const Coeff& b) const noexcept;
    Coeff scale(const Coeff& a, long long k) const noexcept;
    Coeff inv(const Coeff& a) const;
    Coeff div(const Coeff& a, const Coeff& b) const;
    Coeff pow(const Coeff& a, long long e) const;
    Coeff pow(const Coeff& a, uint128 e) const noexcept;
    Coeff frobenius(const Coeff& a) const noexcept;

    /// a + a^p + ... + a^{p^{r-1}}, as an integer in [0, p).
    int trace(const Coeff& a) const noexcept;
    /// a^p - a.
    Coeff wp(const Coeff& a) const noexcept;
    /// The lexicographically smallest c with c^p - c = a, if any.
    std::optional<Coeff> wp_solve(const Coeff& a) const;

    /// Lexicographic enumeration: index 0 is zero and e_0 is the most
    /// significant digit. Valid for enumerable fields.
    Coeff at_index(std::uint64_t i) const;
    std::uint64_t index_of(const Coeff& a) const;

    /// Some m-th root of a (the first in lexicographic order for enumerable
    /// fields), or nullopt.
    std::optional<Coeff> root(const Coeff& a, long long m) const;

    FieldElement element(const Coeff& c) const;
    FieldElement element(long long v) const;

    /// Internal access for the table-driven series kernels.
    const detail::FieldData& data() const noexcept { return *d_; }

   private:
    explicit Field(std::shared_ptr<const detail::FieldData> d) : d_(std::move(d)) {}
    std::shared_ptr<const detail::FieldData> d_;
};

/// Lexicographic comparison of coordinates (e_0 first).
inline std::strong_ordering lex_compare(const Coeff& a, const Coeff& b) noexcept {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] <=> b[i];
    }
    return std::strong_ordering::equal;
}

/// An element of a specific field. All binary operations check that both
/// operands come from the same field.
class FieldElement {
   public:
    FieldElement(Field field, const Coeff& value) : field_(std::move(field)), value_(value) {}

    const Field& field() const noexcept { return field_; }
    const Coeff& value() const noexcept { return value_; }
    std::vector<int> coords() const;

    bool is_zero() const noexcept { return Field::is_zero(value_); }
    bool is_one() const noexcept { return field_.is_one(value_); }

    FieldElement operator-() const { return {field_, field_.neg(value_)}; }
    FieldElement& operator+=(const FieldElement& rhs);
    FieldElement& operator-=(const FieldElement& rhs);
    FieldElement& operator*=(const FieldElement& rhs);
    FieldElement& operator/=(const FieldElement& rhs);

    friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
    friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
    friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
    friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
    friend bool operator==(const FieldElement& a, const FieldElement& b) noexcept {
        return a.field_ == b.field_ && a.value_ == b.value_;
    }

    FieldElement pow(long long e) const { return {field_, field_.pow(value_, e)}; }
    FieldElement inverse() const { return {field_, field_.inv(value_)}; }

   private:
    void check_same_field(const FieldElement& other) const;

    Field field_;
    Coeff value_;
};

enum class ArithOp { add, sub, mul, div, pow };

/// make_field with an explicit operation name, for callers that mirror the CLI.
inline Field make_field(int p, int r, std::optional<std::vector<int>> modulus = std::nullopt) {
    return Field::make(p, r, std::move(modulus));
}

/// Binary arithmetic. For ArithOp::pow use the integer overload below.
FieldElement arith(const FieldElement& a, const FieldElement& b, ArithOp op);
FieldElement arith(const FieldElement& a, long long exponent);

/// Trace to F_p, returned as an element of the same field lying in F_p.
FieldElement trace_to_prime(const FieldElement& a);
FieldElement wp_apply(const FieldElement& a);
std::optional<FieldElement> wp_solve(const FieldElement& a);

bool is_prime(long long n) noexcept;

}  // namespace nk

#endif
