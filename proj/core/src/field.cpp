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

#include "nkaut/field.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "field_data.hpp"

namespace nk {

namespace {

using Poly = std::vector<int>;  // coefficients over F_p, constant first

int mod_p(long long v, int p) {
    long long m = v % p;
    return static_cast<int>(m < 0 ? m + p : m);
}

int inv_mod_p(int a, int p) {
    // p is prime, so a^{p-2}.
    long long result = 1, base = a % p;
    for (int e = p - 2; e > 0; e >>= 1) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
    }
    return static_cast<int>(result);
}

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mod(Poly a, const Poly& m, int p) {
    trim(a);
    const int dm = static_cast<int>(m.size()) - 1;
    const int lead_inv = inv_mod_p(m.back(), p);
    while (static_cast<int>(a.size()) - 1 >= dm) {
        const int shift = static_cast<int>(a.size()) - 1 - dm;
        const int factor = static_cast<int>(1LL * a.back() * lead_inv % p);
        for (int i = 0; i <= dm; ++i) a[shift + i] = mod_p(a[shift + i] - 1LL * factor * m[i], p);
        trim(a);
    }
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, int p) {
    if (a.empty() || b.empty()) return {};
    Poly prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    return poly_mod(std::move(prod), m, p);
}

Poly poly_gcd(Poly a, Poly b, int p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Ben-Or: a monic f of degree r is irreducible iff gcd(x^{p^i} - x, f) = 1
// for 1 <= i <= r/2.
bool is_irreducible(const Poly& f, int p) {
    const int r = static_cast<int>(f.size()) - 1;
    if (r <= 1) return r == 1;
    Poly h = {0, 1};
    for (int i = 1; i <= r / 2; ++i) {
        // h <- h^p mod f
        Poly acc = {1}, base = h;
        for (int e = p; e > 0; e >>= 1) {
            if (e & 1) acc = poly_mulmod(acc, base, f, p);
            base = poly_mulmod(base, base, f, p);
        }
        h = acc;
        Poly diff = h;
        diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
        diff[1] = mod_p(diff[1] - 1, p);
        Poly g = poly_gcd(f, diff, p);
        if (g.size() > 1) return false;
    }
    return true;
}

std::vector<int> default_modulus(int p, int r) {
    if (r == 1) return {0, 1};
    // Enumerate c_0, ..., c_{r-1} with c_0 the most significant digit.
    // c_0 = 0 is never irreducible, so start at c_0 = 1.
    std::vector<int> digits(r, 0);
    digits[0] = 1;
    while (true) {
        Poly f(digits.begin(), digits.end());
        f.push_back(1);
        if (digits[0] != 0 && is_irreducible(f, p)) return f;
        int pos = r - 1;
        while (pos >= 0 && ++digits[pos] == p) digits[pos--] = 0;
        if (pos < 0) break;
    }
    throw Error("no irreducible polynomial found");  // unreachable for prime p
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

Coeff mul_poly(const detail::FieldData& d, const Coeff& a, const Coeff& b) noexcept {
    const int p = d.p, r = d.r;
    std::array<int, 2 * kMaxExtensionDegree> prod{};
    for (int i = 0; i < r; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < r; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    }
    for (int k = 2 * r - 2; k >= r; --k) {
        const int c = prod[k];
        if (c == 0) continue;
        for (int i = 0; i < r; ++i) prod[k - r + i] = mod_p(prod[k - r + i] - c * d.modulus[i], p);
        prod[k] = 0;
    }
    Coeff out{};
    for (int i = 0; i < r; ++i) out[i] = static_cast<std::uint8_t>(prod[i]);
    return out;
}

Coeff pow_poly(const detail::FieldData& d, Coeff a, uint128 e) noexcept {
    Coeff result{};
    result[0] = 1;
    while (e > 0) {
        if (e & 1) result = mul_poly(d, result, a);
        a = mul_poly(d, a, a);
        e >>= 1;
    }
    return result;
}

void build_tables(detail::FieldData& d) {
    const auto q = static_cast<std::uint64_t>(d.q);
    d.q_minus_1 = static_cast<std::uint32_t>(q - 1);
    const auto factors = prime_factors(q - 1);
    auto unpack = [&](std::uint64_t code) {
        Coeff c{};
        for (int i = 0; i < d.r; ++i) {
            c[i] = static_cast<std::uint8_t>(code % d.p);
            code /= d.p;
        }
        return c;
    };
    Coeff gen{};
    bool found = false;
    for (std::uint64_t code = 2; code < q && !found; ++code) {
        Coeff c = unpack(code);
        found = std::all_of(factors.begin(), factors.end(), [&](std::uint64_t ell) {
            Coeff t = pow_poly(d, c, (q - 1) / ell);
            return !(t[0] == 1 && std::all_of(t.begin() + 1, t.end(), [](auto v) { return v == 0; }));
        });
        if (found) gen = c;
    }
    if (q == 2) {
        gen = Coeff{};
        gen[0] = 1;
        found = true;
    }
    if (!found) throw Error("no primitive element found");
    d.log.assign(q, -1);
    d.exp.resize(2 * (q - 1));
    Coeff cur{};
    cur[0] = 1;
    for (std::uint64_t i = 0; i < q - 1; ++i) {
        d.exp[i] = cur;
        d.exp[i + q - 1] = cur;
        d.log[d.pack(cur)] = static_cast<std::int32_t>(i);
        cur = mul_poly(d, cur, gen);
    }
    d.tables = true;
}

std::string describe(int p, int r) { return "GF(" + std::to_string(p) + "^" + std::to_string(r) + ")"; }

}  // namespace

bool is_prime(long long n) noexcept {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Field Field::make(int p, int r, std::optional<std::vector<int>> modulus) {
    if (p < 2 || p > kMaxCharacteristic || !is_prime(p))
        throw Error("characteristic must be a prime <= 97, got " + std::to_string(p));
    if (r < 1 || r > kMaxExtensionDegree)
        throw Error("extension degree must lie in [1, 16], got " + std::to_string(r));
    auto d = std::make_shared<detail::FieldData>();
    d->p = p;
    d->r = r;
    if (modulus) {
        if (static_cast<int>(modulus->size()) != r + 1)
            throw Error("modulus of " + describe(p, r) + " needs " + std::to_string(r + 1) + " coefficients");
        for (int c : *modulus)
            if (c < 0 || c >= p) throw Error("modulus coefficient out of range [0, p)");
        if (modulus->back() != 1) throw Error("modulus must be monic");
        if (!is_irreducible(*modulus, p)) throw Error("modulus is reducible over F_" + std::to_string(p));
        d->modulus = *modulus;
    } else {
        d->modulus = default_modulus(p, r);
    }
    d->q = 1;
    for (int i = 0; i < r; ++i) d->q *= static_cast<uint128>(p);
    if (d->q <= kMaxEnumerableOrder) build_tables(*d);
    return Field(std::move(d));
}

int Field::characteristic() const noexcept { return d_->p; }
int Field::degree() const noexcept { return d_->r; }
const std::vector<int>& Field::modulus() const noexcept { return d_->modulus; }
uint128 Field::order() const noexcept { return d_->q; }

std::uint64_t Field::size() const {
    if (d_->q > static_cast<uint128>(UINT64_MAX)) throw Error("field order exceeds 64 bits");
    return static_cast<std::uint64_t>(d_->q);
}

bool Field::enumerable() const noexcept { return d_->tables; }

bool operator==(const Field& a, const Field& b) noexcept {
    if (a.d_ == b.d_) return true;
    return a.d_->p == b.d_->p && a.d_->r == b.d_->r && a.d_->modulus == b.d_->modulus;
}

Coeff Field::one() const noexcept {
    Coeff c{};
    c[0] = 1;
    return c;
}

Coeff Field::from_int(long long v) const noexcept {
    Coeff c{};
    c[0] = static_cast<std::uint8_t>(mod_p(v, d_->p));
    return c;
}

Coeff Field::x() const noexcept {
    Coeff c{};
    if (d_->r == 1) {
        c[0] = static_cast<std::uint8_t>(mod_p(-d_->modulus[0], d_->p));
    } else {
        c[1] = 1;
    }
    return c;
}

Coeff Field::from_coords(const std::vector<long long>& coords) const {
    if (coords.size() == 1) return from_int(coords[0]);
    if (static_cast<int>(coords.size()) != d_->r)
        throw Error("element of " + describe(d_->p, d_->r) + " needs " + std::to_string(d_->r) + " coordinates");
    Coeff c{};
    for (int i = 0; i < d_->r; ++i) c[i] = static_cast<std::uint8_t>(mod_p(coords[i], d_->p));
    return c;
}

bool Field::is_zero(const Coeff& a) noexcept {
    return std::all_of(a.begin(), a.end(), [](std::uint8_t v) { return v == 0; });
}

bool Field::is_one(const Coeff& a) const noexcept { return a == one(); }

bool Field::is_prime_field_element(const Coeff& a) noexcept {
    return std::all_of(a.begin() + 1, a.end(), [](std::uint8_t v) { return v == 0; });
}

Coeff Field::add(const Coeff& a, const Coeff& b) const noexcept {
    Coeff c{};
    const int p = d_->p;
    for (int i = 0; i < d_->r; ++i) {
        int s = a[i] + b[i];
        c[i] = static_cast<std::uint8_t>(s >= p ? s - p : s);
    }
    return c;
}

Coeff Field::sub(const Coeff& a, const Coeff& b) const noexcept {
    Coeff c{};
    const int p = d_->p;
    for (int i = 0; i < d_->r; ++i) {
        int s = a[i] - b[i];
        c[i] = static_cast<std::uint8_t>(s < 0 ? s + p : s);
    }
    return c;
}

Coeff Field::neg(const Coeff& a) const noexcept { return sub(zero(), a); }

Coeff Field::mul(const Coeff& a, const Coeff& b) const noexcept {
    if (d_->tables) {
        const std::int32_t la = d_->log_of(a), lb = d_->log_of(b);
        if (la < 0 || lb < 0) return {};
        return d_->exp[la + lb];
    }
    return mul_poly(*d_, a, b);
}

Coeff Field::scale(const Coeff& a, long long k) const noexcept {
    const int s = mod_p(k, d_->p);
    Coeff c{};
    for (int i = 0; i < d_->r; ++i) c[i] = static_cast<std::uint8_t>(a[i] * s % d_->p);
    return c;
}

Coeff Field::inv(const Coeff& a) const {
    if (is_zero(a)) throw Error("division by zero in " + describe(d_->p, d_->r));
    if (d_->tables) {
        const std::int32_t la = d_->log_of(a);
        return d_->exp[(d_->q_minus_1 - la) % d_->q_minus_1];
    }
    return pow_poly(*d_, a, d_->q - 2);
}

Coeff Field::div(const Coeff& a, const Coeff& b) const { return mul(a, inv(b)); }

Coeff Field::pow(const Coeff& a, long long e) const {
    if (e < 0) return pow(inv(a), static_cast<uint128>(-(e + 1)) + 1);
    return pow(a, static_cast<uint128>(e));
}

Coeff Field::pow(const Coeff& a, uint128 e) const noexcept {
    if (e == 0) return one();
    if (is_zero(a)) return {};
    if (d_->tables) {
        const auto l = static_cast<uint128>(d_->log_of(a));
        return d_->exp[static_cast<std::size_t>(l * (e % d_->q_minus_1) % d_->q_minus_1)];
    }
    return pow_poly(*d_, a, e);
}

Coeff Field::frobenius(const Coeff& a) const noexcept { return pow(a, static_cast<uint128>(d_->p)); }

int Field::trace(const Coeff& a) const noexcept {
    Coeff sum{}, term = a;
    for (int i = 0; i < d_->r; ++i) {
        sum = add(sum, term);
        term = frobenius(term);
    }
    return sum[0];
}

Coeff Field::wp(const Coeff& a) const noexcept { return sub(frobenius(a), a); }

std::optional<Coeff> Field::wp_solve(const Coeff& a) const {
    const int p = d_->p, r = d_->r;
    if (r == 1) {
        // wp vanishes identically on F_p.
        if (is_zero(a)) return zero();
        return std::nullopt;
    }
    // wp is F_p-linear with kernel F_p, so fix e_0 = 0 (the lexicographically
    // smallest member of each solution coset) and solve for e_1..e_{r-1}.
    const int cols = r - 1;
    std::vector<std::vector<int>> m(r, std::vector<int>(cols + 1, 0));
    for (int j = 1; j < r; ++j) {
        Coeff basis{};
        basis[j] = 1;
        Coeff img = wp(basis);
        for (int i = 0; i < r; ++i) m[i][j - 1] = img[i];
    }
    for (int i = 0; i < r; ++i) m[i][cols] = a[i];

    std::vector<int> pivot_col;
    int row = 0;
    for (int col = 0; col < cols && row < r; ++col) {
        int sel = row;
        while (sel < r && m[sel][col] == 0) ++sel;
        if (sel == r) continue;
        std::swap(m[sel], m[row]);
        const int iv = inv_mod_p(m[row][col], p);
        for (int k = 0; k <= cols; ++k) m[row][k] = m[row][k] * iv % p;
        for (int i = 0; i < r; ++i) {
            if (i == row || m[i][col] == 0) continue;
            const int f = m[i][col];
            for (int k = 0; k <= cols; ++k) m[i][k] = mod_p(m[i][k] - f * m[row][k], p);
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (int i = row; i < r; ++i)
        if (m[i][cols] != 0) return std::nullopt;
    Coeff c{};
    for (int i = 0; i < row; ++i) c[pivot_col[i] + 1] = static_cast<std::uint8_t>(m[i][cols]);
    if (wp(c) != a) return std::nullopt;
    return c;
}

Coeff Field::at_index(std::uint64_t i) const {
    if (!d_->tables) throw Error("field is too large to enumerate");
    Coeff c{};
    for (int k = d_->r - 1; k >= 0; --k) {
        c[k] = static_cast<std::uint8_t>(i % d_->p);
        i /= d_->p;
    }
    return c;
}

std::uint64_t Field::index_of(const Coeff& a) const {
    std::uint64_t i = 0;
    for (int k = 0; k < d_->r; ++k) i = i * d_->p + a[k];
    return i;
}

std::optional<Coeff> Field::root(const Coeff& a, long long m) const {
    if (m <= 0) throw Error("root index must be positive");
    if (is_zero(a)) return zero();
    if (d_->tables) {
        const std::uint64_t q = size();
        for (std::uint64_t i = 1; i < q; ++i) {
            Coeff c = at_index(i);
            if (pow(c, static_cast<uint128>(m)) == a) return c;
        }
        return std::nullopt;
    }
    if (is_one(a)) return one();
    // Outside table range only the case gcd(m, q-1) = 1 is handled: x -> x^m is
    // then a bijection with inverse exponent m^{-1} mod (q-1).
    const uint128 n = d_->q - 1;
    int128 old_r = static_cast<int128>(n), cur_r = m % static_cast<int128>(n);
    int128 old_s = 0, cur_s = 1;
    while (cur_r != 0) {
        const int128 quot = old_r / cur_r;
        std::tie(old_r, cur_r) = std::pair{cur_r, old_r - quot * cur_r};
        std::tie(old_s, cur_s) = std::pair{cur_s, old_s - quot * cur_s};
    }
    if (old_r != 1) throw Error("m-th roots need an enumerable field when gcd(m, q-1) > 1");
    int128 e = old_s % static_cast<int128>(n);
    if (e < 0) e += static_cast<int128>(n);
    return pow(a, static_cast<uint128>(e));
}

FieldElement Field::element(const Coeff& c) const { return FieldElement(*this, c); }
FieldElement Field::element(long long v) const { return FieldElement(*this, from_int(v)); }

std::vector<int> FieldElement::coords() const {
    return std::vector<int>(value_.begin(), value_.begin() + field_.degree());
}

void FieldElement::check_same_field(const FieldElement& other) const {
    if (!(field_ == other.field_)) throw Error("field mismatch");
}

FieldElement& FieldElement::operator+=(const FieldElement& rhs) {
    check_same_field(rhs);
    value_ = field_.add(value_, rhs.value_);
    return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& rhs) {
    check_same_field(rhs);
    value_ = field_.sub(value_, rhs.value_);
    return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& rhs) {
    check_same_field(rhs);
    value_ = field_.mul(value_, rhs.value_);
    return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& rhs) {
    check_same_field(rhs);
    value_ = field_.div(value_, rhs.value_);
    return *this;
}

FieldElement arith(const FieldElement& a, const FieldElement& b, ArithOp op) {
    switch (op) {
        case ArithOp::add: return a + b;
        case ArithOp::sub: return a - b;
        case ArithOp::mul: return a * b;
        case ArithOp::div: return a / b;
        case ArithOp::pow: break;
    }
    throw Error("pow takes an integer exponent");
}

FieldElement arith(const FieldElement& a, long long exponent) { return a.pow(exponent); }

FieldElement trace_to_prime(const FieldElement& a) {
    return a.field().element(a.field().trace(a.value()));
}

FieldElement wp_apply(const FieldElement& a) { return {a.field(), a.field().wp(a.value())}; }

std::optional<FieldElement> wp_solve(const FieldElement& a) {
    auto c = a.field().wp_solve(a.value());
    if (!c) return std::nullopt;
    return FieldElement(a.field(), *c);
}

}  // namespace nk
