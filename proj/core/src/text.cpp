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

#include "nkaut/text.hpp"

#include <charconv>
#include <optional>
#include <sstream>

namespace nk {

namespace {

std::vector<std::string> split_ws(std::string_view text) {
    std::vector<std::string> out;
    std::istringstream in{std::string(text)};
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

long long parse_int(std::string_view s, std::string_view what) {
    long long v = 0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    if (!s.empty() && s.front() == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (s.empty() || ec != std::errc() || ptr != last)
        throw ParseError("bad integer '" + std::string(s) + "' in " + std::string(what));
    return v;
}

// "key=value" with the expected key.
std::string_view keyed(std::string_view tok, std::string_view key) {
    if (tok.size() <= key.size() || tok.substr(0, key.size()) != key || tok[key.size()] != '=')
        throw ParseError("expected '" + std::string(key) + "=...', got '" + std::string(tok) + "'");
    return tok.substr(key.size() + 1);
}

}  // namespace

std::string format_list(const std::vector<long long>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) out += (i ? "," : "") + std::to_string(values[i]);
    return out;
}

std::vector<long long> parse_list(std::string_view text) {
    std::vector<long long> out;
    if (text.empty()) return out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        out.push_back(parse_int(text.substr(start, comma - start), "integer list"));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

std::string format_field(const Field& field) {
    std::vector<long long> mod(field.modulus().begin(), field.modulus().end());
    return "GF " + std::to_string(field.characteristic()) + " " + std::to_string(field.degree()) + " " +
           format_list(mod);
}

Field parse_field(std::string_view text) {
    const auto tok = split_ws(text);
    if (tok.size() != 4 || tok[0] != "GF") throw ParseError("field must look like 'GF p r c0,...,cr'");
    const long long p = parse_int(tok[1], "field characteristic");
    const long long r = parse_int(tok[2], "field degree");
    if (p < 2 || p > kMaxCharacteristic) throw ParseError("characteristic out of range");
    if (r < 1 || r > kMaxExtensionDegree) throw ParseError("degree out of range");
    std::vector<int> mod;
    for (long long c : parse_list(tok[3])) {
        if (c < 0 || c >= p) throw ParseError("modulus coefficient out of range");
        mod.push_back(static_cast<int>(c));
    }
    return Field::make(static_cast<int>(p), static_cast<int>(r), mod);
}

std::string format_element(const Field& field, const Coeff& c) {
    if (field.degree() == 1) return std::to_string(c[0]);
    std::vector<long long> v(c.begin(), c.begin() + field.degree());
    return format_list(v);
}

std::string format_element(const FieldElement& e) { return format_element(e.field(), e.value()); }

FieldElement parse_element(const Field& field, std::string_view text) {
    const auto coords = parse_list(text);
    const long long p = field.characteristic();
    for (long long v : coords)
        if (v < 0 || v >= p) throw ParseError("element coordinate out of range [0, p)");
    if (coords.size() != 1 && coords.size() != static_cast<std::size_t>(field.degree()))
        throw ParseError("element needs " + std::to_string(field.degree()) + " coordinates or a single integer");
    return field.element(field.from_coords(coords));
}

std::string format_series(const TruncatedSeries& f) {
    std::string out = "SER v=" + std::to_string(f.valuation()) + " N=" + std::to_string(f.precision());
    for (const Coeff& c : f.coefficients()) out += " " + format_element(f.field(), c);
    return out;
}

TruncatedSeries parse_series(const Field& field, std::string_view text) {
    const auto tok = split_ws(text);
    if (tok.size() < 3 || tok[0] != "SER") throw ParseError("series must look like 'SER v=<v> N=<N> c...'");
    const long long v = parse_int(keyed(tok[1], "v"), "series valuation");
    const long long n = parse_int(keyed(tok[2], "N"), "series precision");
    if (n < -(1LL << 30) || n > (1LL << 30) || v > n) throw ParseError("series valuation/precision out of range");
    if (static_cast<long long>(tok.size()) - 3 != n - v)
        throw ParseError("series has " + std::to_string(tok.size() - 3) + " coefficients, expected " +
                         std::to_string(n - v));
    std::vector<Coeff> coeffs;
    for (std::size_t i = 3; i < tok.size(); ++i) coeffs.push_back(parse_element(field, tok[i]).value());
    if (!coeffs.empty() && Field::is_zero(coeffs.front()))
        throw ParseError("series coefficient at the valuation must be nonzero");
    return TruncatedSeries::from_coeffs(field, static_cast<int>(v), std::move(coeffs), static_cast<int>(n));
}

std::string format_profile(const RamificationProfile& prof) {
    return "PROFILE p=" + std::to_string(prof.p) + " n=" + std::to_string(prof.n) +
           " lower=" + format_list(prof.lower_breaks) + " upper=" + format_list(prof.upper_breaks) +
           " i=" + format_list(prof.increments) + " different=" + std::to_string(prof.different);
}

RamificationProfile parse_profile(std::string_view text) {
    const auto tok = split_ws(text);
    if (tok.size() != 7 || tok[0] != "PROFILE") throw ParseError("malformed PROFILE line");
    RamificationProfile prof;
    prof.p = static_cast<int>(parse_int(keyed(tok[1], "p"), "profile"));
    prof.n = static_cast<int>(parse_int(keyed(tok[2], "n"), "profile"));
    prof.lower_breaks = parse_list(keyed(tok[3], "lower"));
    prof.upper_breaks = parse_list(keyed(tok[4], "upper"));
    prof.increments = parse_list(keyed(tok[5], "i"));
    prof.different = parse_int(keyed(tok[6], "different"), "profile");
    return prof;
}

std::string format_cover(const SuperellipticCover& cover) {
    std::vector<long long> m;
    for (const BranchPoint& s : cover.branch) m.push_back(s.multiplicity);
    return "COVER n=" + std::to_string(cover.n) + " g0=" + std::to_string(cover.base_genus) +
           " branch=" + format_list(m);
}

SuperellipticCover parse_cover(std::string_view text) {
    const auto tok = split_ws(text);
    if (tok.size() != 4 || tok[0] != "COVER") throw ParseError("cover must look like 'COVER n=<n> g0=<g> branch=<m,...>'");
    SuperellipticCover cover;
    cover.n = parse_int(keyed(tok[1], "n"), "cover");
    cover.base_genus = parse_int(keyed(tok[2], "g0"), "cover");
    const auto mult = parse_list(keyed(tok[3], "branch"));
    for (std::size_t i = 0; i < mult.size(); ++i) cover.branch.push_back({"s" + std::to_string(i), mult[i]});
    return cover;
}

std::string format_curve(const EabCurve& curve) {
    return "EAB " + format_field(curve.field()) + " a=" + format_element(curve.a()) + " b=" + format_element(curve.b());
}

EabCurve parse_curve(std::string_view text) {
    const auto tok = split_ws(text);
    if (tok.size() != 7 || tok[0] != "EAB") throw ParseError("curve must look like 'EAB GF 2 r c0,...,cr a=<elt> b=<elt>'");
    const Field field = parse_field(tok[1] + " " + tok[2] + " " + tok[3] + " " + tok[4]);
    return EabCurve(parse_element(field, keyed(tok[5], "a")), parse_element(field, keyed(tok[6], "b")));
}

std::string format_report(const CheckReport& report) {
    return report.pass ? "PASS" : "FAIL " + report.detail;
}

std::string format_normal_form(const OrderPNormalForm& nf) {
    return "NORMAL m=" + std::to_string(nf.m) + " c=" + format_element(nf.c);
}

std::string format_point(const Field& field, const CurvePoint& pt) {
    if (pt.infinity) return "O";
    return "w=" + format_element(field, pt.w) + " z=" + format_element(field, pt.z);
}

}  // namespace nk
