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

#ifndef NKAUT_TEXT_HPP
#define NKAUT_TEXT_HPP

#include <string>
#include <string_view>
#include <vector>

#include "nkaut/curves.hpp"
#include "nkaut/field.hpp"
#include "nkaut/nottingham.hpp"
#include "nkaut/ramification.hpp"
#include "nkaut/series.hpp"

namespace nk {

// Every format_* output re-parses with the matching parse_* to an equal value.
// Parse functions throw ParseError on malformed input.

/// "GF p r c0,c1,...,cr".
std::string format_field(const Field& field);
Field parse_field(std::string_view text);

/// "e0,e1,...,e{r-1}"; a single integer stands for a prime-field element.
/// Elements of a prime field are printed as a single integer.
std::string format_element(const Field& field, const Coeff& c);
std::string format_element(const FieldElement& e);
FieldElement parse_element(const Field& field, std::string_view text);

/// "SER v=<v> N=<N> c_v ... c_{N-1}".
std::string format_series(const TruncatedSeries& f);
TruncatedSeries parse_series(const Field& field, std::string_view text);

/// "PROFILE p=<p> n=<n> lower=<...> upper=<...> i=<...> different=<d>".
std::string format_profile(const RamificationProfile& prof);
RamificationProfile parse_profile(std::string_view text);

/// "COVER n=<n> g0=<g0> branch=<m1,m2,...>". Branch labels are not part of the
/// text form; parsed points are labelled by position.
std::string format_cover(const SuperellipticCover& cover);
SuperellipticCover parse_cover(std::string_view text);

/// "EAB <field> a=<elt> b=<elt>".
std::string format_curve(const EabCurve& curve);
EabCurve parse_curve(std::string_view text);

/// "PASS" or "FAIL <detail>".
std::string format_report(const CheckReport& report);

/// "NORMAL m=<m> c=<elt>".
std::string format_normal_form(const OrderPNormalForm& nf);

/// "w=<elt> z=<elt>" or "O".
std::string format_point(const Field& field, const CurvePoint& pt);

/// Comma-separated integers.
std::string format_list(const std::vector<long long>& values);
std::vector<long long> parse_list(std::string_view text);

}  // namespace nk

#endif
