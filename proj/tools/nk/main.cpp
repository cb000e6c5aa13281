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

// nk: command-line front end for the nkaut library.

#include <cstdint>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "acceptance.hpp"
#include "nkaut/curves.hpp"
#include "nkaut/nottingham.hpp"
#include "nkaut/ramification.hpp"
#include "nkaut/text.hpp"

namespace {

constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;
constexpr int kDefaultPrecision = 64;
constexpr const char* kDefaultField = "GF 2 1 0,1";

/// Thrown for argument combinations CLI11 cannot check on its own.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Args {
    std::string field = kDefaultField;
    std::optional<int> prec;
    std::string series, other, f, g;
    std::string a, b, a2, b2, c;
    std::string breaks, cover, curve, name, mode = "nk";
    std::optional<long long> p, r, n, m, k, d, order, bound, different, max_b;
    std::optional<std::string> modulus, c_opt;
    std::uint64_t seed = nk::acceptance::kDefaultSeed;
};

nk::Field field_of(const Args& a) { return nk::parse_field(a.field); }

int precision_of(const Args& a) {
    const int n = a.prec.value_or(kDefaultPrecision);
    if (n < 1) throw UsageError("--prec must be positive");
    return n;
}

// A series argument, truncated to --prec when that is given and lower.
nk::TruncatedSeries series_arg(const Args& a, const nk::Field& field, const std::string& text) {
    nk::TruncatedSeries s = nk::parse_series(field, text);
    if (a.prec && *a.prec < s.precision()) s = s.truncated(*a.prec);
    return s;
}

nk::Automorphism aut_arg(const Args& a, const nk::Field& field, const std::string& text) {
    return nk::Automorphism(series_arg(a, field, text));
}

int as_int(long long v, const char* flag) {
    if (v < -(1LL << 30) || v > (1LL << 30)) throw UsageError(std::string(flag) + " out of range");
    return static_cast<int>(v);
}

std::string yes_no(bool v) { return v ? "true" : "false"; }

using Runner = std::function<void(const Args&, std::ostream&)>;

struct Command {
    const char* name;
    const char* help;
    std::function<void(CLI::App&, Args&)> setup;
    Runner run;
};

void opt_field(CLI::App& s, Args& a) { s.add_option("--field", a.field, "Field, e.g. \"GF 2 2 1,1,1\""); }
void opt_prec(CLI::App& s, Args& a) { s.add_option("--prec", a.prec, "Precision N (default 64)"); }
void opt_series(CLI::App& s, Args& a) { s.add_option("--series", a.series, "Series \"SER v=.. N=.. ...\"")->required(); }

std::vector<Command> commands() {
    return {
        {"field-make", "Build F_{p^r}",
         [](CLI::App& s, Args& a) {
             s.add_option("--p", a.p, "Characteristic")->required();
             s.add_option("--r", a.r, "Extension degree (default 1)");
             s.add_option("--modulus", a.modulus, "Modulus c0,...,cr");
         },
         [](const Args& a, std::ostream& out) {
             std::optional<std::vector<int>> mod;
             if (a.modulus) {
                 mod.emplace();
                 for (long long c : nk::parse_list(*a.modulus)) mod->push_back(as_int(c, "--modulus"));
             }
             out << nk::format_field(nk::Field::make(as_int(*a.p, "--p"), as_int(a.r.value_or(1), "--r"), mod))
                 << "\n";
         }},
        {"wp-solve", "Solve c^p - c = a",
         [](CLI::App& s, Args& a) {
             opt_field(s, a);
             s.add_option("--a", a.a, "Element a")->required();
         },
         [](const Args& a, std::ostream& out) {
             const nk::Field f = field_of(a);
             const auto c = nk::wp_solve(nk::parse_element(f, a.a));
             out << (c ? nk::format_element(*c) : std::string("none")) << "\n";
         }},
        {"compose", "f(g(t))",
         [](CLI::App& s, Args& a) {
             opt_field(s, a);
             opt_prec(s, a);
             s.add_option("--f", a.f, "Outer series")->required();
             s.add_option("--g", a.g, "Inner series")->required();
         },
         [](const Args& a, std::ostream& out) {
             const nk::Field f = field_of(a);
             out << nk::format_series(nk::compose(series_arg(a, f, a.f), series_arg(a, f, a.g))) << "\n";
         }},
        {"invert", "Compositional inverse",
         [](CLI::App& s, Args& a) {
             opt_field(s, a);
             opt_prec(s, a);
             opt_series(s, a);
         },
         [](const Args& a, std::ostream& out) {
             const nk::Field f = field_of(a);
             out << nk::format_series(nk::aut_inverse(aut_arg(a, f, a.series)).action()) << "\n";
         }},
        {"power", "sigma^k",
         [](CLI::App& s, Args& a) {
             opt_field(s, a);
             opt_prec(s, a);
             opt_series(s, a);
             s.add_option("--k", a.k, "Exponent (may be negative)")->required();
         },
         [](const Args& a, std::ostream& out) {
             const nk::Field f = field_of(a);
             out << nk::format_series(nk::aut_power(aut_arg(a, f, a.series), *a.k).action()) << "\n";
         }},
        {"order", "Order at the working precision",
         [](CLI::App& s, Args& a) {
             opt_field(s, a);
             opt_prec(s, a);
             opt_series(s, a);
             s.add_option("--bound", a.bound, "Largest order tried (default 64)");
         },
         [](const Args& a, std::ostream& out) {
             const nk::Field f = field_of(a);
             const nk::OrderReport rep = nk::aut_order(aut_arg(a, f, a.series), a.bound.value_or(64));
             out << "ORDER k=" << (rep.order ? std::to_string(*rep.order) : std::string("none"))
                 << " N=" << rep.precision << "\n";
         }},
        {"normal-form", "Order-p normal form (m, c)",
         [](CLI::App& s, Args& a) {
             opt_field(s, a);
             opt_prec(s, a);
             opt_series(s, a);
         },
         [](const Args& a, std::ostream& out) {
             const nk::Field f = field_of(a);
             out << nk::format_normal_form(nk::order_p_normal_form(aut_arg(a, f, a.series))) << "\n";
         }},
        {"make-order-p", "t (1 + c t^m)^{-1/m}",
         [](CLI::App& s, Args& a) {
             opt_field(s, a);
             opt_prec(s, a);
             s.add_option("--m", a.m, "m, prime to p")->required();
             s.add_option("--c", a.c, "Nonzero c")->required();
         },
         [](const Args& a, std::ostream& out) {
             const nk::Field f = field_of(a);
             const auto sigma = nk::make_order_p(as_int(*a.m, "--m"), nk::parse_element(f, a.c), precision_of(a));
             out << nk::format_series(sigma.action()) << "\n";
         }},
        {"conj-test-p", "Conjugacy of two order-p elements",
         [](CLI::App& s, Args& a) {
             opt_field(s, a);
             opt_prec(s, a);
             opt_series(s, a);
             s.add_option("--other", a.other, "Second series")->required();
             s.add_option("--mode", a.mode, "nk or full_aut (default nk)")
                 ->check(CLI::IsMember({"nk", "full_aut"}));
         },
         [](const Args& a, std::ostream& out) {
             const nk::Field f = field_of(a);
             const auto mode = a.mode == "full_aut" ? nk::ConjugacyMode::full_aut : nk::ConjugacyMode::nottingham;
             out << yes_no(nk::conjugacy_test_order_p(aut_arg(a, f, a.series), aut_arg(a, f, a.other), mode)) << "\n";
         }},
        {"dispersal", "f(t^m)^{1/m}",
         [](CLI::App& s, Args& a) {
             opt_field(s, a);
             opt_prec(s, a);
             opt_series(s, a);
             s.add_option("--m", a.m, "m, prime to p")->required();
         },
         [](const Args& a, std::ostream& out) {
             const nk::Field f = field_of(a);
             out << nk::format_series(nk::dispersal(aut_arg(a, f, a.series), as_int(*a.m, "--m")).action()) << "\n";
         }},
        {"profile", "Ramification profile of an element of order p^n",
         [](CLI::App& s, Args& a) {
             opt_field(s, a);
             opt_prec(s, a);
             opt_series(s, a);
             s.add_option("--order", a.order, "Group order p^n")->required();
         },
         [](const Args& a, std::ostream& out) {
             const nk::Field f = field_of(a);
             const long long p = f.characteristic();
             long long q = *a.order;
             int n = 0;
             while (q > 1 && q % p == 0) {
                 q /= p;
                 ++n;
             }
             if (q != 1 || n == 0) throw nk::Error("--order must be a positive power of p = " + std::to_string(p));
             out << nk::format_profile(nk::ramification_profile(aut_arg(a, f, a.series), n)) << "\n";
         }},
        {"valid-breaks", "Check an upper break sequence",
         [](CLI::App& s, Args& a) {
             s.add_option("--p", a.p, "Characteristic")->required();
             s.add_option("--breaks", a.breaks, "b0,b1,...")->required();
         },
         [](const Args& a, std::ostream& out) {
             const nk::BreakCheck chk = nk::validate_upper_breaks(as_int(*a.p, "--p"), nk::parse_list(a.breaks));
             out << yes_no(chk.ok) << (chk.ok ? "" : " " + chk.reason) << "\n";
         }},
        {"enum-breaks", "All valid upper break sequences",
         [](CLI::App& s, Args& a) {
             s.add_option("--p", a.p, "Characteristic")->required();
             s.add_option("--n", a.n, "Length n")->required();
             s.add_option("--max", a.max_b, "Largest allowed break")->required();
         },
         [](const Args& a, std::ostream& out) {
             const int p = as_int(*a.p, "--p");
             for (const auto& seq : nk::enumerate_upper_breaks(p, as_int(*a.n, "--n"), *a.max_b))
                 out << nk::format_list(seq) << " different=" << nk::different_from_upper_breaks(p, seq) << "\n";
         }},
        {"bound-different", "Lower bound for the different",
         [](CLI::App& s, Args& a) {
             s.add_option("--p", a.p, "Characteristic")->required();
             s.add_option("--n", a.n, "n (group order p^n)")->required();
         },
         [](const Args& a, std::ostream& out) {
             out << nk::to_string(nk::different_lower_bound(as_int(*a.p, "--p"), as_int(*a.n, "--n"))) << "\n";
         }},
        {"bounds-genus", "Genus bounds for an almost rational automorphism",
         [](CLI::App& s, Args& a) {
             s.add_option("--p", a.p, "Characteristic")->required();
             s.add_option("--n", a.n, "n (order p^n)")->required();
             s.add_option("--d", a.d, "Degree d")->required();
         },
         [](const Args& a, std::ostream& out) {
             const nk::GenusBounds g = nk::genus_bounds(as_int(*a.p, "--p"), as_int(*a.n, "--n"), *a.d);
             out << "BOUNDS upper=" << g.upper << " lower=" << nk::to_string(g.lower) << " degree_bound="
                 << (g.degree_bound_exact ? nk::to_string(g.degree_bound_value) : std::to_string(g.degree_bound))
                 << " consistent=" << yes_no(g.consistent) << " degree_ok=" << yes_no(g.degree_ok) << "\n";
         }},
        {"hkg-genus", "1 - |P| + different/2",
         [](CLI::App& s, Args& a) {
             s.add_option("--order", a.order, "|P|")->required();
             s.add_option("--different", a.different, "Different exponent")->required();
         },
         [](const Args& a, std::ostream& out) {
             const nk::Rational g = nk::hkg_genus(*a.order, *a.different);
             out << "HKG genus=" << nk::to_string(g) << " integral=" << yes_no(nk::is_integral(g)) << "\n";
         }},
        {"as-series", "beta with beta^p - beta = alpha",
         [](CLI::App& s, Args& a) {
             opt_field(s, a);
             opt_prec(s, a);
             opt_series(s, a);
         },
         [](const Args& a, std::ostream& out) {
             const nk::Field f = field_of(a);
             out << nk::format_series(nk::artin_schreier_series(series_arg(a, f, a.series))) << "\n";
         }},
        {"sigma-b", "The order-4 automorphism sigma_b",
         [](CLI::App& s, Args& a) {
             opt_field(s, a);
             opt_prec(s, a);
             s.add_option("--b", a.b, "b")->required();
         },
         [](const Args& a, std::ostream& out) {
             const nk::Field f = field_of(a);
             out << nk::format_series(nk::sigma_b(nk::parse_element(f, a.b), precision_of(a)).action()) << "\n";
         }},
        {"sigma-conj", "Are sigma_b and sigma_b' conjugate",
         [](CLI::App& s, Args& a) {
             opt_field(s, a);
             s.add_option("--b", a.b, "b")->required();
             s.add_option("--b2", a.b2, "b'")->required();
         },
         [](const Args& a, std::ostream& out) {
             const nk::Field f = field_of(a);
             out << yes_no(nk::sigma_conjugacy_test(nk::parse_element(f, a.b), nk::parse_element(f, a.b2))) << "\n";
         }},
        {"eab-points", "Points of E_{a,b}",
         [](CLI::App& s, Args& a) { s.add_option("--curve", a.curve, "\"EAB <field> a=.. b=..\"")->required(); },
         [](const Args& a, std::ostream& out) {
             const nk::EabCurve curve = nk::parse_curve(a.curve);
             for (const nk::CurvePoint& pt : nk::eab_points(curve)) out << nk::format_point(curve.field(), pt) << "\n";
         }},
        {"eab-verify", "Check the order-4 action on E_{a,b}",
         [](CLI::App& s, Args& a) { s.add_option("--curve", a.curve, "\"EAB <field> a=.. b=..\"")->required(); },
         [](const Args& a, std::ostream& out) {
             out << nk::format_report(nk::eab_verify_action(nk::parse_curve(a.curve))) << "\n";
         }},
        {"eab-expand", "sigma at the point O of E_{0,b}, as a series",
         [](CLI::App& s, Args& a) {
             opt_field(s, a);
             opt_prec(s, a);
             s.add_option("--b", a.b, "b")->required();
         },
         [](const Args& a, std::ostream& out) {
             const nk::Field f = field_of(a);
             out << nk::format_series(nk::eab_local_expansion(nk::parse_element(f, a.b), precision_of(a)).action())
                 << "\n";
         }},
        {"genus", "Genus of a cyclic cover z^n = f",
         [](CLI::App& s, Args& a) {
             s.add_option("--cover", a.cover, "\"COVER n=.. g0=.. branch=..\"")->required();
             s.add_option("--p", a.p, "Characteristic, to check p does not divide n");
         },
         [](const Args& a, std::ostream& out) {
             std::optional<int> p;
             if (a.p) p = as_int(*a.p, "--p");
             out << nk::superelliptic_genus(nk::parse_cover(a.cover), p) << "\n";
         }},
        {"example", "Example curves: q_curve(q,n), genus10, genus3",
         [](CLI::App& s, Args& a) { s.add_option("--name", a.name, "Example name")->required(); },
         [](const Args& a, std::ostream& out) {
             const nk::ExampleCurve ex = nk::example_curve(a.name);
             out << "EXAMPLE " << ex.name << " p=" << ex.p << " genus=" << nk::superelliptic_genus(ex.cover, ex.p)
                 << " expected=" << ex.expected_genus << "\n"
                 << nk::format_cover(ex.cover) << "\n";
         }},
        {"verify-conjugator", "Conjugator between sigma on E_{a',b'} and E_{a,b}",
         [](CLI::App& s, Args& a) {
             opt_field(s, a);
             opt_prec(s, a);
             s.add_option("--a", a.a, "a")->required();
             s.add_option("--b", a.b, "b")->required();
             s.add_option("--a2", a.a2, "a'")->required();
             s.add_option("--b2", a.b2, "b'")->required();
             s.add_option("--c", a.c_opt, "c with c^2 - c = b - b' (solved for when omitted)");
         },
         [](const Args& a, std::ostream& out) {
             const nk::Field f = field_of(a);
             const nk::FieldElement b = nk::parse_element(f, a.b), b2 = nk::parse_element(f, a.b2);
             std::optional<nk::FieldElement> c;
             if (a.c_opt) {
                 c = nk::parse_element(f, *a.c_opt);
             } else {
                 c = nk::wp_solve(b - b2);
                 if (!c) throw nk::Error("b - b' is not in wp(k); sigma_b and sigma_b' are not conjugate");
             }
             const nk::ConjugatorReport rep = nk::verify_order4_conjugator(
                 nk::parse_element(f, a.a), b, nk::parse_element(f, a.a2), b2, *c, precision_of(a));
             out << (rep.pass ? "PASS" : "FAIL " + rep.detail) << "\n"
                 << "c=" << nk::format_element(*c) << "\n"
                 << "f " << nk::format_series(rep.f) << "\n"
                 << "h " << nk::format_series(rep.h) << "\n";
             if (!rep.pass) throw nk::Error("conjugator check failed: " + rep.detail);
         }},
        {"selftest", "Run the acceptance suite",
         [](CLI::App& s, Args& a) { s.add_option("--seed", a.seed, "Seed (default fixed)"); },
         [](const Args& a, std::ostream& out) {
             if (!nk::acceptance::print_results(out, nk::acceptance::run_all(a.seed)))
                 throw nk::Error("acceptance suite has failing criteria");
         }},
    };
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"nk: automorphisms of k[[t]] over finite fields"};
    app.require_subcommand(1);
    app.fallthrough(false);
    Args args;
    const std::vector<Command> cmds = commands();
    std::vector<std::pair<CLI::App*, const Command*>> subs;
    for (const Command& c : cmds) {
        CLI::App* s = app.add_subcommand(c.name, c.help);
        c.setup(*s, args);
        subs.emplace_back(s, &c);
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }
    for (const auto& [s, c] : subs) {
        if (!s->parsed()) continue;
        try {
            c->run(args, std::cout);
            return 0;
        } catch (const UsageError& e) {
            std::cerr << "nk " << c->name << ": " << e.what() << "\n";
            return kExitUsage;
        } catch (const nk::ParseError& e) {
            std::cerr << "nk " << c->name << ": " << e.what() << "\n";
            return kExitUsage;
        } catch (const nk::Error& e) {
            std::cout.flush();
            std::cerr << "nk " << c->name << ": " << e.what() << "\n";
            return kExitDomain;
        }
    }
    return kExitUsage;
}
