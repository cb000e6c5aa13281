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

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct Outcome {
    int status = -1;
    std::string out;
};

// Runs nk with the given argument string; stderr is merged when asked.
Outcome nk(const std::string& args, bool merge_stderr = false) {
    const std::string cmd = std::string(NK_BINARY) + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
    Outcome r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) return r;
    std::array<char, 4096> buf{};
    while (std::fgets(buf.data(), static_cast<int>(buf.size()), pipe) != nullptr) r.out += buf.data();
    const int st = pclose(pipe);
    r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

TEST(Cli, FieldMake) {
    const Outcome r = nk("field-make --p 2 --r 2");
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "GF 2 2 1,1,1\n");
}

TEST(Cli, WpSolve) {
    EXPECT_EQ(nk("wp-solve --field 'GF 2 2 1,1,1' --a 1,0").out, "0,1\n");
    const Outcome none = nk("wp-solve --field 'GF 2 1 0,1' --a 1");
    EXPECT_EQ(none.status, 0);
    EXPECT_EQ(none.out, "none\n");
}

TEST(Cli, SigmaBAndProfile) {
    const Outcome s = nk("sigma-b --field 'GF 2 1 1,1' --b 0 --prec 32");
    ASSERT_EQ(s.status, 0);
    const std::string ser = first_line(s.out);
    EXPECT_EQ(ser.rfind("SER v=1 N=32 1 1 0 1", 0), 0U) << ser;
    const Outcome p = nk("profile --field 'GF 2 1 1,1' --order 4 --series '" + ser + "'");
    EXPECT_EQ(p.status, 0);
    EXPECT_EQ(p.out, "PROFILE p=2 n=2 lower=1,3 upper=1,2 i=1,1 different=8\n");
}

TEST(Cli, SeriesOperationsRoundTrip) {
    const std::string f = "'SER v=1 N=8 1 1 0 0 0 0 0'";
    const Outcome inv = nk("invert --series " + f);
    ASSERT_EQ(inv.status, 0);
    EXPECT_EQ(inv.out, "SER v=1 N=8 1 1 0 1 0 0 0\n");
    const Outcome back = nk("compose --f " + f + " --g '" + first_line(inv.out) + "'");
    EXPECT_EQ(back.out, "SER v=1 N=8 1 0 0 0 0 0 0\n");
    // (t + t^2)^2 = t^2 + t^4 in characteristic 2.
    EXPECT_EQ(nk("power --series " + f + " --k 2").out, "SER v=1 N=8 1 0 0 1 0 0 0\n");
}

TEST(Cli, OrderAndNormalForm) {
    const std::string g = "'SER v=1 N=20 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1'";
    EXPECT_EQ(nk("order --series " + g).out, "ORDER k=2 N=20\n");
    EXPECT_EQ(nk("normal-form --series " + g).out, "NORMAL m=1 c=1\n");
    EXPECT_EQ(nk("make-order-p --m 1 --c 1 --prec 20").out, first_line(nk("power --series " + g + " --k 1").out) + "\n");
    EXPECT_EQ(nk("conj-test-p --series " + g + " --other " + g).out, "true\n");
    EXPECT_EQ(nk("order --series 'SER v=1 N=20 1 0 1 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0' --bound 8").out,
              "ORDER k=none N=20\n");
}

TEST(Cli, Breaks) {
    EXPECT_EQ(nk("valid-breaks --p 2 --breaks 1,2").out, "true\n");
    const Outcome bad = nk("valid-breaks --p 2 --breaks 1,4");
    EXPECT_EQ(bad.status, 0);
    EXPECT_EQ(bad.out.rfind("false ", 0), 0U);
    EXPECT_EQ(nk("enum-breaks --p 2 --n 2 --max 4").out, "1,2 different=8\n1,3 different=10\n");
    EXPECT_EQ(nk("bound-different --p 3 --n 2").out, "28\n");
    EXPECT_EQ(nk("hkg-genus --order 4 --different 8").out, "HKG genus=1 integral=true\n");
    EXPECT_EQ(nk("bounds-genus --p 2 --n 2 --d 3").out.rfind("BOUNDS upper=4 lower=1 ", 0), 0U);
}

TEST(Cli, ArtinSchreier) {
    EXPECT_EQ(nk("as-series --series 'SER v=2 N=9 1 1 0 0 0 0 0'").out, "SER v=2 N=9 1 1 1 0 1 0 1\n");
}

TEST(Cli, SigmaConj) {
    EXPECT_EQ(nk("sigma-conj --b 0 --b2 1").out, "false\n");
    EXPECT_EQ(nk("sigma-conj --field 'GF 2 2 1,1,1' --b 0 --b2 1,0").out, "true\n");
}

TEST(Cli, Curves) {
    const Outcome pts = nk("eab-points --curve 'EAB GF 2 1 0,1 a=0 b=0'");
    EXPECT_EQ(pts.status, 0);
    EXPECT_EQ(pts.out, "w=0 z=0\nw=0 z=1\nw=1 z=0\nw=1 z=1\nO\n");
    EXPECT_EQ(nk("eab-verify --curve 'EAB GF 2 2 1,1,1 a=0,1 b=1,1'").out, "PASS\n");
    const Outcome e = nk("eab-expand --b 0 --prec 32");
    EXPECT_EQ(e.out, nk("sigma-b --b 0 --prec 32").out);
}

TEST(Cli, Genus) {
    EXPECT_EQ(nk("genus --cover 'COVER n=4 g0=0 branch=1,1,1,-3'").out, "3\n");
    EXPECT_EQ(nk("genus --cover 'COVER n=4 g0=0 branch=1,1,1,-3' --p 2").status, 1);
    const Outcome ex = nk("example --name genus10");
    EXPECT_EQ(ex.status, 0);
    EXPECT_EQ(first_line(ex.out).rfind("EXAMPLE genus10 p=2 genus=10 expected=10", 0), 0U) << ex.out;
}

TEST(Cli, Conjugator) {
    const Outcome r = nk("verify-conjugator --field 'GF 2 2 1,1,1' --a 0 --b 0 --a2 1 --b2 1 --prec 16");
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(first_line(r.out), "PASS");
    EXPECT_EQ(nk("verify-conjugator --a 0 --b 0 --a2 0 --b2 1").status, 1);
}

TEST(Cli, Dispersal) {
    const Outcome r = nk("dispersal --field 'GF 3 1 0,1' --series 'SER v=1 N=5 1 1 0 0' --m 2");
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(first_line(r.out).rfind("SER v=1 N=9 1 0 2 ", 0), 0U) << r.out;
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(nk("").status, 2);
    EXPECT_EQ(nk("no-such-command").status, 2);
    EXPECT_EQ(nk("sigma-b").status, 2);
    EXPECT_EQ(nk("sigma-b --b 0 --prec x").status, 2);
    EXPECT_EQ(nk("sigma-b --field 'GF 2 2' --b 0").status, 2);
    const Outcome dom = nk("sigma-b --field 'GF 3 1 0,1' --b 0", true);
    EXPECT_EQ(dom.status, 1);
    EXPECT_EQ(dom.out.find('\n'), dom.out.size() - 1) << dom.out;
    EXPECT_EQ(nk("field-make --p 4").status, 1);
    EXPECT_EQ(nk("hkg-genus --order 6 --different 2").status, 1);
}

TEST(Cli, SelftestIsDeterministic) {
    const Outcome a = nk("selftest --seed 7");
    const Outcome b = nk("selftest --seed 7");
    EXPECT_EQ(a.out, b.out);
    EXPECT_NE(a.out.find("criteria passed"), std::string::npos);
}
