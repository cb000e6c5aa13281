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

#ifndef NKAUT_ACCEPTANCE_HPP
#define NKAUT_ACCEPTANCE_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace nk::acceptance {

inline constexpr std::uint64_t kDefaultSeed = 20260101;
inline constexpr int kCriterionCount = 12;

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

/// Runs criterion id (1-based). Exceptions are caught and reported as failures.
CriterionResult run_criterion(int id, std::uint64_t seed = kDefaultSeed);
std::vector<CriterionResult> run_all(std::uint64_t seed = kDefaultSeed);

/// One line per criterion, then a summary line. Returns true iff all passed.
/// Timings are left out when with_timing is false so the output is stable.
bool print_results(std::ostream& out, const std::vector<CriterionResult>& results, bool with_timing = false);

}  // namespace nk::acceptance

#endif
