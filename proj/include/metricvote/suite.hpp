// Copyright 2026 The metricvote Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace metricvote {

struct Check {
    std::string id;
    std::string name;
    bool passed = false;
    std::string expected;
    std::string achieved;
};

struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<Check> checks;

    bool passed() const;
};

/// The ten acceptance criteria, one check each. `seed` drives the random
/// corpora and the adversarial searches.
SuiteReport run_acceptance_suite(std::uint64_t seed = 1);

/// Seeded property checks over random 1D integer instances, one check per
/// property. Violations name the offending instance or profile.
SuiteReport run_property_suite(std::uint64_t seed = 1, std::size_t instances = 1000);

/// One line per check; stable for a given report.
std::string render_report(const SuiteReport& report);

}  // namespace metricvote
