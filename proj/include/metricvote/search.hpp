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
#include <optional>
#include <string>
#include <vector>

#include "metricvote/distortion.hpp"
#include "metricvote/majority.hpp"
#include "metricvote/rules.hpp"

namespace metricvote {

/// Minimal dominant set by enumerating every candidate subset (m <= 6).
CandidateSet oracle_smith(const MajorityMatrix& m);
CandidateSet oracle_smith(const RankingProfile& profile);

/// Strongest beatpaths by enumerating every simple domination path (m <= 6).
BeatpathStrengths oracle_beatpaths(const MajorityMatrix& m);

enum class Objective { kDistance, kAb };

struct SearchConfig {
    std::size_t dimension = 1;
    std::size_t num_voters = 4;
    std::size_t num_candidates = 3;
    Rule rule = Rule::av();
    Objective objective = Objective::kDistance;
    bool global_radii = true;
    std::optional<Rational> pinned_efficiency;  // AV distance objective only
    double coordinate_range = 10.0;
    std::size_t budget = 10000;
    std::size_t patience = 500;   // iterations without improvement before a restart
    std::uint64_t seed = 1;
};

struct BoundViolation {
    ElectionInstance instance;
    DistortionValue achieved;
    DistortionValue bound;
    std::string detail;
};

struct SearchResult {
    std::optional<ElectionInstance> best;
    DistortionValue achieved;
    std::optional<DistortionValue> bound;
    std::vector<BoundViolation> violations;
    std::size_t iterations = 0;
    std::size_t restarts = 0;
};

/// Random restarts plus local moves over voter and candidate positions (and
/// radii for the ab objective), maximizing the configured distortion. Every
/// evaluated instance is checked against its analytic bound.
SearchResult adversarial_search(const SearchConfig& config);

struct LocalProfileResult {
    ApprovalProfile profile;
    DistortionValue distortion;
};

/// Max AV distance distortion over all locally consistent nonempty approval
/// profiles: each voter group picks one of its candidate distances as radius.
LocalProfileResult worst_local_profile_av(const ElectionInstance& instance,
                                          std::size_t limit = 1000000);

}  // namespace metricvote
