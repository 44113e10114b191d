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

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "metricvote/instance.hpp"
#include "metricvote/rules.hpp"

namespace metricvote {

/// Non-negative extended real with an optional exact rational value.
class DistortionValue {
public:
    DistortionValue() = default;

    static DistortionValue infinite();
    static DistortionValue exact(Rational r);
    static DistortionValue approximate(double v);
    /// num / den with a/0 = inf for a > 0 and 0/0 = 1 (flagged). Sums
    /// within `tolerance` of zero count as zero; integral sums stay exact.
    static DistortionValue ratio(double num, double den, double tolerance = kDefaultTolerance);

    bool is_infinite() const { return infinite_; }
    double value() const {
        return infinite_ ? std::numeric_limits<double>::infinity() : value_;
    }
    const std::optional<Rational>& exact_value() const { return exact_; }
    bool zero_over_zero() const { return zero_over_zero_; }

    /// "inf", an exact fraction such as "7/8", or a decimal.
    std::string render() const;
    /// "inf" or a decimal with full precision.
    std::string decimal() const;

    friend bool operator==(const DistortionValue& a, const DistortionValue& b);

private:
    bool infinite_ = false;
    double value_ = 0.0;
    std::optional<Rational> exact_;
    bool zero_over_zero_ = false;
};

/// value <= bound, exactly when both are exact, else with slack `tolerance`.
bool within_bound(const DistortionValue& value, const DistortionValue& bound,
                  double tolerance = kDefaultTolerance);

struct DistanceOptimum {
    CandidateId candidate;
    double total = 0.0;
};

struct AcceptabilityOptimum {
    CandidateId candidate;
    Count approvals = 0;
};

/// Weighted sum of voter distances to c.
double total_distance(const ElectionInstance& instance, CandidateId c);

/// argmin of total distance; sums within tolerance tie and go to the
/// tie-break order.
DistanceOptimum optimal_by_distance(const ElectionInstance& instance);
AcceptabilityOptimum optimal_by_acceptability(const ElectionInstance& instance);

DistortionValue distance_distortion(const ElectionInstance& instance, CandidateId winner);
/// Approval shortfall of the winner against the acceptability optimum,
/// divided by n, under the instance's truthful approvals.
DistortionValue ab_distortion(const ElectionInstance& instance, CandidateId winner);

struct WorstProfileResult {
    DistortionValue value;
    CandidateId winner;          // winner in the maximizing profile
    std::size_t profiles = 0;    // profiles examined
    bool fell_back = false;      // enumeration too large, canonical profile used
};

/// Max ab-distortion over every ranking profile consistent with the metric.
/// Each voter group picks one consistent order for all its members.
WorstProfileResult worst_ranking_ab_distortion(const ElectionInstance& instance, const Rule& rule,
                                               std::size_t limit = kDefaultEnumerationLimit,
                                               bool allow_fallback = true);

struct SweepInterval {
    double lower = 0.0;
    double upper = std::numeric_limits<double>::infinity();
    Rational efficiency;
    CandidateId winner;
    DistortionValue distortion;
};

/// AV winner and distance distortion for every common radius, one entry per
/// interval between consecutive voter-candidate distances (left endpoint),
/// starting at the smallest radius that leaves no ball empty.
std::vector<SweepInterval> av_distortion_sweep(const ElectionInstance& instance);

/// The interval with the largest distortion (first one on ties).
const SweepInterval& sweep_maximum(const std::vector<SweepInterval>& sweep);

/// Worst AV distance distortion over globally consistent p-efficient instances.
DistortionValue av_bound(const Rational& p);

/// Each voter approves the distance-optimal candidate and everything at
/// least as close.
ApprovalProfile best_case_av_profile(const ElectionInstance& instance);

struct RadiusProfile {
    double radius = 0.0;
    ApprovalProfile profile;
};

/// Smallest common radius at which at least ceil(n/4) voters approve the
/// distance-optimal candidate.
RadiusProfile quarter_radius_profile(const ElectionInstance& instance);

/// Ab-distortion upper bounds.
DistortionValue condorcet_bound();
DistortionValue smith_bound(std::size_t smith_size);
DistortionValue scoring_bound(const ScoringVector& s);
DistortionValue plurality_bound(std::size_t m);
DistortionValue stv_bound(std::size_t m);

/// The analytic ab-distortion bound that applies to the rule on this
/// instance, if any. Copeland only has one when a Condorcet winner exists.
std::optional<DistortionValue> applicable_ab_bound(const Rule& rule,
                                                   const ElectionInstance& instance);

}  // namespace metricvote
