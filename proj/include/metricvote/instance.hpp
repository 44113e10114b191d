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

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "metricvote/types.hpp"

namespace metricvote {

using Point = std::vector<double>;

/// Pseudo-metric over voters and candidates. Either an explicit symmetric
/// matrix indexed voters-first, or points in R^k with Euclidean distance.
class MetricSpace {
public:
    enum class Kind { kMatrix, kEuclidean };

    static MetricSpace euclidean(std::size_t dimension, std::vector<Point> voter_points,
                                 std::vector<Point> candidate_points);

    /// `distances` is (g+m)x(g+m): rows 0..g-1 are voter groups, the rest candidates.
    static MetricSpace matrix(std::size_t num_groups, std::size_t num_candidates,
                              std::vector<std::vector<double>> distances);

    Kind kind() const { return kind_; }
    std::size_t num_groups() const { return num_groups_; }
    std::size_t num_candidates() const { return num_candidates_; }
    std::size_t dimension() const { return dimension_; }

    double distance(VoterId v, CandidateId c) const;
    double distance(CandidateId a, CandidateId b) const;
    double distance(VoterId a, VoterId b) const;

    const std::vector<Point>& voter_points() const { return voter_points_; }
    const std::vector<Point>& candidate_points() const { return candidate_points_; }
    const std::vector<std::vector<double>>& distances() const { return distances_; }

    /// Description of the first violated metric axiom (symmetry, zero
    /// diagonal, non-negativity, triangle inequality), if any.
    std::optional<std::string> first_defect(double tolerance) const;

private:
    MetricSpace() = default;
    double point_distance(std::size_t i, std::size_t j) const;

    Kind kind_ = Kind::kEuclidean;
    std::size_t num_groups_ = 0;
    std::size_t num_candidates_ = 0;
    std::size_t dimension_ = 0;
    std::vector<Point> voter_points_;
    std::vector<Point> candidate_points_;
    std::vector<std::vector<double>> distances_;
};

struct VoterGroup {
    Count weight = 1;
    double radius = 0.0;
};

/// Voters, candidates, a metric and per-voter acceptability radii. The
/// acceptability function is the ball of the given radius around each voter.
class ElectionInstance {
public:
    ElectionInstance(MetricSpace metric, std::vector<VoterGroup> voters, TieBreakOrder lex,
                     std::vector<std::string> candidate_names = {},
                     double tolerance = kDefaultTolerance);

    std::size_t num_groups() const { return voters_.size(); }
    std::size_t num_candidates() const { return metric_.num_candidates(); }
    /// Weighted voter count n.
    Count num_voters() const { return total_weight_; }

    double distance(VoterId v, CandidateId c) const { return metric_.distance(v, c); }
    Count weight(VoterId v) const { return voters_.at(v.index).weight; }
    double radius(VoterId v) const { return voters_.at(v.index).radius; }

    const MetricSpace& metric() const { return metric_; }
    const std::vector<VoterGroup>& voters() const { return voters_; }
    const TieBreakOrder& lex() const { return lex_; }
    double tolerance() const { return tolerance_; }

    const std::vector<std::string>& candidate_names() const { return names_; }
    const std::string& name(CandidateId c) const { return names_.at(c.index); }
    std::optional<CandidateId> find_candidate(std::string_view name) const;

    std::vector<VoterId> voter_ids() const;
    std::vector<CandidateId> candidate_ids() const;

    ElectionInstance with_radii(const std::vector<double>& radii) const;
    ElectionInstance with_common_radius(double radius) const;

private:
    MetricSpace metric_;
    std::vector<VoterGroup> voters_;
    TieBreakOrder lex_;
    std::vector<std::string> names_;
    double tolerance_;
    Count total_weight_ = 0;
};

/// One strict order per voter group, most preferred first.
class RankingProfile {
public:
    RankingProfile(std::size_t num_candidates, std::vector<std::vector<CandidateId>> orders,
                   std::vector<Count> weights = {});

    std::size_t num_candidates() const { return num_candidates_; }
    std::size_t num_groups() const { return orders_.size(); }
    Count num_voters() const { return total_weight_; }

    const std::vector<CandidateId>& order(VoterId v) const { return orders_.at(v.index); }
    const std::vector<std::vector<CandidateId>>& orders() const { return orders_; }
    Count weight(VoterId v) const { return weights_.at(v.index); }
    const std::vector<Count>& weights() const { return weights_; }

    std::size_t position(VoterId v, CandidateId c) const {
        return positions_[v.index][c.index];
    }
    bool prefers(VoterId v, CandidateId a, CandidateId b) const {
        return position(v, a) < position(v, b);
    }

    /// The profile with candidate ids relabelled by `perm` (c -> perm[c]).
    RankingProfile relabeled(const std::vector<CandidateId>& perm) const;

private:
    std::size_t num_candidates_;
    std::vector<std::vector<CandidateId>> orders_;
    std::vector<Count> weights_;
    std::vector<std::vector<std::size_t>> positions_;
    Count total_weight_ = 0;
};

class ApprovalProfile {
public:
    ApprovalProfile(std::size_t num_candidates, std::vector<CandidateSet> approvals,
                    std::vector<Count> weights = {});

    std::size_t num_candidates() const { return num_candidates_; }
    std::size_t num_groups() const { return approvals_.size(); }
    Count num_voters() const { return total_weight_; }

    const CandidateSet& approvals(VoterId v) const { return approvals_.at(v.index); }
    Count weight(VoterId v) const { return weights_.at(v.index); }
    const std::vector<Count>& weights() const { return weights_; }

    /// Weighted number of voters approving c.
    Count approval_count(CandidateId c) const;
    bool is_nonempty() const;

    friend bool operator==(const ApprovalProfile&, const ApprovalProfile&) = default;

private:
    std::size_t num_candidates_;
    std::vector<CandidateSet> approvals_;
    std::vector<Count> weights_;
    Count total_weight_ = 0;
};

/// Candidates sorted by distance; candidates within tolerance of each other
/// share a tier. Tiers are ordered nearest first, members by tie-break order.
std::vector<std::vector<CandidateId>> distance_tiers(const ElectionInstance& instance,
                                                     VoterId voter);

/// Canonical induced ranking: increasing distance, ties broken by the
/// instance's tie-break order.
RankingProfile induced_ranking(const ElectionInstance& instance);

inline constexpr std::size_t kDefaultEnumerationLimit = 100000;

/// Every strict order consistent with the voter's distances.
std::vector<std::vector<CandidateId>> consistent_rankings(
    const ElectionInstance& instance, VoterId voter,
    std::size_t limit = kDefaultEnumerationLimit);

/// Number of orders consistent_rankings would produce (saturating).
std::size_t count_consistent_rankings(const ElectionInstance& instance, VoterId voter);

ApprovalProfile truthful_approvals(const ElectionInstance& instance);
ApprovalProfile approvals_at_radius(const ElectionInstance& instance, double radius);
ApprovalProfile approvals_with_radii(const ElectionInstance& instance,
                                     const std::vector<double>& radii);

bool is_locally_consistent(const ElectionInstance& instance, const ApprovalProfile& profile);
bool is_globally_consistent(const ElectionInstance& instance, const ApprovalProfile& profile);

/// Fraction of voters approving c_opt, as an exact rational.
Rational efficiency_fraction(const ElectionInstance& instance, const ApprovalProfile& profile,
                             CandidateId c_opt);

std::vector<VoterId> approver_set(const ApprovalProfile& profile, CandidateId c);

/// Distance from the voter to its nearest candidate.
double nearest_distance(const ElectionInstance& instance, VoterId voter);

}  // namespace metricvote
