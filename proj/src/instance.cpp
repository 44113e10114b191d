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

#include "metricvote/instance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

namespace metricvote {

namespace {

bool finite_nonnegative(double x) { return std::isfinite(x) && x >= 0.0; }

void require_weights(const std::vector<Count>& weights, std::size_t groups) {
    if (weights.size() != groups) throw InvalidInstanceError("weight count does not match group count");
    for (Count w : weights)
        if (w < 1) throw InvalidInstanceError("voter group weights must be at least 1");
}

}  // namespace

MetricSpace MetricSpace::euclidean(std::size_t dimension, std::vector<Point> voter_points,
                                   std::vector<Point> candidate_points) {
    if (dimension == 0) throw InvalidInstanceError("euclidean metric needs dimension >= 1");
    for (const auto* pts : {&voter_points, &candidate_points})
        for (const Point& p : *pts) {
            if (p.size() != dimension)
                throw InvalidInstanceError("point has " + std::to_string(p.size()) +
                                           " coordinates, expected " + std::to_string(dimension));
            for (double x : p)
                if (!std::isfinite(x)) throw InvalidInstanceError("non-finite coordinate");
        }
    MetricSpace m;
    m.kind_ = Kind::kEuclidean;
    m.dimension_ = dimension;
    m.num_groups_ = voter_points.size();
    m.num_candidates_ = candidate_points.size();
    m.voter_points_ = std::move(voter_points);
    m.candidate_points_ = std::move(candidate_points);
    return m;
}

MetricSpace MetricSpace::matrix(std::size_t num_groups, std::size_t num_candidates,
                                std::vector<std::vector<double>> distances) {
    const std::size_t size = num_groups + num_candidates;
    if (distances.size() != size)
        throw InvalidInstanceError("distance matrix has " + std::to_string(distances.size()) +
                                   " rows, expected " + std::to_string(size));
    for (std::size_t i = 0; i < size; ++i) {
        if (distances[i].size() != size)
            throw InvalidInstanceError("distance matrix row " + std::to_string(i) +
                                       " has wrong length");
        for (double x : distances[i])
            if (!finite_nonnegative(x))
                throw InvalidInstanceError("distance matrix row " + std::to_string(i) +
                                           " has a negative or non-finite entry");
    }
    MetricSpace m;
    m.kind_ = Kind::kMatrix;
    m.num_groups_ = num_groups;
    m.num_candidates_ = num_candidates;
    m.distances_ = std::move(distances);
    return m;
}

double MetricSpace::point_distance(std::size_t i, std::size_t j) const {
    if (kind_ == Kind::kMatrix) return distances_[i][j];
    const Point& a = i < num_groups_ ? voter_points_[i] : candidate_points_[i - num_groups_];
    const Point& b = j < num_groups_ ? voter_points_[j] : candidate_points_[j - num_groups_];
    double s = 0.0;
    for (std::size_t k = 0; k < dimension_; ++k) s += (a[k] - b[k]) * (a[k] - b[k]);
    return std::sqrt(s);
}

double MetricSpace::distance(VoterId v, CandidateId c) const {
    return point_distance(v.index, num_groups_ + c.index);
}

double MetricSpace::distance(CandidateId a, CandidateId b) const {
    return point_distance(num_groups_ + a.index, num_groups_ + b.index);
}

double MetricSpace::distance(VoterId a, VoterId b) const {
    return point_distance(a.index, b.index);
}

std::optional<std::string> MetricSpace::first_defect(double tolerance) const {
    const std::size_t size = num_groups_ + num_candidates_;
    auto label = [&](std::size_t i) {
        return i < num_groups_ ? "voter " + std::to_string(i)
                               : "candidate " + std::to_string(i - num_groups_);
    };
    for (std::size_t i = 0; i < size; ++i) {
        if (std::abs(point_distance(i, i)) > tolerance)
            return "nonzero self-distance at " + label(i);
        for (std::size_t j = i + 1; j < size; ++j) {
            double dij = point_distance(i, j);
            double dji = point_distance(j, i);
            if (dij < -tolerance || dji < -tolerance)
                return "negative distance between " + label(i) + " and " + label(j);
            if (std::abs(dij - dji) > tolerance) {
                std::ostringstream out;
                out.precision(17);
                out << "asymmetric distance between " << label(i) << " and " << label(j) << " ("
                    << dij << " vs " << dji << ")";
                return out.str();
            }
        }
    }
    if (kind_ == Kind::kEuclidean) return std::nullopt;
    for (std::size_t x = 0; x < size; ++x)
        for (std::size_t y = 0; y < size; ++y)
            for (std::size_t z = 0; z < size; ++z)
                if (distances_[x][z] > distances_[x][y] + distances_[y][z] + tolerance)
                    return "triangle inequality fails for " + label(x) + ", " + label(y) + ", " +
                           label(z);
    return std::nullopt;
}

ElectionInstance::ElectionInstance(MetricSpace metric, std::vector<VoterGroup> voters,
                                   TieBreakOrder lex, std::vector<std::string> candidate_names,
                                   double tolerance)
    : metric_(std::move(metric)),
      voters_(std::move(voters)),
      lex_(std::move(lex)),
      names_(std::move(candidate_names)),
      tolerance_(tolerance) {
    const std::size_t m = metric_.num_candidates();
    if (voters_.empty()) throw InvalidInstanceError("instance has no voters");
    if (m == 0) throw InvalidInstanceError("instance has no candidates");
    if (voters_.size() != metric_.num_groups())
        throw InvalidInstanceError("metric covers " + std::to_string(metric_.num_groups()) +
                                   " voters but " + std::to_string(voters_.size()) + " were given");
    if (lex_.size() != m) throw InvalidInstanceError("tie-break order has the wrong length");
    if (!(tolerance_ >= 0.0)) throw InvalidInstanceError("tolerance must be non-negative");
    if (names_.empty())
        for (std::size_t c = 0; c < m; ++c) names_.push_back("c" + std::to_string(c + 1));
    if (names_.size() != m) throw InvalidInstanceError("candidate name count does not match m");
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b)
            if (names_[a] == names_[b])
                throw InvalidInstanceError("duplicate candidate name '" + names_[a] + "'");
    for (std::size_t i = 0; i < voters_.size(); ++i) {
        if (voters_[i].weight < 1)
            throw InvalidInstanceError("voter " + std::to_string(i) + " has weight below 1");
        if (!finite_nonnegative(voters_[i].radius))
            throw InvalidInstanceError("voter " + std::to_string(i) +
                                       " has a negative or non-finite radius");
        total_weight_ += voters_[i].weight;
    }
}

std::optional<CandidateId> ElectionInstance::find_candidate(std::string_view name) const {
    for (std::size_t c = 0; c < names_.size(); ++c)
        if (names_[c] == name) return CandidateId{c};
    return std::nullopt;
}

std::vector<VoterId> ElectionInstance::voter_ids() const {
    std::vector<VoterId> ids(voters_.size());
    for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = VoterId{i};
    return ids;
}

std::vector<CandidateId> ElectionInstance::candidate_ids() const {
    std::vector<CandidateId> ids(num_candidates());
    for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = CandidateId{i};
    return ids;
}

ElectionInstance ElectionInstance::with_radii(const std::vector<double>& radii) const {
    if (radii.size() != voters_.size()) throw InvalidInstanceError("radius count mismatch");
    std::vector<VoterGroup> voters = voters_;
    for (std::size_t i = 0; i < voters.size(); ++i) voters[i].radius = radii[i];
    return ElectionInstance(metric_, std::move(voters), lex_, names_, tolerance_);
}

ElectionInstance ElectionInstance::with_common_radius(double radius) const {
    return with_radii(std::vector<double>(voters_.size(), radius));
}

RankingProfile::RankingProfile(std::size_t num_candidates,
                               std::vector<std::vector<CandidateId>> orders,
                               std::vector<Count> weights)
    : num_candidates_(num_candidates), orders_(std::move(orders)), weights_(std::move(weights)) {
    if (weights_.empty()) weights_.assign(orders_.size(), 1);
    require_weights(weights_, orders_.size());
    positions_.reserve(orders_.size());
    for (const auto& order : orders_) {
        std::vector<std::size_t> pos(num_candidates_, num_candidates_);
        if (order.size() != num_candidates_)
            throw InvalidInstanceError("ranking is not a permutation of the candidates");
        for (std::size_t k = 0; k < order.size(); ++k) {
            std::size_t c = order[k].index;
            if (c >= num_candidates_ || pos[c] != num_candidates_)
                throw InvalidInstanceError("ranking is not a permutation of the candidates");
            pos[c] = k;
        }
        positions_.push_back(std::move(pos));
    }
    for (Count w : weights_) total_weight_ += w;
}

RankingProfile RankingProfile::relabeled(const std::vector<CandidateId>& perm) const {
    std::vector<std::vector<CandidateId>> orders = orders_;
    for (auto& order : orders)
        for (auto& c : order) c = perm.at(c.index);
    return RankingProfile(num_candidates_, std::move(orders), weights_);
}

ApprovalProfile::ApprovalProfile(std::size_t num_candidates, std::vector<CandidateSet> approvals,
                                 std::vector<Count> weights)
    : num_candidates_(num_candidates), approvals_(std::move(approvals)), weights_(std::move(weights)) {
    if (weights_.empty()) weights_.assign(approvals_.size(), 1);
    require_weights(weights_, approvals_.size());
    for (const auto& s : approvals_)
        if (s.universe() != num_candidates_)
            throw InvalidInstanceError("approval set over the wrong candidate universe");
    for (Count w : weights_) total_weight_ += w;
}

Count ApprovalProfile::approval_count(CandidateId c) const {
    Count k = 0;
    for (std::size_t i = 0; i < approvals_.size(); ++i)
        if (approvals_[i].contains(c)) k += weights_[i];
    return k;
}

bool ApprovalProfile::is_nonempty() const {
    return std::none_of(approvals_.begin(), approvals_.end(),
                        [](const CandidateSet& s) { return s.empty(); });
}

std::vector<std::vector<CandidateId>> distance_tiers(const ElectionInstance& instance,
                                                     VoterId voter) {
    const TieBreakOrder& lex = instance.lex();
    std::vector<std::pair<double, CandidateId>> by_distance;
    for (CandidateId c : instance.candidate_ids())
        by_distance.emplace_back(instance.distance(voter, c), c);
    std::sort(by_distance.begin(), by_distance.end(), [&](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return lex.prefers(a.second, b.second);
    });
    std::vector<std::vector<CandidateId>> tiers;
    double last = 0.0;
    for (const auto& [d, c] : by_distance) {
        if (tiers.empty() || d - last > instance.tolerance()) tiers.emplace_back();
        tiers.back().push_back(c);
        last = d;
    }
    for (auto& tier : tiers)
        std::sort(tier.begin(), tier.end(),
                  [&](CandidateId a, CandidateId b) { return lex.prefers(a, b); });
    return tiers;
}

RankingProfile induced_ranking(const ElectionInstance& instance) {
    std::vector<std::vector<CandidateId>> orders;
    std::vector<Count> weights;
    for (VoterId v : instance.voter_ids()) {
        std::vector<CandidateId> order;
        for (const auto& tier : distance_tiers(instance, v))
            order.insert(order.end(), tier.begin(), tier.end());
        orders.push_back(std::move(order));
        weights.push_back(instance.weight(v));
    }
    return RankingProfile(instance.num_candidates(), std::move(orders), std::move(weights));
}

std::size_t count_consistent_rankings(const ElectionInstance& instance, VoterId voter) {
    constexpr std::size_t kMax = std::numeric_limits<std::size_t>::max();
    std::size_t total = 1;
    for (const auto& tier : distance_tiers(instance, voter))
        for (std::size_t k = 2; k <= tier.size(); ++k) {
            if (total > kMax / k) return kMax;
            total *= k;
        }
    return total;
}

std::vector<std::vector<CandidateId>> consistent_rankings(const ElectionInstance& instance,
                                                          VoterId voter, std::size_t limit) {
    std::size_t count = count_consistent_rankings(instance, voter);
    if (count > limit)
        throw SizeGuardError("voter " + std::to_string(voter.index) + " has " +
                             std::to_string(count) + " consistent rankings, limit is " +
                             std::to_string(limit));
    std::vector<std::vector<CandidateId>> result{{}};
    for (auto tier : distance_tiers(instance, voter)) {
        std::vector<std::vector<CandidateId>> perms;
        std::sort(tier.begin(), tier.end());
        do {
            perms.push_back(tier);
        } while (std::next_permutation(tier.begin(), tier.end()));
        std::vector<std::vector<CandidateId>> next;
        next.reserve(result.size() * perms.size());
        for (const auto& prefix : result)
            for (const auto& p : perms) {
                auto order = prefix;
                order.insert(order.end(), p.begin(), p.end());
                next.push_back(std::move(order));
            }
        result = std::move(next);
    }
    return result;
}

ApprovalProfile approvals_with_radii(const ElectionInstance& instance,
                                     const std::vector<double>& radii) {
    if (radii.size() != instance.num_groups()) throw InvalidInstanceError("radius count mismatch");
    std::vector<CandidateSet> sets;
    std::vector<Count> weights;
    for (VoterId v : instance.voter_ids()) {
        CandidateSet s(instance.num_candidates());
        for (CandidateId c : instance.candidate_ids())
            if (instance.distance(v, c) <= radii[v.index] + instance.tolerance()) s.insert(c);
        if (s.empty()) throw EmptyApprovalError(v);
        sets.push_back(std::move(s));
        weights.push_back(instance.weight(v));
    }
    return ApprovalProfile(instance.num_candidates(), std::move(sets), std::move(weights));
}

ApprovalProfile truthful_approvals(const ElectionInstance& instance) {
    std::vector<double> radii;
    for (const auto& g : instance.voters()) radii.push_back(g.radius);
    return approvals_with_radii(instance, radii);
}

ApprovalProfile approvals_at_radius(const ElectionInstance& instance, double radius) {
    return approvals_with_radii(instance, std::vector<double>(instance.num_groups(), radius));
}

bool is_locally_consistent(const ElectionInstance& instance, const ApprovalProfile& profile) {
    const double tol = instance.tolerance();
    for (VoterId v : instance.voter_ids()) {
        const CandidateSet& s = profile.approvals(v);
        for (CandidateId a : s.members())
            for (CandidateId b : instance.candidate_ids())
                if (!s.contains(b) && instance.distance(v, b) <= instance.distance(v, a) + tol)
                    return false;
    }
    return true;
}

bool is_globally_consistent(const ElectionInstance& instance, const ApprovalProfile& profile) {
    double max_approved = -std::numeric_limits<double>::infinity();
    double min_rejected = std::numeric_limits<double>::infinity();
    for (VoterId v : instance.voter_ids())
        for (CandidateId c : instance.candidate_ids()) {
            double d = instance.distance(v, c);
            if (profile.approvals(v).contains(c))
                max_approved = std::max(max_approved, d);
            else
                min_rejected = std::min(min_rejected, d);
        }
    return min_rejected > max_approved + instance.tolerance();
}

Rational efficiency_fraction(const ElectionInstance& instance, const ApprovalProfile& profile,
                             CandidateId c_opt) {
    return Rational(profile.approval_count(c_opt), instance.num_voters());
}

std::vector<VoterId> approver_set(const ApprovalProfile& profile, CandidateId c) {
    std::vector<VoterId> out;
    for (std::size_t i = 0; i < profile.num_groups(); ++i)
        if (profile.approvals(VoterId{i}).contains(c)) out.push_back(VoterId{i});
    return out;
}

double nearest_distance(const ElectionInstance& instance, VoterId voter) {
    double best = std::numeric_limits<double>::infinity();
    for (CandidateId c : instance.candidate_ids())
        best = std::min(best, instance.distance(voter, c));
    return best;
}

}  // namespace metricvote
