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

#include "metricvote/distortion.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "metricvote/majority.hpp"

namespace metricvote {

namespace {

constexpr double kExactLimit = 9.0e15;

std::optional<Count> as_integer(double x, double tolerance) {
    if (!(std::abs(x) < kExactLimit)) return std::nullopt;
    double r = std::round(x);
    if (std::abs(x - r) > tolerance) return std::nullopt;
    return static_cast<Count>(r);
}

std::string shortest(double x) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, ptr);
}

double to_double(const Rational& r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

}  // namespace

DistortionValue DistortionValue::infinite() {
    DistortionValue v;
    v.infinite_ = true;
    return v;
}

DistortionValue DistortionValue::exact(Rational r) {
    DistortionValue v;
    v.value_ = to_double(r);
    v.exact_ = r;
    return v;
}

DistortionValue DistortionValue::approximate(double x) {
    if (std::isinf(x)) return infinite();
    DistortionValue v;
    v.value_ = x;
    return v;
}

DistortionValue DistortionValue::ratio(double num, double den, double tolerance) {
    const bool num_zero = std::abs(num) <= tolerance;
    const bool den_zero = std::abs(den) <= tolerance;
    if (den_zero && num_zero) {
        DistortionValue v = exact(Rational(1));
        v.zero_over_zero_ = true;
        return v;
    }
    if (den_zero) return infinite();
    auto n = as_integer(num, tolerance);
    auto d = as_integer(den, tolerance);
    if (n && d) return exact(Rational(*n, *d));
    return approximate(num / den);
}

std::string DistortionValue::render() const {
    if (infinite_) return "inf";
    if (exact_) return to_string(*exact_);
    return shortest(value_);
}

std::string DistortionValue::decimal() const {
    return infinite_ ? "inf" : shortest(value_);
}

bool operator==(const DistortionValue& a, const DistortionValue& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    if (a.exact_ && b.exact_) return *a.exact_ == *b.exact_;
    return a.value_ == b.value_;
}

bool within_bound(const DistortionValue& value, const DistortionValue& bound, double tolerance) {
    if (bound.is_infinite()) return true;
    if (value.is_infinite()) return false;
    if (value.exact_value() && bound.exact_value()) return *value.exact_value() <= *bound.exact_value();
    return value.value() <= bound.value() + tolerance;
}

double total_distance(const ElectionInstance& instance, CandidateId c) {
    double sum = 0.0;
    for (VoterId v : instance.voter_ids())
        sum += static_cast<double>(instance.weight(v)) * instance.distance(v, c);
    return sum;
}

DistanceOptimum optimal_by_distance(const ElectionInstance& instance) {
    std::vector<double> totals;
    for (CandidateId c : instance.candidate_ids()) totals.push_back(total_distance(instance, c));
    const double best = *std::min_element(totals.begin(), totals.end());
    const double slack = instance.tolerance() * static_cast<double>(instance.num_voters());
    std::vector<CandidateId> tied;
    for (std::size_t c = 0; c < totals.size(); ++c)
        if (totals[c] <= best + slack) tied.push_back(CandidateId{c});
    CandidateId winner = instance.lex().best(tied);
    return {winner, totals[winner.index]};
}

AcceptabilityOptimum optimal_by_acceptability(const ElectionInstance& instance) {
    const ApprovalProfile approvals = truthful_approvals(instance);
    Count best = -1;
    std::vector<CandidateId> tied;
    for (CandidateId c : instance.candidate_ids()) {
        Count k = approvals.approval_count(c);
        if (k > best) {
            best = k;
            tied.clear();
        }
        if (k == best) tied.push_back(c);
    }
    return {instance.lex().best(tied), best};
}

DistortionValue distance_distortion(const ElectionInstance& instance, CandidateId winner) {
    const double slack = instance.tolerance() * static_cast<double>(instance.num_voters());
    return DistortionValue::ratio(total_distance(instance, winner),
                                  optimal_by_distance(instance).total, slack);
}

DistortionValue ab_distortion(const ElectionInstance& instance, CandidateId winner) {
    const ApprovalProfile approvals = truthful_approvals(instance);
    const AcceptabilityOptimum opt = optimal_by_acceptability(instance);
    return DistortionValue::exact(
        Rational(opt.approvals - approvals.approval_count(winner), instance.num_voters()));
}

WorstProfileResult worst_ranking_ab_distortion(const ElectionInstance& instance, const Rule& rule,
                                               std::size_t limit, bool allow_fallback) {
    if (!rule.uses_rankings()) {
        CandidateId w = apply(rule, instance).winner;
        return {ab_distortion(instance, w), w, 1, false};
    }
    std::size_t total = 1;
    bool too_many = false;
    for (VoterId v : instance.voter_ids()) {
        std::size_t k = count_consistent_rankings(instance, v);
        if (k > limit || total > limit / k) {
            too_many = true;
            break;
        }
        total *= k;
    }
    if (too_many) {
        if (!allow_fallback)
            throw SizeGuardError("consistent ranking profiles exceed the limit of " +
                                 std::to_string(limit));
        CandidateId w = apply(rule, instance).winner;
        return {ab_distortion(instance, w), w, 1, true};
    }

    std::vector<std::vector<std::vector<CandidateId>>> options;
    std::vector<Count> weights;
    for (VoterId v : instance.voter_ids()) {
        options.push_back(consistent_rankings(instance, v, limit));
        weights.push_back(instance.weight(v));
    }
    const ApprovalProfile approvals = truthful_approvals(instance);
    const Count best_count = optimal_by_acceptability(instance).approvals;

    WorstProfileResult result;
    std::vector<std::size_t> pick(options.size(), 0);
    Count worst_shortfall = -1;
    while (true) {
        std::vector<std::vector<CandidateId>> orders;
        for (std::size_t i = 0; i < options.size(); ++i) orders.push_back(options[i][pick[i]]);
        RankingProfile profile(instance.num_candidates(), std::move(orders), weights);
        CandidateId w = apply(rule, profile, instance.lex()).winner;
        Count shortfall = best_count - approvals.approval_count(w);
        if (shortfall > worst_shortfall) {
            worst_shortfall = shortfall;
            result.winner = w;
        }
        ++result.profiles;
        std::size_t i = 0;
        while (i < pick.size() && ++pick[i] == options[i].size()) pick[i++] = 0;
        if (i == pick.size()) break;
    }
    result.value = DistortionValue::exact(Rational(worst_shortfall, instance.num_voters()));
    return result;
}

std::vector<SweepInterval> av_distortion_sweep(const ElectionInstance& instance) {
    const double tol = instance.tolerance();
    std::vector<double> all;
    double r_min = 0.0;
    for (VoterId v : instance.voter_ids()) {
        for (CandidateId c : instance.candidate_ids()) all.push_back(instance.distance(v, c));
        r_min = std::max(r_min, nearest_distance(instance, v));
    }
    std::sort(all.begin(), all.end());
    std::vector<double> breakpoints;
    for (double d : all)
        if (d >= r_min - tol && (breakpoints.empty() || d - breakpoints.back() > tol))
            breakpoints.push_back(d);

    const CandidateId c_o = optimal_by_distance(instance).candidate;
    std::vector<SweepInterval> out;
    for (std::size_t k = 0; k < breakpoints.size(); ++k) {
        SweepInterval iv;
        iv.lower = breakpoints[k];
        if (k + 1 < breakpoints.size()) iv.upper = breakpoints[k + 1];
        ApprovalProfile profile = approvals_at_radius(instance, iv.lower);
        iv.efficiency = efficiency_fraction(instance, profile, c_o);
        iv.winner = av_winner(profile, instance.lex()).winner;
        iv.distortion = distance_distortion(instance, iv.winner);
        out.push_back(std::move(iv));
    }
    return out;
}

const SweepInterval& sweep_maximum(const std::vector<SweepInterval>& sweep) {
    if (sweep.empty()) throw PreconditionError("empty sweep");
    std::size_t best = 0;
    for (std::size_t k = 1; k < sweep.size(); ++k) {
        const auto& a = sweep[k].distortion;
        const auto& b = sweep[best].distortion;
        if (b.is_infinite()) break;
        if (a.is_infinite() || a.value() > b.value()) best = k;
    }
    return sweep[best];
}

DistortionValue av_bound(const Rational& p) {
    if (p < Rational(0) || p > Rational(1)) throw PreconditionError("efficiency outside [0, 1]");
    if (p == Rational(0) || p == Rational(1)) return DistortionValue::infinite();
    if (p <= Rational(1, 4)) return DistortionValue::exact((Rational(1) - p) / p);
    if (p <= Rational(1, 2)) return DistortionValue::exact(Rational(3));
    return DistortionValue::exact((Rational(2) - p) / (Rational(1) - p));
}

ApprovalProfile best_case_av_profile(const ElectionInstance& instance) {
    const CandidateId c_o = optimal_by_distance(instance).candidate;
    std::vector<double> radii;
    for (VoterId v : instance.voter_ids()) radii.push_back(instance.distance(v, c_o));
    return approvals_with_radii(instance, radii);
}

RadiusProfile quarter_radius_profile(const ElectionInstance& instance) {
    const CandidateId c_o = optimal_by_distance(instance).candidate;
    const Count need = (instance.num_voters() + 3) / 4;
    for (const SweepInterval& iv : av_distortion_sweep(instance)) {
        ApprovalProfile profile = approvals_at_radius(instance, iv.lower);
        if (profile.approval_count(c_o) >= need) return {iv.lower, std::move(profile)};
    }
    throw InternalInconsistencyError("no common radius makes the optimal candidate approved");
}

DistortionValue condorcet_bound() { return DistortionValue::exact(Rational(1, 2)); }

DistortionValue smith_bound(std::size_t smith_size) {
    if (smith_size <= 1) return condorcet_bound();
    const Count l = static_cast<Count>(smith_size);
    return DistortionValue::exact(Rational(l - 1, l));
}

DistortionValue scoring_bound(const ScoringVector& s) {
    Rational widest(0);
    std::optional<Rational> narrowest;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            Rational gap = abs(s[i] - s[j]);
            widest = std::max(widest, gap);
            narrowest = narrowest ? std::min(*narrowest, gap) : gap;
        }
    if (widest == Rational(0)) return DistortionValue::exact(Rational(1));
    return DistortionValue::exact(widest / (widest + *narrowest));
}

DistortionValue plurality_bound(std::size_t m) {
    const Count k = static_cast<Count>(m);
    return DistortionValue::exact(Rational(k - 1, k));
}

DistortionValue stv_bound(std::size_t m) {
    const Count half = Count{1} << (m - 1);
    return DistortionValue::exact(Rational(half - 1, half));
}

std::optional<DistortionValue> applicable_ab_bound(const Rule& rule,
                                                   const ElectionInstance& instance) {
    const std::size_t m = instance.num_candidates();
    switch (rule.kind) {
        case RuleKind::kPlurality: return plurality_bound(m);
        case RuleKind::kVeto:
        case RuleKind::kBorda:
        case RuleKind::kKApproval:
        case RuleKind::kScoring: return scoring_bound(*rule.scoring_vector(m));
        case RuleKind::kStv: return stv_bound(m);
        case RuleKind::kRankedPairs:
        case RuleKind::kSchulze:
            return smith_bound(smith_set(MajorityMatrix(induced_ranking(instance))).size());
        case RuleKind::kCopeland:
            if (condorcet_winner(MajorityMatrix(induced_ranking(instance)))) return condorcet_bound();
            return std::nullopt;
        case RuleKind::kAv: return std::nullopt;
    }
    return std::nullopt;
}

}  // namespace metricvote
