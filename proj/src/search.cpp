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

#include "metricvote/search.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <random>

namespace metricvote {

namespace {

constexpr std::size_t kOracleLimit = 6;
// Relative gain that counts as progress for the restart clock.
constexpr double kProgress = 1e-4;

void guard(std::size_t m) {
    if (m > kOracleLimit)
        throw SizeGuardError("oracle enumeration limited to " + std::to_string(kOracleLimit) +
                             " candidates, got " + std::to_string(m));
}

}  // namespace

CandidateSet oracle_smith(const MajorityMatrix& m) {
    const std::size_t size = m.size();
    guard(size);
    CandidateSet best(size);
    std::size_t best_size = size + 1;
    for (std::uint32_t mask = 1; mask < (1u << size); ++mask) {
        bool dominant = true;
        for (std::size_t a = 0; a < size && dominant; ++a) {
            if (!(mask >> a & 1u)) continue;
            for (std::size_t b = 0; b < size && dominant; ++b)
                if (!(mask >> b & 1u) && !dominates(m, CandidateId{a}, CandidateId{b})) dominant = false;
        }
        const auto count = static_cast<std::size_t>(std::popcount(mask));
        if (dominant && count < best_size) {
            best_size = count;
            best = CandidateSet(size);
            for (std::size_t a = 0; a < size; ++a)
                if (mask >> a & 1u) best.insert(CandidateId{a});
        }
    }
    return best;
}

CandidateSet oracle_smith(const RankingProfile& profile) {
    return oracle_smith(MajorityMatrix(profile));
}

BeatpathStrengths oracle_beatpaths(const MajorityMatrix& m) {
    const std::size_t size = m.size();
    guard(size);
    std::vector<std::vector<Count>> p(size, std::vector<Count>(size, 0));
    std::vector<bool> on_path(size, false);
    // Depth-first walk over simple paths, carrying the weakest link so far.
    auto walk = [&](auto&& self, std::size_t from, std::size_t at, Count weakest) -> void {
        for (std::size_t next = 0; next < size; ++next) {
            if (on_path[next] || !dominates(m, CandidateId{at}, CandidateId{next})) continue;
            const Count w = std::min(weakest, m(CandidateId{at}, CandidateId{next}));
            p[from][next] = std::max(p[from][next], w);
            on_path[next] = true;
            self(self, from, next, w);
            on_path[next] = false;
        }
    };
    for (std::size_t a = 0; a < size; ++a) {
        on_path[a] = true;
        walk(walk, a, a, std::numeric_limits<Count>::max());
        on_path[a] = false;
    }
    for (std::size_t a = 0; a < size; ++a) p[a][a] = 0;
    return BeatpathStrengths(std::move(p));
}

namespace {

struct State {
    std::vector<Point> voters;
    std::vector<Point> candidates;
    std::vector<std::size_t> radius_pick;  // one entry, or one per voter
};

struct Evaluation {
    double score = -1.0;  // -1 marks an instance with no admissible profile
    DistortionValue value;
    std::optional<DistortionValue> bound;
    std::optional<ElectionInstance> instance;
};

class Searcher {
public:
    explicit Searcher(const SearchConfig& config) : cfg_(config), rng_(config.seed) {
        if (cfg_.dimension < 1) throw PreconditionError("search dimension must be at least 1");
        if (cfg_.num_voters < 1 || cfg_.num_candidates < 1)
            throw PreconditionError("search needs at least one voter and one candidate");
        if (cfg_.objective == Objective::kDistance && cfg_.rule.kind != RuleKind::kAv)
            throw PreconditionError("the distance objective is only searched for AV");
    }

    SearchResult run() {
        SearchResult result;
        State current = random_state();
        Evaluation cur = evaluate(current, result);
        Evaluation best = cur;
        std::size_t stale = 0;
        for (std::size_t it = 0; it < cfg_.budget; ++it) {
            if (stale >= cfg_.patience) {
                current = random_state();
                cur = evaluate(current, result);
                stale = 0;
                ++result.restarts;
            }
            State next = mutate(current);
            Evaluation ev = evaluate(next, result);
            ++result.iterations;
            ++stale;
            if (ev.score >= cur.score) {
                if (ev.score > cur.score + kProgress * std::max(1.0, cur.score)) stale = 0;
                current = std::move(next);
                cur = std::move(ev);
                if (cur.score > best.score) best = cur;
            }
        }
        if (best.score >= 0) {
            result.best = best.instance;
            result.achieved = best.value;
            result.bound = best.bound;
        }
        return result;
    }

private:
    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    std::size_t index(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

    Point random_point() {
        Point p(cfg_.dimension);
        for (double& x : p) x = uniform(-cfg_.coordinate_range, cfg_.coordinate_range);
        return p;
    }

    State random_state() {
        State s;
        for (std::size_t i = 0; i < cfg_.num_voters; ++i) s.voters.push_back(random_point());
        for (std::size_t c = 0; c < cfg_.num_candidates; ++c) s.candidates.push_back(random_point());
        const std::size_t picks = cfg_.global_radii ? 1 : cfg_.num_voters;
        const std::size_t range = cfg_.global_radii ? cfg_.num_voters * cfg_.num_candidates
                                                    : cfg_.num_candidates;
        for (std::size_t i = 0; i < picks; ++i) s.radius_pick.push_back(index(range));
        return s;
    }

    Point& random_point_ref(State& s) {
        std::size_t k = index(s.voters.size() + s.candidates.size());
        return k < s.voters.size() ? s.voters[k] : s.candidates[k - s.voters.size()];
    }

    const Point& any_point(const State& s) {
        std::size_t k = index(s.voters.size() + s.candidates.size());
        return k < s.voters.size() ? s.voters[k] : s.candidates[k - s.voters.size()];
    }

    State mutate(const State& from) {
        State s = from;
        const bool radii_matter = cfg_.objective == Objective::kAb;
        const std::size_t kinds = radii_matter ? 5 : 4;
        switch (index(kinds)) {
            case 0: {
                Point& p = random_point_ref(s);
                const double scale = cfg_.coordinate_range * std::pow(4.0, -static_cast<double>(index(7)));
                p[index(p.size())] += std::normal_distribution<double>(0.0, scale)(rng_);
                break;
            }
            case 1: {
                Point target = any_point(s);
                random_point_ref(s) = target;
                break;
            }
            case 2: {
                Point a = any_point(s), b = any_point(s);
                Point& p = random_point_ref(s);
                for (std::size_t d = 0; d < p.size(); ++d) p[d] = (a[d] + b[d]) / 2.0;
                break;
            }
            case 3: {
                Point& p = random_point_ref(s);
                const double scale = cfg_.coordinate_range * std::pow(4.0, -static_cast<double>(index(7)));
                for (double& x : p) x += std::normal_distribution<double>(0.0, scale)(rng_);
                break;
            }
            default: {
                std::size_t& pick = s.radius_pick[index(s.radius_pick.size())];
                const std::size_t range = cfg_.global_radii ? cfg_.num_voters * cfg_.num_candidates
                                                            : cfg_.num_candidates;
                pick = index(range);
                break;
            }
        }
        return s;
    }

    ElectionInstance build(const State& s, const std::vector<double>& radii) const {
        std::vector<VoterGroup> groups;
        for (double r : radii) groups.push_back({1, r});
        return ElectionInstance(MetricSpace::euclidean(cfg_.dimension, s.voters, s.candidates), groups,
                                TieBreakOrder::identity(cfg_.num_candidates));
    }

    void record(SearchResult& result, const ElectionInstance& inst, const DistortionValue& value,
                const DistortionValue& bound, std::string detail) {
        if (within_bound(value, bound)) return;
        if (result.violations.size() < 16)
            result.violations.push_back({inst, value, bound, std::move(detail)});
    }

    Evaluation evaluate(const State& s, SearchResult& result) {
        return cfg_.objective == Objective::kDistance ? evaluate_av(s, result) : evaluate_ab(s, result);
    }

    Evaluation evaluate_av(const State& s, SearchResult& result) {
        std::vector<double> nearest;
        ElectionInstance probe = build(s, std::vector<double>(cfg_.num_voters, 0.0));
        for (VoterId v : probe.voter_ids()) nearest.push_back(nearest_distance(probe, v));
        const ElectionInstance inst = build(s, nearest);
        Evaluation ev;
        for (const SweepInterval& iv : av_distortion_sweep(inst)) {
            const DistortionValue bound = av_bound(iv.efficiency);
            record(result, inst.with_common_radius(iv.lower), iv.distortion, bound,
                   "AV at common radius " + std::to_string(iv.lower) + " with p = " +
                       to_string(iv.efficiency));
            if (cfg_.pinned_efficiency && iv.efficiency != *cfg_.pinned_efficiency) continue;
            const double score = iv.distortion.value();
            if (score > ev.score) {
                ev.score = score;
                ev.value = iv.distortion;
                ev.bound = bound;
                ev.instance = inst.with_common_radius(iv.lower);
            }
        }
        return ev;
    }

    Evaluation evaluate_ab(const State& s, SearchResult& result) {
        ElectionInstance probe = build(s, std::vector<double>(cfg_.num_voters, 0.0));
        std::vector<double> radii;
        if (cfg_.global_radii) {
            std::vector<double> all;
            double r_min = 0.0;
            for (VoterId v : probe.voter_ids()) {
                r_min = std::max(r_min, nearest_distance(probe, v));
                for (CandidateId c : probe.candidate_ids()) all.push_back(probe.distance(v, c));
            }
            std::vector<double> options;
            for (double d : all)
                if (d >= r_min) options.push_back(d);
            std::sort(options.begin(), options.end());
            radii.assign(cfg_.num_voters, options[std::min(s.radius_pick[0], options.size() - 1)]);
        } else {
            for (VoterId v : probe.voter_ids()) {
                std::vector<double> d;
                for (CandidateId c : probe.candidate_ids()) d.push_back(probe.distance(v, c));
                std::sort(d.begin(), d.end());
                radii.push_back(d[std::min(s.radius_pick[v.index], d.size() - 1)]);
            }
        }
        const ElectionInstance inst = build(s, radii);
        Evaluation ev;
        const CandidateId w = apply(cfg_.rule, inst).winner;
        ev.value = ab_distortion(inst, w);
        ev.score = ev.value.value();
        ev.bound = applicable_ab_bound(cfg_.rule, inst);
        if (ev.bound) record(result, inst, ev.value, *ev.bound, rule_name(cfg_.rule) + " ab-distortion");
        ev.instance = inst;
        return ev;
    }

    SearchConfig cfg_;
    std::mt19937_64 rng_;
};

}  // namespace

SearchResult adversarial_search(const SearchConfig& config) {
    SearchResult result = Searcher(config).run();
    if (config.objective == Objective::kDistance && config.pinned_efficiency)
        result.bound = av_bound(*config.pinned_efficiency);
    return result;
}

LocalProfileResult worst_local_profile_av(const ElectionInstance& instance, std::size_t limit) {
    const double tol = instance.tolerance();
    std::vector<std::vector<double>> options;
    std::size_t total = 1;
    for (VoterId v : instance.voter_ids()) {
        std::vector<double> d;
        for (CandidateId c : instance.candidate_ids()) d.push_back(instance.distance(v, c));
        std::sort(d.begin(), d.end());
        std::vector<double> distinct;
        for (double x : d)
            if (distinct.empty() || x - distinct.back() > tol) distinct.push_back(x);
        if (total > limit / distinct.size())
            throw SizeGuardError("more than " + std::to_string(limit) + " local approval profiles");
        total *= distinct.size();
        options.push_back(std::move(distinct));
    }

    std::optional<LocalProfileResult> best;
    std::vector<std::size_t> pick(options.size(), 0);
    std::vector<double> radii(options.size());
    while (true) {
        for (std::size_t i = 0; i < pick.size(); ++i) radii[i] = options[i][pick[i]];
        ApprovalProfile profile = approvals_with_radii(instance, radii);
        DistortionValue d = distance_distortion(instance, av_winner(profile, instance.lex()).winner);
        if (!best || (!best->distortion.is_infinite() && (d.is_infinite() || d.value() > best->distortion.value())))
            best = LocalProfileResult{std::move(profile), d};
        std::size_t i = 0;
        while (i < pick.size() && ++pick[i] == options[i].size()) pick[i++] = 0;
        if (i == pick.size()) break;
    }
    return std::move(*best);
}

}  // namespace metricvote
