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

#include "metricvote/suite.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "metricvote/distortion.hpp"
#include "metricvote/generators.hpp"
#include "metricvote/majority.hpp"
#include "metricvote/rules.hpp"
#include "metricvote/search.hpp"

namespace metricvote {

bool SuiteReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

namespace {

bool is_exactly(const DistortionValue& d, const Rational& r) {
    return !d.is_infinite() && d.exact_value() && *d.exact_value() == r;
}

std::string describe_profile(const RankingProfile& p) {
    std::ostringstream out;
    for (VoterId v{0}; v.index < p.num_groups(); ++v.index) {
        if (v.index) out << "; ";
        for (std::size_t i = 0; i < p.order(v).size(); ++i)
            out << (i ? ">" : "") << "c" << p.order(v)[i].index + 1;
        if (p.weight(v) != 1) out << " x" << p.weight(v);
    }
    return out.str();
}

std::string describe_line(const ElectionInstance& inst) {
    std::ostringstream out;
    out << "voters";
    for (VoterId v : inst.voter_ids())
        out << " " << inst.metric().voter_points()[v.index][0] << "(r=" << inst.radius(v) << ")";
    out << " candidates";
    for (CandidateId c : inst.candidate_ids()) out << " " << inst.metric().candidate_points()[c.index][0];
    out << " lex";
    for (CandidateId c : inst.lex().order()) out << " " << inst.name(c);
    return out.str();
}

/// Integer positions on a line; each voter's radius is one of its candidate
/// distances at or beyond the nearest, so every ball is nonempty.
ElectionInstance random_line(std::mt19937_64& rng, std::size_t max_voters, std::size_t max_candidates,
                             int span, bool shuffle_lex) {
    auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    const auto n = static_cast<std::size_t>(uniform(1, static_cast<int>(max_voters)));
    const auto m = static_cast<std::size_t>(uniform(2, static_cast<int>(max_candidates)));
    std::vector<Point> vp, cp;
    for (std::size_t i = 0; i < n; ++i) vp.push_back({double(uniform(0, span))});
    for (std::size_t c = 0; c < m; ++c) cp.push_back({double(uniform(0, span))});
    std::vector<CandidateId> lex;
    for (std::size_t c = 0; c < m; ++c) lex.push_back(CandidateId{c});
    if (shuffle_lex) std::shuffle(lex.begin(), lex.end(), rng);
    std::vector<VoterGroup> groups;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<double> d;
        for (const Point& c : cp) d.push_back(std::abs(vp[i][0] - c[0]));
        std::sort(d.begin(), d.end());
        groups.push_back({1, d[static_cast<std::size_t>(uniform(0, static_cast<int>(m) - 1))]});
    }
    return ElectionInstance(MetricSpace::euclidean(1, vp, cp), groups, TieBreakOrder(lex));
}

struct Tally {
    std::size_t cases = 0;
    std::size_t violations = 0;
    std::string first;

    void fail(const std::string& what) {
        if (violations++ == 0) first = what;
    }
    Check check(std::string id, std::string name, const std::string& unit) const {
        Check c{std::move(id), std::move(name), violations == 0, "0 violations", ""};
        c.achieved = std::to_string(violations) + " violations over " + std::to_string(cases) + " " + unit;
        if (violations) c.achieved += "; first: " + first;
        return c;
    }
};

Check criterion_1() {
    Check c{"1", "av bound curve at rational points", true, "1/8:7 1/4:3 3/8:3 1/2:3 3/4:5 0:inf 1:inf", ""};
    const std::vector<std::pair<Rational, std::string>> points = {
        {Rational(1, 8), "7"}, {Rational(1, 4), "3"}, {Rational(3, 8), "3"}, {Rational(1, 2), "3"},
        {Rational(3, 4), "5"}, {Rational(0), "inf"},  {Rational(1), "inf"}};
    for (const auto& [p, want] : points) {
        const DistortionValue got = av_bound(p);
        if (!c.achieved.empty()) c.achieved += " ";
        c.achieved += to_string(p) + ":" + got.render();
        const bool ok = want == "inf" ? got.is_infinite() : is_exactly(got, parse_rational(want));
        c.passed = c.passed && ok;
    }
    return c;
}

Check criterion_2() {
    Check c{"2", "av hard instances reach the curve", true, "within 2% of av_bound(p), never above", ""};
    struct Case {
        Rational p;
        Count n;
    };
    for (const Case& k : {Case{Rational(1, 8), 16}, Case{Rational(1, 4), 40}, Case{Rational(3, 4), 8}}) {
        const GeneratedInstance g = gen_av_hard(k.p, k.n, 1e-4, regime_for(k.p));
        const double bound = av_bound(k.p).value();
        double best = -1.0;
        bool sound = true;
        for (const SweepInterval& iv : av_distortion_sweep(g.instance)) {
            if (!within_bound(iv.distortion, av_bound(iv.efficiency), 1e-9)) sound = false;
            if (iv.efficiency == k.p) best = std::max(best, iv.distortion.value());
        }
        const bool close = best >= 0 && std::abs(best - bound) <= 0.02 * bound;
        c.passed = c.passed && sound && close;
        std::ostringstream out;
        out << "p=" << to_string(k.p) << ":" << best << (sound ? "" : " (bound exceeded)");
        c.achieved += (c.achieved.empty() ? "" : " ") + out.str();
    }
    return c;
}

Check criterion_3(std::uint64_t seed) {
    Check c{"3", "degenerate, best-case and quarter-radius AV", true,
            "degenerate inf; best case 1 on 200 instances; quarter radius <= 11/3", ""};
    const GeneratedInstance deg = gen_av_degenerate(4);
    const bool degenerate_inf = sweep_maximum(av_distortion_sweep(deg.instance)).distortion.is_infinite() &&
                                worst_local_profile_av(deg.instance).distortion.is_infinite();
    std::mt19937_64 rng(seed);
    const double limit = 11.0 / 3.0;
    double worst_best = 0.0, worst_quarter = 0.0;
    std::string offender;
    for (int i = 0; i < 200; ++i) {
        const ElectionInstance inst = random_line(rng, 8, 4, 20, true);
        const CandidateId b = av_winner(best_case_av_profile(inst), inst.lex()).winner;
        worst_best = std::max(worst_best, distance_distortion(inst, b).value());
        const RadiusProfile q = quarter_radius_profile(inst);
        const double dq = distance_distortion(inst, av_winner(q.profile, inst.lex()).winner).value();
        if (dq > worst_quarter) {
            worst_quarter = dq;
            if (dq > limit + 1e-9) offender = describe_line(inst);
        }
    }
    c.passed = degenerate_inf && std::abs(worst_best - 1.0) <= 1e-9 && worst_quarter <= limit + 1e-9;
    std::ostringstream out;
    out << "degenerate " << (degenerate_inf ? "inf" : "finite") << "; best case max " << worst_best
        << "; quarter radius max " << worst_quarter;
    if (!offender.empty()) out << " at " << offender;
    c.achieved = out.str();
    return c;
}

Check criterion_4() {
    Check c{"4", "copeland hard instance", false, "copeland c2 ab 49/50; RP, Schulze ab <= 2/3", ""};
    const GeneratedInstance g = gen_copeland_hard(100);
    const CandidateId w = apply(Rule::copeland(), g.instance).winner;
    const DistortionValue ab = ab_distortion(g.instance, w);
    const DistortionValue rp = ab_distortion(g.instance, apply(Rule::ranked_pairs(), g.instance).winner);
    const DistortionValue sz = ab_distortion(g.instance, apply(Rule::schulze(), g.instance).winner);
    const DistortionValue two_thirds = DistortionValue::exact(Rational(2, 3));
    c.passed = g.instance.name(w) == "c2" && is_exactly(ab, Rational(49, 50)) && within_bound(rp, two_thirds) &&
               within_bound(sz, two_thirds);
    c.achieved = "copeland " + g.instance.name(w) + " ab " + ab.render() + "; RP ab " + rp.render() +
                 "; Schulze ab " + sz.render();
    return c;
}

Check criterion_5() {
    Check c{"5", "condorcet hard instance", true, "copeland, RP, Schulze elect cc with ab 7/16", ""};
    const GeneratedInstance g = gen_condorcet_hard(16);
    for (const Rule& rule : {Rule::copeland(), Rule::ranked_pairs(), Rule::schulze()}) {
        const CandidateId w = apply(rule, g.instance).winner;
        const DistortionValue ab = ab_distortion(g.instance, w);
        c.passed = c.passed && g.instance.name(w) == "cc" && is_exactly(ab, Rational(7, 16));
        c.achieved += (c.achieved.empty() ? "" : "; ") + rule_name(rule) + " " + g.instance.name(w) + " " + ab.render();
    }
    return c;
}

Check criterion_6() {
    Check c{"6", "smith cycle and ell=1 pair", true,
            "smith size 3; RP and Schulze targeted ab 2/3; ell1 pair max ab >= 3/8 for every candidate", ""};
    const std::size_t ell = 3;
    const GeneratedInstance base = gen_smith_cycle(ell, 6, 1);
    const std::size_t smith = smith_set(MajorityMatrix(induced_ranking(base.instance))).size();
    c.passed = smith == 3;
    c.achieved = "smith size " + std::to_string(smith);
    for (const Rule& rule : {Rule::ranked_pairs(), Rule::schulze()}) {
        const CandidateId w = apply(rule, base.instance).winner;
        // The shifted instance whose weakly approved candidate is w.
        const std::size_t shift = w.index == 0 ? ell : w.index;
        const GeneratedInstance target = gen_smith_cycle(ell, 6, shift);
        const CandidateId w2 = apply(rule, target.instance).winner;
        const DistortionValue ab = ab_distortion(target.instance, w2);
        c.passed = c.passed && w2 == w && is_exactly(ab, Rational(2, 3));
        c.achieved += "; " + rule_name(rule) + " " + target.instance.name(w2) + " on shift " +
                      std::to_string(shift) + " ab " + ab.render();
    }
    const auto [a, b] = gen_ell1_pair(8);
    const bool same = induced_ranking(a.instance).orders() == induced_ranking(b.instance).orders() &&
                      induced_ranking(a.instance).weights() == induced_ranking(b.instance).weights();
    Rational least(1);
    for (CandidateId x : a.instance.candidate_ids()) {
        const DistortionValue da = ab_distortion(a.instance, x), db = ab_distortion(b.instance, x);
        const Rational worst = std::max(*da.exact_value(), *db.exact_value());
        least = std::min(least, worst);
    }
    c.passed = c.passed && same && least >= Rational(3, 8);
    c.achieved += std::string("; ell1 profiles ") + (same ? "identical" : "differ") +
                  ", min over candidates of max ab " + to_string(least);
    return c;
}

Check criterion_7() {
    Check c{"7", "scoring rule tightness", true,
            "borda 2/3; veto 1; 2-approval 1; constant 1; plurality(4,8) 3/4", ""};
    struct Case {
        std::string label;
        GeneratedInstance g;
        ScoringVector s;
        Rational want;
    };
    std::vector<Case> cases;
    cases.push_back({"borda", gen_scoring_hard(borda_vector(3), 3), borda_vector(3), Rational(2, 3)});
    cases.push_back({"veto", gen_scoring_hard(veto_vector(3), 5), veto_vector(3), Rational(1)});
    cases.push_back({"2-approval", gen_scoring_hard(k_approval_vector(3, 2), 5), k_approval_vector(3, 2), Rational(1)});
    const ScoringVector flat = {Rational(1), Rational(1), Rational(1)};
    cases.push_back({"constant", gen_scoring_hard(flat, 5), flat, Rational(1)});
    cases.push_back({"plurality", gen_plurality_hard(4, 8), plurality_vector(4), Rational(3, 4)});
    for (const Case& k : cases) {
        const CandidateId w = scoring_winner(induced_ranking(k.g.instance), k.s, k.g.instance.lex()).winner;
        const DistortionValue ab = ab_distortion(k.g.instance, w);
        c.passed = c.passed && is_exactly(ab, k.want);
        c.achieved += (c.achieved.empty() ? "" : "; ") + k.label + " " + ab.render();
    }
    return c;
}

Check criterion_8() {
    Check c{"8", "stv tightness", true,
            "1d and simplex (4,8): c4 with ab 7/8; simplex globally consistent; m=3 trace 1,1,2 -c1 2,2 -c2", ""};
    for (const GeneratedInstance& g : {gen_stv_hard_1d(4, 8), gen_stv_hard_simplex(4, 8)}) {
        const CandidateId w = apply(Rule::stv(), g.instance).winner;
        const DistortionValue ab = ab_distortion(g.instance, w);
        c.passed = c.passed && g.instance.name(w) == "c4" && is_exactly(ab, Rational(7, 8));
        c.achieved += (c.achieved.empty() ? "" : "; ") + g.instance.name(w) + " " + ab.render();
    }
    const GeneratedInstance simplex = gen_stv_hard_simplex(4, 8);
    const bool global = is_globally_consistent(simplex.instance, truthful_approvals(simplex.instance));
    c.passed = c.passed && global;
    c.achieved += global ? "; simplex global" : "; simplex not global";

    const GeneratedInstance small = gen_stv_hard_1d(3, 4);
    const RuleOutcome out = apply(Rule::stv(), small.instance);
    std::string trace;
    for (const StvRound& r : out.trace.rounds) {
        // Scores listed in c3, c1, c2 order, as the worked example does.
        for (const char* want : {"c3", "c1", "c2"})
            for (std::size_t i = 0; i < r.remaining.size(); ++i)
                if (small.instance.name(r.remaining[i]) == want) trace += std::to_string(r.scores[i]) + ",";
        trace.back() = ' ';
        trace += "-" + small.instance.name(r.eliminated) + " ";
    }
    trace += "winner " + small.instance.name(out.winner);
    c.passed = c.passed && trace == "1,1,2 -c1 2,2 -c2 winner c3";
    c.achieved += "; trace " + trace;
    return c;
}

Check criterion_9(std::uint64_t seed) {
    const SuiteReport props = run_property_suite(seed, 1000);
    Check c{"9", "property suite", props.passed(), "0 violations in every property", ""};
    std::size_t failed = 0;
    for (const Check& p : props.checks)
        if (!p.passed) {
            ++failed;
            c.achieved += (c.achieved.empty() ? "" : " | ") + p.id + ": " + p.achieved;
        }
    if (failed == 0) c.achieved = std::to_string(props.checks.size()) + " properties clean over 1000 instances";
    return c;
}

Check criterion_10(std::uint64_t seed) {
    Check c{"10", "adversarial search soundness", true, "no violation; AV >= 0.95*3; plurality >= 0.95*2/3", ""};
    SearchConfig av;
    av.dimension = 2;
    av.num_voters = 4;
    av.num_candidates = 4;
    av.pinned_efficiency = Rational(1, 4);
    av.budget = 10000;
    av.seed = seed;
    SearchConfig pl;
    pl.rule = Rule::plurality();
    pl.objective = Objective::kAb;
    pl.num_voters = 3;
    pl.num_candidates = 3;
    pl.global_radii = false;
    pl.budget = 10000;
    pl.seed = seed;
    for (const auto& [label, cfg] : {std::pair<std::string, SearchConfig>{"AV", av}, {"plurality", pl}}) {
        const SearchResult r = adversarial_search(cfg);
        const double bound = r.bound ? r.bound->value() : 0.0;
        const bool ok = r.violations.empty() && r.bound && r.achieved.value() >= 0.95 * bound &&
                        within_bound(r.achieved, *r.bound, 1e-9);
        c.passed = c.passed && ok;
        std::ostringstream out;
        out << label << " " << r.achieved.render() << " of " << (r.bound ? r.bound->render() : "none") << ", "
            << r.violations.size() << " violations";
        if (!r.violations.empty()) out << " (first: " << r.violations.front().detail << ")";
        c.achieved += (c.achieved.empty() ? "" : "; ") + out.str();
    }
    return c;
}

}  // namespace

SuiteReport run_acceptance_suite(std::uint64_t seed) {
    SuiteReport report{"acceptance", seed, {}};
    const std::vector<std::function<Check()>> criteria = {
        criterion_1, criterion_2, [&] { return criterion_3(seed); }, criterion_4, criterion_5, criterion_6,
        criterion_7, criterion_8, [&] { return criterion_9(seed); }, [&] { return criterion_10(seed); }};
    for (const auto& run : criteria) {
        try {
            report.checks.push_back(run());
        } catch (const std::exception& e) {
            Check failed{std::to_string(report.checks.size() + 1), "error", false, "", e.what()};
            report.checks.push_back(failed);
        }
    }
    return report;
}

SuiteReport run_property_suite(std::uint64_t seed, std::size_t instances) {
    Tally immunity, immune_rules, condorcet, smith, scoring, plurality, stv, oracle;
    std::mt19937_64 rng(seed);
    const std::vector<Rule> scoring_rules = {Rule::plurality(), Rule::veto(), Rule::borda(), Rule::k_approval(2)};
    for (std::size_t i = 0; i < instances; ++i) {
        const ElectionInstance inst = random_line(rng, 9, 5, 10, true);
        const std::string where = "instance " + std::to_string(i) + " [" + describe_line(inst) + "]";
        const RankingProfile profile = induced_ranking(inst);
        const ApprovalProfile approvals = truthful_approvals(inst);
        const MajorityMatrix matrix(profile);
        const CandidateSet smith_members = smith_set(matrix);
        const CandidateSet immune = immunity_set(matrix);
        const Count n = inst.num_voters();
        const std::size_t m = inst.num_candidates();

        ++immunity.cases;
        for (CandidateId c : inst.candidate_ids())
            if (immune.contains(c) && !smith_members.contains(c)) {
                immunity.fail(inst.name(c) + " immune but outside the Smith set in " + where);
                break;
            }

        const CandidateId rp = apply(Rule::ranked_pairs(), inst).winner;
        const CandidateId sz = apply(Rule::schulze(), inst).winner;
        ++immune_rules.cases;
        if (!immune.contains(rp)) immune_rules.fail("RP winner " + inst.name(rp) + " not immune in " + where);
        else if (!immune.contains(sz)) immune_rules.fail("Schulze winner " + inst.name(sz) + " not immune in " + where);

        if (const auto cw = condorcet_winner(matrix)) {
            ++condorcet.cases;
            for (const Rule& rule : {Rule::copeland(), Rule::ranked_pairs(), Rule::schulze()}) {
                const CandidateId w = apply(rule, inst).winner;
                if (w != *cw) {
                    condorcet.fail(rule_name(rule) + " misses Condorcet winner " + inst.name(*cw) + " in " + where);
                    break;
                }
                if (!within_bound(ab_distortion(inst, w), condorcet_bound())) {
                    condorcet.fail(rule_name(rule) + " ab above 1/2 in " + where);
                    break;
                }
            }
        }

        if (smith_members.size() >= 2) {
            ++smith.cases;
            const DistortionValue bound = smith_bound(smith_members.size());
            if (!within_bound(ab_distortion(inst, rp), bound))
                smith.fail("RP ab " + ab_distortion(inst, rp).render() + " above " + bound.render() + " in " + where);
            else if (!within_bound(ab_distortion(inst, sz), bound))
                smith.fail("Schulze ab " + ab_distortion(inst, sz).render() + " above " + bound.render() + " in " + where);
        }

        for (const Rule& rule : scoring_rules) {
            if (rule.kind == RuleKind::kKApproval && rule.k >= m) continue;
            ++scoring.cases;
            const DistortionValue ab = ab_distortion(inst, apply(rule, inst).winner);
            const DistortionValue bound = scoring_bound(*rule.scoring_vector(m));
            if (!within_bound(ab, bound))
                scoring.fail(rule_name(rule) + " ab " + ab.render() + " above " + bound.render() + " in " + where);
        }

        ++plurality.cases;
        const CandidateId pw = apply(Rule::plurality(), inst).winner;
        if (approvals.approval_count(pw) * static_cast<Count>(m) < n)
            plurality.fail(inst.name(pw) + " approved by " + std::to_string(approvals.approval_count(pw)) + " in " + where);

        ++stv.cases;
        const CandidateId sw = apply(Rule::stv(), inst).winner;
        if (approvals.approval_count(sw) * (Count{1} << (m - 1)) < n)
            stv.fail(inst.name(sw) + " approved by " + std::to_string(approvals.approval_count(sw)) + " in " + where);

        ++oracle.cases;
        if (!(oracle_smith(matrix) == smith_members))
            oracle.fail("Smith set differs on profile " + describe_profile(profile));
        else if (!(oracle_beatpaths(matrix) == beatpath_strengths(matrix)))
            oracle.fail("beatpaths differ on profile " + describe_profile(profile));
    }
    SuiteReport report{"properties", seed, {}};
    report.checks.push_back(immunity.check("9a", "immunity set within Smith set", "instances"));
    report.checks.push_back(immune_rules.check("9b", "RP and Schulze winners immune", "instances"));
    report.checks.push_back(condorcet.check("9c", "Condorcet winner elected with ab <= 1/2", "instances with a Condorcet winner"));
    report.checks.push_back(smith.check("9d", "RP and Schulze ab <= (l-1)/l", "instances with l >= 2"));
    report.checks.push_back(scoring.check("9e", "scoring rule ab within bound", "rule evaluations"));
    report.checks.push_back(plurality.check("9f", "plurality winner approved by >= n/m", "instances"));
    report.checks.push_back(stv.check("9g", "STV winner approved by >= n/2^(m-1)", "instances"));
    report.checks.push_back(oracle.check("9h", "Smith set and beatpaths match oracles", "profiles"));
    return report;
}

std::string render_report(const SuiteReport& report) {
    std::ostringstream out;
    out << "suite " << report.suite << " seed " << report.seed << "\n";
    std::size_t passed = 0;
    for (const Check& c : report.checks) {
        passed += c.passed ? 1 : 0;
        out << (c.passed ? "PASS " : "FAIL ") << c.id << " " << c.name << " | expected: " << c.expected
            << " | achieved: " << c.achieved << "\n";
    }
    out << passed << "/" << report.checks.size() << " passed\n";
    return out.str();
}

}  // namespace metricvote
