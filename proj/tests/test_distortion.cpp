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

#include <catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "metricvote/distortion.hpp"
#include "metricvote/generators.hpp"

using namespace metricvote;
using namespace fixtures;

TEST_CASE("distortion value conventions") {
    CHECK(DistortionValue::ratio(5, 0).is_infinite());
    auto zz = DistortionValue::ratio(0, 0);
    CHECK(zz.zero_over_zero());
    CHECK(zz.render() == "1");
    CHECK(DistortionValue::ratio(7, 8).render() == "7/8");
    CHECK(DistortionValue::ratio(0.5, 3).render() == "0.16666666666666666");
    CHECK(DistortionValue::infinite().render() == "inf");
    CHECK(within_bound(DistortionValue::exact(Rational(2, 3)), DistortionValue::exact(Rational(2, 3))));
    CHECK_FALSE(within_bound(DistortionValue::infinite(), DistortionValue::exact(Rational(3))));
}

TEST_CASE("optimal candidates") {
    auto opt = optimal_by_distance(t1());
    CHECK(opt.candidate == CandidateId{0});
    CHECK(opt.total == 4.0);
    auto colocated = line({2, 2}, {0, 2}, {1, 1});
    CHECK(optimal_by_distance(colocated).candidate == CandidateId{1});
    CHECK(optimal_by_distance(colocated).total == 0.0);

    auto single = line({0, 1}, {5}, {5, 5}, {2, 3});
    CHECK(optimal_by_acceptability(single).candidate == CandidateId{0});
    CHECK(optimal_by_acceptability(single).approvals == 5);
}

TEST_CASE("distance distortion") {
    CHECK(distance_distortion(t1(), CandidateId{0}).render() == "1");
    CHECK(distance_distortion(t1(), CandidateId{1}).render() == "5/4");
    auto both = line({0, 0}, {0, 0}, {0, 0});
    CHECK(distance_distortion(both, CandidateId{1}).zero_over_zero());
    auto deg = gen_av_degenerate(3);
    CHECK(distance_distortion(deg.instance, CandidateId{1}).is_infinite());
}

TEST_CASE("ab distortion") {
    CHECK(ab_distortion(t1(), CandidateId{0}).render() == "0");
    CHECK(ab_distortion(t1(), CandidateId{1}).render() == "1/3");
}

TEST_CASE("worst ranking profile") {
    CHECK(worst_ranking_ab_distortion(t1(), Rule::plurality()).value == ab_distortion(t1(), CandidateId{0}));
    // The voter at 1 is equidistant; c2 is approved by everyone.
    auto tied = line({1, 0, 2}, {0, 2}, {1, 2, 0}, {}, TieBreakOrder(ids({1, 0})));
    auto res = worst_ranking_ab_distortion(tied, Rule::plurality());
    CHECK(res.profiles == 2);
    CHECK(res.value.render() == "1/3");
    CHECK(res.winner == CandidateId{0});
    CHECK(ab_distortion(tied, apply(Rule::plurality(), tied).winner).render() == "0");

    auto single = line({0, 1}, {0}, {1, 1});
    CHECK(worst_ranking_ab_distortion(single, Rule::stv()).value.render() == "0");
}

TEST_CASE("worst ranking profile size guard") {
    auto tied = line({1, 1, 1}, {0, 2}, {1, 1, 1});
    CHECK_THROWS_AS(worst_ranking_ab_distortion(tied, Rule::borda(), 4, false), SizeGuardError);
    CHECK(worst_ranking_ab_distortion(tied, Rule::borda(), 4, true).fell_back);
}

TEST_CASE("av sweep") {
    auto sweep = av_distortion_sweep(t1());
    REQUIRE(sweep.size() == 3);
    CHECK(sweep[0].lower == 1.0);
    CHECK(sweep[0].upper == 2.0);
    CHECK(sweep[2].lower == 3.0);
    CHECK(std::isinf(sweep[2].upper));
    for (const auto& iv : sweep) {
        CHECK(iv.winner == CandidateId{0});
        CHECK(iv.distortion.render() == "1");
    }
    CHECK(sweep[0].efficiency == Rational(2, 3));

    auto degenerate = av_distortion_sweep(gen_av_degenerate(4).instance);
    REQUIRE(degenerate.size() == 2);
    CHECK(degenerate[0].distortion.render() == "1");
    CHECK(degenerate[1].lower == 1.0);
    CHECK(degenerate[1].distortion.is_infinite());
    CHECK(sweep_maximum(degenerate).distortion.is_infinite());
}

TEST_CASE("av bound") {
    CHECK(av_bound(Rational(1, 8)).render() == "7");
    CHECK(av_bound(Rational(1, 4)).render() == "3");
    CHECK(av_bound(Rational(1, 2)).render() == "3");
    CHECK(av_bound(Rational(3, 4)).render() == "5");
    CHECK(av_bound(Rational(0)).is_infinite());
    CHECK(av_bound(Rational(1)).is_infinite());
}

TEST_CASE("best case av profile") {
    auto a = best_case_av_profile(t1());
    CHECK(a.approvals(VoterId{0}) == set_of(2, {0}));
    CHECK(a.approvals(VoterId{1}) == set_of(2, {0}));
    CHECK(a.approvals(VoterId{2}) == set_of(2, {0, 1}));
    CHECK(is_locally_consistent(t1(), a));
    CHECK(av_winner(a, t1().lex()).winner == CandidateId{0});

    auto top = line({0, 1}, {0, 5}, {1, 1});
    CHECK(best_case_av_profile(top).approvals(VoterId{1}) == set_of(2, {0}));
}

TEST_CASE("quarter radius profile") {
    auto q = quarter_radius_profile(t1());
    CHECK(q.radius == 1.0);
    auto w = av_winner(q.profile, t1().lex()).winner;
    CHECK(distance_distortion(t1(), w).render() == "1");
}

TEST_CASE("ab bounds") {
    CHECK(smith_bound(1).render() == "1/2");
    CHECK(smith_bound(3).render() == "2/3");
    CHECK(scoring_bound(borda_vector(3)).render() == "2/3");
    CHECK(scoring_bound(plurality_vector(3)).render() == "1");
    CHECK(scoring_bound({Rational(1), Rational(1)}).render() == "1");
    CHECK(plurality_bound(4).render() == "3/4");
    CHECK(stv_bound(4).render() == "7/8");
}

TEST_CASE("quarter radius can overshoot 11/3 when the smallest admissible radius is large") {
    // The far voter forces a common radius of 10, where c2 already ties c1.
    const ElectionInstance inst = line({0, -25}, {0, 10, -15}, {0, 10}, {7, 1}, TieBreakOrder(ids({1, 2, 0})));
    const RadiusProfile q = quarter_radius_profile(inst);
    CHECK(q.radius == 10.0);
    const CandidateId w = av_winner(q.profile, inst.lex()).winner;
    CHECK(distance_distortion(inst, w).render() == "21/5");
    for (const SweepInterval& iv : av_distortion_sweep(inst)) CHECK(iv.distortion.value() > 11.0 / 3.0);
}
