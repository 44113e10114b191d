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

#include <cmath>

#include "fixtures.hpp"
#include "metricvote/generators.hpp"
#include "metricvote/majority.hpp"
#include "metricvote/simplex.hpp"

using namespace metricvote;
using namespace fixtures;

namespace {

void require_certified(const GeneratedInstance& g) {
    auto check = check_certificate(g.instance, g.certificate);
    for (const auto& f : check.failures) UNSCOPED_INFO(f);
    CHECK(check.passed);
}

}  // namespace

TEST_CASE("simplex geometry") {
    for (std::size_t k = 1; k <= 6; ++k) {
        auto g = simplex(k);
        REQUIRE(g.vertices.size() == k + 1);
        for (std::size_t a = 0; a <= k; ++a) {
            CHECK(std::abs(euclidean_distance(g.vertices[a], g.circumcenter) - g.circumradius) < 1e-12);
            for (std::size_t b = a + 1; b <= k; ++b)
                CHECK(std::abs(euclidean_distance(g.vertices[a], g.vertices[b]) - 1.0) < 1e-12);
        }
    }
    CHECK(simplex(1).circumradius == Catch::Approx(0.5));
    CHECK(simplex(1).height == Catch::Approx(1.0));
    CHECK(simplex(2).circumradius == Catch::Approx(0.5773503));
    CHECK(simplex(2).height == Catch::Approx(0.8660254));
    CHECK(simplex_height(2) > simplex_circumradius(3));
}

TEST_CASE("degenerate av") {
    for (Count n : {1, 3}) {
        auto g = gen_av_degenerate(n);
        require_certified(g);
        CHECK(optimal_by_distance(g.instance).total == 0.0);
    }
}

TEST_CASE("av hard regimes") {
    struct Case { Rational p; Count n; AvRegime regime; double target; double slack; };
    for (auto c : {Case{Rational(1, 8), 16, AvRegime::kLow, 7.0, 0.02},
                   Case{Rational(1, 4), 40, AvRegime::kMid, 3.0, 0.01},
                   Case{Rational(3, 4), 8, AvRegime::kHigh, 5.0, 0.01},
                   Case{Rational(1, 2), 8, AvRegime::kMid, 3.0, 0.01},
                   Case{Rational(1, 2), 8, AvRegime::kHigh, 3.0, 0.01},
                   Case{Rational(1, 4), 8, AvRegime::kLow, 3.0, 0.01}}) {
        auto g = gen_av_hard(c.p, c.n, 1e-4, c.regime);
        require_certified(g);
        double got = sweep_maximum(av_distortion_sweep(g.instance)).distortion.value();
        CHECK(got <= c.target + 1e-9);
        CHECK(got >= c.target * (1 - c.slack));
    }
    CHECK_THROWS_AS(gen_av_hard(Rational(1, 8), 12, 1e-4, AvRegime::kLow), DivisibilityError);
    CHECK_THROWS_AS(gen_av_hard(Rational(3, 4), 8, 1e-4, AvRegime::kLow), PreconditionError);
}

TEST_CASE("smith cycle") {
    auto g = gen_smith_cycle(3, 6, 1);
    require_certified(g);
    auto approvals = truthful_approvals(g.instance);
    CHECK(approvals.approval_count(CandidateId{0}) == 6);
    CHECK(approvals.approval_count(CandidateId{1}) == 2);
    CHECK(smith_set(MajorityMatrix(induced_ranking(g.instance))).size() == 3);

    auto two = gen_smith_cycle(2, 4, 1);
    CHECK(smith_set(MajorityMatrix(induced_ranking(two.instance))) == set_of(2, {0, 1}));

    for (std::size_t ell = 2; ell <= 5; ++ell) {
        auto base = induced_ranking(gen_smith_cycle(ell, ell * 2, 1).instance).orders();
        std::sort(base.begin(), base.end());
        for (std::size_t i = 1; i <= ell; ++i) {
            auto gi = gen_smith_cycle(ell, ell * 2, i);
            require_certified(gi);
            auto orders = induced_ranking(gi.instance).orders();
            std::sort(orders.begin(), orders.end());
            CHECK(orders == base);
        }
    }
    CHECK_THROWS_AS(gen_smith_cycle(3, 7, 1), DivisibilityError);
}

TEST_CASE("ell1 pair") {
    auto [i1, i2] = gen_ell1_pair(8);
    require_certified(i1);
    require_certified(i2);
    CHECK(induced_ranking(i1.instance).orders() == induced_ranking(i2.instance).orders());
    CHECK(induced_ranking(i1.instance).weights() == induced_ranking(i2.instance).weights());
}

TEST_CASE("condorcet hard") {
    auto g = gen_condorcet_hard(16);
    require_certified(g);
    CHECK(g.certificate.expected->render() == "7/16");
    for (auto rule : {Rule::copeland(), Rule::ranked_pairs(), Rule::schulze()})
        CHECK(g.instance.name(apply(rule, g.instance).winner) == "cc");
    CHECK_THROWS_AS(gen_condorcet_hard(10), DivisibilityError);
}

TEST_CASE("copeland hard") {
    auto g = gen_copeland_hard(100);
    require_certified(g);
    auto out = apply(Rule::copeland(), g.instance);
    CHECK(out.tied_set.size() == 3);
    CHECK(ab_distortion(g.instance, out.winner).render() == "49/50");
    MajorityMatrix m(induced_ranking(g.instance));
    CHECK(dominates(m, CandidateId{0}, CandidateId{1}));
    CHECK(dominates(m, CandidateId{1}, CandidateId{2}));
    CHECK(dominates(m, CandidateId{2}, CandidateId{0}));
    auto rp = apply(Rule::ranked_pairs(), g.instance).winner;
    CHECK(within_bound(ab_distortion(g.instance, rp), smith_bound(3)));
    CHECK(optimal_by_distance(g.instance).candidate == CandidateId{0});
}

TEST_CASE("plurality hard") {
    for (auto [m, n] : {std::pair<std::size_t, Count>{4, 8}, {2, 4}, {3, 9}}) {
        auto g = gen_plurality_hard(m, n);
        require_certified(g);
    }
    auto g = gen_plurality_hard(4, 8);
    CHECK(plurality_winner(induced_ranking(g.instance), g.instance.lex()).tied_set.size() == 4);
    CHECK(g.certificate.expected->render() == "3/4");
}

TEST_CASE("scoring hard") {
    auto borda = gen_scoring_hard(borda_vector(3), 3);
    require_certified(borda);
    CHECK(borda.certificate.expected->render() == "2/3");
    auto scores = borda_winner(induced_ranking(borda.instance), borda.instance.lex()).trace.scores;
    CHECK(scores[0] == Rational(4));
    CHECK(scores[1] == Rational(4));

    for (auto s : {veto_vector(3), k_approval_vector(3, 2)}) {
        auto g = gen_scoring_hard(s, 5);
        require_certified(g);
        CHECK(g.certificate.expected->render() == "1");
    }
    auto flat = gen_scoring_hard({Rational(2), Rational(2), Rational(2)}, 5);
    require_certified(flat);
    CHECK(*flat.certificate.winner == "c3");

    CHECK_THROWS_AS(gen_scoring_hard(plurality_vector(3), 3), PreconditionError);
    CHECK_THROWS_AS(gen_scoring_hard({Rational(0), Rational(1)}, 3), PreconditionError);
    CHECK_THROWS_AS(gen_scoring_hard(borda_vector(3), 4), DivisibilityError);
}

TEST_CASE("stv hard") {
    auto line4 = gen_stv_hard_1d(4, 8);
    require_certified(line4);
    CHECK(line4.certificate.expected->render() == "7/8");
    auto trace = stv_winner(induced_ranking(line4.instance), line4.instance.lex()).trace.rounds;
    REQUIRE(trace.size() == 3);
    for (std::size_t r = 0; r < 3; ++r) CHECK(line4.instance.name(trace[r].eliminated) == "c" + std::to_string(r + 1));

    auto plural = plurality_winner(induced_ranking(line4.instance), line4.instance.lex()).winner;
    CHECK(line4.instance.name(plural) == "c3");
    CHECK(ab_distortion(line4.instance, plural).value() < 7.0 / 8.0);

    auto simplex4 = gen_stv_hard_simplex(4, 8);
    require_certified(simplex4);
    const auto& inst = simplex4.instance;
    CHECK(is_globally_consistent(inst, truthful_approvals(inst)));
    const double half = simplex(2).circumradius / 2;
    for (std::size_t g = 1; g < inst.num_groups(); ++g) {
        CandidateId own{g};
        CHECK(std::abs(inst.distance(VoterId{g}, CandidateId{0}) - half) < 1e-9);
        CHECK(std::abs(inst.distance(VoterId{g}, own) - half) < 1e-9);
        for (std::size_t c = 1; c < 4; ++c)
            if (c != g) CHECK(inst.distance(VoterId{g}, CandidateId{c}) > half);
    }
    auto strace = stv_winner(induced_ranking(inst), inst.lex()).trace.rounds;
    for (std::size_t r = 0; r < 3; ++r) CHECK(inst.name(strace[r].eliminated) == "c" + std::to_string(r + 1));
    for (std::size_t m = 3; m <= 6; ++m) {
        require_certified(gen_stv_hard_1d(m, 64));
        require_certified(gen_stv_hard_simplex(m, 64));
    }
}
