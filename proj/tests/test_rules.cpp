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
#include "metricvote/rules.hpp"

using namespace metricvote;
using namespace fixtures;

TEST_CASE("scoring rules") {
    auto out = plurality_winner(induced_ranking(t1()), TieBreakOrder::identity(2));
    CHECK(out.winner == CandidateId{0});
    CHECK(out.trace.scores == std::vector<Rational>{2, 1});

    // Equal groups, one first place each.
    RankingProfile equal(3, {ids({0, 1, 2}), ids({1, 2, 0}), ids({2, 1, 0})}, {2, 2, 2});
    auto eq = plurality_winner(equal, TieBreakOrder::identity(3));
    CHECK(eq.winner == CandidateId{0});
    CHECK(eq.tied_set.size() == 3);

    // Two voters at c1 ranking c1 > c2 > c3, one at c2 ranking c2 > c1 > c3.
    RankingProfile borda(3, {ids({0, 1, 2}), ids({1, 0, 2})}, {2, 1});
    auto b = borda_winner(borda, TieBreakOrder(ids({1, 0, 2})));
    CHECK(b.trace.scores[0] == Rational(5));
    CHECK(b.trace.scores[1] == Rational(4));
    CHECK(b.winner == CandidateId{0});
}

TEST_CASE("named vectors") {
    CHECK(veto_vector(3) == ScoringVector{1, 1, 0});
    CHECK(borda_vector(3) == ScoringVector{2, 1, 0});
    CHECK(k_approval_vector(4, 2) == ScoringVector{1, 1, 0, 0});
    CHECK(plurality_vector(3) == ScoringVector{1, 0, 0});
}

TEST_CASE("copeland") {
    CHECK(copeland_winner(unanimous(3, 3), TieBreakOrder::identity(3)).winner == CandidateId{0});
    auto c = copeland_winner(cy3(), TieBreakOrder(ids({1, 0, 2})));
    CHECK(c.tied_set.size() == 3);
    CHECK(c.winner == CandidateId{1});
}

TEST_CASE("ranked pairs locks edges in order") {
    CHECK(ranked_pairs_winner(unanimous(3, 3), TieBreakOrder::identity(3)).winner == CandidateId{0});
    auto rp = ranked_pairs_winner(cy3(), TieBreakOrder::identity(3));
    CHECK(rp.winner == CandidateId{0});
    REQUIRE(rp.trace.pairs.size() == 3);
    CHECK(rp.trace.pairs[0].from == CandidateId{0});
    CHECK(rp.trace.pairs[0].locked);
    CHECK(rp.trace.pairs[1].from == CandidateId{1});
    CHECK(rp.trace.pairs[1].locked);
    CHECK(rp.trace.pairs[2].from == CandidateId{2});
    CHECK_FALSE(rp.trace.pairs[2].locked);
}

TEST_CASE("schulze") {
    CHECK(schulze_winner(unanimous(3, 3), TieBreakOrder::identity(3)).winner == CandidateId{0});
    auto s = schulze_winner(cy3(), TieBreakOrder::identity(3));
    CHECK(s.tied_set.size() == 3);
    CHECK(s.winner == CandidateId{0});
}

TEST_CASE("stv eliminates the least preferred among the lowest") {
    auto u = stv_winner(unanimous(3, 3), TieBreakOrder::identity(3));
    CHECK(u.winner == CandidateId{0});
    REQUIRE(u.trace.rounds.size() == 2);
    CHECK(u.trace.rounds[0].eliminated == CandidateId{2});
    CHECK(u.trace.rounds[1].eliminated == CandidateId{1});

    // c3 at 1, c1 at 2, c2 at 4; one voter at c3, one at c1, two at c2.
    auto inst = line({1, 2, 4}, {2, 4, 1}, {0, 0, 0}, {1, 1, 2}, TieBreakOrder(ids({2, 1, 0})));
    auto out = stv_winner(induced_ranking(inst), inst.lex());
    REQUIRE(out.trace.rounds.size() == 2);
    CHECK(out.trace.rounds[0].scores == std::vector<Count>{1, 2, 1});
    CHECK(out.trace.rounds[0].eliminated == CandidateId{0});
    CHECK(out.trace.rounds[1].scores == std::vector<Count>{2, 2});
    CHECK(out.trace.rounds[1].eliminated == CandidateId{1});
    CHECK(out.winner == CandidateId{2});
}

TEST_CASE("approval voting") {
    CHECK(av_winner(truthful_approvals(t1()), TieBreakOrder::identity(2)).winner == CandidateId{0});
    auto both = line({0}, {0, 1}, {1}, {3}, TieBreakOrder(ids({1, 0})));
    CHECK(av_winner(truthful_approvals(both), both.lex()).winner == CandidateId{1});
}

TEST_CASE("single candidate") {
    RankingProfile one(1, {ids({0})}, {4});
    auto lex = TieBreakOrder::identity(1);
    for (auto rule : {Rule::plurality(), Rule::borda(), Rule::copeland(), Rule::ranked_pairs(),
                      Rule::schulze(), Rule::stv()})
        CHECK(apply(rule, one, lex).winner == CandidateId{0});
}

TEST_CASE("rule names round trip") {
    for (std::string name : {"plurality", "veto", "borda", "k-approval:2", "scoring:3,1/2,0",
                             "copeland", "ranked-pairs", "schulze", "stv", "av"})
        CHECK(rule_name(parse_rule(name)) == name);
    CHECK_THROWS_AS(parse_rule("dictator"), PreconditionError);
}
