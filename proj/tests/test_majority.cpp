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
#include "metricvote/majority.hpp"

using namespace metricvote;
using namespace fixtures;

TEST_CASE("majority counts") {
    MajorityMatrix t(induced_ranking(t1()));
    CHECK(t(CandidateId{0}, CandidateId{1}) == 2);
    CHECK(t(CandidateId{1}, CandidateId{0}) == 1);

    MajorityMatrix u(unanimous(3, 5));
    CHECK(u(CandidateId{0}, CandidateId{2}) == 5);
    CHECK(u(CandidateId{2}, CandidateId{1}) == 0);

    MajorityMatrix c(cy3());
    CHECK(c(CandidateId{0}, CandidateId{1}) == 2);
    CHECK(c(CandidateId{1}, CandidateId{2}) == 2);
    CHECK(c(CandidateId{2}, CandidateId{0}) == 2);
}

TEST_CASE("domination relations") {
    MajorityMatrix t(induced_ranking(t1()));
    CHECK(dominates(t, CandidateId{0}, CandidateId{1}));
    CHECK_FALSE(pareto_dominates(t, CandidateId{0}, CandidateId{1}));
    CHECK_FALSE(pareto_dominates(t, CandidateId{1}, CandidateId{0}));

    MajorityMatrix half({{0, 2}, {2, 0}}, 4);
    CHECK(weakly_dominates(half, CandidateId{0}, CandidateId{1}));
    CHECK_FALSE(dominates(half, CandidateId{0}, CandidateId{1}));

    MajorityMatrix c(cy3());
    CHECK(dominates(c, CandidateId{2}, CandidateId{0}));
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 0; b < 3; ++b)
            if (a != b) CHECK_FALSE(pareto_dominates(c, CandidateId{a}, CandidateId{b}));
    CHECK(pareto_dominates(MajorityMatrix(unanimous(2, 3)), CandidateId{0}, CandidateId{1}));
}

TEST_CASE("condorcet winner and Smith set") {
    CHECK(condorcet_winner(MajorityMatrix(unanimous(3, 5))) == CandidateId{0});
    CHECK_FALSE(condorcet_winner(MajorityMatrix(cy3())));
    CHECK(smith_set(MajorityMatrix(unanimous(3, 5))) == set_of(3, {0}));
    CHECK(smith_set(MajorityMatrix(cy3())) == set_of(3, {0, 1, 2}));
}

TEST_CASE("Smith set with a cycle above a loser") {
    // a, b, c cycle; everyone ranks d last.
    RankingProfile p(4, {ids({0, 1, 2, 3}), ids({1, 2, 0, 3}), ids({2, 0, 1, 3})});
    CHECK(smith_set(MajorityMatrix(p)) == set_of(4, {0, 1, 2}));
}

TEST_CASE("beatpath strengths") {
    auto p = beatpath_strengths(MajorityMatrix(cy3()));
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 0; b < 3; ++b)
            if (a != b) CHECK(p(CandidateId{a}, CandidateId{b}) == 2);

    auto u = beatpath_strengths(MajorityMatrix(unanimous(3, 4)));
    CHECK(u(CandidateId{0}, CandidateId{2}) == 4);
    CHECK(u(CandidateId{2}, CandidateId{0}) == 0);

    auto half = beatpath_strengths(MajorityMatrix({{0, 2}, {2, 0}}, 4));
    CHECK(half(CandidateId{0}, CandidateId{1}) == 0);
    CHECK(half(CandidateId{1}, CandidateId{0}) == 0);
}

TEST_CASE("immunity set") {
    CHECK(immunity_set(MajorityMatrix(unanimous(3, 2))) == set_of(3, {0}));
    CHECK(immunity_set(MajorityMatrix(cy3())) == set_of(3, {0, 1, 2}));
}
