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

using namespace metricvote;
using namespace fixtures;

TEST_CASE("induced ranking follows distance") {
    auto p = induced_ranking(t1());
    CHECK(p.order(VoterId{0}) == ids({0, 1}));
    CHECK(p.order(VoterId{1}) == ids({0, 1}));
    CHECK(p.order(VoterId{2}) == ids({1, 0}));

    auto single = line({0, 5}, {2}, {3, 3});
    CHECK(induced_ranking(single).order(VoterId{1}) == ids({0}));
}

TEST_CASE("induced ranking breaks exact ties by the declared order") {
    auto inst = line({1}, {0, 2}, {1}, {}, TieBreakOrder(ids({1, 0})));
    CHECK(induced_ranking(inst).order(VoterId{0}) == ids({1, 0}));
}

TEST_CASE("consistent rankings enumerate tie permutations") {
    CHECK(consistent_rankings(line({1}, {0, 2}, {1}), VoterId{0}).size() == 2);
    CHECK(consistent_rankings(line({0}, {0, 1, 3}, {1}), VoterId{0}).size() == 1);
    auto all_tied = MetricSpace::matrix(1, 3, {{0, 1, 1, 1}, {1, 0, 0, 0}, {1, 0, 0, 0}, {1, 0, 0, 0}});
    ElectionInstance inst(all_tied, {{1, 1.0}}, TieBreakOrder::identity(3));
    CHECK(consistent_rankings(inst, VoterId{0}).size() == 6);
    CHECK_THROWS_AS(consistent_rankings(inst, VoterId{0}, 5), SizeGuardError);
}

TEST_CASE("truthful approvals use closed balls") {
    auto a = truthful_approvals(t1());
    CHECK(a.approvals(VoterId{0}) == set_of(2, {0}));
    CHECK(a.approvals(VoterId{1}) == set_of(2, {0}));
    CHECK(a.approvals(VoterId{2}) == set_of(2, {1}));

    auto everyone = truthful_approvals(t1(3));
    for (auto v : t1().voter_ids()) CHECK(everyone.approvals(v).size() == 2);

    auto colocated = line({0, 3}, {0, 3}, {0, 0});
    CHECK(truthful_approvals(colocated).approvals(VoterId{1}) == set_of(2, {1}));
}

TEST_CASE("approvals at a common radius") {
    auto at3 = approvals_at_radius(t1(), 3);
    for (auto v : t1().voter_ids()) CHECK(at3.approvals(v) == set_of(2, {0, 1}));
    try {
        approvals_at_radius(t1(), 0);
        FAIL("expected EmptyApprovalError");
    } catch (const EmptyApprovalError& e) {
        CHECK(e.voter().index == 1);
    }
    CHECK(approvals_at_radius(t1(), 1) == truthful_approvals(t1()));
}

TEST_CASE("local consistency") {
    CHECK(is_locally_consistent(t1(), approvals_at_radius(t1(), 2)));
    ApprovalProfile bad(2, {set_of(2, {1}), set_of(2, {0}), set_of(2, {1})});
    CHECK_FALSE(is_locally_consistent(t1(), bad));
    ApprovalProfile fine(2, {set_of(2, {0}), set_of(2, {0}), set_of(2, {1})});
    CHECK(is_locally_consistent(t1(), fine));
}

TEST_CASE("global consistency") {
    for (double r : {1.0, 2.0, 3.0}) CHECK(is_globally_consistent(t1(), approvals_at_radius(t1(), r)));
    auto mixed = t1_radii({3, 1, 0});
    CHECK(is_locally_consistent(mixed, truthful_approvals(mixed)));
    CHECK_FALSE(is_globally_consistent(mixed, truthful_approvals(mixed)));
    auto solo = line({1}, {0, 3}, {1});
    CHECK(is_globally_consistent(solo, truthful_approvals(solo)));
}

TEST_CASE("efficiency fraction and approver sets") {
    auto a = truthful_approvals(t1());
    CHECK(efficiency_fraction(t1(), a, CandidateId{0}) == Rational(2, 3));
    CHECK(efficiency_fraction(t1(), approvals_at_radius(t1(), 3), CandidateId{0}) == Rational(1));
    ApprovalProfile none(2, {set_of(2, {1}), set_of(2, {1}), set_of(2, {1})});
    CHECK(efficiency_fraction(t1(), none, CandidateId{0}) == Rational(0));

    CHECK(approver_set(a, CandidateId{0}) == std::vector<VoterId>{VoterId{0}, VoterId{1}});
    CHECK(approver_set(none, CandidateId{0}).empty());
    CHECK(approver_set(approvals_at_radius(t1(), 3), CandidateId{1}).size() == 3);
}

TEST_CASE("weights count as repeated voters") {
    auto inst = line({0, 3}, {0, 3}, {1, 1}, {4, 2});
    CHECK(inst.num_voters() == 6);
    auto a = truthful_approvals(inst);
    CHECK(a.approval_count(CandidateId{0}) == 4);
    CHECK(efficiency_fraction(inst, a, CandidateId{1}) == Rational(1, 3));
}

TEST_CASE("construction rejects degenerate instances") {
    CHECK_THROWS_AS(line({}, {0}, {}), InvalidInstanceError);
    CHECK_THROWS_AS(line({0}, {}, {1}), InvalidInstanceError);
    CHECK_THROWS_AS(line({0}, {0}, {-1}), InvalidInstanceError);
    CHECK_THROWS_AS(TieBreakOrder(ids({0, 0})), InvalidInstanceError);
}

TEST_CASE("metric validation") {
    CHECK_FALSE(t1().metric().first_defect(1e-9));
    auto asym = MetricSpace::matrix(1, 1, {{0, 1}, {2, 0}});
    auto msg = asym.first_defect(1e-9);
    REQUIRE(msg);
    CHECK(msg->find("asymmetric") != std::string::npos);
    auto tri = MetricSpace::matrix(1, 2, {{0, 1, 5}, {1, 0, 1}, {5, 1, 0}});
    REQUIRE(tri.first_defect(1e-9));
    CHECK(tri.first_defect(1e-9)->find("triangle") != std::string::npos);
}
