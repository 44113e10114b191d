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

#include <random>

#include "fixtures.hpp"
#include "metricvote/generators.hpp"
#include "metricvote/search.hpp"

using namespace metricvote;
using namespace fixtures;

namespace {

RankingProfile random_profile(std::mt19937_64& rng, std::size_t m, std::size_t groups) {
    std::vector<std::vector<CandidateId>> orders;
    std::vector<Count> weights;
    std::vector<CandidateId> base;
    for (std::size_t c = 0; c < m; ++c) base.push_back(CandidateId{c});
    for (std::size_t g = 0; g < groups; ++g) {
        std::shuffle(base.begin(), base.end(), rng);
        orders.push_back(base);
        weights.push_back(std::uniform_int_distribution<Count>(1, 3)(rng));
    }
    return RankingProfile(m, orders, weights);
}

}  // namespace

TEST_CASE("oracles on fixed profiles") {
    CHECK(oracle_smith(cy3()) == set_of(3, {0, 1, 2}));
    CHECK(oracle_smith(unanimous(4, 5)) == set_of(4, {0}));
    const MajorityMatrix m(cy3());
    CHECK(oracle_beatpaths(m) == beatpath_strengths(m));
}

TEST_CASE("oracles agree with the fast algorithms on random profiles") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t m = 2 + trial % 5;
        const RankingProfile profile = random_profile(rng, m, 1 + trial % 7);
        const MajorityMatrix matrix(profile);
        INFO("trial " << trial);
        CHECK(oracle_smith(matrix) == smith_set(matrix));
        CHECK(oracle_beatpaths(matrix) == beatpath_strengths(matrix));
    }
}

TEST_CASE("oracles refuse more than six candidates") {
    CHECK_THROWS_AS(oracle_smith(unanimous(7, 1)), SizeGuardError);
}

TEST_CASE("worst local profile") {
    const GeneratedInstance g = gen_av_degenerate(4);
    CHECK(worst_local_profile_av(g.instance).distortion.is_infinite());

    // Voter at 1 approving only c2 forces a split; the worst stays finite.
    const LocalProfileResult r = worst_local_profile_av(t1());
    CHECK_FALSE(r.distortion.is_infinite());
    CHECK(r.distortion.value() >= distance_distortion(t1(), CandidateId{0}).value());
}

TEST_CASE("AV search at p = 1/4 approaches 3 without breaking the bound") {
    SearchConfig cfg;
    cfg.dimension = 2;
    cfg.num_voters = 4;
    cfg.num_candidates = 4;
    cfg.pinned_efficiency = Rational(1, 4);
    cfg.budget = 5000;
    cfg.seed = 2;
    const SearchResult r = adversarial_search(cfg);
    CHECK(r.violations.empty());
    REQUIRE(r.best);
    CHECK(r.achieved.value() >= 2.85);
    REQUIRE(r.bound);
    CHECK(within_bound(r.achieved, *r.bound));
}

TEST_CASE("plurality ab search reaches 2/3") {
    SearchConfig cfg;
    cfg.rule = Rule::plurality();
    cfg.objective = Objective::kAb;
    cfg.num_voters = 3;
    cfg.global_radii = false;
    cfg.budget = 3000;
    const SearchResult r = adversarial_search(cfg);
    CHECK(r.violations.empty());
    REQUIRE(r.achieved.exact_value());
    CHECK(*r.achieved.exact_value() == Rational(2, 3));
}

TEST_CASE("search is deterministic for a seed") {
    SearchConfig cfg;
    cfg.budget = 500;
    cfg.seed = 11;
    const SearchResult a = adversarial_search(cfg), b = adversarial_search(cfg);
    CHECK(a.achieved.render() == b.achieved.render());
}
