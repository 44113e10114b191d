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

#pragma once

#include <vector>

#include "metricvote/instance.hpp"

namespace fixtures {

using namespace metricvote;

inline ElectionInstance line(const std::vector<double>& voters, const std::vector<double>& candidates,
                             const std::vector<double>& radii, std::vector<Count> weights = {},
                             TieBreakOrder lex = {}) {
    std::vector<Point> vp, cp;
    for (double x : voters) vp.push_back({x});
    for (double x : candidates) cp.push_back({x});
    std::vector<VoterGroup> groups;
    for (std::size_t i = 0; i < voters.size(); ++i)
        groups.push_back({weights.empty() ? 1 : weights[i], radii[i]});
    if (lex.size() == 0) lex = TieBreakOrder::identity(candidates.size());
    return ElectionInstance(MetricSpace::euclidean(1, vp, cp), groups, lex);
}

// c1 at 0, c2 at 3, voters at 0, 1, 3.
inline ElectionInstance t1(double radius = 1.0) { return line({0, 1, 3}, {0, 3}, {radius, radius, radius}); }
inline ElectionInstance t1_radii(std::vector<double> radii) { return line({0, 1, 3}, {0, 3}, radii); }

inline std::vector<CandidateId> ids(std::initializer_list<std::size_t> xs) {
    std::vector<CandidateId> out;
    for (auto x : xs) out.push_back(CandidateId{x});
    return out;
}

// c1>c2>c3, c2>c3>c1, c3>c1>c2.
inline RankingProfile cy3() {
    return RankingProfile(3, {ids({0, 1, 2}), ids({1, 2, 0}), ids({2, 0, 1})});
}

inline RankingProfile unanimous(std::size_t m, Count n) {
    std::vector<CandidateId> order;
    for (std::size_t c = 0; c < m; ++c) order.push_back(CandidateId{c});
    return RankingProfile(m, {order}, {n});
}

inline CandidateSet set_of(std::size_t m, std::initializer_list<std::size_t> xs) {
    CandidateSet s(m);
    for (auto x : xs) s.insert(CandidateId{x});
    return s;
}

}  // namespace fixtures
