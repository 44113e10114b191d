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

#include <optional>
#include <vector>

#include "metricvote/instance.hpp"

namespace metricvote {

/// Pairwise counts: entry (a, b) is the weighted number of voters ranking a above b.
class MajorityMatrix {
public:
    explicit MajorityMatrix(const RankingProfile& profile);
    MajorityMatrix(std::vector<std::vector<Count>> counts, Count num_voters);

    std::size_t size() const { return counts_.size(); }
    Count num_voters() const { return n_; }
    Count operator()(CandidateId a, CandidateId b) const { return counts_[a.index][b.index]; }
    const std::vector<std::vector<Count>>& counts() const { return counts_; }

private:
    std::vector<std::vector<Count>> counts_;
    Count n_;
};

MajorityMatrix majority_matrix(const RankingProfile& profile);

/// M(a,b) > n/2.
bool dominates(const MajorityMatrix& m, CandidateId a, CandidateId b);
/// M(a,b) >= n/2.
bool weakly_dominates(const MajorityMatrix& m, CandidateId a, CandidateId b);
/// M(a,b) = n.
bool pareto_dominates(const MajorityMatrix& m, CandidateId a, CandidateId b);

std::optional<CandidateId> condorcet_winner(const MajorityMatrix& m);

/// Number of candidates each candidate strictly dominates.
std::vector<std::size_t> copeland_scores(const MajorityMatrix& m);

/// Minimal nonempty set whose members all dominate every outsider.
CandidateSet smith_set(const MajorityMatrix& m);

/// p[a][b]: strongest beatpath from a to b over strict-domination edges, 0 if none.
class BeatpathStrengths {
public:
    explicit BeatpathStrengths(std::vector<std::vector<Count>> p) : p_(std::move(p)) {}

    std::size_t size() const { return p_.size(); }
    Count operator()(CandidateId a, CandidateId b) const { return p_[a.index][b.index]; }
    const std::vector<std::vector<Count>>& values() const { return p_; }

    friend bool operator==(const BeatpathStrengths&, const BeatpathStrengths&) = default;

private:
    std::vector<std::vector<Count>> p_;
};

BeatpathStrengths beatpath_strengths(const MajorityMatrix& m);

/// Candidates that answer every defeat with a beatpath back at least as strong.
CandidateSet immunity_set(const MajorityMatrix& m);

}  // namespace metricvote
