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

#include "metricvote/majority.hpp"

#include <algorithm>

namespace metricvote {

MajorityMatrix::MajorityMatrix(const RankingProfile& profile)
    : counts_(profile.num_candidates(), std::vector<Count>(profile.num_candidates(), 0)),
      n_(profile.num_voters()) {
    for (std::size_t i = 0; i < profile.num_groups(); ++i) {
        const auto& order = profile.order(VoterId{i});
        Count w = profile.weight(VoterId{i});
        for (std::size_t x = 0; x < order.size(); ++x)
            for (std::size_t y = x + 1; y < order.size(); ++y)
                counts_[order[x].index][order[y].index] += w;
    }
}

MajorityMatrix::MajorityMatrix(std::vector<std::vector<Count>> counts, Count num_voters)
    : counts_(std::move(counts)), n_(num_voters) {
    for (const auto& row : counts_)
        if (row.size() != counts_.size()) throw InvalidInstanceError("majority matrix is not square");
}

MajorityMatrix majority_matrix(const RankingProfile& profile) { return MajorityMatrix(profile); }

bool dominates(const MajorityMatrix& m, CandidateId a, CandidateId b) {
    return 2 * m(a, b) > m.num_voters();
}

bool weakly_dominates(const MajorityMatrix& m, CandidateId a, CandidateId b) {
    return 2 * m(a, b) >= m.num_voters();
}

bool pareto_dominates(const MajorityMatrix& m, CandidateId a, CandidateId b) {
    return m(a, b) == m.num_voters();
}

std::optional<CandidateId> condorcet_winner(const MajorityMatrix& m) {
    for (std::size_t a = 0; a < m.size(); ++a) {
        bool wins = true;
        for (std::size_t b = 0; b < m.size() && wins; ++b)
            if (a != b && !dominates(m, CandidateId{a}, CandidateId{b})) wins = false;
        if (wins) return CandidateId{a};
    }
    return std::nullopt;
}

std::vector<std::size_t> copeland_scores(const MajorityMatrix& m) {
    std::vector<std::size_t> scores(m.size(), 0);
    for (std::size_t a = 0; a < m.size(); ++a)
        for (std::size_t b = 0; b < m.size(); ++b)
            if (a != b && dominates(m, CandidateId{a}, CandidateId{b})) ++scores[a];
    return scores;
}

CandidateSet smith_set(const MajorityMatrix& m) {
    // The smallest dominant set containing x is the closure of {x} under
    // "y is in, y does not dominate z => z is in". Dominant sets are nested,
    // so the smallest closure over all x is the Smith set.
    const std::size_t size = m.size();
    CandidateSet best(size);
    std::size_t best_size = size + 1;
    for (std::size_t x = 0; x < size; ++x) {
        CandidateSet closure(size);
        closure.insert(CandidateId{x});
        std::vector<std::size_t> stack{x};
        while (!stack.empty()) {
            std::size_t y = stack.back();
            stack.pop_back();
            for (std::size_t z = 0; z < size; ++z)
                if (z != y && !closure.contains(CandidateId{z}) &&
                    !dominates(m, CandidateId{y}, CandidateId{z})) {
                    closure.insert(CandidateId{z});
                    stack.push_back(z);
                }
        }
        if (closure.size() < best_size) {
            best_size = closure.size();
            best = closure;
        }
    }
    return best;
}

BeatpathStrengths beatpath_strengths(const MajorityMatrix& m) {
    const std::size_t size = m.size();
    std::vector<std::vector<Count>> p(size, std::vector<Count>(size, 0));
    for (std::size_t a = 0; a < size; ++a)
        for (std::size_t b = 0; b < size; ++b)
            if (a != b && dominates(m, CandidateId{a}, CandidateId{b})) p[a][b] = m.counts()[a][b];
    for (std::size_t k = 0; k < size; ++k)
        for (std::size_t a = 0; a < size; ++a) {
            if (a == k) continue;
            for (std::size_t b = 0; b < size; ++b)
                if (b != a && b != k) p[a][b] = std::max(p[a][b], std::min(p[a][k], p[k][b]));
        }
    return BeatpathStrengths(std::move(p));
}

CandidateSet immunity_set(const MajorityMatrix& m) {
    const BeatpathStrengths p = beatpath_strengths(m);
    CandidateSet out(m.size());
    for (std::size_t a = 0; a < m.size(); ++a) {
        bool immune = true;
        for (std::size_t b = 0; b < m.size() && immune; ++b) {
            CandidateId ca{a}, cb{b};
            if (a != b && dominates(m, cb, ca) && p(ca, cb) < m(cb, ca)) immune = false;
        }
        if (immune) out.insert(CandidateId{a});
    }
    return out;
}

}  // namespace metricvote
