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

#include <string>
#include <vector>

#include "metricvote/instance.hpp"
#include "metricvote/majority.hpp"

namespace metricvote {

/// Points awarded for each ranking position, first position first.
using ScoringVector = std::vector<Rational>;

ScoringVector plurality_vector(std::size_t m);
ScoringVector veto_vector(std::size_t m);
ScoringVector borda_vector(std::size_t m);
ScoringVector k_approval_vector(std::size_t m, std::size_t k);

struct PairDecision {
    CandidateId from;
    CandidateId to;
    Count weight = 0;
    bool locked = false;
};

struct StvRound {
    std::vector<CandidateId> remaining;
    std::vector<Count> scores;  // parallel to `remaining`
    std::vector<CandidateId> lowest;
    CandidateId eliminated;
};

/// Audit record. Only the fields relevant to the rule are filled in.
struct RuleTrace {
    std::vector<Rational> scores;  // per candidate, for scoring / Copeland / AV
    std::vector<PairDecision> pairs;
    std::vector<StvRound> rounds;
};

struct RuleOutcome {
    CandidateId winner;
    CandidateSet tied_set;
    RuleTrace trace;
};

RuleOutcome scoring_winner(const RankingProfile& profile, const ScoringVector& s,
                           const TieBreakOrder& lex);
RuleOutcome plurality_winner(const RankingProfile& profile, const TieBreakOrder& lex);
RuleOutcome veto_winner(const RankingProfile& profile, const TieBreakOrder& lex);
RuleOutcome borda_winner(const RankingProfile& profile, const TieBreakOrder& lex);
RuleOutcome k_approval_winner(const RankingProfile& profile, std::size_t k,
                              const TieBreakOrder& lex);

RuleOutcome copeland_winner(const RankingProfile& profile, const TieBreakOrder& lex);
RuleOutcome ranked_pairs_winner(const RankingProfile& profile, const TieBreakOrder& lex);
RuleOutcome schulze_winner(const RankingProfile& profile, const TieBreakOrder& lex);
RuleOutcome stv_winner(const RankingProfile& profile, const TieBreakOrder& lex);
RuleOutcome av_winner(const ApprovalProfile& profile, const TieBreakOrder& lex);

enum class RuleKind {
    kPlurality,
    kVeto,
    kBorda,
    kKApproval,
    kScoring,
    kCopeland,
    kRankedPairs,
    kSchulze,
    kStv,
    kAv,
};

struct Rule {
    RuleKind kind = RuleKind::kPlurality;
    std::size_t k = 1;     // k-approval
    ScoringVector vector;  // explicit scoring vector

    bool uses_rankings() const { return kind != RuleKind::kAv; }
    bool condorcet_consistent() const {
        return kind == RuleKind::kCopeland || kind == RuleKind::kRankedPairs ||
               kind == RuleKind::kSchulze;
    }
    /// The scoring vector this rule applies to m candidates, if it is a scoring rule.
    std::optional<ScoringVector> scoring_vector(std::size_t m) const;

    static Rule plurality() { return {RuleKind::kPlurality, 1, {}}; }
    static Rule veto() { return {RuleKind::kVeto, 1, {}}; }
    static Rule borda() { return {RuleKind::kBorda, 1, {}}; }
    static Rule k_approval(std::size_t k) { return {RuleKind::kKApproval, k, {}}; }
    static Rule scoring(ScoringVector s) { return {RuleKind::kScoring, 1, std::move(s)}; }
    static Rule copeland() { return {RuleKind::kCopeland, 1, {}}; }
    static Rule ranked_pairs() { return {RuleKind::kRankedPairs, 1, {}}; }
    static Rule schulze() { return {RuleKind::kSchulze, 1, {}}; }
    static Rule stv() { return {RuleKind::kStv, 1, {}}; }
    static Rule av() { return {RuleKind::kAv, 1, {}}; }
};

/// Accepts plurality, veto, borda, k-approval:K, scoring:s1,s2,..., copeland,
/// ranked-pairs, schulze, stv, av.
Rule parse_rule(const std::string& text);
std::string rule_name(const Rule& rule);

/// Runs a ranking-based rule on the given profile.
RuleOutcome apply(const Rule& rule, const RankingProfile& profile, const TieBreakOrder& lex);

/// Runs the rule on the instance: rankings are the canonical induced
/// profile, approvals the truthful ones.
RuleOutcome apply(const Rule& rule, const ElectionInstance& instance);

}  // namespace metricvote
