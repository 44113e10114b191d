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

#include "metricvote/rules.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace metricvote {

namespace {

void require_candidates(const RankingProfile& profile, const TieBreakOrder& lex) {
    if (profile.num_candidates() == 0) throw PreconditionError("profile has no candidates");
    if (lex.size() != profile.num_candidates())
        throw PreconditionError("tie-break order does not match the candidate count");
}

/// Winner = lex-best among the candidates attaining the maximum score.
RuleOutcome argmax_outcome(std::vector<Rational> scores, const TieBreakOrder& lex) {
    const Rational best = *std::max_element(scores.begin(), scores.end());
    RuleOutcome out{CandidateId{}, CandidateSet(scores.size()), {}};
    std::vector<CandidateId> tied;
    for (std::size_t c = 0; c < scores.size(); ++c)
        if (scores[c] == best) {
            tied.push_back(CandidateId{c});
            out.tied_set.insert(CandidateId{c});
        }
    out.winner = lex.best(tied);
    out.trace.scores = std::move(scores);
    return out;
}

}  // namespace

ScoringVector plurality_vector(std::size_t m) { return k_approval_vector(m, 1); }

ScoringVector veto_vector(std::size_t m) {
    ScoringVector s(m, Rational(1));
    if (m > 0) s.back() = 0;
    return s;
}

ScoringVector borda_vector(std::size_t m) {
    ScoringVector s(m);
    for (std::size_t i = 0; i < m; ++i) s[i] = Rational(static_cast<Count>(m - 1 - i));
    return s;
}

ScoringVector k_approval_vector(std::size_t m, std::size_t k) {
    ScoringVector s(m, Rational(0));
    for (std::size_t i = 0; i < std::min(k, m); ++i) s[i] = 1;
    return s;
}

RuleOutcome scoring_winner(const RankingProfile& profile, const ScoringVector& s,
                           const TieBreakOrder& lex) {
    require_candidates(profile, lex);
    if (s.size() != profile.num_candidates())
        throw PreconditionError("scoring vector length " + std::to_string(s.size()) +
                                " does not match m = " + std::to_string(profile.num_candidates()));
    std::vector<Rational> scores(profile.num_candidates(), Rational(0));
    for (std::size_t i = 0; i < profile.num_groups(); ++i) {
        const auto& order = profile.order(VoterId{i});
        const Rational w(profile.weight(VoterId{i}));
        for (std::size_t pos = 0; pos < order.size(); ++pos) scores[order[pos].index] += w * s[pos];
    }
    return argmax_outcome(std::move(scores), lex);
}

RuleOutcome plurality_winner(const RankingProfile& profile, const TieBreakOrder& lex) {
    return scoring_winner(profile, plurality_vector(profile.num_candidates()), lex);
}

RuleOutcome veto_winner(const RankingProfile& profile, const TieBreakOrder& lex) {
    return scoring_winner(profile, veto_vector(profile.num_candidates()), lex);
}

RuleOutcome borda_winner(const RankingProfile& profile, const TieBreakOrder& lex) {
    return scoring_winner(profile, borda_vector(profile.num_candidates()), lex);
}

RuleOutcome k_approval_winner(const RankingProfile& profile, std::size_t k,
                              const TieBreakOrder& lex) {
    return scoring_winner(profile, k_approval_vector(profile.num_candidates(), k), lex);
}

RuleOutcome copeland_winner(const RankingProfile& profile, const TieBreakOrder& lex) {
    require_candidates(profile, lex);
    std::vector<Rational> scores;
    for (std::size_t s : copeland_scores(MajorityMatrix(profile)))
        scores.emplace_back(static_cast<Count>(s));
    return argmax_outcome(std::move(scores), lex);
}

RuleOutcome ranked_pairs_winner(const RankingProfile& profile, const TieBreakOrder& lex) {
    require_candidates(profile, lex);
    const MajorityMatrix m(profile);
    const std::size_t size = m.size();

    std::vector<PairDecision> pairs;
    for (std::size_t a = 0; a < size; ++a)
        for (std::size_t b = 0; b < size; ++b)
            if (a != b && m.counts()[a][b] > m.counts()[b][a])
                pairs.push_back({CandidateId{a}, CandidateId{b}, m.counts()[a][b], false});
    std::sort(pairs.begin(), pairs.end(), [&](const PairDecision& x, const PairDecision& y) {
        if (x.weight != y.weight) return x.weight > y.weight;
        if (x.from != y.from) return lex.prefers(x.from, y.from);
        return lex.prefers(x.to, y.to);
    });

    std::vector<std::vector<bool>> locked(size, std::vector<bool>(size, false));
    auto reaches = [&](std::size_t from, std::size_t to) {
        std::vector<bool> seen(size, false);
        std::vector<std::size_t> stack{from};
        seen[from] = true;
        while (!stack.empty()) {
            std::size_t x = stack.back();
            stack.pop_back();
            if (x == to) return true;
            for (std::size_t y = 0; y < size; ++y)
                if (locked[x][y] && !seen[y]) {
                    seen[y] = true;
                    stack.push_back(y);
                }
        }
        return false;
    };
    for (auto& pair : pairs) {
        if (reaches(pair.to.index, pair.from.index)) continue;
        locked[pair.from.index][pair.to.index] = true;
        pair.locked = true;
    }

    RuleOutcome out{CandidateId{}, CandidateSet(size), {}};
    std::vector<CandidateId> sources;
    for (std::size_t b = 0; b < size; ++b) {
        bool has_incoming = false;
        for (std::size_t a = 0; a < size; ++a) has_incoming = has_incoming || locked[a][b];
        if (!has_incoming) {
            sources.push_back(CandidateId{b});
            out.tied_set.insert(CandidateId{b});
        }
    }
    if (sources.empty()) throw InternalInconsistencyError("ranked pairs locked a cycle");
    out.winner = lex.best(sources);
    out.trace.pairs = std::move(pairs);
    return out;
}

RuleOutcome schulze_winner(const RankingProfile& profile, const TieBreakOrder& lex) {
    require_candidates(profile, lex);
    const MajorityMatrix m(profile);
    const BeatpathStrengths p = beatpath_strengths(m);
    RuleOutcome out{CandidateId{}, CandidateSet(m.size()), {}};
    std::vector<CandidateId> tied;
    for (std::size_t w = 0; w < m.size(); ++w) {
        bool ok = true;
        for (std::size_t c = 0; c < m.size() && ok; ++c)
            if (p(CandidateId{w}, CandidateId{c}) < p(CandidateId{c}, CandidateId{w})) ok = false;
        if (ok) {
            tied.push_back(CandidateId{w});
            out.tied_set.insert(CandidateId{w});
        }
    }
    if (tied.empty()) throw InternalInconsistencyError("no candidate satisfies the Schulze condition");
    out.winner = lex.best(tied);
    return out;
}

RuleOutcome stv_winner(const RankingProfile& profile, const TieBreakOrder& lex) {
    require_candidates(profile, lex);
    const std::size_t size = profile.num_candidates();
    std::vector<bool> alive(size, true);
    RuleOutcome out{CandidateId{}, CandidateSet(size), {}};
    for (std::size_t round = 0; round + 1 < size; ++round) {
        std::vector<Count> tally(size, 0);
        for (std::size_t i = 0; i < profile.num_groups(); ++i)
            for (CandidateId c : profile.order(VoterId{i}))
                if (alive[c.index]) {
                    tally[c.index] += profile.weight(VoterId{i});
                    break;
                }
        StvRound r;
        Count low = 0;
        bool first = true;
        for (std::size_t c = 0; c < size; ++c) {
            if (!alive[c]) continue;
            r.remaining.push_back(CandidateId{c});
            r.scores.push_back(tally[c]);
            if (first || tally[c] < low) low = tally[c];
            first = false;
        }
        for (std::size_t c = 0; c < size; ++c)
            if (alive[c] && tally[c] == low) r.lowest.push_back(CandidateId{c});
        r.eliminated = lex.worst(r.lowest);
        alive[r.eliminated.index] = false;
        out.trace.rounds.push_back(std::move(r));
    }
    for (std::size_t c = 0; c < size; ++c)
        if (alive[c]) out.winner = CandidateId{c};
    out.tied_set.insert(out.winner);
    return out;
}

RuleOutcome av_winner(const ApprovalProfile& profile, const TieBreakOrder& lex) {
    if (profile.num_candidates() == 0) throw PreconditionError("profile has no candidates");
    std::vector<Rational> scores;
    for (std::size_t c = 0; c < profile.num_candidates(); ++c)
        scores.emplace_back(profile.approval_count(CandidateId{c}));
    return argmax_outcome(std::move(scores), lex);
}

std::optional<ScoringVector> Rule::scoring_vector(std::size_t m) const {
    switch (kind) {
        case RuleKind::kPlurality: return plurality_vector(m);
        case RuleKind::kVeto: return veto_vector(m);
        case RuleKind::kBorda: return borda_vector(m);
        case RuleKind::kKApproval: return k_approval_vector(m, k);
        case RuleKind::kScoring: return vector;
        default: return std::nullopt;
    }
}

Rule parse_rule(const std::string& text) {
    if (text == "plurality") return Rule::plurality();
    if (text == "veto") return Rule::veto();
    if (text == "borda") return Rule::borda();
    if (text == "copeland") return Rule::copeland();
    if (text == "ranked-pairs" || text == "ranked_pairs") return Rule::ranked_pairs();
    if (text == "schulze") return Rule::schulze();
    if (text == "stv") return Rule::stv();
    if (text == "av") return Rule::av();
    auto colon = text.find(':');
    std::string head = text.substr(0, colon);
    std::string tail = colon == std::string::npos ? "" : text.substr(colon + 1);
    if (head == "k-approval" && !tail.empty()) {
        std::size_t k = 0;
        auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), k);
        if (ec != std::errc() || ptr != tail.data() + tail.size() || k == 0)
            throw PreconditionError("bad k in '" + text + "'");
        return Rule::k_approval(k);
    }
    if (head == "scoring" && !tail.empty()) {
        ScoringVector s;
        std::stringstream in(tail);
        std::string token;
        while (std::getline(in, token, ',')) s.push_back(parse_rational(token));
        return Rule::scoring(std::move(s));
    }
    throw PreconditionError("unknown rule '" + text + "'");
}

std::string rule_name(const Rule& rule) {
    switch (rule.kind) {
        case RuleKind::kPlurality: return "plurality";
        case RuleKind::kVeto: return "veto";
        case RuleKind::kBorda: return "borda";
        case RuleKind::kKApproval: return "k-approval:" + std::to_string(rule.k);
        case RuleKind::kScoring: {
            std::string out = "scoring:";
            for (std::size_t i = 0; i < rule.vector.size(); ++i)
                out += (i ? "," : "") + to_string(rule.vector[i]);
            return out;
        }
        case RuleKind::kCopeland: return "copeland";
        case RuleKind::kRankedPairs: return "ranked-pairs";
        case RuleKind::kSchulze: return "schulze";
        case RuleKind::kStv: return "stv";
        case RuleKind::kAv: return "av";
    }
    return "unknown";
}

RuleOutcome apply(const Rule& rule, const RankingProfile& profile, const TieBreakOrder& lex) {
    if (auto s = rule.scoring_vector(profile.num_candidates())) return scoring_winner(profile, *s, lex);
    switch (rule.kind) {
        case RuleKind::kCopeland: return copeland_winner(profile, lex);
        case RuleKind::kRankedPairs: return ranked_pairs_winner(profile, lex);
        case RuleKind::kSchulze: return schulze_winner(profile, lex);
        case RuleKind::kStv: return stv_winner(profile, lex);
        default: throw PreconditionError(rule_name(rule) + " does not take a ranking profile");
    }
}

RuleOutcome apply(const Rule& rule, const ElectionInstance& instance) {
    if (rule.kind == RuleKind::kAv) return av_winner(truthful_approvals(instance), instance.lex());
    return apply(rule, induced_ranking(instance), instance.lex());
}

}  // namespace metricvote
