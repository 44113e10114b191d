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

#include "metricvote/types.hpp"

#include <algorithm>
#include <charconv>

namespace metricvote {

TieBreakOrder::TieBreakOrder(std::vector<CandidateId> order)
    : order_(std::move(order)), rank_(order_.size(), order_.size()) {
    for (std::size_t pos = 0; pos < order_.size(); ++pos) {
        std::size_t c = order_[pos].index;
        if (c >= order_.size() || rank_[c] != order_.size())
            throw InvalidInstanceError("tie-break order is not a permutation of the candidates");
        rank_[c] = pos;
    }
}

TieBreakOrder TieBreakOrder::identity(std::size_t num_candidates) {
    std::vector<CandidateId> order(num_candidates);
    for (std::size_t i = 0; i < num_candidates; ++i) order[i] = CandidateId{i};
    return TieBreakOrder(std::move(order));
}

CandidateId TieBreakOrder::best(const std::vector<CandidateId>& among) const {
    if (among.empty()) throw PreconditionError("tie-break over an empty candidate list");
    return *std::min_element(among.begin(), among.end(),
                             [&](CandidateId a, CandidateId b) { return rank(a) < rank(b); });
}

CandidateId TieBreakOrder::worst(const std::vector<CandidateId>& among) const {
    if (among.empty()) throw PreconditionError("tie-break over an empty candidate list");
    return *std::max_element(among.begin(), among.end(),
                             [&](CandidateId a, CandidateId b) { return rank(a) < rank(b); });
}

std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational parse_rational(std::string_view text) {
    auto parse_int = [&](std::string_view s) {
        Count v = 0;
        if (!s.empty() && s.front() == '+') s.remove_prefix(1);
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
            throw PreconditionError("bad rational '" + std::string(text) + "'");
        return v;
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    const Count den = parse_int(text.substr(slash + 1));
    if (den == 0) throw PreconditionError("zero denominator in '" + std::string(text) + "'");
    return Rational(parse_int(text.substr(0, slash)), den);
}

}  // namespace metricvote
