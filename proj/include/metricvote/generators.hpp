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
#include <string>
#include <utility>
#include <vector>

#include "metricvote/distortion.hpp"
#include "metricvote/instance.hpp"
#include "metricvote/rules.hpp"

namespace metricvote {

/// Expected behaviour of a generated instance. Absent fields are not checked.
struct HardInstanceCertificate {
    std::optional<std::string> rule;    // absent: `winner` is just the candidate measured
    std::optional<std::string> winner;
    std::optional<std::string> optimal;
    std::string optimal_criterion = "acceptability";  // or "distance"
    std::string measure = "ab";                       // "ab", "distance" or "av-sweep"
    std::optional<DistortionValue> expected;
    double tolerance = 0.0;  // absolute slack when `expected` is not exact
    std::optional<DistortionValue> limit;
    std::optional<Rational> efficiency;
    std::vector<std::pair<std::string, Count>> approval_counts;
    std::optional<std::size_t> smith_size;
    std::optional<std::string> condorcet_winner;
    std::string consistency = "local";  // or "global"
};

struct CertificateCheck {
    bool passed = true;
    std::vector<std::string> failures;
    std::optional<DistortionValue> achieved;
};

CertificateCheck check_certificate(const ElectionInstance& instance,
                                   const HardInstanceCertificate& certificate);

struct GeneratedInstance {
    ElectionInstance instance;
    HardInstanceCertificate certificate;
};

inline constexpr double kDefaultEpsilon = 1e-4;

enum class AvRegime { kLow, kMid, kHigh };

AvRegime parse_av_regime(const std::string& text);
/// The regime whose p-range contains p (low at 1/4, mid at 1/2).
AvRegime regime_for(const Rational& p);

/// Two candidates, all voters at the first, lex prefers the second.
GeneratedInstance gen_av_degenerate(Count n);

GeneratedInstance gen_av_hard(const Rational& p, Count n, double eps, AvRegime regime);

/// Candidates on a regular (ell-1)-simplex; one group per cyclic shift.
/// Candidate c_shift is approved by everyone and c_{shift+1} by n/ell voters.
GeneratedInstance gen_smith_cycle(std::size_t ell, Count n, std::size_t shift);

/// Two instances with identical induced rankings and opposite acceptability optima.
std::pair<GeneratedInstance, GeneratedInstance> gen_ell1_pair(Count n);

GeneratedInstance gen_condorcet_hard(Count n);
GeneratedInstance gen_copeland_hard(Count n);
GeneratedInstance gen_plurality_hard(std::size_t m, Count n, double eps = 1e-3);
GeneratedInstance gen_scoring_hard(const ScoringVector& s, Count n, double eps = 1e-3);
GeneratedInstance gen_stv_hard_1d(std::size_t m, Count n);
GeneratedInstance gen_stv_hard_simplex(std::size_t m, Count n);

}  // namespace metricvote
