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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "metricvote/distortion.hpp"
#include "metricvote/generators.hpp"
#include "metricvote/instance.hpp"

namespace metricvote {

inline constexpr std::string_view kFormatVersion = "metric-election/1";

/// Malformed instance text. The message carries the line/column or the
/// offending field path.
class ParseError : public Error {
public:
    using Error::Error;
};

struct InstanceFile {
    ElectionInstance instance;
    std::optional<HardInstanceCertificate> certificate;
};

std::string serialize_instance(const ElectionInstance& instance,
                               const std::optional<HardInstanceCertificate>& certificate = {});
InstanceFile parse_instance(std::string_view text);

InstanceFile read_instance_file(const std::string& path);
void write_instance_file(const std::string& path, const ElectionInstance& instance,
                         const std::optional<HardInstanceCertificate>& certificate = {});

std::uint64_t fnv1a64(std::string_view bytes);
/// FNV-1a 64 of the compact serialization (certificate excluded), in hex.
std::string instance_digest(const ElectionInstance& instance);

struct ResultRecord {
    std::string digest;
    std::string rule;
    std::string winner;
    std::vector<std::string> tied_set;
    DistortionValue distance;
    DistortionValue ab;
    std::optional<DistortionValue> bound;
    std::string bound_measure = "ab";  // or "distance"
    std::optional<CertificateCheck> certificate;
    // Present when every consistent ranking profile was examined.
    std::optional<DistortionValue> worst_ab;
    std::optional<std::string> worst_winner;
    std::size_t profiles = 0;
    bool fell_back = false;
    // Search findings only.
    std::optional<ElectionInstance> instance;
    std::vector<std::string> findings;
};

/// Whether the measured value (the worst one, when profiles were enumerated)
/// respects the attached bound.
bool bound_holds(const ResultRecord& record);

std::string serialize_result(const ResultRecord& record);

}  // namespace metricvote
