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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

namespace metricvote {

/// Voter counts are weighted; a voter group of weight w counts as w voters.
using Count = std::int64_t;

/// Exact rational used for counts, ratios of counts and scoring vectors.
using Rational = boost::rational<Count>;

inline constexpr double kDefaultTolerance = 1e-9;

struct CandidateId {
    std::size_t index = 0;

    friend auto operator<=>(const CandidateId&, const CandidateId&) = default;
};

/// Identifies a voter group (a position with an integer multiplicity).
struct VoterId {
    std::size_t index = 0;

    friend auto operator<=>(const VoterId&, const VoterId&) = default;
};

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidInstanceError : public Error {
public:
    using Error::Error;
};

class EmptyApprovalError : public Error {
public:
    explicit EmptyApprovalError(VoterId voter)
        : Error("voter " + std::to_string(voter.index) + " has an empty approval ball"),
          voter_(voter) {}

    VoterId voter() const { return voter_; }

private:
    VoterId voter_;
};

class SizeGuardError : public Error {
public:
    using Error::Error;
};

class DivisibilityError : public Error {
public:
    using Error::Error;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

class InternalInconsistencyError : public Error {
public:
    using Error::Error;
};

/// A set of candidates stored as a membership mask over 0..m-1.
class CandidateSet {
public:
    CandidateSet() = default;
    explicit CandidateSet(std::size_t num_candidates) : mask_(num_candidates, false) {}

    std::size_t universe() const { return mask_.size(); }
    bool contains(CandidateId c) const { return c.index < mask_.size() && mask_[c.index]; }
    void insert(CandidateId c) { mask_.at(c.index) = true; }
    void erase(CandidateId c) { mask_.at(c.index) = false; }

    std::size_t size() const {
        std::size_t k = 0;
        for (bool b : mask_) k += b ? 1 : 0;
        return k;
    }
    bool empty() const { return size() == 0; }

    std::vector<CandidateId> members() const {
        std::vector<CandidateId> out;
        for (std::size_t i = 0; i < mask_.size(); ++i)
            if (mask_[i]) out.push_back(CandidateId{i});
        return out;
    }

    bool is_subset_of(const CandidateSet& other) const {
        for (std::size_t i = 0; i < mask_.size(); ++i)
            if (mask_[i] && !other.contains(CandidateId{i})) return false;
        return true;
    }

    friend bool operator==(const CandidateSet&, const CandidateSet&) = default;

private:
    std::vector<bool> mask_;
};

/// Total order over candidates used to resolve every tie. Position 0 is the
/// most preferred candidate.
class TieBreakOrder {
public:
    TieBreakOrder() = default;
    explicit TieBreakOrder(std::vector<CandidateId> order);

    /// c_1 > c_2 > ... > c_m.
    static TieBreakOrder identity(std::size_t num_candidates);

    std::size_t size() const { return order_.size(); }
    const std::vector<CandidateId>& order() const { return order_; }

    /// Smaller rank means more preferred.
    std::size_t rank(CandidateId c) const { return rank_.at(c.index); }
    bool prefers(CandidateId a, CandidateId b) const { return rank(a) < rank(b); }

    /// Most preferred member of a nonempty collection.
    CandidateId best(const std::vector<CandidateId>& among) const;
    /// Least preferred member of a nonempty collection.
    CandidateId worst(const std::vector<CandidateId>& among) const;

private:
    std::vector<CandidateId> order_;
    std::vector<std::size_t> rank_;
};

std::string to_string(const Rational& r);
/// Parses "n" or "n/d"; throws PreconditionError otherwise.
Rational parse_rational(std::string_view text);

}  // namespace metricvote
