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

#include "metricvote/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace metricvote {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw ParseError(path + ": " + what);
}

const Json& field(const Json& obj, const std::string& path, const char* key) {
    if (!obj.is_object()) fail(path, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) fail(path, std::string("missing field '") + key + "'");
    return *it;
}

double number(const Json& j, const std::string& path) {
    if (!j.is_number()) fail(path, "expected a number");
    return j.get<double>();
}

Count integer(const Json& j, const std::string& path) {
    if (!j.is_number_integer()) fail(path, "expected an integer");
    return j.get<Count>();
}

std::string text(const Json& j, const std::string& path) {
    if (!j.is_string()) fail(path, "expected a string");
    return j.get<std::string>();
}

const Json& array(const Json& j, const std::string& path) {
    if (!j.is_array()) fail(path, "expected an array");
    return j;
}

Point point(const Json& j, const std::string& path) {
    Point p;
    for (std::size_t i = 0; i < array(j, path).size(); ++i)
        p.push_back(number(j[i], path + "[" + std::to_string(i) + "]"));
    return p;
}

Json distortion_json(const DistortionValue& d) {
    if (d.is_infinite()) return "inf";
    if (d.exact_value()) return to_string(*d.exact_value());
    return d.value();
}

DistortionValue parse_distortion(const Json& j, const std::string& path) {
    if (j.is_number()) return DistortionValue::approximate(j.get<double>());
    const std::string s = text(j, path);
    if (s == "inf") return DistortionValue::infinite();
    try {
        return DistortionValue::exact(parse_rational(s));
    } catch (const PreconditionError& e) {
        fail(path, e.what());
    }
}

Json report_json(const DistortionValue& d) {
    Json out;
    out["exact"] = d.is_infinite() ? Json("inf")
                   : d.exact_value() ? Json(to_string(*d.exact_value()))
                                     : Json(nullptr);
    out["decimal"] = d.decimal();
    return out;
}

Json instance_json(const ElectionInstance& inst) {
    const MetricSpace& metric = inst.metric();
    Json j;
    j["format"] = kFormatVersion;
    j["candidates"] = inst.candidate_names();
    Json lex = Json::array();
    for (CandidateId c : inst.lex().order()) lex.push_back(inst.name(c));
    j["lex"] = lex;
    j["tolerance"] = inst.tolerance();
    Json m;
    if (metric.kind() == MetricSpace::Kind::kEuclidean) {
        m["kind"] = "euclidean";
        m["dimension"] = metric.dimension();
        m["candidates"] = metric.candidate_points();
    } else {
        m["kind"] = "matrix";
        m["distances"] = metric.distances();
    }
    j["metric"] = m;
    Json voters = Json::array();
    for (VoterId v : inst.voter_ids()) {
        Json g;
        if (metric.kind() == MetricSpace::Kind::kEuclidean) g["position"] = metric.voter_points()[v.index];
        g["weight"] = inst.weight(v);
        g["radius"] = inst.radius(v);
        voters.push_back(g);
    }
    j["voters"] = voters;
    return j;
}

Json certificate_json(const HardInstanceCertificate& c) {
    Json j;
    if (c.rule) j["rule"] = *c.rule;
    if (c.winner) j["winner"] = *c.winner;
    if (c.optimal) j["optimal"] = *c.optimal;
    j["optimal_criterion"] = c.optimal_criterion;
    j["measure"] = c.measure;
    if (c.expected) j["expected"] = distortion_json(*c.expected);
    if (c.tolerance != 0.0) j["tolerance"] = c.tolerance;
    if (c.limit) j["limit"] = distortion_json(*c.limit);
    if (c.efficiency) j["efficiency"] = to_string(*c.efficiency);
    if (!c.approval_counts.empty()) {
        Json counts = Json::array();
        for (const auto& [name, count] : c.approval_counts) counts.push_back({name, count});
        j["approval_counts"] = counts;
    }
    if (c.smith_size) j["smith_size"] = *c.smith_size;
    if (c.condorcet_winner) j["condorcet_winner"] = *c.condorcet_winner;
    j["consistency"] = c.consistency;
    return j;
}

HardInstanceCertificate parse_certificate(const Json& j, const std::string& path) {
    if (!j.is_object()) fail(path, "expected an object");
    HardInstanceCertificate c;
    auto opt_text = [&](const char* key, std::optional<std::string>& out) {
        if (j.contains(key)) out = text(j[key], path + "." + key);
    };
    opt_text("rule", c.rule);
    opt_text("winner", c.winner);
    opt_text("optimal", c.optimal);
    opt_text("condorcet_winner", c.condorcet_winner);
    if (j.contains("optimal_criterion")) {
        c.optimal_criterion = text(j["optimal_criterion"], path + ".optimal_criterion");
        if (c.optimal_criterion != "acceptability" && c.optimal_criterion != "distance")
            fail(path + ".optimal_criterion", "unknown criterion '" + c.optimal_criterion + "'");
    }
    if (j.contains("measure")) {
        c.measure = text(j["measure"], path + ".measure");
        if (c.measure != "ab" && c.measure != "distance" && c.measure != "av-sweep")
            fail(path + ".measure", "unknown measure '" + c.measure + "'");
    }
    if (j.contains("consistency")) {
        c.consistency = text(j["consistency"], path + ".consistency");
        if (c.consistency != "local" && c.consistency != "global")
            fail(path + ".consistency", "unknown consistency '" + c.consistency + "'");
    }
    if (j.contains("expected")) c.expected = parse_distortion(j["expected"], path + ".expected");
    if (j.contains("limit")) c.limit = parse_distortion(j["limit"], path + ".limit");
    if (j.contains("tolerance")) c.tolerance = number(j["tolerance"], path + ".tolerance");
    if (j.contains("efficiency")) {
        try {
            c.efficiency = parse_rational(text(j["efficiency"], path + ".efficiency"));
        } catch (const PreconditionError& e) {
            fail(path + ".efficiency", e.what());
        }
    }
    if (j.contains("approval_counts")) {
        const std::string p = path + ".approval_counts";
        const Json& counts = array(j["approval_counts"], p);
        for (std::size_t i = 0; i < counts.size(); ++i) {
            const std::string q = p + "[" + std::to_string(i) + "]";
            if (!counts[i].is_array() || counts[i].size() != 2) fail(q, "expected [name, count]");
            c.approval_counts.emplace_back(text(counts[i][0], q + "[0]"), integer(counts[i][1], q + "[1]"));
        }
    }
    if (j.contains("smith_size")) {
        const Count s = integer(j["smith_size"], path + ".smith_size");
        if (s < 0) fail(path + ".smith_size", "must be non-negative");
        c.smith_size = static_cast<std::size_t>(s);
    }
    return c;
}

std::string position_message(std::string_view text, std::size_t byte) {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

}  // namespace

std::string serialize_instance(const ElectionInstance& instance,
                               const std::optional<HardInstanceCertificate>& certificate) {
    Json j = instance_json(instance);
    if (certificate) j["certificate"] = certificate_json(*certificate);
    return j.dump(2) + "\n";
}

InstanceFile parse_instance(std::string_view input) {
    Json j;
    try {
        j = Json::parse(input.begin(), input.end());
    } catch (const nlohmann::json::parse_error& e) {
        std::string what = e.what();
        // Drop the library's "[json.exception.parse_error.101] parse error at line x, column y: " prefix.
        if (auto colon = what.find(": "); colon != std::string::npos) what = what.substr(colon + 2);
        throw ParseError(position_message(input, e.byte == 0 ? 0 : e.byte - 1) + ": " + what);
    }
    const std::string format = text(field(j, "$", "format"), "$.format");
    if (format != kFormatVersion)
        fail("$.format", "unsupported format version '" + format + "'");

    std::vector<std::string> names;
    const Json& cands = array(field(j, "$", "candidates"), "$.candidates");
    for (std::size_t i = 0; i < cands.size(); ++i)
        names.push_back(text(cands[i], "$.candidates[" + std::to_string(i) + "]"));
    auto lookup = [&](const std::string& name, const std::string& path) {
        for (std::size_t c = 0; c < names.size(); ++c)
            if (names[c] == name) return CandidateId{c};
        fail(path, "unknown candidate '" + name + "'");
    };

    std::vector<CandidateId> lex;
    if (j.contains("lex")) {
        const Json& l = array(j["lex"], "$.lex");
        for (std::size_t i = 0; i < l.size(); ++i) {
            const std::string p = "$.lex[" + std::to_string(i) + "]";
            lex.push_back(lookup(text(l[i], p), p));
        }
    } else {
        for (std::size_t c = 0; c < names.size(); ++c) lex.push_back(CandidateId{c});
    }
    const double tolerance = j.contains("tolerance") ? number(j["tolerance"], "$.tolerance")
                                                     : kDefaultTolerance;

    const Json& metric = field(j, "$", "metric");
    const std::string kind = text(field(metric, "$.metric", "kind"), "$.metric.kind");
    const Json& voters = array(field(j, "$", "voters"), "$.voters");
    std::vector<VoterGroup> groups;
    std::vector<Point> voter_points;
    for (std::size_t i = 0; i < voters.size(); ++i) {
        const std::string p = "$.voters[" + std::to_string(i) + "]";
        VoterGroup g;
        g.weight = voters[i].contains("weight") ? integer(voters[i]["weight"], p + ".weight") : 1;
        g.radius = number(field(voters[i], p, "radius"), p + ".radius");
        groups.push_back(g);
        if (kind == "euclidean")
            voter_points.push_back(point(field(voters[i], p, "position"), p + ".position"));
    }

    std::optional<MetricSpace> space;
    try {
        if (kind == "euclidean") {
            const Count dim = integer(field(metric, "$.metric", "dimension"), "$.metric.dimension");
            if (dim < 1) fail("$.metric.dimension", "must be at least 1");
            std::vector<Point> cand_points;
            const Json& cp = array(field(metric, "$.metric", "candidates"), "$.metric.candidates");
            for (std::size_t i = 0; i < cp.size(); ++i)
                cand_points.push_back(point(cp[i], "$.metric.candidates[" + std::to_string(i) + "]"));
            if (cand_points.size() != names.size())
                fail("$.metric.candidates", "expected " + std::to_string(names.size()) + " points");
            space = MetricSpace::euclidean(static_cast<std::size_t>(dim), voter_points, cand_points);
        } else if (kind == "matrix") {
            std::vector<std::vector<double>> rows;
            const Json& d = array(field(metric, "$.metric", "distances"), "$.metric.distances");
            for (std::size_t i = 0; i < d.size(); ++i)
                rows.push_back(point(d[i], "$.metric.distances[" + std::to_string(i) + "]"));
            space = MetricSpace::matrix(groups.size(), names.size(), rows);
        } else {
            fail("$.metric.kind", "unknown metric kind '" + kind + "'");
        }
    } catch (const InvalidInstanceError& e) {
        fail("$.metric", e.what());
    }

    InstanceFile out{ElectionInstance(*space, groups, TieBreakOrder(lex), names, tolerance), std::nullopt};
    if (j.contains("certificate")) out.certificate = parse_certificate(j["certificate"], "$.certificate");
    return out;
}

InstanceFile read_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_instance(buf.str());
}

void write_instance_file(const std::string& path, const ElectionInstance& instance,
                         const std::optional<HardInstanceCertificate>& certificate) {
    std::ofstream out(path);
    if (!out) throw PreconditionError("cannot write '" + path + "'");
    out << serialize_instance(instance, certificate);
    if (!out) throw PreconditionError("failed writing '" + path + "'");
}

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string instance_digest(const ElectionInstance& instance) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a64(instance_json(instance).dump())));
    return buf;
}

bool bound_holds(const ResultRecord& r) {
    if (!r.bound) return true;
    const DistortionValue& measured =
        r.bound_measure == "distance" ? r.distance : (r.worst_ab ? *r.worst_ab : r.ab);
    return within_bound(measured, *r.bound);
}

std::string serialize_result(const ResultRecord& r) {
    Json j;
    j["instance_digest"] = r.digest;
    j["rule"] = r.rule;
    j["winner"] = r.winner;
    j["tied_set"] = r.tied_set;
    j["distance_distortion"] = report_json(r.distance);
    j["ab_distortion"] = report_json(r.ab);
    if (r.worst_ab) {
        Json w;
        w["ab_distortion"] = report_json(*r.worst_ab);
        if (r.worst_winner) w["winner"] = *r.worst_winner;
        w["profiles"] = r.profiles;
        w["fell_back"] = r.fell_back;
        j["worst_profile"] = w;
    }
    if (r.bound) {
        Json b = report_json(*r.bound);
        b["measure"] = r.bound_measure;
        b["holds"] = bound_holds(r);
        j["bound"] = b;
    } else {
        j["bound"] = nullptr;
    }
    if (r.certificate) {
        Json c;
        c["passed"] = r.certificate->passed;
        c["failures"] = r.certificate->failures;
        if (r.certificate->achieved) c["achieved"] = report_json(*r.certificate->achieved);
        j["certificate"] = c;
    }
    if (!r.findings.empty()) j["findings"] = r.findings;
    if (r.instance) j["instance"] = instance_json(*r.instance);
    return j.dump(2) + "\n";
}

}  // namespace metricvote
