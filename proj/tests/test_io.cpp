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

#include <catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "metricvote/io.hpp"

using namespace metricvote;
using namespace fixtures;

namespace {

std::string matrix_text(double d01, double d10) {
    return R"({"format": "metric-election/1", "candidates": ["a", "b"],
  "metric": {"kind": "matrix", "distances": [[0, )" +
           std::to_string(d01) + R"(, 2], [)" + std::to_string(d10) + R"(, 0, 1], [2, 1, 0]]},
  "voters": [{"weight": 2, "radius": 1}]})";
}

}  // namespace

TEST_CASE("instance round trip") {
    const ElectionInstance t = t1();
    const std::string text = serialize_instance(t);
    const InstanceFile f = parse_instance(text);
    CHECK(serialize_instance(f.instance) == text);
    CHECK_FALSE(f.certificate);
    CHECK(instance_digest(f.instance) == instance_digest(t));
}

TEST_CASE("generated files round trip with certificates") {
    const std::vector<GeneratedInstance> all = {
        gen_av_hard(Rational(1, 4), 40, 1e-4, AvRegime::kLow), gen_smith_cycle(3, 6, 1),
        gen_copeland_hard(100), gen_scoring_hard(borda_vector(3), 3), gen_stv_hard_simplex(4, 8)};
    for (const GeneratedInstance& g : all) {
        const std::string text = serialize_instance(g.instance, g.certificate);
        const InstanceFile f = parse_instance(text);
        REQUIRE(f.certificate);
        CHECK(serialize_instance(f.instance, f.certificate) == text);
        CHECK(check_certificate(f.instance, *f.certificate).passed);
    }
}

TEST_CASE("matrix instances parse") {
    const InstanceFile f = parse_instance(matrix_text(1, 1));
    CHECK(f.instance.num_voters() == 2);
    CHECK(f.instance.distance(VoterId{0}, CandidateId{1}) == 2.0);
    CHECK_FALSE(f.instance.metric().first_defect(1e-9));
    CHECK(parse_instance(serialize_instance(f.instance)).instance.metric().distances() ==
          f.instance.metric().distances());

    const InstanceFile bad = parse_instance(matrix_text(1, 3));
    const auto defect = bad.instance.metric().first_defect(1e-9);
    REQUIRE(defect);
    CHECK(defect->find("voter 0 and candidate 0") != std::string::npos);
}

TEST_CASE("parse errors carry context") {
    try {
        parse_instance("{\n  \"format\": \"metric-election/1\",\n  \"candidates\": [\"a\",]\n}");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).rfind("line 3", 0) == 0);
    }
    std::string text = serialize_instance(t1());
    text.replace(text.find("metric-election/1"), 17, "metric-election/9");
    CHECK_THROWS_WITH(parse_instance(text), Catch::Matchers::ContainsSubstring("unsupported format"));

    text = serialize_instance(t1());
    const auto at = text.find("\"radius\": ");
    text.replace(at, text.find('\n', at) - at, "\"radius\": \"x\"");
    CHECK_THROWS_WITH(parse_instance(text), Catch::Matchers::ContainsSubstring("$.voters[0].radius"));
}

TEST_CASE("fnv1a64 reference values") {
    CHECK(fnv1a64("") == 0xcbf29ce484222325ull);
    CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cull);
}

TEST_CASE("result records") {
    ResultRecord r;
    r.digest = instance_digest(t1());
    r.rule = "plurality";
    r.winner = "c1";
    r.tied_set = {"c1"};
    r.distance = DistortionValue::exact(Rational(1));
    r.ab = DistortionValue::infinite();
    r.bound = DistortionValue::exact(Rational(1, 2));
    CHECK_FALSE(bound_holds(r));
    const std::string out = serialize_result(r);
    CHECK(out.find("\"exact\": \"inf\"") != std::string::npos);
    CHECK(out.find("\"decimal\": \"inf\"") != std::string::npos);
    CHECK(out.find("\"holds\": false") != std::string::npos);
    r.ab = DistortionValue::exact(Rational(7, 16));
    CHECK(bound_holds(r));
    CHECK(serialize_result(r).find("\"7/16\"") != std::string::npos);
}
