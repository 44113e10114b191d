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

#include "metricvote/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "metricvote/majority.hpp"
#include "metricvote/simplex.hpp"

namespace metricvote {

namespace {

struct Layout {
    std::size_t dimension = 1;
    std::vector<std::string> names;
    std::vector<Point> candidates;
    std::vector<Point> voters;
    std::vector<VoterGroup> groups;

    void candidate(std::string name, Point p) {
        names.push_back(std::move(name));
        candidates.push_back(std::move(p));
    }
    // Empty groups are dropped so every voter id has weight >= 1.
    void group(Point p, Count weight, double radius) {
        if (weight <= 0) return;
        voters.push_back(std::move(p));
        groups.push_back({weight, radius});
    }
    ElectionInstance build(const std::vector<std::string>& lex_names) const {
        std::vector<CandidateId> order;
        for (const auto& name : lex_names)
            for (std::size_t c = 0; c < names.size(); ++c)
                if (names[c] == name) order.push_back(CandidateId{c});
        return ElectionInstance(MetricSpace::euclidean(dimension, voters, candidates), groups,
                                TieBreakOrder(order), names);
    }
};

std::string cname(std::size_t i) { return "c" + std::to_string(i); }

void require_divisible(Count n, Count d, const std::string& what, Count at_least = 1) {
    if (n <= 0 || n % d != 0) {
        const Count smallest = (std::max(at_least, d) + d - 1) / d * d;
        throw DivisibilityError(what + ": n must be a positive multiple of " + std::to_string(d) +
                                " (smallest valid n is " + std::to_string(smallest) + ")");
    }
}

Count power_of_two(std::size_t e) {
    if (e > 40) throw PreconditionError("too many candidates for an exact power of two");
    return Count{1} << e;
}

bool matches(const DistortionValue& achieved, const DistortionValue& expected, double tolerance) {
    if (achieved.is_infinite() || expected.is_infinite())
        return achieved.is_infinite() == expected.is_infinite();
    if (achieved.exact_value() && expected.exact_value())
        return *achieved.exact_value() == *expected.exact_value();
    return std::abs(achieved.value() - expected.value()) <= tolerance;
}

}  // namespace

CertificateCheck check_certificate(const ElectionInstance& instance,
                                   const HardInstanceCertificate& cert) {
    CertificateCheck out;
    auto fail = [&](std::string msg) {
        out.passed = false;
        out.failures.push_back(std::move(msg));
    };
    auto lookup = [&](const std::string& name) -> std::optional<CandidateId> {
        auto c = instance.find_candidate(name);
        if (!c) fail("unknown candidate '" + name + "'");
        return c;
    };

    if (auto defect = instance.metric().first_defect(instance.tolerance())) fail(*defect);
    std::optional<ApprovalProfile> approvals;
    try {
        approvals = truthful_approvals(instance);
    } catch (const EmptyApprovalError& e) {
        fail(e.what());
        return out;
    }
    if (cert.consistency == "global" && !is_globally_consistent(instance, *approvals))
        fail("approvals are not globally consistent");
    if (!is_locally_consistent(instance, *approvals)) fail("approvals are not locally consistent");

    for (const auto& [name, count] : cert.approval_counts)
        if (auto c = lookup(name)) {
            Count got = approvals->approval_count(*c);
            if (got != count)
                fail("candidate " + name + " approved by " + std::to_string(got) + ", expected " +
                     std::to_string(count));
        }

    const RankingProfile ranking = induced_ranking(instance);
    const MajorityMatrix majority(ranking);
    if (cert.smith_size) {
        std::size_t got = smith_set(majority).size();
        if (got != *cert.smith_size)
            fail("Smith set has size " + std::to_string(got) + ", expected " +
                 std::to_string(*cert.smith_size));
    }
    if (cert.condorcet_winner) {
        auto cw = condorcet_winner(majority);
        if (!cw || instance.name(*cw) != *cert.condorcet_winner)
            fail("Condorcet winner is " + (cw ? instance.name(*cw) : std::string("absent")) +
                 ", expected " + *cert.condorcet_winner);
    }

    if (cert.optimal) {
        CandidateId got = cert.optimal_criterion == "distance"
                              ? optimal_by_distance(instance).candidate
                              : optimal_by_acceptability(instance).candidate;
        if (instance.name(got) != *cert.optimal)
            fail("optimal candidate (" + cert.optimal_criterion + ") is " + instance.name(got) +
                 ", expected " + *cert.optimal);
        if (cert.efficiency) {
            auto c = lookup(*cert.optimal);
            if (c) {
                Rational p = efficiency_fraction(instance, *approvals, *c);
                if (p != *cert.efficiency)
                    fail("efficiency is " + to_string(p) + ", expected " + to_string(*cert.efficiency));
            }
        }
    }

    std::optional<CandidateId> measured;
    if (cert.rule) {
        CandidateId w = apply(parse_rule(*cert.rule), instance).winner;
        if (cert.winner && instance.name(w) != *cert.winner)
            fail(*cert.rule + " elects " + instance.name(w) + ", expected " + *cert.winner);
        measured = w;
    } else if (cert.winner) {
        measured = lookup(*cert.winner);
    }

    if (cert.measure == "av-sweep") {
        out.achieved = sweep_maximum(av_distortion_sweep(instance)).distortion;
    } else if (measured) {
        out.achieved = cert.measure == "distance" ? distance_distortion(instance, *measured)
                                                  : ab_distortion(instance, *measured);
    }
    if (out.achieved) {
        if (cert.expected && !matches(*out.achieved, *cert.expected, cert.tolerance))
            fail(cert.measure + " distortion is " + out.achieved->render() + ", expected " +
                 cert.expected->render());
        if (cert.limit && !within_bound(*out.achieved, *cert.limit))
            fail(cert.measure + " distortion " + out.achieved->render() + " exceeds " +
                 cert.limit->render());
    }
    return out;
}

AvRegime parse_av_regime(const std::string& text) {
    if (text == "low") return AvRegime::kLow;
    if (text == "mid") return AvRegime::kMid;
    if (text == "high") return AvRegime::kHigh;
    throw PreconditionError("unknown regime '" + text + "' (expected low, mid or high)");
}

AvRegime regime_for(const Rational& p) {
    if (p <= Rational(1, 4)) return AvRegime::kLow;
    if (p <= Rational(1, 2)) return AvRegime::kMid;
    return AvRegime::kHigh;
}

GeneratedInstance gen_av_degenerate(Count n) {
    if (n < 1) throw PreconditionError("n must be at least 1");
    Layout l;
    l.candidate("c1", {0.0});
    l.candidate("c2", {1.0});
    l.group({0.0}, n, 1.0);
    HardInstanceCertificate cert;
    cert.rule = "av";
    cert.winner = "c2";
    cert.optimal = "c1";
    cert.optimal_criterion = "distance";
    cert.measure = "distance";
    cert.expected = DistortionValue::infinite();
    cert.approval_counts = {{"c1", n}, {"c2", n}};
    cert.consistency = "global";
    return {l.build({"c2", "c1"}), cert};
}

GeneratedInstance gen_av_hard(const Rational& p, Count n, double eps, AvRegime regime) {
    if (!(eps > 0.0) || eps > 0.1) throw PreconditionError("eps must lie in (0, 0.1]");
    if (p <= Rational(0) || p >= Rational(1)) throw PreconditionError("p must lie in (0, 1)");
    const Rational pn_exact = p * Rational(n);
    if (n < 1 || pn_exact.denominator() != 1)
        throw DivisibilityError("p*n must be an integer (smallest valid n is " +
                                std::to_string(p.denominator()) + ")");
    const Count k = pn_exact.numerator();
    const double R = 1.0;

    Layout l;
    double sum_w = 0.0;
    double sum_o = 0.0;
    std::vector<std::string> lex;

    switch (regime) {
        case AvRegime::kLow: {
            if (p > Rational(1, 4)) throw PreconditionError("low regime needs p <= 1/4");
            // c_w and its k voters one unit left of a tight cluster: c_o with
            // k voters in the middle, the rest spread symmetrically around it
            // as singleton candidates with one voter each.
            const Count singles = n - 2 * k;
            const double s = eps / static_cast<double>(singles);
            l.candidate("cw", {-1.0});
            l.candidate("co", {0.0});
            l.group({-1.0}, k, s / 4);
            l.group({0.0}, k, s / 4);
            sum_w = static_cast<double>(k);
            sum_o = static_cast<double>(k);
            lex = {"cw", "co"};
            const Count left = singles / 2;
            for (Count j = 1; j <= singles; ++j) {
                double x = j <= left ? -static_cast<double>(j) * s
                                     : static_cast<double>(j - left) * s;
                l.candidate("s" + std::to_string(j), {x});
                l.group({x}, 1, s / 4);
                lex.push_back("s" + std::to_string(j));
                sum_w += 1.0 + x;
                sum_o += std::abs(x);
            }
            break;
        }
        case AvRegime::kMid: {
            if (p < Rational(1, 4) || p > Rational(1, 2))
                throw PreconditionError("mid regime needs 1/4 <= p <= 1/2");
            require_divisible(n, 2, "mid regime");
            const Count side = n / 2 - k;
            // Two groups just off the axis, each with a private candidate at
            // distance about R; c_o to the right, then the winner's group.
            l.dimension = 2;
            l.candidate("cw", {3 * R + 2 * eps, 0.0});
            l.candidate("co", {R + eps, 0.0});
            l.candidate("c1", {0.0, R});
            l.candidate("c2", {0.0, -R});
            l.group({0.0, eps}, side, R);
            l.group({0.0, -eps}, side, R);
            l.group({R + eps, 0.0}, k, R);
            l.group({2 * R + 2 * eps, 0.0}, k, R);
            const double far = std::hypot(3 * R + 2 * eps, eps);
            const double near = std::hypot(R + eps, eps);
            sum_w = 2.0 * side * far + k * (2 * R + eps) + k * R;
            sum_o = 2.0 * side * near + k * (R + eps);
            lex = {"cw", "co", "c1", "c2"};
            break;
        }
        case AvRegime::kHigh: {
            if (p < Rational(1, 2)) throw PreconditionError("high regime needs p >= 1/2");
            l.candidate("cw", {2 * R + eps});
            l.candidate("co", {R + eps});
            l.candidate("c1", {-R});
            l.group({0.0}, n - k, R);
            l.group({R + eps}, k, R);
            sum_w = (n - k) * (2 * R + eps) + k * R;
            sum_o = (n - k) * (R + eps);
            lex = {"cw", "co", "c1"};
            break;
        }
    }

    HardInstanceCertificate cert;
    cert.rule = "av";
    cert.winner = "cw";
    cert.optimal = "co";
    cert.optimal_criterion = "distance";
    cert.measure = "av-sweep";
    cert.expected = DistortionValue::approximate(sum_w / sum_o);
    cert.tolerance = 1e-6;
    cert.limit = av_bound(p);
    cert.efficiency = p;
    cert.consistency = "global";
    return {l.build(lex), cert};
}

GeneratedInstance gen_smith_cycle(std::size_t ell, Count n, std::size_t shift) {
    if (ell < 2) throw PreconditionError("ell must be at least 2");
    if (shift < 1 || shift > ell) throw PreconditionError("shift must lie in 1..ell");
    require_divisible(n, static_cast<Count>(ell), "smith cycle");
    const SimplexGeometry g = simplex(ell - 1);
    const double eta = 1e-6;
    const double radius = g.circumradius + 1e-4;

    Layout l;
    l.dimension = ell - 1;
    std::vector<std::string> lex;
    for (std::size_t c = 0; c < ell; ++c) {
        l.candidate(cname(c + 1), g.vertices[c]);
        lex.push_back(cname(c + 1));
    }
    auto cyc = [&](long j) { return static_cast<std::size_t>(((j % (long)ell) + (long)ell) % (long)ell); };
    const long i = static_cast<long>(shift) - 1;  // 0-based index of c_shift
    for (std::size_t k = 1; k <= ell; ++k) {
        // Group k accepts c_{i-k+1}, ..., c_i and ranks cyclically from c_{i-k+1}.
        const long start = i - static_cast<long>(k) + 1;
        std::vector<std::size_t> face;
        for (std::size_t t = 0; t < k; ++t) face.push_back(cyc(start + static_cast<long>(t)));
        Point pos = g.face_circumcenter(face);
        // A small pull towards each vertex, stronger for earlier ones, turns
        // the equidistant face into the intended strict order.
        for (std::size_t t = 0; t < ell; ++t) {
            const Point& v = g.vertices[cyc(start + static_cast<long>(t))];
            for (std::size_t d = 0; d < pos.size(); ++d)
                pos[d] += eta * static_cast<double>(ell - t) * (v[d] - g.circumcenter[d]);
        }
        l.group(pos, n / static_cast<Count>(ell), radius);
    }

    HardInstanceCertificate cert;
    cert.winner = cname(cyc(i + 1) + 1);
    cert.measure = "ab";
    const Count L = static_cast<Count>(ell);
    cert.expected = DistortionValue::exact(Rational(L - 1, L));
    cert.approval_counts = {{cname(shift), n}, {cname(cyc(i + 1) + 1), n / L}};
    cert.smith_size = ell;
    cert.consistency = "global";
    return {l.build(lex), cert};
}

std::pair<GeneratedInstance, GeneratedInstance> gen_ell1_pair(Count n) {
    if (n < 4) throw PreconditionError("n must be at least 4");
    require_divisible(n, 2, "ell1 pair");
    auto make = [&](double big_at, double small_at, Count c1_count, Count c2_count) {
        Layout l;
        l.candidate("c1", {0.0});
        l.candidate("c2", {3.0});
        l.group({big_at}, n / 2 + 1, 2.0);
        l.group({small_at}, n / 2 - 1, 2.0);
        HardInstanceCertificate cert;
        cert.approval_counts = {{"c1", c1_count}, {"c2", c2_count}};
        cert.consistency = "global";
        return GeneratedInstance{l.build({"c1", "c2"}), cert};
    };
    return {make(1.0, 3.0, n / 2 + 1, n), make(0.0, 2.0, n, n / 2 - 1)};
}

GeneratedInstance gen_condorcet_hard(Count n) {
    require_divisible(n, 4, "condorcet", 8);
    if (n < 8) throw PreconditionError("condorcet: n must be at least 8");
    Layout l;
    l.dimension = 2;
    l.candidate("cc", {3.0, 2.0});
    l.candidate("cx", {3.0, 3.0});
    l.candidate("cy", {0.0, 1.0});
    l.candidate("cz", {6.0, 1.0});
    l.group({3.0, 4.0}, n / 2 - 1, 1.5);
    l.group({1.0, 1.0}, n / 4 + 1, 1.5);
    l.group({5.0, 1.0}, n / 4, 1.5);

    HardInstanceCertificate cert;
    cert.rule = "copeland";
    cert.winner = "cc";
    cert.optimal = "cx";
    cert.expected = DistortionValue::exact(Rational(n / 2 - 1, n));
    cert.approval_counts = {{"cx", n / 2 - 1}, {"cy", n / 4 + 1}, {"cz", n / 4}, {"cc", 0}};
    cert.smith_size = 1;
    cert.condorcet_winner = "cc";
    cert.consistency = "global";
    return {l.build({"cx", "cc", "cy", "cz"}), cert};
}

GeneratedInstance gen_copeland_hard(Count n) {
    if (n < 6) throw PreconditionError("n must be at least 6");
    require_divisible(n, 2, "copeland");
    const double h = std::sqrt(3.0) / 2.0;
    const Point a{0.0, 0.0}, b{1.0, 0.0}, c{0.5, h};
    const Point center{0.5, h / 3.0};
    const double radius = 1.0 / std::sqrt(3.0);
    Layout l;
    l.dimension = 2;
    l.candidate("c1", a);
    l.candidate("c2", b);
    l.candidate("c3", c);
    l.group(a, n / 2 - 1, radius);
    l.group(midpoint(a, c), n / 2 - 1, radius);
    l.group(center, 2, radius);

    HardInstanceCertificate cert;
    cert.rule = "copeland";
    cert.winner = "c2";
    cert.optimal = "c1";
    cert.expected = DistortionValue::exact(Rational(n - 2, n));
    cert.approval_counts = {{"c1", n}, {"c2", 2}, {"c3", n / 2 + 1}};
    cert.smith_size = 3;
    cert.consistency = "global";
    return {l.build({"c2", "c3", "c1"}), cert};
}

GeneratedInstance gen_plurality_hard(std::size_t m, Count n, double eps) {
    if (m < 2) throw PreconditionError("m must be at least 2");
    require_divisible(n, static_cast<Count>(m), "plurality");
    const double R = 1.0;
    const Count size = n / static_cast<Count>(m);
    Layout l;
    std::vector<std::string> lex;
    l.candidate("c1", {0.0});
    l.group({R - eps}, size, R);
    lex.push_back("c1");
    for (std::size_t j = 2; j <= m; ++j) {
        const double y = 2 * R - 2 * eps + static_cast<double>(j - 1) * eps / static_cast<double>(m);
        l.candidate(cname(j), {y});
        l.group({y}, size, R);
        lex.push_back(cname(j));
    }
    HardInstanceCertificate cert;
    cert.rule = "plurality";
    cert.winner = "c1";
    cert.optimal = "c2";
    const Count M = static_cast<Count>(m);
    cert.expected = DistortionValue::exact(Rational(M - 1, M));
    cert.approval_counts = {{"c1", size}, {"c2", n}};
    cert.consistency = "global";
    return {l.build(lex), cert};
}

GeneratedInstance gen_scoring_hard(const ScoringVector& s, Count n, double eps) {
    const std::size_t m = s.size();
    if (m < 2) throw PreconditionError("scoring vector needs at least 2 entries");
    if (n < 1) throw PreconditionError("n must be at least 1");
    for (std::size_t i = 0; i + 1 < m; ++i)
        if (s[i] < s[i + 1]) throw PreconditionError("scoring vector must be non-increasing");
    const double R = 1.0;
    Layout l;
    HardInstanceCertificate cert;
    cert.rule = rule_name(Rule::scoring(s));
    cert.optimal = "c1";
    cert.consistency = "global";

    if (s.front() == s.back()) {
        l.candidate("c1", {0.0});
        for (std::size_t j = 2; j <= m; ++j) l.candidate(cname(j), {R + eps});
        l.group({0.0}, n, R);
        std::vector<std::string> lex;
        for (std::size_t j = m; j >= 1; --j) lex.push_back(cname(j));
        cert.winner = cname(m);
        cert.expected = DistortionValue::exact(Rational(1));
        cert.approval_counts = {{"c1", n}, {cname(m), 0}};
        return {l.build(lex), cert};
    }

    for (std::size_t i = 1; i + 1 < m; ++i)
        if (s[0] - s[1] > s[i] - s[i + 1])
            throw PreconditionError("scoring vector needs s1 - s2 <= s" + std::to_string(i + 1) +
                                    " - s" + std::to_string(i + 2));
    const Rational D = Rational(2) * s[0] - s[1] - s[m - 1];
    const Rational a = Rational(n) * (s[0] - s[m - 1]) / D;
    const Rational b = Rational(n) * (s[0] - s[1]) / D;
    if (a.denominator() != 1 || b.denominator() != 1)
        throw DivisibilityError("group sizes n*(s1-sm)/D = " + to_string(a) + " and n*(s1-s2)/D = " +
                                to_string(b) + " must be integers (smallest valid n is " +
                                std::to_string(std::lcm(((s[0] - s[m - 1]) / D).denominator(),
                                                        ((s[0] - s[1]) / D).denominator())) +
                                ")");
    // Group A sits next to c1 and only accepts it; group B sits on c2 and
    // accepts everything, so c1 and c2 tie on score and lex picks c2.
    l.candidate("c1", {eps});
    l.candidate("c2", {eps + R});
    for (std::size_t j = 3; j <= m; ++j) l.candidate(cname(j), {2 * eps + R});
    l.group({0.0}, a.numerator(), R);
    l.group({eps + R}, b.numerator(), R);
    std::vector<std::string> lex{"c2", "c1"};
    for (std::size_t j = 3; j <= m; ++j) lex.push_back(cname(j));
    cert.winner = "c2";
    cert.expected = DistortionValue::exact((s[0] - s[m - 1]) / D);
    cert.approval_counts = {{"c1", n}, {"c2", b.numerator()}};
    return {l.build(lex), cert};
}

GeneratedInstance gen_stv_hard_1d(std::size_t m, Count n) {
    if (m < 2) throw PreconditionError("m must be at least 2");
    const Count top = power_of_two(m - 1);
    require_divisible(n, top, "stv 1d");
    Layout l;
    // c_m at 1, then c_j at 2^j, each with its own group.
    l.candidate(cname(m), {1.0});
    l.group({1.0}, n / top, 1.0);
    for (std::size_t j = 1; j < m; ++j) {
        const double x = std::ldexp(1.0, static_cast<int>(j));
        l.candidate(cname(j), {x});
        l.group({x}, n / power_of_two(m - j), x - 2.0);
    }
    std::vector<std::string> lex;
    for (std::size_t j = m; j >= 1; --j) lex.push_back(cname(j));

    HardInstanceCertificate cert;
    cert.rule = "stv";
    cert.winner = cname(m);
    cert.optimal = "c1";
    cert.expected = DistortionValue::exact(Rational(top - 1, top));
    cert.approval_counts = {{"c1", n}, {cname(m), n / top}};
    cert.consistency = "local";
    return {l.build(lex), cert};
}

GeneratedInstance gen_stv_hard_simplex(std::size_t m, Count n) {
    if (m < 3) throw PreconditionError("m must be at least 3");
    const Count top = power_of_two(m - 1);
    require_divisible(n, top, "stv simplex");
    const SimplexGeometry g = simplex(m - 2);
    const double radius = g.circumradius / 2.0;
    Layout l;
    l.dimension = m - 2;
    l.candidate("c1", g.circumcenter);
    for (std::size_t j = 2; j <= m; ++j) l.candidate(cname(j), g.vertices[j - 2]);
    l.group(g.circumcenter, n / top, radius);
    for (std::size_t j = 2; j <= m; ++j) {
        const Count size = j == m ? n / top : n / power_of_two(m - j);
        l.group(midpoint(g.vertices[j - 2], g.circumcenter), size, radius);
    }
    std::vector<std::string> lex;
    for (std::size_t j = m; j >= 1; --j) lex.push_back(cname(j));

    HardInstanceCertificate cert;
    cert.rule = "stv";
    cert.winner = cname(m);
    cert.optimal = "c1";
    cert.expected = DistortionValue::exact(Rational(top - 1, top));
    cert.approval_counts = {{"c1", n}, {cname(m), n / top}};
    cert.consistency = "global";
    return {l.build(lex), cert};
}

}  // namespace metricvote
