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

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "metricvote/distortion.hpp"
#include "metricvote/generators.hpp"
#include "metricvote/io.hpp"
#include "metricvote/search.hpp"
#include "metricvote/suite.hpp"

using namespace metricvote;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

/// Writes to `path`, or stdout when empty.
void emit(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw PreconditionError("cannot write '" + path + "'");
    out << text;
}

int cmd_validate(const std::string& path) {
    const InstanceFile file = read_instance_file(path);
    const ElectionInstance& inst = file.instance;
    bool valid = true;
    std::cout << "instance " << path << ": " << inst.num_groups() << " voter groups, n = "
              << inst.num_voters() << ", m = " << inst.num_candidates() << "\n";
    if (auto defect = inst.metric().first_defect(inst.tolerance())) {
        std::cout << "metric: invalid, " << *defect << "\n";
        valid = false;
    } else {
        std::cout << "metric: valid\n";
    }
    try {
        const ApprovalProfile approvals = truthful_approvals(inst);
        std::cout << "approvals: nonempty\n";
        std::cout << "consistency: "
                  << (is_globally_consistent(inst, approvals) ? "global"
                      : is_locally_consistent(inst, approvals) ? "local"
                                                               : "none")
                  << "\n";
    } catch (const EmptyApprovalError& e) {
        std::cout << "approvals: invalid, " << e.what() << "\n";
        valid = false;
    }
    if (file.certificate) {
        const CertificateCheck check = check_certificate(inst, *file.certificate);
        std::cout << "certificate: " << (check.passed ? "passed" : "failed") << "\n";
        for (const std::string& f : check.failures) std::cout << "  " << f << "\n";
    }
    std::cout << (valid ? "valid" : "invalid") << "\n";
    return valid ? kOk : kCheckFailed;
}

std::vector<std::string> names_of(const ElectionInstance& inst, const CandidateSet& set) {
    std::vector<std::string> out;
    for (CandidateId c : inst.candidate_ids())
        if (set.contains(c)) out.push_back(inst.name(c));
    return out;
}

int cmd_run(const std::string& path, const std::string& rule_text, bool enumerate, const std::string& out_path) {
    const InstanceFile file = read_instance_file(path);
    const ElectionInstance& inst = file.instance;
    const Rule rule = parse_rule(rule_text);
    const RuleOutcome outcome = apply(rule, inst);

    ResultRecord r;
    r.digest = instance_digest(inst);
    r.rule = rule_name(rule);
    r.winner = inst.name(outcome.winner);
    r.tied_set = names_of(inst, outcome.tied_set);
    r.distance = distance_distortion(inst, outcome.winner);
    r.ab = ab_distortion(inst, outcome.winner);
    if (rule.kind == RuleKind::kAv) {
        // The distance bound only covers globally consistent approvals.
        const ApprovalProfile approvals = truthful_approvals(inst);
        if (is_globally_consistent(inst, approvals)) {
            r.bound = av_bound(efficiency_fraction(inst, approvals, optimal_by_distance(inst).candidate));
            r.bound_measure = "distance";
        }
    } else {
        r.bound = applicable_ab_bound(rule, inst);
    }
    if (enumerate) {
        const WorstProfileResult worst = worst_ranking_ab_distortion(inst, rule);
        r.worst_ab = worst.value;
        r.worst_winner = inst.name(worst.winner);
        r.profiles = worst.profiles;
        r.fell_back = worst.fell_back;
    }
    if (file.certificate) r.certificate = check_certificate(inst, *file.certificate);
    emit(out_path, serialize_result(r));
    const bool ok = bound_holds(r) && (!r.certificate || r.certificate->passed);
    return ok ? kOk : kCheckFailed;
}

struct GenerateOptions {
    std::string family;
    std::size_t m = 0;
    Count n = 0;
    std::string p;
    std::string regime;
    double eps = -1.0;
    std::size_t ell = 0;
    std::size_t shift = 1;
    std::string vector;
    std::string out;
};

int cmd_generate(const GenerateOptions& o) {
    auto need = [&](bool present, const char* flag) {
        if (!present) throw CLI::ValidationError(std::string(flag) + " is required for " + o.family);
    };
    auto eps_or = [&](double fallback) { return o.eps >= 0 ? o.eps : fallback; };
    need(o.n > 0, "--n");
    std::vector<GeneratedInstance> made;
    const std::string& f = o.family;
    if (f == "av-degenerate") {
        made.push_back(gen_av_degenerate(o.n));
    } else if (f == "av-hard") {
        need(!o.p.empty(), "--p");
        const Rational p = parse_rational(o.p);
        const AvRegime regime = o.regime.empty() ? regime_for(p) : parse_av_regime(o.regime);
        made.push_back(gen_av_hard(p, o.n, eps_or(kDefaultEpsilon), regime));
    } else if (f == "smith-cycle") {
        need(o.ell > 0, "--ell");
        made.push_back(gen_smith_cycle(o.ell, o.n, o.shift));
    } else if (f == "ell1-pair") {
        auto [a, b] = gen_ell1_pair(o.n);
        made.push_back(std::move(a));
        made.push_back(std::move(b));
    } else if (f == "condorcet") {
        made.push_back(gen_condorcet_hard(o.n));
    } else if (f == "copeland") {
        made.push_back(gen_copeland_hard(o.n));
    } else if (f == "plurality") {
        need(o.m > 0, "--m");
        made.push_back(gen_plurality_hard(o.m, o.n, eps_or(1e-3)));
    } else if (f == "scoring") {
        need(!o.vector.empty(), "--vector");
        const Rule rule = parse_rule("scoring:" + o.vector);
        made.push_back(gen_scoring_hard(rule.vector, o.n, eps_or(1e-3)));
    } else if (f == "stv-1d") {
        need(o.m > 0, "--m");
        made.push_back(gen_stv_hard_1d(o.m, o.n));
    } else if (f == "stv-simplex") {
        need(o.m > 0, "--m");
        made.push_back(gen_stv_hard_simplex(o.m, o.n));
    } else {
        throw CLI::ValidationError("unknown family '" + f + "'");
    }

    for (std::size_t i = 0; i < made.size(); ++i) {
        std::string path = o.out;
        if (!path.empty() && made.size() > 1) {
            const auto dot = path.rfind('.');
            const std::string suffix = "-" + std::to_string(i + 1);
            path = dot == std::string::npos || dot < path.find_last_of('/') + 1
                       ? path + suffix
                       : path.substr(0, dot) + suffix + path.substr(dot);
        }
        emit(path, serialize_instance(made[i].instance, made[i].certificate));
        if (!path.empty()) std::cerr << "wrote " << path << "\n";
    }
    return kOk;
}

int cmd_curve(std::size_t samples, const std::string& out_path) {
    if (samples < 2) throw CLI::ValidationError("--samples must be at least 2");
    std::set<Rational> points = {Rational(0), Rational(1, 4), Rational(1, 2), Rational(1)};
    const auto den = static_cast<Count>(samples) + 1;
    for (Count i = 1; i < den; ++i) points.insert(Rational(i, den));
    std::string text = "p,p_exact,distortion,distortion_decimal\n";
    for (const Rational& p : points) {
        const DistortionValue b = av_bound(p);
        text += DistortionValue::approximate(boost::rational_cast<double>(p)).decimal() + "," + to_string(p) + "," +
                b.render() + "," + b.decimal() + "\n";
    }
    emit(out_path, text);
    return kOk;
}

struct SearchOptions {
    std::string rule = "av";
    std::string objective;
    std::size_t dimension = 1;
    std::size_t n = 4;
    std::size_t m = 3;
    std::string p;
    bool per_voter = false;
    std::uint64_t seed = 1;
    std::size_t budget = 10000;
    std::string out;
};

int cmd_search(const SearchOptions& o) {
    SearchConfig cfg;
    cfg.rule = parse_rule(o.rule);
    cfg.objective = o.objective.empty() ? (cfg.rule.kind == RuleKind::kAv ? Objective::kDistance : Objective::kAb)
                    : o.objective == "distance" ? Objective::kDistance
                    : o.objective == "ab"       ? Objective::kAb
                                                : throw CLI::ValidationError("--objective must be distance or ab");
    cfg.dimension = o.dimension;
    cfg.num_voters = o.n;
    cfg.num_candidates = o.m;
    if (!o.p.empty()) cfg.pinned_efficiency = parse_rational(o.p);
    cfg.global_radii = !o.per_voter;
    cfg.seed = o.seed;
    cfg.budget = o.budget;
    const SearchResult res = adversarial_search(cfg);

    ResultRecord r;
    r.rule = rule_name(cfg.rule);
    if (res.best) {
        const ElectionInstance& inst = *res.best;
        const CandidateId w =
            cfg.objective == Objective::kDistance
                ? av_winner(approvals_at_radius(inst, inst.radius(VoterId{0})), inst.lex()).winner
                : apply(cfg.rule, inst).winner;
        r.digest = instance_digest(inst);
        r.winner = inst.name(w);
        r.tied_set = {r.winner};
        r.distance = distance_distortion(inst, w);
        r.ab = ab_distortion(inst, w);
        r.instance = inst;
    }
    if (cfg.objective == Objective::kDistance) {
        r.distance = res.achieved;
        r.bound_measure = "distance";
    } else {
        r.ab = res.achieved;
    }
    r.bound = res.bound;
    r.findings.push_back(std::to_string(res.iterations) + " iterations, " + std::to_string(res.restarts) +
                         " restarts");
    for (const BoundViolation& v : res.violations)
        r.findings.push_back("bound violation: " + v.detail + " achieved " + v.achieved.render() + " above " +
                             v.bound.render() + " on instance " + instance_digest(v.instance));
    emit(o.out, serialize_result(r));
    return res.violations.empty() && bound_holds(r) ? kOk : kCheckFailed;
}

int cmd_suite(const std::string& name, std::uint64_t seed, std::size_t instances, const std::string& out_path) {
    SuiteReport report;
    if (name == "acceptance") report = run_acceptance_suite(seed);
    else if (name == "properties") report = run_property_suite(seed, instances);
    else throw CLI::ValidationError("suite must be acceptance or properties");
    emit(out_path, render_report(report));
    return report.passed() ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Metric and acceptability-based distortion of voting rules"};
    app.require_subcommand(1);
    int status = kOk;

    std::string path, rule = "plurality", out;
    bool enumerate = false;

    auto* validate = app.add_subcommand("validate", "Check an instance file");
    validate->add_option("file", path, "Instance file")->required();

    auto* run = app.add_subcommand("run", "Evaluate a rule and its distortions on an instance");
    run->add_option("file", path, "Instance file")->required();
    run->add_option("--rule", rule, "plurality, veto, borda, k-approval:K, scoring:a,b,..., copeland, "
                                    "ranked-pairs, schulze, stv, av");
    run->add_flag("--enumerate-ties", enumerate, "Also take the worst ab-distortion over all consistent rankings");
    run->add_option("--out", out, "Write the result record here");

    GenerateOptions gen;
    auto* generate = app.add_subcommand("generate", "Write a hard instance with its certificate");
    generate->add_option("family", gen.family,
                         "av-degenerate, av-hard, smith-cycle, ell1-pair, condorcet, copeland, plurality, "
                         "scoring, stv-1d, stv-simplex")
        ->required();
    generate->add_option("--m", gen.m, "Number of candidates");
    generate->add_option("--n", gen.n, "Number of voters");
    generate->add_option("--p", gen.p, "Efficiency, as n or n/d");
    generate->add_option("--regime", gen.regime, "low, mid or high");
    generate->add_option("--eps", gen.eps, "Perturbation size");
    generate->add_option("--ell", gen.ell, "Smith set size");
    generate->add_option("--shift", gen.shift, "Which cyclic instance");
    generate->add_option("--vector", gen.vector, "Scoring vector, comma separated");
    generate->add_option("--out", gen.out, "Output file (pairs get -1 and -2 suffixes)");

    std::size_t samples = 16;
    auto* curve = app.add_subcommand("curve", "Print the AV bound as a function of p");
    curve->add_option("--samples", samples, "Interior grid points");
    curve->add_option("--out", out, "Output file");

    SearchOptions so;
    auto* search = app.add_subcommand("search", "Adversarial search against the analytic bound");
    search->add_option("--rule", so.rule, "Rule under test");
    search->add_option("--objective", so.objective, "distance or ab");
    search->add_option("--dim", so.dimension, "Dimension (1 or 2)")->check(CLI::Range(1, 2));
    search->add_option("--n", so.n, "Voters");
    search->add_option("--m", so.m, "Candidates");
    search->add_option("--p", so.p, "Pin the efficiency (AV distance objective)");
    search->add_flag("--per-voter-radii", so.per_voter, "Let each voter pick its own radius");
    search->add_option("--seed", so.seed, "Random seed");
    search->add_option("--budget", so.budget, "Iterations");
    search->add_option("--out", so.out, "Write the result record here");

    std::string suite_name;
    std::uint64_t seed = 1;
    std::size_t instances = 1000;
    auto* suite = app.add_subcommand("suite", "Run the acceptance or property suite");
    suite->add_option("name", suite_name, "acceptance or properties")->required();
    suite->add_option("--seed", seed, "Random seed");
    suite->add_option("--instances", instances, "Property suite corpus size");
    suite->add_option("--out", out, "Write the report here");

    try {
        app.parse(argc, argv);
        if (*validate) status = cmd_validate(path);
        else if (*run) status = cmd_run(path, rule, enumerate, out);
        else if (*generate) status = cmd_generate(gen);
        else if (*curve) status = cmd_curve(samples, out);
        else if (*search) status = cmd_search(so);
        else if (*suite) status = cmd_suite(suite_name, seed, instances, out);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const DivisibilityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kCheckFailed;
    }
    return status;
}
