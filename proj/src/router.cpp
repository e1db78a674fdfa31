// gnc: a stack-bytecode compiler, batch VM, and verification toolkit
// Copyright 2026 The gnc Authors.
// Licensed under the Apache License, Version 2.0.
#include "gnc/router.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <set>
#include <sstream>

#include "gnc/config.hpp"

namespace gnc {

namespace {

double ms_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

bool passes_full_suite(const BytecodeProgram& p, const TestSuite& suite,
                       const VmLimits& limits) {
    for (const auto& test : suite) {
        ExecResult r = execute(p, test.args, limits);
        if (r.status != ExecStatus::Ok || r.value != test.expected) return false;
    }
    return true;
}

}  // namespace

const char* route_path_name(RoutePath path) {
    switch (path) {
    case RoutePath::NeuralAccepted: return "NeuralAccepted";
    case RoutePath::NeuralFailedFellBack: return "NeuralFailedFellBack";
    case RoutePath::RoutedTraditional: return "RoutedTraditional";
    }
    return "?";
}

std::string serialize_router_config(const RouterConfig& cfg) {
    std::ostringstream out;
    out << "theta_simple=" << cfg.theta_simple << "\n"
        << "weight.source_len=" << cfg.w_source_len << "\n"
        << "weight.nesting_depth=" << cfg.w_nesting_depth << "\n"
        << "weight.loop_count=" << cfg.w_loop_count << "\n"
        << "weight.function_count=" << cfg.w_function_count << "\n"
        << "weight.call_count=" << cfg.w_call_count << "\n"
        << "weight.has_recursion=" << cfg.w_has_recursion << "\n"
        << "k_fast=" << cfg.k_fast << "\n"
        << "quick_suite_size=" << cfg.quick_suite_size << "\n";
    return out.str();
}

RouterConfig parse_router_config(std::string_view text) {
    KvMap kv = parse_kv(text);
    RouterConfig cfg;
    cfg.theta_simple = kv_double(kv, "theta_simple", cfg.theta_simple);
    cfg.w_source_len = kv_double(kv, "weight.source_len", cfg.w_source_len);
    cfg.w_nesting_depth = kv_double(kv, "weight.nesting_depth", cfg.w_nesting_depth);
    cfg.w_loop_count = kv_double(kv, "weight.loop_count", cfg.w_loop_count);
    cfg.w_function_count = kv_double(kv, "weight.function_count", cfg.w_function_count);
    cfg.w_call_count = kv_double(kv, "weight.call_count", cfg.w_call_count);
    cfg.w_has_recursion = kv_double(kv, "weight.has_recursion", cfg.w_has_recursion);
    cfg.k_fast = kv_uint(kv, "k_fast", cfg.k_fast);
    cfg.quick_suite_size = kv_uint(kv, "quick_suite_size", cfg.quick_suite_size);
    if (cfg.k_fast < 1) throw ConfigError("k_fast must be at least 1");
    if (cfg.quick_suite_size < 1) throw ConfigError("quick_suite_size must be at least 1");
    return cfg;
}

RouterConfig load_router_config_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open router config: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_router_config(buffer.str());
}

double complexity_score(const FeatureVector& f, const RouterConfig& cfg) {
    return cfg.w_source_len * f.source_len + cfg.w_nesting_depth * f.nesting_depth +
           cfg.w_loop_count * f.loop_count + cfg.w_function_count * f.function_count +
           cfg.w_call_count * f.call_count + cfg.w_has_recursion * (f.has_recursion ? 1 : 0);
}

RoutingOutcome route(std::string_view source, const TestSuite& full_suite,
                     const RouterConfig& cfg, const GeneratorConfig& gen_cfg,
                     const BatchOptions& batch, const CompileOptions& compile) {
    if (full_suite.empty()) throw std::invalid_argument("route needs a nonempty suite");

    RoutingOutcome outcome;
    auto start = std::chrono::steady_clock::now();
    FeatureVector features = extract_features(parse(source, compile.parse_depth));
    outcome.score = complexity_score(features, cfg);
    bool take_neural = outcome.score < cfg.theta_simple;
    outcome.routing_ms = ms_since(start);

    if (take_neural) {
        TestSuite quick(full_suite.begin(),
                        full_suite.begin() +
                            std::min(full_suite.size(), cfg.quick_suite_size));
        Alg2Options alg2;
        alg2.k = cfg.k_fast;
        alg2.gen = gen_cfg;
        alg2.batch = batch;
        alg2.compile = compile;
        Alg2Outcome sampled = run_alg2(source, quick, alg2);
        outcome.generation_ms = sampled.generation_ms;
        outcome.verification_ms = sampled.verification_ms;

        if (sampled.success) {
            // Quick tests are only a screen; acceptance needs the whole suite.
            auto recheck = std::chrono::steady_clock::now();
            bool full_pass = passes_full_suite(sampled.best, full_suite, batch.limits);
            outcome.verification_ms += ms_since(recheck);
            if (full_pass) {
                outcome.path = RoutePath::NeuralAccepted;
                outcome.bytecode = std::move(sampled.best);
                return outcome;
            }
        }

        start = std::chrono::steady_clock::now();
        outcome.bytecode = compile_reference(source, compile);
        outcome.traditional_ms = ms_since(start);
        outcome.path = RoutePath::NeuralFailedFellBack;
        return outcome;
    }

    start = std::chrono::steady_clock::now();
    outcome.bytecode = compile_reference(source, compile);
    outcome.traditional_ms = ms_since(start);
    outcome.path = RoutePath::RoutedTraditional;
    return outcome;
}

double choose_threshold(const std::vector<std::pair<double, bool>>& points,
                        size_t* misclassified) {
    std::set<double> candidates;
    double lo = 0.0, hi = 0.0;
    if (!points.empty()) {
        lo = hi = points.front().first;
        for (const auto& [score, _] : points) {
            lo = std::min(lo, score);
            hi = std::max(hi, score);
            candidates.insert(score);
        }
    }
    candidates.insert(lo - 1.0);
    candidates.insert(hi + 1.0);

    double best_theta = lo - 1.0;
    size_t best_errors = points.size() + 1;
    for (double theta : candidates) {  // ascending, so ties keep the smallest
        size_t errors = 0;
        for (const auto& [score, succeeded] : points) {
            bool predicted_neural = score < theta;
            if (predicted_neural != succeeded) ++errors;
        }
        if (errors < best_errors) {
            best_errors = errors;
            best_theta = theta;
        }
    }
    if (misclassified) *misclassified = best_errors;
    return best_theta;
}

CalibrationResult calibrate_threshold(const std::vector<CalibrationEntry>& corpus,
                                      const RouterConfig& cfg, const GeneratorConfig& gen_cfg,
                                      const BatchOptions& batch,
                                      const CompileOptions& compile) {
    if (corpus.empty()) throw std::invalid_argument("calibration corpus is empty");

    CalibrationResult result;
    std::vector<std::pair<double, bool>> points;
    points.reserve(corpus.size());

    for (const auto& entry : corpus) {
        FeatureVector features = extract_features(parse(entry.source, compile.parse_depth));
        double score = complexity_score(features, cfg);

        Alg2Options alg2;
        alg2.k = cfg.k_fast;
        alg2.gen = gen_cfg;
        alg2.batch = batch;
        alg2.compile = compile;
        bool succeeded = run_alg2(entry.source, entry.suite, alg2).success;

        points.emplace_back(score, succeeded);
        result.rows.push_back({entry.name, score, succeeded});
    }

    result.theta = choose_threshold(points, &result.misclassified);
    return result;
}

}  // namespace gnc
