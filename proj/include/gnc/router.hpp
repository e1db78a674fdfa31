// gnc: a stack-bytecode compiler, batch VM, and verification toolkit
// Copyright 2026 The gnc Authors.
// Licensed under the Apache License, Version 2.0.
#pragma once

#include <string>
#include <utility>

#include "gnc/features.hpp"
#include "gnc/verifier.hpp"

namespace gnc {

struct RouterConfig {
    double theta_simple = 25.0;
    // Linear weights, one per FeatureVector field; has_recursion contributes
    // its weight once when set.
    double w_source_len = 1.0;
    double w_nesting_depth = 1.0;
    double w_loop_count = 1.0;
    double w_function_count = 1.0;
    double w_call_count = 1.0;
    double w_has_recursion = 5.0;
    size_t k_fast = 100;
    size_t quick_suite_size = 3;
};

// Plain-text key=value serialization, one key per line.
std::string serialize_router_config(const RouterConfig& cfg);
RouterConfig parse_router_config(std::string_view text);
RouterConfig load_router_config_file(const std::string& path);

double complexity_score(const FeatureVector& features, const RouterConfig& cfg);

enum class RoutePath { NeuralAccepted, NeuralFailedFellBack, RoutedTraditional };

const char* route_path_name(RoutePath path);

struct RoutingOutcome {
    RoutePath path = RoutePath::RoutedTraditional;
    double score = 0.0;
    BytecodeProgram bytecode;
    // Wall-clock split; components are nonnegative and their sum is the total.
    double routing_ms = 0.0;
    double generation_ms = 0.0;
    double verification_ms = 0.0;
    double traditional_ms = 0.0;

    double total_ms() const {
        return routing_ms + generation_ms + verification_ms + traditional_ms;
    }
};

// Scores the program; under theta it tries the sampling path with k_fast
// candidates on the first quick_suite_size tests, re-verifies any winner on
// the whole suite, and otherwise falls back to the reference compiler. The
// returned bytecode therefore always passes the full suite whenever the
// reference compiler itself does.
RoutingOutcome route(std::string_view source, const TestSuite& full_suite,
                     const RouterConfig& cfg, const GeneratorConfig& gen_cfg,
                     const BatchOptions& batch = {}, const CompileOptions& compile = {});

struct CalibrationEntry {
    std::string name;
    std::string source;
    TestSuite suite;
};

struct CalibrationRow {
    std::string name;
    double score = 0.0;
    bool neural_succeeded = false;
};

struct CalibrationResult {
    double theta = 0.0;
    std::vector<CalibrationRow> rows;
    size_t misclassified = 0;  // at the chosen theta
};

// Sweeps candidate thresholds over labeled (score, success) points and picks
// the one minimizing misclassification, preferring the smallest on ties.
// Exposed separately from calibrate_threshold for direct testing.
double choose_threshold(const std::vector<std::pair<double, bool>>& points,
                        size_t* misclassified = nullptr);

// Labels every corpus entry by whether the sampling path succeeds with k_fast
// candidates on its full suite, then sweeps for the best threshold.
CalibrationResult calibrate_threshold(const std::vector<CalibrationEntry>& corpus,
                                      const RouterConfig& cfg, const GeneratorConfig& gen_cfg,
                                      const BatchOptions& batch = {},
                                      const CompileOptions& compile = {});

}  // namespace gnc
