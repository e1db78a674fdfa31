// gnc: a stack-bytecode compiler, batch VM, and verification toolkit
// Copyright 2026 The gnc Authors.
// Licensed under the Apache License, Version 2.0.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gnc {

// Closed-form latency, energy, memory and success-probability estimates for
// the compilation strategies. Everything here is arithmetic over published
// constants; nothing is measured.

// 1 - (1 - p)^k, evaluated via log1p/expm1 so tiny p and huge k stay exact.
double p_success(uint64_t k, double p_correct);

enum class KMode {
    Exact,        // smallest k whose success probability reaches the target
    PaperApprox,  // the published rule of thumb: target 0.99 gives 4.6/p
};

// How many candidates to draw for the requested success probability. The
// approximation rounds the -ln(1-target) constant to one decimal before
// dividing, which is what makes 4.6/0.1 come out as the published 46; it can
// slightly exceed the exact answer but never undershoots it.
uint64_t k_required(double target, double p_correct, KMode mode);

// One CPU round trip: T_gen + 2*T_transfer + T_compile + T_exec.
double t_cpu_iteration(double t_gen_ms, double t_transfer_ms, double t_compile_ms,
                       double t_exec_ms);

// Parallel batch compilation: the slowest program bounds each wave of P
// programs, ceil(k/P) waves in total.
double t_trad_parallel(const std::vector<std::vector<double>>& phase_times_per_program,
                       uint64_t cores);

double t_neural(double t_gen_k_ms, double t_verify_k_ms);

// (k * t_cpu) / t_neural; throws std::invalid_argument when t_neural is 0.
double speedup_neural(uint64_t k, double t_cpu_ms, double t_neural_ms);

// p_simple * t_neural + (1 - p_simple) * t_trad + t_routing.
double t_hybrid(double p_simple, double t_neural_ms, double t_trad_ms, double t_routing_ms);

// Watts times milliseconds is millijoules.
double energy_mj(double watts, double ms);

struct MemoryComponent {
    std::string name;
    double lo_mb = 0.0;
    double hi_mb = 0.0;
    bool scales_with_k = false;
};

struct MemoryRange {
    double lo_mb = 0.0;
    double hi_mb = 0.0;
};

// Sums component ranges, scaling the per-batch ones by k/k_ref. When the
// published_total is set it becomes the reported range (components are then
// context for the note), mirroring sources that round their totals.
MemoryRange memory_estimate(const std::vector<MemoryComponent>& components, double k,
                            double k_ref, std::optional<MemoryRange> published_total = {});

// L * n * d^2 * k / P in abstract operation units; an order-of-growth figure,
// never to be mixed with millisecond quantities.
double t_gen_transformer(double layers, double seq_len, double d_model, double k,
                         double cores);

struct CostEntry {
    std::string name;
    double value = 0.0;
    std::string unit;     // "ms", "J", "mJ", "x", "MB", "GB", "units", ""
    std::string formula;  // how the number was produced
};

struct CostReport {
    std::string title;
    std::vector<CostEntry> entries;
};

// Model inputs with the sources' typical values as defaults. Every field can
// be overridden from a key=value file; the key is the field name.
struct CostParams {
    double t_gen_ms = 10.0;
    double t_transfer_ms = 1.0;
    double t_compile_ms = 50.0;
    double t_exec_ms = 10.0;
    uint64_t k = 1000;
    uint64_t cores = 1;
    double p_correct = 0.1;
    double target = 0.99;
    double p_simple = 0.8;
    double t_gen_k_ms = 200.0;
    double t_verify_k_ms = 300.0;
    double t_neural_amortized_ms = 0.2;
    double t_trad_ms = 20.0;
    double t_routing_ms = 2.0;
    double pcie_w = 25.0;
    double gpu_w = 300.0;
    double t_gpu_compile_ms = 50.0;
    double t_neural_gpu_ms = 200.0;
    double alpha = 0.01;
    double layers = 24.0;
    double seq_len = 1024.0;
    double d_model = 1024.0;
};

// Reads overrides for any CostParams field; unknown keys throw ConfigError
// so typos in config files fail loudly. Validates ranges.
CostParams parse_cost_params(const std::map<std::string, std::string>& kv);

// Evaluates every formula the parameters feed and returns one entry each.
CostReport cost_report(const CostParams& params);

// Parameter presets reproducing specific published figures; evaluate with
// cost_preset_report. paper-section-4.4, -5.2 and -6.2 are stable interface
// names; the rest follow the same scheme.
std::vector<std::string> cost_preset_names();
CostReport cost_preset_report(const std::string& preset);

}  // namespace gnc
