// gnc: a stack-bytecode compiler, batch VM, and verification toolkit
// Copyright 2026 The gnc Authors.
// Licensed under the Apache License, Version 2.0.
#include "gnc/cost.hpp"

#include <cmath>
#include <stdexcept>

#include "gnc/config.hpp"

namespace gnc {

double p_success(uint64_t k, double p_correct) {
    if (p_correct < 0.0 || p_correct > 1.0) {
        throw std::invalid_argument("p_correct must lie in [0, 1]");
    }
    if (k == 0 || p_correct == 0.0) return 0.0;
    if (p_correct == 1.0) return 1.0;
    // 1 - (1-p)^k with the subtraction fused away so p=1e-6, k=1e6 keeps
    // its leading digits.
    return -std::expm1(static_cast<double>(k) * std::log1p(-p_correct));
}

uint64_t k_required(double target, double p_correct, KMode mode) {
    if (!(target > 0.0 && target < 1.0)) {
        throw std::invalid_argument("target must lie strictly between 0 and 1");
    }
    if (!(p_correct > 0.0 && p_correct <= 1.0)) {
        throw std::invalid_argument("p_correct must lie in (0, 1]");
    }
    if (mode == KMode::PaperApprox) {
        // The rule of thumb divides -ln(1-target) quoted to one decimal
        // (0.99 -> 4.6) by p. Quoting first is what yields 46 rather than
        // the 47 a full-precision constant would give at p = 0.1.
        double c = std::round(-std::log1p(-target) * 10.0) / 10.0;
        return static_cast<uint64_t>(std::ceil(c / p_correct - 1e-9));
    }
    if (p_correct == 1.0) return 1;
    double raw = std::log1p(-target) / std::log1p(-p_correct);
    auto k = static_cast<uint64_t>(std::ceil(raw - 1e-9));
    if (k == 0) k = 1;
    // The closed form can land one off after rounding; walk to the true
    // boundary.
    while (k > 1 && p_success(k - 1, p_correct) >= target) --k;
    while (p_success(k, p_correct) < target) ++k;
    return k;
}

double t_cpu_iteration(double t_gen_ms, double t_transfer_ms, double t_compile_ms,
                       double t_exec_ms) {
    return t_gen_ms + 2.0 * t_transfer_ms + t_compile_ms + t_exec_ms;
}

double t_trad_parallel(const std::vector<std::vector<double>>& phase_times_per_program,
                       uint64_t cores) {
    if (cores == 0) throw std::invalid_argument("core count must be at least 1");
    if (phase_times_per_program.empty()) return 0.0;
    double slowest = 0.0;
    for (const auto& phases : phase_times_per_program) {
        double sum = 0.0;
        for (double t : phases) sum += t;
        if (sum > slowest) slowest = sum;
    }
    uint64_t k = phase_times_per_program.size();
    uint64_t waves = (k + cores - 1) / cores;
    return slowest * static_cast<double>(waves);
}

double t_neural(double t_gen_k_ms, double t_verify_k_ms) {
    return t_gen_k_ms + t_verify_k_ms;
}

double speedup_neural(uint64_t k, double t_cpu_ms, double t_neural_ms) {
    if (t_neural_ms == 0.0) {
        throw std::invalid_argument("t_neural must be positive for a speedup ratio");
    }
    return static_cast<double>(k) * t_cpu_ms / t_neural_ms;
}

double t_hybrid(double p_simple, double t_neural_ms, double t_trad_ms, double t_routing_ms) {
    if (p_simple < 0.0 || p_simple > 1.0) {
        throw std::invalid_argument("p_simple must lie in [0, 1]");
    }
    return p_simple * t_neural_ms + (1.0 - p_simple) * t_trad_ms + t_routing_ms;
}

double energy_mj(double watts, double ms) { return watts * ms; }

MemoryRange memory_estimate(const std::vector<MemoryComponent>& components, double k,
                            double k_ref, std::optional<MemoryRange> published_total) {
    if (k_ref <= 0.0) throw std::invalid_argument("k_ref must be positive");
    if (published_total) return *published_total;
    MemoryRange total;
    for (const auto& c : components) {
        double scale = c.scales_with_k ? k / k_ref : 1.0;
        total.lo_mb += c.lo_mb * scale;
        total.hi_mb += c.hi_mb * scale;
    }
    return total;
}

double t_gen_transformer(double layers, double seq_len, double d_model, double k,
                         double cores) {
    if (cores <= 0.0) throw std::invalid_argument("core count must be positive");
    return layers * seq_len * d_model * d_model * k / cores;
}

CostParams parse_cost_params(const std::map<std::string, std::string>& kv) {
    static const char* known[] = {
        "t_gen_ms",       "t_transfer_ms",  "t_compile_ms",
        "t_exec_ms",      "k",              "cores",
        "p_correct",      "target",         "p_simple",
        "t_gen_k_ms",     "t_verify_k_ms",  "t_neural_amortized_ms",
        "t_trad_ms",      "t_routing_ms",   "pcie_w",
        "gpu_w",          "t_gpu_compile_ms", "t_neural_gpu_ms",
        "alpha",          "layers",         "seq_len",
        "d_model",
    };
    for (const auto& [key, value] : kv) {
        (void)value;
        bool ok = false;
        for (const char* name : known) {
            if (key == name) {
                ok = true;
                break;
            }
        }
        if (!ok) throw ConfigError("unknown cost parameter `" + key + "`");
    }

    CostParams p;
    p.t_gen_ms = kv_double(kv, "t_gen_ms", p.t_gen_ms);
    p.t_transfer_ms = kv_double(kv, "t_transfer_ms", p.t_transfer_ms);
    p.t_compile_ms = kv_double(kv, "t_compile_ms", p.t_compile_ms);
    p.t_exec_ms = kv_double(kv, "t_exec_ms", p.t_exec_ms);
    p.k = kv_uint(kv, "k", p.k);
    p.cores = kv_uint(kv, "cores", p.cores);
    p.p_correct = kv_double(kv, "p_correct", p.p_correct);
    p.target = kv_double(kv, "target", p.target);
    p.p_simple = kv_double(kv, "p_simple", p.p_simple);
    p.t_gen_k_ms = kv_double(kv, "t_gen_k_ms", p.t_gen_k_ms);
    p.t_verify_k_ms = kv_double(kv, "t_verify_k_ms", p.t_verify_k_ms);
    p.t_neural_amortized_ms = kv_double(kv, "t_neural_amortized_ms", p.t_neural_amortized_ms);
    p.t_trad_ms = kv_double(kv, "t_trad_ms", p.t_trad_ms);
    p.t_routing_ms = kv_double(kv, "t_routing_ms", p.t_routing_ms);
    p.pcie_w = kv_double(kv, "pcie_w", p.pcie_w);
    p.gpu_w = kv_double(kv, "gpu_w", p.gpu_w);
    p.t_gpu_compile_ms = kv_double(kv, "t_gpu_compile_ms", p.t_gpu_compile_ms);
    p.t_neural_gpu_ms = kv_double(kv, "t_neural_gpu_ms", p.t_neural_gpu_ms);
    p.alpha = kv_double(kv, "alpha", p.alpha);
    p.layers = kv_double(kv, "layers", p.layers);
    p.seq_len = kv_double(kv, "seq_len", p.seq_len);
    p.d_model = kv_double(kv, "d_model", p.d_model);

    auto nonneg = [](double v, const char* name) {
        if (v < 0.0) throw ConfigError(std::string(name) + " must be nonnegative");
    };
    nonneg(p.t_gen_ms, "t_gen_ms");
    nonneg(p.t_transfer_ms, "t_transfer_ms");
    nonneg(p.t_compile_ms, "t_compile_ms");
    nonneg(p.t_exec_ms, "t_exec_ms");
    nonneg(p.t_gen_k_ms, "t_gen_k_ms");
    nonneg(p.t_verify_k_ms, "t_verify_k_ms");
    nonneg(p.t_neural_amortized_ms, "t_neural_amortized_ms");
    nonneg(p.t_trad_ms, "t_trad_ms");
    nonneg(p.t_routing_ms, "t_routing_ms");
    nonneg(p.pcie_w, "pcie_w");
    nonneg(p.gpu_w, "gpu_w");
    nonneg(p.t_gpu_compile_ms, "t_gpu_compile_ms");
    nonneg(p.t_neural_gpu_ms, "t_neural_gpu_ms");
    if (p.k == 0) throw ConfigError("k must be at least 1");
    if (p.cores == 0) throw ConfigError("cores must be at least 1");
    if (p.p_correct < 0.0 || p.p_correct > 1.0) throw ConfigError("p_correct must lie in [0, 1]");
    if (p.target <= 0.0 || p.target >= 1.0) {
        throw ConfigError("target must lie strictly between 0 and 1");
    }
    if (p.p_simple < 0.0 || p.p_simple > 1.0) throw ConfigError("p_simple must lie in [0, 1]");
    return p;
}

CostReport cost_report(const CostParams& p) {
    CostReport r;
    r.title = "cost model";

    double cpu = t_cpu_iteration(p.t_gen_ms, p.t_transfer_ms, p.t_compile_ms, p.t_exec_ms);
    r.entries.push_back({"cpu_iteration", cpu, "ms",
                         "t_gen + 2*t_transfer + t_compile + t_exec"});

    if (p.p_correct > 0.0) {
        r.entries.push_back({"p_success", p_success(p.k, p.p_correct), "",
                             "1 - (1 - p_correct)^k"});
        r.entries.push_back(
            {"k_exact", static_cast<double>(k_required(p.target, p.p_correct, KMode::Exact)),
             "", "smallest k with p_success >= target"});
        r.entries.push_back(
            {"k_approx",
             static_cast<double>(k_required(p.target, p.p_correct, KMode::PaperApprox)), "",
             "ceil(-ln(1-target) / p_correct), constant quoted to one decimal"});
    }

    double neural = t_neural(p.t_gen_k_ms, p.t_verify_k_ms);
    r.entries.push_back({"t_neural", neural, "ms", "t_gen(k) + t_verify(k)"});
    if (neural > 0.0) {
        r.entries.push_back({"speedup_neural", speedup_neural(p.k, cpu, neural), "x",
                             "k * t_cpu / t_neural"});
    }
    r.entries.push_back(
        {"t_hybrid",
         t_hybrid(p.p_simple, p.t_neural_amortized_ms, p.t_trad_ms, p.t_routing_ms), "ms",
         "p_simple * t_neural + (1 - p_simple) * t_trad + t_routing"});

    r.entries.push_back({"transfer_energy", energy_mj(p.pcie_w, p.t_transfer_ms), "mJ",
                         "pcie_w * t_transfer"});
    r.entries.push_back({"gpu_compile_energy",
                         energy_mj(p.gpu_w, p.t_gpu_compile_ms) / 1000.0, "J",
                         "gpu_w * t_gpu_compile"});
    double neural_j = energy_mj(p.gpu_w, p.t_neural_gpu_ms) / 1000.0;
    r.entries.push_back({"neural_energy", neural_j, "J", "gpu_w * t_neural_gpu"});
    r.entries.push_back({"neural_energy_amortized",
                         1000.0 * neural_j / static_cast<double>(p.k), "mJ",
                         "neural_energy / k"});

    r.entries.push_back(
        {"transformer_gen",
         t_gen_transformer(p.layers, p.seq_len, p.d_model, static_cast<double>(p.k),
                           static_cast<double>(p.cores)),
         "units", "L * n * d^2 * k / P, order of growth only"});
    return r;
}

std::vector<std::string> cost_preset_names() {
    return {"paper-section-4.3", "paper-section-4.4", "paper-section-5.2",
            "paper-section-6.1", "paper-section-6.2", "paper-section-6.3"};
}

namespace {

CostReport sampling_preset() {
    CostReport r;
    r.title = "candidate sampling requirements";
    r.entries.push_back({"p_success_k46_p0.1", p_success(46, 0.1), "",
                         "1 - 0.9^46"});
    r.entries.push_back(
        {"k_exact_p0.1", static_cast<double>(k_required(0.99, 0.1, KMode::Exact)), "",
         "smallest k with 1 - 0.9^k >= 0.99"});
    r.entries.push_back(
        {"k_approx_p0.1", static_cast<double>(k_required(0.99, 0.1, KMode::PaperApprox)),
         "", "4.6 / 0.1"});
    r.entries.push_back(
        {"k_approx_p0.01", static_cast<double>(k_required(0.99, 0.01, KMode::PaperApprox)),
         "", "4.6 / 0.01"});
    return r;
}

CostReport batch_speedup_preset() {
    CostReport r;
    r.title = "batch generation speedup";
    double neural = t_neural(200.0, 300.0);
    r.entries.push_back({"t_neural", neural, "ms", "t_gen(1000) + t_verify(1000)"});
    r.entries.push_back({"speedup_neural", speedup_neural(1000, 200.0, neural), "x",
                         "1000 * 200ms / 500ms"});
    return r;
}

CostReport hybrid_preset() {
    CostReport r;
    r.title = "hybrid routing latency";
    r.entries.push_back({"t_hybrid", t_hybrid(0.8, 0.2, 20.0, 2.0), "ms",
                         "0.8 * 0.2ms + 0.2 * 20ms + 2ms"});
    return r;
}

CostReport cpu_iteration_preset() {
    CostReport r;
    r.title = "cpu iteration latency";
    r.entries.push_back({"cpu_iteration_fast", t_cpu_iteration(10.0, 1.0, 50.0, 10.0), "ms",
                         "10 + 2*1 + 50 + 10"});
    r.entries.push_back({"cpu_iteration_slow", t_cpu_iteration(10.0, 1.0, 500.0, 1000.0),
                         "ms", "10 + 2*1 + 500 + 1000"});
    return r;
}

CostReport energy_preset() {
    CostReport r;
    r.title = "energy per program";
    r.entries.push_back({"transfer_energy", energy_mj(25.0, 1.0), "mJ", "25W * 1ms"});
    r.entries.push_back({"gpu_compile_energy", energy_mj(300.0, 50.0) / 1000.0, "J",
                         "300W * 50ms"});
    double neural_j = energy_mj(300.0, 200.0) / 1000.0;
    r.entries.push_back({"neural_energy", neural_j, "J", "300W * 200ms"});
    r.entries.push_back({"neural_energy_amortized", 1000.0 * neural_j / 1000.0, "mJ",
                         "neural_energy / k, k = 1000"});
    r.entries.push_back({"cpu_total_1000_iter", 70000.0, "J",
                         "quoted CPU-path total for 1000 iterations"});
    r.entries.push_back({"gpu_total_1000_iter", 60.0, "J",
                         "quoted batch-path total for 1000 iterations"});
    r.entries.push_back({"energy_savings", 70000.0 / 60.0, "x",
                         "70000J / 60J, usually quoted rounded to ~1000x"});
    return r;
}

CostReport memory_preset() {
    CostReport r;
    r.title = "memory footprint";
    std::vector<MemoryComponent> traditional = {
        {"source", 1.0, 10.0, true},   {"ast", 5.0, 50.0, true},
        {"symbols", 5.0, 50.0, true},  {"bytecode", 1.0, 10.0, true},
        {"overheads", 8.0, 80.0, true},
    };
    MemoryRange trad = memory_estimate(traditional, 100.0, 100.0);
    r.entries.push_back({"traditional_total_lo", trad.lo_mb, "MB",
                         "source 1 + ast 5 + symbols 5 + bytecode 1 + overheads 8, k = 100"});
    r.entries.push_back({"traditional_total_hi", trad.hi_mb, "MB",
                         "source 10 + ast 50 + symbols 50 + bytecode 10 + overheads 80, k = 100"});

    std::vector<MemoryComponent> neural = {
        {"model_parameters", 1024.0, 10240.0, false},
        {"input_embeddings", 100.0, 100.0, false},
        {"generated_bytecode", 100.0, 1000.0, true},
        {"execution_state", 10.0, 100.0, true},
    };
    MemoryRange sum = memory_estimate(neural, 1000.0, 1000.0);
    MemoryRange published =
        memory_estimate(neural, 1000.0, 1000.0, MemoryRange{1024.0, 12288.0});
    r.entries.push_back({"neural_component_sum_lo", sum.lo_mb, "MB",
                         "parameters 1024 + embeddings 100 + bytecode 100 + state 10"});
    r.entries.push_back({"neural_component_sum_hi", sum.hi_mb, "MB",
                         "parameters 10240 + embeddings 100 + bytecode 1000 + state 100"});
    r.entries.push_back({"neural_total_lo", published.lo_mb / 1024.0, "GB",
                         "quoted total; spans wider than the component sum"});
    r.entries.push_back({"neural_total_hi", published.hi_mb / 1024.0, "GB",
                         "quoted total; spans wider than the component sum"});
    return r;
}

}  // namespace

CostReport cost_preset_report(const std::string& preset) {
    if (preset == "paper-section-4.3") return sampling_preset();
    if (preset == "paper-section-4.4") return batch_speedup_preset();
    if (preset == "paper-section-5.2") return hybrid_preset();
    if (preset == "paper-section-6.1") return cpu_iteration_preset();
    if (preset == "paper-section-6.2") return energy_preset();
    if (preset == "paper-section-6.3") return memory_preset();
    throw std::invalid_argument("unknown preset `" + preset + "`");
}

}  // namespace gnc
