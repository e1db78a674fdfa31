// gnc: a stack-bytecode compiler, batch VM, and verification toolkit
// Copyright 2026 The gnc Authors.
// Licensed under the Apache License, Version 2.0.
//
// Command-line front end. Subcommands map 1:1 onto the library modules:
// compile, run, batch, verify, route, calibrate, cost. Exit codes: 0 success,
// 1 compile/usage/config error, 2 guest trap or timeout in `run`, 3 when
// sampling verification finds no surviving candidate.

#include <algorithm>
#include <cinttypes>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gnc/batch.hpp"
#include "gnc/codec.hpp"
#include "gnc/common.hpp"
#include "gnc/compile.hpp"
#include "gnc/config.hpp"
#include "gnc/cost.hpp"
#include "gnc/features.hpp"
#include "gnc/lexer.hpp"
#include "gnc/lower.hpp"
#include "gnc/parser.hpp"
#include "gnc/report_json.hpp"
#include "gnc/rng.hpp"
#include "gnc/router.hpp"
#include "gnc/testsuite.hpp"
#include "gnc/typecheck.hpp"
#include "gnc/verifier.hpp"
#include "gnc/vm.hpp"

namespace fs = std::filesystem;

namespace {

struct GlobalFlags {
    uint64_t seed = 0;
    uint64_t fuel = 100000;
    uint32_t warp = 32;
    uint32_t workers = 1;
    std::string format = "table";

    bool json() const { return format == "json"; }
    gnc::VmLimits limits() const {
        gnc::VmLimits l;
        l.fuel = fuel;
        return l;
    }
    gnc::BatchOptions batch_options() const {
        gnc::BatchOptions b;
        b.warp_width = warp;
        b.workers = workers;
        b.limits = limits();
        return b;
    }
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<uint8_t> read_binary(const std::string& path) {
    std::string text = read_file(path);
    return std::vector<uint8_t>(text.begin(), text.end());
}

void write_file(const std::string& path, const void* data, size_t size) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out.write(static_cast<const char*>(data), static_cast<std::streamsize>(size));
    if (!out) throw std::runtime_error("failed writing " + path);
}

// One diagnostic per compile failure, gcc style: path:line:col: error: text.
int report_compile_error(const std::string& path, const gnc::CompileError& e) {
    std::cerr << path << ":" << e.pos().line << ":" << e.pos().col
              << ": error: " << e.message() << "\n";
    return 1;
}

std::string format_value(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

void print_cost_report(const gnc::CostReport& report, bool json) {
    if (json) {
        std::cout << gnc::cost_report_json(report) << "\n";
        return;
    }
    std::cout << report.title << "\n";
    size_t name_w = 4, value_w = 5;
    std::vector<std::string> values;
    for (const auto& e : report.entries) {
        values.push_back(format_value(e.value));
        name_w = std::max(name_w, e.name.size());
        value_w = std::max(value_w, values.back().size());
    }
    for (size_t i = 0; i < report.entries.size(); ++i) {
        const auto& e = report.entries[i];
        std::cout << "  " << e.name << std::string(name_w - e.name.size() + 2, ' ')
                  << std::string(value_w - values[i].size(), ' ') << values[i];
        if (!e.unit.empty()) std::cout << " " << e.unit;
        std::cout << "    (" << e.formula << ")\n";
    }
}

// When no suite file is given, derive expectations by running the reference
// program itself: nullary mains get one test, others get five seeded random
// argument tuples. Only succeeding runs become rows; the suite then states
// what the reference actually computes.
gnc::TestSuite derive_suite(const gnc::BytecodeProgram& reference, uint64_t seed,
                            const gnc::VmLimits& limits) {
    gnc::TestSuite suite;
    const auto& entry = reference.functions.at(reference.entry_function);
    size_t want = entry.arity == 0 ? 1 : 5;
    gnc::Rng rng(seed, 0x5017ed5u);
    for (size_t attempt = 0; attempt < 64 && suite.size() < want; ++attempt) {
        std::vector<int64_t> args;
        for (uint16_t i = 0; i < entry.arity; ++i) args.push_back(rng.next_in_range(-10, 10));
        gnc::ExecResult r = gnc::execute(reference, args, limits);
        if (r.status != gnc::ExecStatus::Ok) continue;
        suite.push_back({std::move(args), r.value});
        if (entry.arity == 0) break;
    }
    if (suite.empty()) {
        throw std::runtime_error(
            "cannot derive a test suite: the reference program never finished "
            "normally on sampled inputs; provide --suite");
    }
    return suite;
}

gnc::TestSuite load_or_derive_suite(const std::string& suite_path,
                                    const gnc::BytecodeProgram& reference,
                                    const GlobalFlags& g) {
    if (!suite_path.empty()) return gnc::load_suite_file(suite_path);
    return derive_suite(reference, g.seed, g.limits());
}

int cmd_compile(const std::string& source_path, std::string out_path, const std::string& emit,
                bool no_opt, const std::vector<std::string>& pass_names, int parse_depth) {
    std::string source;
    try {
        source = read_file(source_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    gnc::CompileOptions options;
    options.optimize_enabled = !no_opt;
    options.parse_depth = parse_depth;
    if (!pass_names.empty()) {
        options.opt.passes.clear();
        for (const auto& name : pass_names) {
            if (name == "fold") {
                options.opt.passes.push_back(gnc::Pass::ConstantFold);
            } else if (name == "dead-store") {
                options.opt.passes.push_back(gnc::Pass::DeadStore);
            } else if (name == "unreachable") {
                options.opt.passes.push_back(gnc::Pass::UnreachableBlocks);
            } else {
                std::cerr << "error: unknown pass `" << name
                          << "` (expected fold, dead-store or unreachable)\n";
                return 1;
            }
        }
    }

    try {
        if (emit == "tokens") {
            for (const auto& t : gnc::lex(source)) {
                std::cout << t.pos.line << ":" << t.pos.col << "  "
                          << gnc::token_kind_name(t.kind);
                if (t.kind == gnc::TokenKind::IntLiteral) {
                    std::cout << "  " << t.int_value;
                } else if (t.kind != gnc::TokenKind::EndOfFile) {
                    std::cout << "  " << t.text;
                }
                std::cout << "\n";
            }
            return 0;
        }
        if (emit == "ast") {
            gnc::TypedAst typed = gnc::typecheck(gnc::parse(source, parse_depth));
            std::string text = gnc::dump(typed.ast, true);
            std::cout << text;
            if (text.empty() || text.back() != '\n') std::cout << "\n";
            return 0;
        }
        if (emit == "ir") {
            gnc::TypedAst typed = gnc::typecheck(gnc::parse(source, parse_depth));
            gnc::IrProgram ir = gnc::lower_to_ir(typed);
            if (options.optimize_enabled) ir = gnc::optimize(std::move(ir), options.opt);
            std::cout << gnc::dump(ir);
            return 0;
        }

        gnc::BytecodeProgram program = gnc::compile_reference(source, options);
        std::vector<uint8_t> bytes = gnc::encode(program);
        if (out_path.empty()) {
            out_path = fs::path(source_path).replace_extension(".gnbc").string();
        }
        write_file(out_path, bytes.data(), bytes.size());
        return 0;
    } catch (const gnc::CompileError& e) {
        return report_compile_error(source_path, e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

int cmd_run(const std::string& prog_path, const std::vector<int64_t>& args,
            const GlobalFlags& g) {
    gnc::BytecodeProgram program;
    try {
        std::vector<uint8_t> bytes = read_binary(prog_path);
        program = gnc::decode(bytes);
    } catch (const std::exception& e) {
        std::cerr << "error: " << prog_path << ": " << e.what() << "\n";
        return 1;
    }

    gnc::ExecResult r = gnc::execute(program, args, g.limits());
    if (g.json()) {
        std::cout << gnc::exec_result_json(r) << "\n";
    } else {
        switch (r.status) {
        case gnc::ExecStatus::Ok:
            std::cout << "Ok " << r.value << "\n";
            break;
        case gnc::ExecStatus::Trap:
            std::cout << "Trap " << gnc::trap_kind_name(*r.trap) << "\n";
            break;
        case gnc::ExecStatus::Timeout:
            std::cout << "Timeout\n";
            break;
        }
        std::cout << "steps " << r.steps << "\n";
    }
    return r.status == gnc::ExecStatus::Ok ? 0 : 2;
}

int cmd_batch(const std::string& dir, const std::string& suite_path, const GlobalFlags& g) {
    std::vector<std::string> names;
    std::vector<gnc::BytecodeProgram> programs;
    try {
        std::vector<fs::path> paths;
        for (const auto& entry : fs::directory_iterator(dir)) {
            if (entry.is_regular_file() && entry.path().extension() == ".gnbc") {
                paths.push_back(entry.path());
            }
        }
        std::sort(paths.begin(), paths.end());
        for (const auto& p : paths) {
            std::vector<uint8_t> bytes = read_binary(p.string());
            programs.push_back(gnc::decode(bytes));
            names.push_back(p.filename().string());
        }
        if (programs.empty()) {
            std::cerr << "error: no .gnbc files in " << dir << "\n";
            return 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    gnc::TestSuite suite;
    try {
        suite = gnc::load_suite_file(suite_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    gnc::BatchResult result = gnc::execute_batch(programs, suite, g.batch_options());
    if (g.json()) {
        std::cout << gnc::batch_result_json(result) << "\n";
        return 0;
    }

    size_t name_w = 7;
    for (const auto& n : names) name_w = std::max(name_w, n.size());
    for (size_t p = 0; p < programs.size(); ++p) {
        std::cout << names[p] << std::string(name_w - names[p].size() + 2, ' ');
        size_t passed = 0;
        uint64_t steps = 0;
        for (size_t t = 0; t < suite.size(); ++t) {
            const gnc::ExecResult& r = result.results[p][t];
            steps += r.steps;
            if (r.status == gnc::ExecStatus::Ok && r.value == suite[t].expected) ++passed;
        }
        std::cout << passed << "/" << suite.size() << " passed  steps " << steps << "  ";
        for (size_t t = 0; t < suite.size(); ++t) {
            const gnc::ExecResult& r = result.results[p][t];
            if (r.status == gnc::ExecStatus::Ok) {
                std::cout << (r.value == suite[t].expected ? '.' : 'F');
            } else if (r.status == gnc::ExecStatus::Trap) {
                std::cout << 'T';
            } else {
                std::cout << 't';
            }
        }
        std::cout << "\n";
    }
    char div[32];
    std::snprintf(div, sizeof(div), "%.3f", result.divergence);
    std::cout << "divergence " << div << "\n";
    std::cout << "cycles " << result.total_lockstep_cycles << "\n";
    return 0;
}

int cmd_verify(const std::string& source_path, const std::string& suite_path, size_t k,
               double p_correct, uint64_t trials, double alpha, bool kill_verified,
               const GlobalFlags& g) {
    std::string source;
    gnc::BytecodeProgram reference;
    try {
        source = read_file(source_path);
        reference = gnc::compile_reference(source);
    } catch (const gnc::CompileError& e) {
        return report_compile_error(source_path, e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    gnc::TestSuite suite;
    try {
        suite = load_or_derive_suite(suite_path, reference, g);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    gnc::Alg2Options options;
    options.k = k;
    options.gen.mode = gnc::GeneratorMode::Stochastic;
    options.gen.p_correct = p_correct;
    options.gen.seed = g.seed;
    options.gen.kill_limits = g.limits();
    options.batch = g.batch_options();
    options.alpha = alpha;

    try {
        if (trials > 0) {
            // Monte Carlo over seeds: how often does at least one of k
            // candidates survive the suite? Kill-verified generation makes
            // each candidate an exact Bernoulli(p_correct) draw, so the
            // theoretical rate is 1 - (1 - p)^k.
            options.gen.kill_suite = suite;
            size_t successes = 0;
            for (uint64_t t = 0; t < trials; ++t) {
                options.gen.seed = g.seed + t;
                gnc::Alg2Outcome outcome = gnc::run_alg2_from(reference, suite, options);
                if (outcome.success) ++successes;
            }
            double empirical = static_cast<double>(successes) / static_cast<double>(trials);
            double theory = gnc::p_success(k, p_correct);
            if (g.json()) {
                std::cout << "{\n  \"trials\": " << trials << ",\n  \"successes\": "
                          << successes << ",\n  \"empirical\": " << empirical
                          << ",\n  \"theoretical\": " << theory << "\n}\n";
            } else {
                std::cout << "trials " << trials << "  successes " << successes << "\n";
                std::cout << "empirical " << format_value(empirical) << "  theoretical "
                          << format_value(theory) << "\n";
            }
            return 0;
        }

        if (kill_verified) options.gen.kill_suite = suite;
        gnc::Alg2Outcome outcome = gnc::run_alg2_from(reference, suite, options);
        if (g.json()) {
            std::cout << gnc::alg2_outcome_json(outcome) << "\n";
        } else {
            std::cout << "candidates " << k << "  verified " << outcome.report.verified.size()
                      << "\n";
            if (outcome.success) {
                const auto& v = outcome.report.verdicts[*outcome.best_index];
                std::cout << "best candidate " << *outcome.best_index << "  total steps "
                          << v.total_steps << "  reward "
                          << format_value(outcome.report.rewards[*outcome.best_index]) << "\n";
            } else {
                std::cout << "no candidate passed the suite\n";
                for (const auto& [kind, count] : outcome.failures.by_category) {
                    std::cout << "  " << gnc::verdict_kind_name(kind) << " " << count << "\n";
                }
            }
            char div[32];
            std::snprintf(div, sizeof(div), "%.3f", outcome.report.divergence);
            std::cout << "divergence " << div << "  cycles "
                      << outcome.report.total_lockstep_cycles << "\n";
            std::cout << "generation " << format_value(outcome.generation_ms)
                      << " ms  verification " << format_value(outcome.verification_ms)
                      << " ms\n";
        }
        return outcome.success ? 0 : 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

int cmd_route(const std::string& source_path, const std::string& suite_path,
              const std::string& config_path, std::string out_path, double p_correct,
              std::optional<double> theta, std::optional<size_t> k_fast, bool no_kill,
              const GlobalFlags& g) {
    std::string source;
    gnc::BytecodeProgram reference;
    try {
        source = read_file(source_path);
        reference = gnc::compile_reference(source);
    } catch (const gnc::CompileError& e) {
        return report_compile_error(source_path, e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        gnc::RouterConfig cfg;
        if (!config_path.empty()) cfg = gnc::load_router_config_file(config_path);
        if (theta) cfg.theta_simple = *theta;
        if (k_fast) cfg.k_fast = *k_fast;

        gnc::TestSuite suite = load_or_derive_suite(suite_path, reference, g);

        gnc::GeneratorConfig gen;
        gen.p_correct = p_correct;
        gen.seed = g.seed;
        gen.kill_limits = g.limits();
        // Kill-verified sampling keeps mutants that would slip through the
        // suite out of the candidate pool, so an incorrect generator reliably
        // falls back instead of winning by luck.
        if (!no_kill) gen.kill_suite = suite;

        gnc::RoutingOutcome outcome =
            gnc::route(source, suite, cfg, gen, g.batch_options());

        if (g.json()) {
            std::cout << gnc::routing_outcome_json(outcome) << "\n";
        } else {
            switch (outcome.path) {
            case gnc::RoutePath::NeuralAccepted:
                std::cout << "sampling path accepted a candidate\n";
                break;
            case gnc::RoutePath::NeuralFailedFellBack:
                std::cout << "fell back to traditional\n";
                break;
            case gnc::RoutePath::RoutedTraditional:
                std::cout << "routed traditional\n";
                break;
            }
            std::cout << "score " << format_value(outcome.score) << "  threshold "
                      << format_value(cfg.theta_simple) << "\n";
            std::cout << "total " << format_value(outcome.total_ms()) << " ms (routing "
                      << format_value(outcome.routing_ms) << ", generation "
                      << format_value(outcome.generation_ms) << ", verification "
                      << format_value(outcome.verification_ms) << ", traditional "
                      << format_value(outcome.traditional_ms) << ")\n";
        }

        if (!out_path.empty()) {
            std::vector<uint8_t> bytes = gnc::encode(outcome.bytecode);
            write_file(out_path, bytes.data(), bytes.size());
        }
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

int cmd_calibrate(const std::string& dir, const std::string& config_path,
                  const std::string& out_path, double p_correct, const GlobalFlags& g) {
    try {
        std::vector<gnc::CalibrationEntry> corpus;
        std::vector<fs::path> paths;
        for (const auto& entry : fs::directory_iterator(dir)) {
            if (entry.is_regular_file() && entry.path().extension() == ".gn") {
                paths.push_back(entry.path());
            }
        }
        std::sort(paths.begin(), paths.end());
        for (const auto& p : paths) {
            fs::path suite_path = fs::path(p).replace_extension(".suite");
            if (!fs::exists(suite_path)) {
                std::cerr << "warning: skipping " << p.filename().string()
                          << " (no matching .suite file)\n";
                continue;
            }
            gnc::CalibrationEntry e;
            e.name = p.stem().string();
            e.source = read_file(p.string());
            e.suite = gnc::load_suite_file(suite_path.string());
            corpus.push_back(std::move(e));
        }
        if (corpus.empty()) {
            std::cerr << "error: no .gn/.suite pairs in " << dir << "\n";
            return 1;
        }

        gnc::RouterConfig cfg;
        if (!config_path.empty()) cfg = gnc::load_router_config_file(config_path);
        gnc::GeneratorConfig gen;
        gen.p_correct = p_correct;
        gen.seed = g.seed;
        gen.kill_limits = g.limits();

        gnc::CalibrationResult result =
            gnc::calibrate_threshold(corpus, cfg, gen, g.batch_options());

        if (g.json()) {
            std::cout << gnc::calibration_result_json(result) << "\n";
        } else {
            size_t name_w = 4;
            for (const auto& row : result.rows) name_w = std::max(name_w, row.name.size());
            for (const auto& row : result.rows) {
                std::cout << row.name << std::string(name_w - row.name.size() + 2, ' ')
                          << "score " << format_value(row.score) << "  "
                          << (row.neural_succeeded ? "sampling-ok" : "needs-reference")
                          << "\n";
            }
            std::cout << "theta " << format_value(result.theta) << "  misclassified "
                      << result.misclassified << "/" << result.rows.size() << "\n";
        }

        if (!out_path.empty()) {
            cfg.theta_simple = result.theta;
            std::string text = gnc::serialize_router_config(cfg);
            write_file(out_path, text.data(), text.size());
        }
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

int cmd_cost(const std::string& preset, const std::string& config_path,
             const std::vector<std::string>& sets, const GlobalFlags& g) {
    try {
        if (!preset.empty()) {
            print_cost_report(gnc::cost_preset_report(preset), g.json());
            return 0;
        }
        gnc::KvMap kv;
        if (!config_path.empty()) kv = gnc::load_kv_file(config_path);
        for (const auto& s : sets) {
            size_t eq = s.find('=');
            if (eq == std::string::npos) {
                std::cerr << "error: --set expects key=value, got `" << s << "`\n";
                return 1;
            }
            kv[s.substr(0, eq)] = s.substr(eq + 1);
        }
        gnc::CostParams params = gnc::parse_cost_params(kv);
        print_cost_report(gnc::cost_report(params), g.json());
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"gnc: compiler, batch VM and verification toolkit for the gn language"};
    app.require_subcommand(1);
    // Lets the global flags below appear after the subcommand name too.
    app.fallthrough();

    GlobalFlags g;
    app.add_option("--seed", g.seed, "Base RNG seed")->envname("GNC_SEED");
    app.add_option("--fuel", g.fuel, "Instruction budget per execution");
    app.add_option("--warp", g.warp, "Warp width for lockstep batches");
    app.add_option("--workers", g.workers, "Worker threads for batches")
        ->envname("GNC_WORKERS");
    app.add_option("--format", g.format, "Output format")
        ->check(CLI::IsMember({"table", "json"}));

    auto* compile = app.add_subcommand("compile", "Compile a .gn source file to bytecode");
    std::string compile_source;
    std::string compile_out;
    std::string compile_emit;
    bool compile_no_opt = false;
    std::vector<std::string> compile_passes;
    int compile_depth = gnc::kDefaultParseDepth;
    compile->add_option("source", compile_source, "Source file")->required();
    compile->add_option("-o,--output", compile_out, "Output path (default: source stem + .gnbc)");
    compile->add_option("--emit", compile_emit, "Print an intermediate instead of writing bytecode")
        ->check(CLI::IsMember({"tokens", "ast", "ir"}));
    compile->add_flag("--no-opt", compile_no_opt, "Disable the optimizer");
    compile->add_option("--passes", compile_passes,
                        "Comma-separated pass list: fold, dead-store, unreachable")
        ->delimiter(',');
    compile->add_option("--parse-depth", compile_depth, "Nesting depth bound");

    auto* run = app.add_subcommand("run", "Execute a .gnbc program");
    std::string run_prog;
    std::vector<int64_t> run_args;
    run->add_option("program", run_prog, "Bytecode file")->required();
    run->add_option("args", run_args, "Integer arguments for the entry function");

    auto* batch = app.add_subcommand("batch", "Run every .gnbc in a directory against a suite");
    std::string batch_dir;
    std::string batch_suite;
    batch->add_option("dir", batch_dir, "Directory of .gnbc files")->required();
    batch->add_option("--suite", batch_suite, "Test suite file")->required();

    auto* verify = app.add_subcommand("verify", "Sample k candidates and verify against a suite");
    std::string verify_source;
    std::string verify_suite;
    size_t verify_k = 100;
    double verify_p = 0.5;
    uint64_t verify_trials = 0;
    double verify_alpha = gnc::kDefaultRewardAlpha;
    bool verify_kill = false;
    verify->add_option("source", verify_source, "Source file")->required();
    verify->add_option("--suite", verify_suite, "Suite file (default: derived from the reference)");
    verify->add_option("--k", verify_k, "Candidate count");
    verify->add_option("--p-correct", verify_p, "Per-candidate correctness probability")
        ->check(CLI::Range(0.0, 1.0));
    verify->add_option("--trials", verify_trials,
                       "Monte Carlo trial count; prints empirical vs theoretical success");
    verify->add_option("--alpha", verify_alpha, "Reward efficiency weight");
    verify->add_flag("--kill-verified", verify_kill,
                     "Re-draw mutants until the suite rejects them (single-run mode)");

    auto* route = app.add_subcommand("route", "Dispatch between sampling and reference paths");
    std::string route_source;
    std::string route_suite;
    std::string route_config;
    std::string route_out;
    double route_p = 0.5;
    std::optional<double> route_theta;
    std::optional<size_t> route_k_fast;
    bool route_no_kill = false;
    route->add_option("source", route_source, "Source file")->required();
    route->add_option("--suite", route_suite, "Suite file (default: derived from the reference)");
    route->add_option("--config", route_config, "Router config file");
    route->add_option("-o,--output", route_out, "Write the routed bytecode here");
    route->add_option("--p-correct", route_p, "Per-candidate correctness probability")
        ->check(CLI::Range(0.0, 1.0));
    route->add_option("--theta", route_theta, "Complexity threshold override");
    route->add_option("--k-fast", route_k_fast, "Candidate count for the sampling path");
    route->add_flag("--no-kill-verified", route_no_kill,
                    "Allow mutants the suite cannot distinguish from the reference");

    auto* calibrate = app.add_subcommand(
        "calibrate", "Fit the routing threshold on a corpus of .gn/.suite pairs");
    std::string cal_dir;
    std::string cal_config;
    std::string cal_out;
    double cal_p = 0.5;
    calibrate->add_option("dir", cal_dir, "Corpus directory")->required();
    calibrate->add_option("--config", cal_config, "Router config file to start from");
    calibrate->add_option("-o,--output", cal_out, "Write the fitted config here");
    calibrate->add_option("--p-correct", cal_p, "Per-candidate correctness probability")
        ->check(CLI::Range(0.0, 1.0));

    auto* cost = app.add_subcommand("cost", "Evaluate the analytic cost model");
    std::string cost_preset;
    std::string cost_config;
    std::vector<std::string> cost_sets;
    cost->add_option("--preset", cost_preset, "Named parameter preset")
        ->check(CLI::IsMember(gnc::cost_preset_names()));
    cost->add_option("--config", cost_config, "key=value parameter file");
    cost->add_option("--set", cost_sets, "Override a single parameter as key=value");

    CLI11_PARSE(app, argc, argv);

    if (compile->parsed()) {
        return cmd_compile(compile_source, compile_out, compile_emit, compile_no_opt,
                           compile_passes, compile_depth);
    }
    if (run->parsed()) return cmd_run(run_prog, run_args, g);
    if (batch->parsed()) return cmd_batch(batch_dir, batch_suite, g);
    if (verify->parsed()) {
        return cmd_verify(verify_source, verify_suite, verify_k, verify_p, verify_trials,
                          verify_alpha, verify_kill, g);
    }
    if (route->parsed()) {
        return cmd_route(route_source, route_suite, route_config, route_out, route_p,
                         route_theta, route_k_fast, route_no_kill, g);
    }
    if (calibrate->parsed()) return cmd_calibrate(cal_dir, cal_config, cal_out, cal_p, g);
    if (cost->parsed()) return cmd_cost(cost_preset, cost_config, cost_sets, g);
    return 0;
}
