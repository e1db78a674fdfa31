// gnc: a stack-bytecode compiler, batch VM, and verification toolkit
// Copyright 2026 The gnc Authors.
// Licensed under the Apache License, Version 2.0.
#pragma once

#include <map>
#include <optional>

#include "gnc/batch.hpp"
#include "gnc/generator.hpp"

namespace gnc {

enum class VerdictKind { AllPassed, Failed, Trapped, TimedOut };

const char* verdict_kind_name(VerdictKind kind);

struct Verdict {
    VerdictKind kind = VerdictKind::AllPassed;
    uint64_t total_steps = 0;  // AllPassed: summed over the whole suite
    size_t test_index = 0;     // first offending test otherwise
    int64_t got = 0;           // Failed
    int64_t expected = 0;      // Failed
    std::optional<TrapKind> trap;  // Trapped

    bool operator==(const Verdict&) const = default;
};

struct VerificationReport {
    std::vector<Verdict> verdicts;      // one per candidate
    std::vector<size_t> verified;       // indices whose candidates passed everything
    std::optional<size_t> best;         // fewest total steps, ties to lowest index
    std::vector<double> rewards;
    double divergence = 0.0;
    uint64_t total_lockstep_cycles = 0;
};

// Candidate score: +10 for passing the whole suite, +1 for being structurally
// valid, minus alpha per retired step for passing candidates (a failing
// candidate has no meaningful runtime to penalize).
double reward(bool all_passed, uint64_t steps, bool valid, double alpha);

inline constexpr double kDefaultRewardAlpha = 0.01;

// Executes every candidate against every test (lockstep batch) and fills in
// verdicts, the verified set and the reward ranking.
VerificationReport verify(const CandidateBatch& batch, const TestSuite& suite,
                          const BatchOptions& options = {},
                          double alpha = kDefaultRewardAlpha);

struct FailureSummary {
    std::map<VerdictKind, size_t> by_category;
    std::map<TrapKind, size_t> by_trap;
    // Test index that most often stopped a candidate first; absent when
    // everything passed. Ties resolve to the lowest index.
    std::optional<size_t> modal_first_failure;
};

FailureSummary analyze_failures(const VerificationReport& report);

struct Alg2Options {
    size_t k = 100;
    GeneratorConfig gen;
    BatchOptions batch;
    double alpha = kDefaultRewardAlpha;
    CompileOptions compile;
};

struct Alg2Outcome {
    bool success = false;
    std::optional<size_t> best_index;
    BytecodeProgram best;  // meaningful iff success
    VerificationReport report;
    FailureSummary failures;
    double generation_ms = 0.0;
    double verification_ms = 0.0;
};

// The sample-then-verify loop: draw k candidates, verify them all, return the
// fastest fully passing one, or the failure analysis when none survives.
Alg2Outcome run_alg2(std::string_view source, const TestSuite& suite,
                     const Alg2Options& options);

Alg2Outcome run_alg2_from(const BytecodeProgram& reference, const TestSuite& suite,
                          const Alg2Options& options);

}  // namespace gnc
