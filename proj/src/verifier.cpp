// gnc: a stack-bytecode compiler, batch VM, and verification toolkit
// Copyright 2026 The gnc Authors.
// Licensed under the Apache License, Version 2.0.
#include "gnc/verifier.hpp"

#include <chrono>

namespace gnc {

namespace {

double ms_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

}  // namespace

const char* verdict_kind_name(VerdictKind kind) {
    switch (kind) {
    case VerdictKind::AllPassed: return "AllPassed";
    case VerdictKind::Failed: return "Failed";
    case VerdictKind::Trapped: return "Trapped";
    case VerdictKind::TimedOut: return "TimedOut";
    }
    return "?";
}

double reward(bool all_passed, uint64_t steps, bool valid, double alpha) {
    if (!valid) return 0.0;
    double score = 1.0;
    if (all_passed) score += 10.0 - alpha * static_cast<double>(steps);
    return score;
}

VerificationReport verify(const CandidateBatch& batch, const TestSuite& suite,
                          const BatchOptions& options, double alpha) {
    VerificationReport report;
    const size_t k = batch.candidates.size();
    report.verdicts.reserve(k);
    report.rewards.reserve(k);
    if (k == 0) return report;

    BatchResult executed = execute_batch(batch.candidates, suite, options);
    report.divergence = executed.divergence;
    report.total_lockstep_cycles = executed.total_lockstep_cycles;

    for (size_t i = 0; i < k; ++i) {
        Verdict verdict;
        uint64_t steps = 0;
        size_t t = 0;
        for (; t < suite.size(); ++t) {
            const ExecResult& r = executed.results[i][t];
            if (r.status == ExecStatus::Trap) {
                verdict = {VerdictKind::Trapped, 0, t, 0, 0, r.trap};
                break;
            }
            if (r.status == ExecStatus::Timeout) {
                verdict = {VerdictKind::TimedOut, 0, t, 0, 0, {}};
                break;
            }
            if (r.value != suite[t].expected) {
                verdict = {VerdictKind::Failed, 0, t, r.value, suite[t].expected, {}};
                break;
            }
            steps += r.steps;
        }
        if (t == suite.size()) verdict = {VerdictKind::AllPassed, steps, 0, 0, 0, {}};

        bool passed = verdict.kind == VerdictKind::AllPassed;
        if (passed) {
            report.verified.push_back(i);
            bool better = !report.best ||
                          verdict.total_steps < report.verdicts[*report.best].total_steps;
            if (better) report.best = i;
        }
        report.rewards.push_back(reward(passed, verdict.total_steps, true, alpha));
        report.verdicts.push_back(verdict);
    }
    return report;
}

FailureSummary analyze_failures(const VerificationReport& report) {
    FailureSummary summary;
    std::map<size_t, size_t> first_failures;
    for (const auto& verdict : report.verdicts) {
        summary.by_category[verdict.kind]++;
        if (verdict.kind == VerdictKind::AllPassed) continue;
        if (verdict.trap) summary.by_trap[*verdict.trap]++;
        first_failures[verdict.test_index]++;
    }
    size_t best_count = 0;
    for (const auto& [test, count] : first_failures) {
        if (count > best_count) {
            best_count = count;
            summary.modal_first_failure = test;
        }
    }
    return summary;
}

Alg2Outcome run_alg2_from(const BytecodeProgram& reference, const TestSuite& suite,
                          const Alg2Options& options) {
    Alg2Outcome outcome;

    auto start = std::chrono::steady_clock::now();
    CandidateBatch batch =
        sample_candidates_from(reference, "<reference>", options.k, options.gen);
    outcome.generation_ms = ms_since(start);

    start = std::chrono::steady_clock::now();
    outcome.report = verify(batch, suite, options.batch, options.alpha);
    outcome.verification_ms = ms_since(start);

    outcome.failures = analyze_failures(outcome.report);
    if (outcome.report.best) {
        outcome.success = true;
        outcome.best_index = outcome.report.best;
        outcome.best = batch.candidates[*outcome.report.best];
    }
    return outcome;
}

Alg2Outcome run_alg2(std::string_view source, const TestSuite& suite,
                     const Alg2Options& options) {
    return run_alg2_from(compile_reference(source, options.compile), suite, options);
}

}  // namespace gnc
