// gnc: a stack-bytecode compiler, batch VM, and verification toolkit
// Copyright 2026 The gnc Authors.
// Licensed under the Apache License, Version 2.0.
#include <doctest.h>

#include <string>
#include <vector>

#include "gnc/compile.hpp"
#include "gnc/testsuite.hpp"
#include "gnc/verifier.hpp"
#include "gnc/vm.hpp"

using namespace gnc;

namespace {

CandidateBatch handmade_batch(std::vector<BytecodeProgram> candidates,
                              BytecodeProgram reference) {
    CandidateBatch batch;
    batch.source_id = "handmade";
    batch.reference = std::move(reference);
    batch.provenance.assign(candidates.size(), Provenance{true, {}});
    batch.candidates = std::move(candidates);
    return batch;
}

}  // namespace

TEST_CASE("suite text parses into cases") {
    TestSuite suite = parse_suite(
        "# doubling\n"
        "args: 2 => 4\n"
        "\n"
        "args: -3 => -6   # negatives too\n"
        "args: 0 1 2 => 3\n"
        "args: => 7\n");
    REQUIRE(suite.size() == 4);
    CHECK(suite[0] == TestCase{{2}, 4});
    CHECK(suite[1] == TestCase{{-3}, -6});
    CHECK(suite[2] == TestCase{{0, 1, 2}, 3});
    CHECK(suite[3] == TestCase{{}, 7});
}

TEST_CASE("suite parse errors carry the line number") {
    try {
        parse_suite("args: 1 => 2\nohno\n");
        FAIL("expected a parse error");
    } catch (const SuiteParseError& e) {
        CHECK(e.line() == 2);
        CHECK(std::string(e.what()) == "line 2: expected `args:` prefix");
    }
    CHECK_THROWS_AS(parse_suite("args: 1 2\n"), SuiteParseError);
    CHECK_THROWS_AS(parse_suite("args: 1 =>\n"), SuiteParseError);
    CHECK_THROWS_AS(parse_suite("args: 1 => 2 3\n"), SuiteParseError);
    CHECK_THROWS_AS(parse_suite("args: x => 2\n"), SuiteParseError);
    CHECK_THROWS_AS(parse_suite("args: 1 => 99999999999999999999\n"),
                    SuiteParseError);
}

TEST_CASE("suites round-trip through serialization") {
    TestSuite suite = {{{2}, 4}, {{-3}, -6}, {{}, 7}, {{1, 2, 3}, 6}};
    CHECK(parse_suite(serialize_suite(suite)) == suite);
    CHECK(serialize_suite({{{2}, 4}}) == "args: 2 => 4\n");
    CHECK(serialize_suite({{{}, 7}}) == "args: => 7\n");
}

TEST_CASE("reward scores passing candidates by runtime") {
    CHECK(reward(true, 20, true, 0.01) == doctest::Approx(10.8));
    CHECK(reward(true, 0, true, 0.01) == doctest::Approx(11.0));
    CHECK(reward(false, 500, true, 0.01) == doctest::Approx(1.0));
    CHECK(reward(false, 0, false, 0.01) == doctest::Approx(0.0));
    CHECK(reward(true, 100, true, 0.05) == doctest::Approx(6.0));
}

TEST_CASE("verdicts classify each candidate against the suite") {
    BytecodeProgram good = compile_reference(
        "fn main(n: int) -> int { return n * 2; }");
    BytecodeProgram wrong = compile_reference(
        "fn main(n: int) -> int { return n + 2; }");
    BytecodeProgram trapping = compile_reference(
        "fn main(n: int) -> int { let z = 0; return n / z; }");
    BytecodeProgram spinning = compile_reference(
        "fn main(n: int) -> int {"
        "  let i = 0; while (0 < 1) { i = i + 1; } return i;"
        "}");

    TestSuite suite = {{{1}, 2}, {{3}, 6}};
    BatchOptions options;
    options.limits.fuel = 1000;
    CandidateBatch batch =
        handmade_batch({good, wrong, trapping, spinning}, good);
    VerificationReport report = verify(batch, suite, options);

    REQUIRE(report.verdicts.size() == 4);
    CHECK(report.verdicts[0].kind == VerdictKind::AllPassed);
    CHECK(report.verdicts[0].total_steps > 0);

    CHECK(report.verdicts[1].kind == VerdictKind::Failed);
    CHECK(report.verdicts[1].test_index == 0);
    CHECK(report.verdicts[1].got == 3);
    CHECK(report.verdicts[1].expected == 2);

    CHECK(report.verdicts[2].kind == VerdictKind::Trapped);
    CHECK(report.verdicts[2].trap == TrapKind::DivideByZero);

    CHECK(report.verdicts[3].kind == VerdictKind::TimedOut);

    CHECK(report.verified == std::vector<size_t>{0});
    CHECK(report.best == 0);
    CHECK(report.rewards[0] > report.rewards[1]);
    CHECK(report.rewards[1] == doctest::Approx(1.0));
}

TEST_CASE("a failure on a later test records its index") {
    BytecodeProgram half_right = compile_reference(
        "fn main(n: int) -> int {"
        "  if (n < 3) { return n * 2; }"
        "  return 0;"
        "}");
    TestSuite suite = {{{1}, 2}, {{2}, 4}, {{5}, 10}};
    VerificationReport report =
        verify(handmade_batch({half_right}, half_right), suite);
    CHECK(report.verdicts[0].kind == VerdictKind::Failed);
    CHECK(report.verdicts[0].test_index == 2);
    CHECK(report.verdicts[0].got == 0);
    CHECK(report.verdicts[0].expected == 10);
}

TEST_CASE("best prefers fewer total steps and breaks ties low") {
    BytecodeProgram slow = compile_reference(
        "fn main(n: int) -> int {"
        "  let i = 0; let acc = 0;"
        "  while (i < 20) { acc = n * 2; i = i + 1; }"
        "  return acc;"
        "}");
    BytecodeProgram fast = compile_reference(
        "fn main(n: int) -> int { return n * 2; }");
    TestSuite suite = {{{4}, 8}};

    VerificationReport report =
        verify(handmade_batch({slow, fast, fast}, fast), suite);
    CHECK(report.verified == std::vector<size_t>{0, 1, 2});
    CHECK(report.best == 1);  // candidate 2 ties on steps, loses on index
    CHECK(report.rewards[1] == report.rewards[2]);
    CHECK(report.rewards[1] > report.rewards[0]);
}

TEST_CASE("failure analysis tallies categories traps and the modal test") {
    BytecodeProgram wrong_on_0 = compile_reference(
        "fn main(n: int) -> int { if (n == 0) { return 9; } return n * 2; }");
    BytecodeProgram traps_on_all = compile_reference(
        "fn main(n: int) -> int { let z = 0; return n / z; }");
    BytecodeProgram good = compile_reference(
        "fn main(n: int) -> int { return n * 2; }");

    TestSuite suite = {{{0}, 0}, {{2}, 4}};
    VerificationReport report = verify(
        handmade_batch({wrong_on_0, traps_on_all, wrong_on_0, good}, good), suite);
    FailureSummary summary = analyze_failures(report);

    CHECK(summary.by_category[VerdictKind::Failed] == 2);
    CHECK(summary.by_category[VerdictKind::Trapped] == 1);
    CHECK(summary.by_category[VerdictKind::AllPassed] == 1);
    CHECK(summary.by_trap[TrapKind::DivideByZero] == 1);
    REQUIRE(summary.modal_first_failure.has_value());
    CHECK(*summary.modal_first_failure == 0);
}

TEST_CASE("failure analysis of a clean report has no modal test") {
    BytecodeProgram good = compile_reference(
        "fn main(n: int) -> int { return n * 2; }");
    VerificationReport report =
        verify(handmade_batch({good}, good), {{{2}, 4}});
    FailureSummary summary = analyze_failures(report);
    CHECK_FALSE(summary.modal_first_failure.has_value());
    CHECK(summary.by_trap.empty());
}

TEST_CASE("sample then verify succeeds with a perfect generator") {
    Alg2Options options;
    options.k = 16;
    options.gen.p_correct = 1.0;
    options.gen.seed = 21;
    TestSuite suite = {{{2}, 4}, {{-1}, -2}};
    Alg2Outcome outcome =
        run_alg2("fn main(n: int) -> int { return n * 2; }", suite, options);
    CHECK(outcome.success);
    REQUIRE(outcome.best_index.has_value());
    std::vector<int64_t> probe = {6};
    CHECK(execute(outcome.best, probe).value == 12);
    CHECK(outcome.report.verified.size() == 16);
    CHECK(outcome.generation_ms >= 0.0);
    CHECK(outcome.verification_ms >= 0.0);
}

TEST_CASE("sample then verify reports bottom when every candidate is wrong") {
    TestSuite suite = {{{2}, 4}, {{5}, 10}};
    Alg2Options options;
    options.k = 12;
    options.gen.p_correct = 0.0;
    options.gen.seed = 22;
    options.gen.kill_suite = suite;
    Alg2Outcome outcome =
        run_alg2("fn main(n: int) -> int { return n * 2; }", suite, options);
    CHECK_FALSE(outcome.success);
    CHECK_FALSE(outcome.best_index.has_value());
    CHECK(outcome.report.verified.empty());
    size_t failures = 0;
    for (auto& [kind, count] : outcome.failures.by_category) {
        if (kind != VerdictKind::AllPassed) failures += count;
    }
    CHECK(failures == 12);
}

TEST_CASE("the success rate tracks the per-candidate probability") {
    TestSuite suite = {{{0}, 0}, {{3}, 6}, {{-4}, -8}};
    size_t successes = 0;
    const int trials = 60;
    for (int t = 0; t < trials; ++t) {
        Alg2Options options;
        options.k = 3;
        options.gen.p_correct = 0.5;
        options.gen.seed = 1000 + t;
        options.gen.kill_suite = suite;
        Alg2Outcome outcome =
            run_alg2("fn main(n: int) -> int { return n * 2; }", suite, options);
        if (outcome.success) ++successes;
    }
    // P(success) = 1 - 0.5^3 = 0.875; 60 trials put 4 sigma at about 0.17.
    double p_hat = double(successes) / trials;
    CHECK(p_hat > 0.875 - 0.175);
    CHECK(p_hat < 1.0 + 1e-9);
}

TEST_CASE("compile errors surface instead of becoming verdicts") {
    Alg2Options options;
    CHECK_THROWS_AS(run_alg2("fn main( -> int { return 1; }", {{{}, 1}}, options),
                    CompileError);
}
