// gnc: a stack-bytecode compiler, batch VM, and verification toolkit
// Copyright 2026 The gnc Authors.
// Licensed under the Apache License, Version 2.0.
#include <doctest.h>

#include <limits>
#include <vector>

#include "gnc/compile.hpp"
#include "gnc/vm.hpp"
#include "support/oracle.hpp"
#include "support/progen.hpp"

using namespace gnc;
using namespace gnc::testsupport;

namespace {

ExecResult run_src(const char* src, std::vector<int64_t> args = {},
                   VmLimits limits = {}) {
    return execute(compile_reference(src), args, limits);
}

// Single function, no pool, configurable body.
BytecodeProgram raw(std::vector<Instruction> code, uint16_t slots = 1,
                    uint16_t arity = 0, std::vector<int64_t> pool = {}) {
    BytecodeProgram p;
    p.pool = std::move(pool);
    p.functions.push_back({0, arity, slots});
    p.code = std::move(code);
    return p;
}

}  // namespace

TEST_CASE("arithmetic evaluates with 64-bit wrapping") {
    CHECK(run_src("fn main() -> int { return 2 + 3 * 4; }").value == 14);
    CHECK(run_src("fn main() -> int { let a = 9223372036854775807; return a + 1; }")
              .value == std::numeric_limits<int64_t>::min());
    CHECK(run_src("fn main() -> int { let a = 0 - 9223372036854775807 - 1;"
                  " return a - 1; }")
              .value == std::numeric_limits<int64_t>::max());
    CHECK(run_src("fn main() -> int { let a = 4611686018427387904; return a * 2; }")
              .value == std::numeric_limits<int64_t>::min());
    CHECK(run_src("fn main() -> int { let a = 0 - 9223372036854775807 - 1;"
                  " let b = 0 - 1; return a / b; }")
              .value == std::numeric_limits<int64_t>::min());
}

TEST_CASE("division truncates toward zero") {
    CHECK(run_src("fn main() -> int { let a = 0 - 7; return a / 2; }").value == -3);
    CHECK(run_src("fn main() -> int { let b = 0 - 2; return 7 / b; }").value == -3);
    CHECK(run_src("fn main() -> int { return 7 / 2; }").value == 3);
}

TEST_CASE("comparisons yield 0 or 1 through the lt rewrite") {
    CHECK(run_src("fn main() -> int { let r = 0;"
                  " if (3 >= 3) { r = r + 1; }"
                  " if (3 != 3) { r = r + 10; }"
                  " if (2 == 2) { r = r + 100; }"
                  " if (2 <= 1) { r = r + 1000; }"
                  " return r; }")
              .value == 101);
}

TEST_CASE("logic operators evaluate both operands") {
    // A div trap on the right side of && fires even when the left is false.
    ExecResult r = run_src(
        "fn main() -> int {"
        "  let z = 0;"
        "  if (1 < 0 && 1 / z < 1) { return 1; }"
        "  return 0;"
        "}");
    CHECK(r.status == ExecStatus::Trap);
    CHECK(r.trap == TrapKind::DivideByZero);
}

TEST_CASE("dividing by zero traps") {
    ExecResult r = run_src("fn main() -> int { let z = 0; return 5 / z; }");
    CHECK(r.status == ExecStatus::Trap);
    CHECK(r.trap == TrapKind::DivideByZero);
    CHECK(std::string(trap_kind_name(*r.trap)) == "DivideByZero");
}

TEST_CASE("the operand stack capacity is enforced per frame") {
    VmLimits tight;
    tight.stack_capacity = 4;
    ExecResult r = execute(raw({{Opcode::LoadConst, 0},
                                {Opcode::LoadConst, 0},
                                {Opcode::LoadConst, 0},
                                {Opcode::LoadConst, 0},
                                {Opcode::LoadConst, 0},
                                {Opcode::Return, 0}},
                               1, 0, {7}),
                           {}, tight);
    CHECK(r.status == ExecStatus::Trap);
    CHECK(r.trap == TrapKind::StackOverflow);
    CHECK(r.steps == 4);  // the fifth push never retires
}

TEST_CASE("runaway recursion exhausts the call depth") {
    ExecResult r = run_src(
        "fn f(n: int) -> int { return f(n + 1); }"
        "fn main() -> int { return f(0); }");
    CHECK(r.status == ExecStatus::Trap);
    CHECK(r.trap == TrapKind::CallDepthExceeded);

    VmLimits shallow;
    shallow.call_depth = 3;
    ExecResult s = run_src(
        "fn g() -> int { return 1; }"
        "fn f() -> int { return g(); }"
        "fn main() -> int { return f(); }",
        {}, shallow);
    CHECK(s.status == ExecStatus::Ok);  // exactly three live frames fit
}

TEST_CASE("operand range violations trap instead of reading wild memory") {
    ExecResult load = execute(raw({{Opcode::LoadVar, 5}, {Opcode::Return, 0}}), {});
    CHECK(load.trap == TrapKind::InvalidOperand);

    ExecResult store = execute(raw({{Opcode::LoadConst, 0},
                                    {Opcode::StoreVar, 9},
                                    {Opcode::Return, 0}},
                                   1, 0, {1}),
                               {});
    CHECK(store.trap == TrapKind::InvalidOperand);

    ExecResult constant = execute(raw({{Opcode::LoadConst, 3}, {Opcode::Return, 0}}), {});
    CHECK(constant.trap == TrapKind::InvalidOperand);

    ExecResult jump = execute(raw({{Opcode::Jump, 99}, {Opcode::Return, 0}}), {});
    CHECK(jump.trap == TrapKind::InvalidOperand);

    // Falling off the end of code is the same class of fault.
    ExecResult off = execute(raw({{Opcode::LoadConst, 0}}, 1, 0, {1}), {});
    CHECK(off.trap == TrapKind::InvalidOperand);
}

TEST_CASE("underflow traps cover every popping opcode") {
    CHECK(execute(raw({{Opcode::Add, 0}, {Opcode::Return, 0}}), {}).trap ==
          TrapKind::StackUnderflow);
    CHECK(execute(raw({{Opcode::Return, 0}}), {}).trap == TrapKind::StackUnderflow);
    CHECK(execute(raw({{Opcode::JumpIfFalse, 0}, {Opcode::Return, 0}}), {}).trap ==
          TrapKind::StackUnderflow);
    // CALL needs the callee's arguments already on the stack.
    BytecodeProgram p;
    p.functions.push_back({0, 0, 1});     // main
    p.functions.push_back({2, 2, 2});     // two-arg callee
    p.code = {{Opcode::Call, 1}, {Opcode::Return, 0}, {Opcode::Return, 0}};
    CHECK(execute(p, {}).trap == TrapKind::StackUnderflow);
}

TEST_CASE("the argument count must match the entry arity") {
    BytecodeProgram p = compile_reference(
        "fn main(a: int, b: int) -> int { return a + b; }");
    CHECK(execute(p, {std::vector<int64_t>{1, 2}}).value == 3);
    CHECK(execute(p, {std::vector<int64_t>{1}}).trap == TrapKind::InvalidOperand);
    CHECK(execute(p, {std::vector<int64_t>{1, 2, 3}}).trap == TrapKind::InvalidOperand);
    ExecResult r = execute(p, {std::vector<int64_t>{1}});
    CHECK(r.steps == 0);  // rejected before anything ran
}

TEST_CASE("locals start at zero and arguments fill the first slots") {
    std::vector<int64_t> args = {5};
    ExecResult r = execute(raw({{Opcode::LoadVar, 1}, {Opcode::Return, 0}}, 2, 1), args);
    CHECK(r.status == ExecStatus::Ok);
    CHECK(r.value == 0);  // slot 1 was never written

    ExecResult a = execute(raw({{Opcode::LoadVar, 0}, {Opcode::Return, 0}}, 2, 1), args);
    CHECK(a.value == 5);
}

TEST_CASE("call arguments arrive in declaration order") {
    CHECK(run_src("fn f(a: int, b: int) -> int { return a - b; }"
                  "fn main() -> int { return f(10, 20); }")
              .value == -10);
    CHECK(run_src("fn f(a: int, b: int, c: int) -> int { return a * 100 + b * 10 + c; }"
                  "fn main() -> int { return f(1, 2, 3); }")
              .value == 123);
}

TEST_CASE("a trapping instruction does not count as retired") {
    ExecResult r = execute(raw({{Opcode::LoadConst, 0},
                                {Opcode::LoadConst, 1},
                                {Opcode::Div, 0},
                                {Opcode::Return, 0}},
                               1, 0, {1, 0}),
                           {});
    CHECK(r.status == ExecStatus::Trap);
    CHECK(r.trap == TrapKind::DivideByZero);
    CHECK(r.steps == 2);
}

TEST_CASE("fuel exhaustion reports a timeout at exactly the budget") {
    BytecodeProgram spin = raw({{Opcode::Jump, 0}, {Opcode::Return, 0}});
    VmLimits limits;
    limits.fuel = 500;
    ExecResult r = execute(spin, {}, limits);
    CHECK(r.status == ExecStatus::Timeout);
    CHECK(r.steps == 500);
}

TEST_CASE("a return that retires as the final fuel unit still succeeds") {
    BytecodeProgram p = raw({{Opcode::LoadConst, 0}, {Opcode::Return, 0}}, 1, 0, {3});
    VmLimits exact;
    exact.fuel = 2;
    ExecResult r = execute(p, {}, exact);
    CHECK(r.status == ExecStatus::Ok);
    CHECK(r.value == 3);
    CHECK(r.steps == 2);

    VmLimits short_one;
    short_one.fuel = 1;
    ExecResult t = execute(p, {}, short_one);
    CHECK(t.status == ExecStatus::Timeout);
    CHECK(t.steps == 1);
}

TEST_CASE("zero fuel times out before the first instruction") {
    VmLimits none;
    none.fuel = 0;
    ExecResult r = execute(raw({{Opcode::Return, 0}}), {}, none);
    CHECK(r.status == ExecStatus::Timeout);
    CHECK(r.steps == 0);
}

TEST_CASE("step-at-a-time execution matches run-to-completion") {
    BytecodeProgram p = compile_reference(
        "fn main() -> int { let i = 0; while (i < 3) { i = i + 1; } return i; }");
    VmState vm(p, {});
    std::vector<uint8_t> trace;
    while (!vm.finished()) {
        trace.push_back(vm.current_opcode_byte());
        vm.step();
    }
    CHECK(vm.result() == execute(p, {}));
    CHECK(vm.result().steps == trace.size());
    CHECK(trace.front() == 0x01);  // LOAD_CONST
    CHECK(trace.back() == 0x41);   // RETURN
}

TEST_CASE("current_opcode_byte reports 0xFF past the end of code") {
    BytecodeProgram p = raw({{Opcode::Jump, 1}, {Opcode::LoadConst, 0}}, 1, 0, {1});
    // After executing both instructions the pc rests past the end.
    VmState vm(p, {});
    vm.step();
    vm.step();
    REQUIRE_FALSE(vm.finished());
    CHECK(vm.current_opcode_byte() == 0xFF);
    vm.step();
    CHECK(vm.finished());
    CHECK(vm.result().trap == TrapKind::InvalidOperand);
}

TEST_CASE("interpreter semantics match an independent tree evaluator") {
    size_t ok = 0, traps = 0, timeouts = 0;
    for (uint64_t seed = 0; seed < 60; ++seed) {
        Rng rng(seed, 401);
        ProgenOptions opts;
        opts.allow_unbounded = (seed % 4 == 0);
        GeneratedProgram gp = generate_program(rng, opts);
        TypedAst typed = typecheck(parse(gp.source));
        BytecodeProgram bc = compile_reference(gp.source);

        Rng args_rng(seed, 402);
        for (int trial = 0; trial < 3; ++trial) {
            std::vector<int64_t> args;
            for (uint16_t i = 0; i < gp.main_arity; ++i)
                args.push_back(args_rng.next_in_range(-10, 10));

            VmLimits limits;
            limits.fuel = 1'000'000;
            ExecResult vm = execute(bc, args, limits);
            OracleOptions oracle_opts;
            oracle_opts.node_budget = 2'000'000;
            ExecResult oracle = oracle_execute(typed, args, oracle_opts);

            CHECK(same_outcome(vm, oracle));
            if (vm.status == ExecStatus::Ok) ++ok;
            if (vm.status == ExecStatus::Trap) ++traps;
            if (vm.status == ExecStatus::Timeout) ++timeouts;
        }
    }
    // The corpus must actually exercise all three outcome classes.
    CHECK(ok > 0);
    CHECK(traps > 0);
    CHECK(timeouts > 0);
}
