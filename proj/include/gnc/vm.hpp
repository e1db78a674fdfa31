// gnc: a stack-bytecode compiler, batch VM, and verification toolkit
// Copyright 2026 The gnc Authors.
// Licensed under the Apache License, Version 2.0.
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "gnc/bytecode.hpp"

namespace gnc {

enum class TrapKind {
    DivideByZero,
    StackOverflow,
    CallDepthExceeded,
    InvalidOperand,
    StackUnderflow,
};

const char* trap_kind_name(TrapKind kind);

enum class ExecStatus { Ok, Trap, Timeout };

const char* exec_status_name(ExecStatus status);

struct ExecResult {
    ExecStatus status = ExecStatus::Ok;
    int64_t value = 0;                  // meaningful iff Ok
    uint64_t steps = 0;                 // retired instructions
    std::optional<TrapKind> trap;       // set iff status == Trap

    bool operator==(const ExecResult&) const = default;
};

struct VmLimits {
    uint64_t fuel = 100000;        // retired-instruction budget
    uint32_t call_depth = 64;      // maximum live frames
    uint32_t stack_capacity = 256; // operand stack values per frame
};

// One program execution, advanced an instruction at a time so a batch
// scheduler can interleave many in lockstep. Guest faults surface as results;
// nothing a program does can throw out of step().
class VmState {
public:
    VmState(const BytecodeProgram& program, std::span<const int64_t> args,
            const VmLimits& limits = {});

    bool finished() const { return result_.has_value(); }
    const ExecResult& result() const { return *result_; }

    // Opcode the next step() will execute; 0xFF when the pc is out of bounds
    // (the step will then trap). Only meaningful while not finished.
    uint8_t current_opcode_byte() const;

    // Retires exactly one instruction, or finishes with a trap or timeout.
    // Must not be called after finished().
    void step();

private:
    struct Frame {
        std::vector<int64_t> locals;
        std::vector<int64_t> stack;
        uint32_t pc = 0;
        uint32_t return_pc = 0;
    };

    const BytecodeProgram* program_;
    VmLimits limits_;
    std::vector<Frame> frames_;
    uint64_t steps_ = 0;
    std::optional<ExecResult> result_;

    void finish_ok(int64_t value);
    void finish_trap(TrapKind kind);
    void finish_timeout();
    bool push(std::vector<int64_t>& stack, int64_t value);
    bool pop(std::vector<int64_t>& stack, int64_t& out);
};

// Runs a program to completion. Pure; never throws for guest faults.
ExecResult execute(const BytecodeProgram& program, std::span<const int64_t> args,
                   const VmLimits& limits = {});

}  // namespace gnc
