// gnc: a stack-bytecode compiler, batch VM, and verification toolkit
// Copyright 2026 The gnc Authors.
// Licensed under the Apache License, Version 2.0.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gnc {

// Stack-model IR, one step above bytecode: same operations, but branches
// target basic blocks by index instead of absolute instruction addresses.
enum class IrOpcode {
    PushConst,    // value
    LoadSlot,     // index = slot
    StoreSlot,    // index = slot
    Add,
    Sub,
    Mul,
    Div,
    CmpLt,
    Jump,         // index = block
    JumpIfFalse,  // index = block; falls through when the popped value is nonzero
    Call,         // index = function
    Return,
};

const char* ir_opcode_name(IrOpcode op);

struct IrInst {
    IrOpcode op;
    int64_t value = 0;   // PushConst only
    uint32_t index = 0;  // slot, block or function index

    bool operator==(const IrInst&) const = default;
};

// A block is a straight-line run of instructions whose last instruction is
// Jump or Return. JumpIfFalse may appear anywhere before the terminator as a
// conditional side exit.
struct IrBlock {
    std::vector<IrInst> insts;

    bool operator==(const IrBlock&) const = default;
};

struct IrFunction {
    std::string name;
    uint16_t arity = 0;
    uint32_t slot_count = 0;  // locals plus lowering scratch
    std::vector<IrBlock> blocks;  // entry is block 0

    bool operator==(const IrFunction&) const = default;
};

struct IrProgram {
    std::vector<IrFunction> functions;
    uint16_t entry_function = 0;

    bool operator==(const IrProgram&) const = default;
};

// Internal consistency check: nonempty terminated blocks, branch targets in
// range, slot/function indices in range. Throws std::logic_error on
// violation; compiler bugs, not user errors.
void check_ir(const IrProgram& program);

std::string dump(const IrProgram& program);

}  // namespace gnc
