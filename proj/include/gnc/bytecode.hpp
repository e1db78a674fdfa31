// gnc: a stack-bytecode compiler, batch VM, and verification toolkit
// Copyright 2026 The gnc Authors.
// Licensed under the Apache License, Version 2.0.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gnc {

// The 12-opcode instruction set. Byte values are part of the wire format and
// must never change.
enum class Opcode : uint8_t {
    LoadConst = 0x01,
    LoadVar = 0x02,
    StoreVar = 0x03,
    Add = 0x10,
    Sub = 0x11,
    Mul = 0x12,
    Div = 0x13,
    CompareLt = 0x20,
    Jump = 0x30,
    JumpIfFalse = 0x31,
    Call = 0x40,
    Return = 0x41,
};

// True for the six opcodes that carry a 32-bit operand.
bool opcode_has_operand(Opcode op);

// "LOAD_CONST", "RETURN", ... as written in the format docs.
const char* opcode_name(Opcode op);

// Returns false for byte values outside the instruction set.
bool opcode_is_valid(uint8_t byte);

struct Instruction {
    Opcode op;
    uint32_t operand = 0;  // meaningful iff opcode_has_operand(op)

    bool operator==(const Instruction& other) const {
        if (op != other.op) return false;
        return !opcode_has_operand(op) || operand == other.operand;
    }
};

struct FunctionEntry {
    uint32_t entry = 0;  // instruction index into code
    uint16_t arity = 0;
    uint16_t slots = 0;  // locals including parameters

    bool operator==(const FunctionEntry&) const = default;
};

struct BytecodeProgram {
    std::vector<int64_t> pool;            // constant pool
    std::vector<FunctionEntry> functions;
    uint32_t entry_function = 0;          // index of main
    std::vector<Instruction> code;        // flat across all functions

    bool operator==(const BytecodeProgram&) const = default;
};

// Human-readable listing, one instruction per line, for --emit and tests.
std::string disassemble(const BytecodeProgram& p);

}  // namespace gnc
