// gnc: a stack-bytecode compiler, batch VM, and verification toolkit
// Copyright 2026 The gnc Authors.
// Licensed under the Apache License, Version 2.0.
#include "gnc/bytecode.hpp"

#include <sstream>

namespace gnc {

bool opcode_has_operand(Opcode op) {
    switch (op) {
    case Opcode::LoadConst:
    case Opcode::LoadVar:
    case Opcode::StoreVar:
    case Opcode::Jump:
    case Opcode::JumpIfFalse:
    case Opcode::Call:
        return true;
    default:
        return false;
    }
}

const char* opcode_name(Opcode op) {
    switch (op) {
    case Opcode::LoadConst: return "LOAD_CONST";
    case Opcode::LoadVar: return "LOAD_VAR";
    case Opcode::StoreVar: return "STORE_VAR";
    case Opcode::Add: return "BINARY_ADD";
    case Opcode::Sub: return "BINARY_SUB";
    case Opcode::Mul: return "BINARY_MUL";
    case Opcode::Div: return "BINARY_DIV";
    case Opcode::CompareLt: return "COMPARE_LT";
    case Opcode::Jump: return "JUMP";
    case Opcode::JumpIfFalse: return "JUMP_IF_FALSE";
    case Opcode::Call: return "CALL";
    case Opcode::Return: return "RETURN";
    }
    return "?";
}

bool opcode_is_valid(uint8_t byte) {
    switch (static_cast<Opcode>(byte)) {
    case Opcode::LoadConst:
    case Opcode::LoadVar:
    case Opcode::StoreVar:
    case Opcode::Add:
    case Opcode::Sub:
    case Opcode::Mul:
    case Opcode::Div:
    case Opcode::CompareLt:
    case Opcode::Jump:
    case Opcode::JumpIfFalse:
    case Opcode::Call:
    case Opcode::Return:
        return true;
    default:
        return false;
    }
}

std::string disassemble(const BytecodeProgram& p) {
    std::ostringstream out;
    out << "pool (" << p.pool.size() << "):\n";
    for (size_t i = 0; i < p.pool.size(); ++i)
        out << "  #" << i << " = " << p.pool[i] << "\n";
    out << "functions (" << p.functions.size() << "), entry fn " << p.entry_function
        << ":\n";
    for (size_t i = 0; i < p.functions.size(); ++i) {
        const auto& f = p.functions[i];
        out << "  fn " << i << ": entry " << f.entry << ", arity " << f.arity
            << ", slots " << f.slots << "\n";
    }
    out << "code (" << p.code.size() << "):\n";
    for (size_t i = 0; i < p.code.size(); ++i) {
        const auto& inst = p.code[i];
        out << "  " << i << ": " << opcode_name(inst.op);
        if (opcode_has_operand(inst.op)) out << " " << inst.operand;
        out << "\n";
    }
    return out.str();
}

}  // namespace gnc
