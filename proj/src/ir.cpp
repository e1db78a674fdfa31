// gnc: a stack-bytecode compiler, batch VM, and verification toolkit
// Copyright 2026 The gnc Authors.
// Licensed under the Apache License, Version 2.0.
#include "gnc/ir.hpp"

#include <sstream>
#include <stdexcept>

namespace gnc {

const char* ir_opcode_name(IrOpcode op) {
    switch (op) {
    case IrOpcode::PushConst: return "push";
    case IrOpcode::LoadSlot: return "load";
    case IrOpcode::StoreSlot: return "store";
    case IrOpcode::Add: return "add";
    case IrOpcode::Sub: return "sub";
    case IrOpcode::Mul: return "mul";
    case IrOpcode::Div: return "div";
    case IrOpcode::CmpLt: return "lt";
    case IrOpcode::Jump: return "jump";
    case IrOpcode::JumpIfFalse: return "jump_if_false";
    case IrOpcode::Call: return "call";
    case IrOpcode::Return: return "return";
    }
    return "?";
}

void check_ir(const IrProgram& program) {
    auto bug = [](const std::string& what) { throw std::logic_error("IR check: " + what); };

    if (program.functions.empty()) bug("no functions");
    if (program.entry_function >= program.functions.size()) bug("entry function out of range");

    for (const auto& fn : program.functions) {
        if (fn.blocks.empty()) bug(fn.name + ": no blocks");
        if (fn.arity > fn.slot_count) bug(fn.name + ": arity exceeds slot count");
        for (const auto& block : fn.blocks) {
            if (block.insts.empty()) bug(fn.name + ": empty block");
            const IrInst& last = block.insts.back();
            if (last.op != IrOpcode::Jump && last.op != IrOpcode::Return)
                bug(fn.name + ": block not terminated");
            for (const auto& inst : block.insts) {
                switch (inst.op) {
                case IrOpcode::LoadSlot:
                case IrOpcode::StoreSlot:
                    if (inst.index >= fn.slot_count) bug(fn.name + ": slot out of range");
                    break;
                case IrOpcode::Jump:
                case IrOpcode::JumpIfFalse:
                    if (inst.index >= fn.blocks.size()) bug(fn.name + ": branch target out of range");
                    break;
                case IrOpcode::Call:
                    if (inst.index >= program.functions.size())
                        bug(fn.name + ": call target out of range");
                    break;
                default:
                    break;
                }
            }
        }
    }
}

std::string dump(const IrProgram& program) {
    std::ostringstream out;
    for (const auto& fn : program.functions) {
        out << "fn " << fn.name << " arity=" << fn.arity << " slots=" << fn.slot_count
            << ":\n";
        for (size_t b = 0; b < fn.blocks.size(); ++b) {
            out << "  b" << b << ":\n";
            for (const auto& inst : fn.blocks[b].insts) {
                out << "    " << ir_opcode_name(inst.op);
                switch (inst.op) {
                case IrOpcode::PushConst:
                    out << " " << inst.value;
                    break;
                case IrOpcode::LoadSlot:
                case IrOpcode::StoreSlot:
                    out << " s" << inst.index;
                    break;
                case IrOpcode::Jump:
                case IrOpcode::JumpIfFalse:
                    out << " b" << inst.index;
                    break;
                case IrOpcode::Call:
                    out << " f" << inst.index;
                    break;
                default:
                    break;
                }
                out << "\n";
            }
        }
    }
    return out.str();
}

}  // namespace gnc
