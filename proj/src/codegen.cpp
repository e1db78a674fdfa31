// gnc: a stack-bytecode compiler, batch VM, and verification toolkit
// Copyright 2026 The gnc Authors.
// Licensed under the Apache License, Version 2.0.
#include "gnc/codegen.hpp"

#include <limits>
#include <map>

namespace gnc {

namespace {

// A terminating Jump whose target is the next block in layout order would
// jump to the following instruction; it is dropped instead.
bool jump_elided(const IrFunction& fn, size_t block, const IrInst& inst, size_t pos) {
    return inst.op == IrOpcode::Jump && pos == fn.blocks[block].insts.size() - 1 &&
           inst.index == block + 1;
}

}  // namespace

BytecodeProgram codegen(const IrProgram& program) {
    try {
        check_ir(program);
    } catch (const std::logic_error& e) {
        throw CodegenError(e.what());
    }

    BytecodeProgram out;
    std::map<int64_t, uint32_t> pool_index;

    auto intern = [&](int64_t value) {
        auto it = pool_index.find(value);
        if (it != pool_index.end()) return it->second;
        if (out.pool.size() > std::numeric_limits<uint32_t>::max())
            throw CodegenError("constant pool too large");
        uint32_t idx = static_cast<uint32_t>(out.pool.size());
        out.pool.push_back(value);
        pool_index.emplace(value, idx);
        return idx;
    };

    // First sweep: sizes only, to fix every block's absolute address.
    std::vector<std::vector<uint32_t>> block_addr(program.functions.size());
    uint32_t addr = 0;
    for (size_t f = 0; f < program.functions.size(); ++f) {
        const IrFunction& fn = program.functions[f];
        block_addr[f].resize(fn.blocks.size());
        for (size_t b = 0; b < fn.blocks.size(); ++b) {
            block_addr[f][b] = addr;
            for (size_t i = 0; i < fn.blocks[b].insts.size(); ++i) {
                if (!jump_elided(fn, b, fn.blocks[b].insts[i], i)) ++addr;
            }
        }
    }

    // Second sweep: emit with targets resolved.
    for (size_t f = 0; f < program.functions.size(); ++f) {
        const IrFunction& fn = program.functions[f];
        if (fn.slot_count > std::numeric_limits<uint16_t>::max())
            throw CodegenError(fn.name + ": slot count exceeds encodable range");

        FunctionEntry entry;
        entry.entry = block_addr[f][0];
        entry.arity = fn.arity;
        entry.slots = static_cast<uint16_t>(fn.slot_count);
        out.functions.push_back(entry);

        for (size_t b = 0; b < fn.blocks.size(); ++b) {
            for (size_t i = 0; i < fn.blocks[b].insts.size(); ++i) {
                const IrInst& inst = fn.blocks[b].insts[i];
                if (jump_elided(fn, b, inst, i)) continue;
                switch (inst.op) {
                case IrOpcode::PushConst:
                    out.code.push_back({Opcode::LoadConst, intern(inst.value)});
                    break;
                case IrOpcode::LoadSlot:
                    out.code.push_back({Opcode::LoadVar, inst.index});
                    break;
                case IrOpcode::StoreSlot:
                    out.code.push_back({Opcode::StoreVar, inst.index});
                    break;
                case IrOpcode::Add:
                    out.code.push_back({Opcode::Add, 0});
                    break;
                case IrOpcode::Sub:
                    out.code.push_back({Opcode::Sub, 0});
                    break;
                case IrOpcode::Mul:
                    out.code.push_back({Opcode::Mul, 0});
                    break;
                case IrOpcode::Div:
                    out.code.push_back({Opcode::Div, 0});
                    break;
                case IrOpcode::CmpLt:
                    out.code.push_back({Opcode::CompareLt, 0});
                    break;
                case IrOpcode::Jump:
                    out.code.push_back({Opcode::Jump, block_addr[f].at(inst.index)});
                    break;
                case IrOpcode::JumpIfFalse:
                    out.code.push_back({Opcode::JumpIfFalse, block_addr[f].at(inst.index)});
                    break;
                case IrOpcode::Call:
                    out.code.push_back({Opcode::Call, inst.index});
                    break;
                case IrOpcode::Return:
                    out.code.push_back({Opcode::Return, 0});
                    break;
                }
            }
        }
    }

    out.entry_function = program.entry_function;
    return out;
}

}  // namespace gnc
