// gnc: a stack-bytecode compiler, batch VM, and verification toolkit
// Copyright 2026 The gnc Authors.
// Licensed under the Apache License, Version 2.0.
#include "gnc/optimize.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>

#include "gnc/common.hpp"

namespace gnc {

namespace {

bool is_arith(IrOpcode op) {
    return op == IrOpcode::Add || op == IrOpcode::Sub || op == IrOpcode::Mul ||
           op == IrOpcode::CmpLt || op == IrOpcode::Div;
}

std::optional<int64_t> eval_const(IrOpcode op, int64_t a, int64_t b) {
    switch (op) {
    case IrOpcode::Add: return wrap_add(a, b);
    case IrOpcode::Sub: return wrap_sub(a, b);
    case IrOpcode::Mul: return wrap_mul(a, b);
    case IrOpcode::CmpLt: return a < b ? 1 : 0;
    case IrOpcode::Div:
        // Folding a division by zero would erase the runtime trap.
        if (b == 0) return std::nullopt;
        return wrap_div(a, b);
    default: return std::nullopt;
    }
}

bool fold_block(IrBlock& block) {
    bool changed = false;
    auto& insts = block.insts;

    for (bool dirty = true; dirty;) {
        dirty = false;
        for (size_t i = 0; i < insts.size(); ++i) {
            if (insts[i].op != IrOpcode::PushConst) continue;

            if (i + 2 < insts.size() && insts[i + 1].op == IrOpcode::PushConst &&
                is_arith(insts[i + 2].op)) {
                auto folded = eval_const(insts[i + 2].op, insts[i].value, insts[i + 1].value);
                if (folded) {
                    insts[i] = {IrOpcode::PushConst, *folded, 0};
                    insts.erase(insts.begin() + i + 1, insts.begin() + i + 3);
                    dirty = changed = true;
                    break;
                }
            }

            if (i + 1 < insts.size() && insts[i + 1].op == IrOpcode::JumpIfFalse) {
                if (insts[i].value == 0) {
                    // Always taken: becomes the block terminator.
                    insts[i] = {IrOpcode::Jump, 0, insts[i + 1].index};
                    insts.erase(insts.begin() + i + 1, insts.end());
                } else {
                    // Never taken: both instructions evaporate.
                    insts.erase(insts.begin() + i, insts.begin() + i + 2);
                }
                dirty = changed = true;
                break;
            }
        }
    }
    return changed;
}

bool pass_constant_fold(IrProgram& program) {
    bool changed = false;
    for (auto& fn : program.functions)
        for (auto& block : fn.blocks)
            if (fold_block(block)) changed = true;
    return changed;
}

// Net stack effect bookkeeping for the backward slice in dead-store
// elimination. Only side-effect-free, trap-free opcodes may be deleted.
bool slice_safe(IrOpcode op) {
    switch (op) {
    case IrOpcode::PushConst:
    case IrOpcode::LoadSlot:
    case IrOpcode::Add:
    case IrOpcode::Sub:
    case IrOpcode::Mul:
    case IrOpcode::CmpLt:
        return true;
    default:
        return false;  // Div may trap; Call and StoreSlot have effects
    }
}

int pops_of(IrOpcode op) {
    switch (op) {
    case IrOpcode::PushConst:
    case IrOpcode::LoadSlot:
        return 0;
    default:
        return 2;  // the arithmetic/compare group
    }
}

bool remove_one_dead_store(IrFunction& fn) {
    std::set<uint32_t> loaded;
    for (const auto& block : fn.blocks)
        for (const auto& inst : block.insts)
            if (inst.op == IrOpcode::LoadSlot) loaded.insert(inst.index);

    for (auto& block : fn.blocks) {
        auto& insts = block.insts;
        for (size_t i = 0; i < insts.size(); ++i) {
            if (insts[i].op != IrOpcode::StoreSlot || loaded.count(insts[i].index)) continue;

            // Walk backwards deleting the producers of the stored value. The
            // slice must stay pure, otherwise the store is kept.
            int need = 1;
            size_t begin = i;
            bool deletable = false;
            while (begin > 0) {
                const IrInst& prev = insts[begin - 1];
                if (!slice_safe(prev.op)) break;
                --begin;
                need += pops_of(prev.op) - 1;
                if (need == 0) { deletable = true; break; }
            }
            if (deletable) {
                insts.erase(insts.begin() + begin, insts.begin() + i + 1);
                return true;
            }
        }
    }
    return false;
}

bool pass_dead_store(IrProgram& program) {
    bool changed = false;
    for (auto& fn : program.functions) {
        // Removing a load inside one slice can make another slot dead, so
        // rescan from scratch after every removal.
        while (remove_one_dead_store(fn)) changed = true;
    }
    return changed;
}

bool pass_unreachable_blocks(IrProgram& program) {
    bool changed = false;
    for (auto& fn : program.functions) {
        std::vector<bool> reachable(fn.blocks.size(), false);
        std::vector<uint32_t> stack = {0};
        reachable[0] = true;
        while (!stack.empty()) {
            uint32_t b = stack.back();
            stack.pop_back();
            for (const auto& inst : fn.blocks[b].insts) {
                if (inst.op != IrOpcode::Jump && inst.op != IrOpcode::JumpIfFalse) continue;
                if (!reachable[inst.index]) {
                    reachable[inst.index] = true;
                    stack.push_back(inst.index);
                }
            }
        }

        if (std::find(reachable.begin(), reachable.end(), false) == reachable.end())
            continue;

        std::vector<uint32_t> remap(fn.blocks.size(), 0);
        std::vector<IrBlock> kept;
        for (size_t b = 0; b < fn.blocks.size(); ++b) {
            if (!reachable[b]) continue;
            remap[b] = static_cast<uint32_t>(kept.size());
            kept.push_back(std::move(fn.blocks[b]));
        }
        for (auto& block : kept)
            for (auto& inst : block.insts)
                if (inst.op == IrOpcode::Jump || inst.op == IrOpcode::JumpIfFalse)
                    inst.index = remap[inst.index];
        fn.blocks = std::move(kept);
        changed = true;
    }
    return changed;
}

bool apply_pass(IrProgram& program, Pass pass) {
    switch (pass) {
    case Pass::ConstantFold: return pass_constant_fold(program);
    case Pass::DeadStore: return pass_dead_store(program);
    case Pass::UnreachableBlocks: return pass_unreachable_blocks(program);
    }
    throw std::logic_error("optimize: unknown pass");
}

}  // namespace

const char* pass_name(Pass pass) {
    switch (pass) {
    case Pass::ConstantFold: return "fold";
    case Pass::DeadStore: return "dead-store";
    case Pass::UnreachableBlocks: return "unreachable";
    }
    return "?";
}

IrProgram optimize(IrProgram program, const OptimizeOptions& options) {
    // Passes interact (dead-store removal can expose new folds), so the whole
    // list runs again until a full round is quiescent.
    for (int round = 0;; ++round) {
        if (round >= options.iteration_cap)
            throw std::logic_error("optimize: fixed point not reached within cap");
        bool changed = false;
        for (Pass pass : options.passes)
            if (apply_pass(program, pass)) changed = true;
        if (!changed) break;
    }
    check_ir(program);
    return program;
}

}  // namespace gnc
