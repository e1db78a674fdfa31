// gnc: a stack-bytecode compiler, batch VM, and verification toolkit
// Copyright 2026 The gnc Authors.
// Licensed under the Apache License, Version 2.0.
#include "gnc/vm.hpp"

#include "gnc/common.hpp"

namespace gnc {

const char* trap_kind_name(TrapKind kind) {
    switch (kind) {
    case TrapKind::DivideByZero: return "DivideByZero";
    case TrapKind::StackOverflow: return "StackOverflow";
    case TrapKind::CallDepthExceeded: return "CallDepthExceeded";
    case TrapKind::InvalidOperand: return "InvalidOperand";
    case TrapKind::StackUnderflow: return "StackUnderflow";
    }
    return "?";
}

const char* exec_status_name(ExecStatus status) {
    switch (status) {
    case ExecStatus::Ok: return "Ok";
    case ExecStatus::Trap: return "Trap";
    case ExecStatus::Timeout: return "Timeout";
    }
    return "?";
}

VmState::VmState(const BytecodeProgram& program, std::span<const int64_t> args,
                 const VmLimits& limits)
    : program_(&program), limits_(limits) {
    if (program.entry_function >= program.functions.size()) {
        finish_trap(TrapKind::InvalidOperand);
        return;
    }
    const FunctionEntry& entry = program.functions[program.entry_function];
    if (args.size() != entry.arity) {
        finish_trap(TrapKind::InvalidOperand);
        return;
    }

    Frame frame;
    frame.locals.assign(entry.slots, 0);
    for (size_t i = 0; i < args.size(); ++i) frame.locals[i] = args[i];
    frame.pc = entry.entry;
    frames_.push_back(std::move(frame));

    if (limits_.fuel == 0) finish_timeout();
}

uint8_t VmState::current_opcode_byte() const {
    const Frame& frame = frames_.back();
    if (frame.pc >= program_->code.size()) return 0xFF;
    return static_cast<uint8_t>(program_->code[frame.pc].op);
}

void VmState::finish_ok(int64_t value) {
    result_ = ExecResult{ExecStatus::Ok, value, steps_, std::nullopt};
}

void VmState::finish_trap(TrapKind kind) {
    result_ = ExecResult{ExecStatus::Trap, 0, steps_, kind};
}

void VmState::finish_timeout() {
    result_ = ExecResult{ExecStatus::Timeout, 0, steps_, std::nullopt};
}

bool VmState::push(std::vector<int64_t>& stack, int64_t value) {
    if (stack.size() >= limits_.stack_capacity) {
        finish_trap(TrapKind::StackOverflow);
        return false;
    }
    stack.push_back(value);
    return true;
}

bool VmState::pop(std::vector<int64_t>& stack, int64_t& out) {
    if (stack.empty()) {
        finish_trap(TrapKind::StackUnderflow);
        return false;
    }
    out = stack.back();
    stack.pop_back();
    return true;
}

void VmState::step() {
    Frame& frame = frames_.back();
    const auto& code = program_->code;

    if (frame.pc >= code.size()) {
        finish_trap(TrapKind::InvalidOperand);
        return;
    }
    const Instruction inst = code[frame.pc];
    frame.pc++;

    switch (inst.op) {
    case Opcode::LoadConst:
        if (inst.operand >= program_->pool.size()) return finish_trap(TrapKind::InvalidOperand);
        if (!push(frame.stack, program_->pool[inst.operand])) return;
        break;

    case Opcode::LoadVar:
        if (inst.operand >= frame.locals.size()) return finish_trap(TrapKind::InvalidOperand);
        if (!push(frame.stack, frame.locals[inst.operand])) return;
        break;

    case Opcode::StoreVar: {
        if (inst.operand >= frame.locals.size()) return finish_trap(TrapKind::InvalidOperand);
        int64_t value;
        if (!pop(frame.stack, value)) return;
        frame.locals[inst.operand] = value;
        break;
    }

    case Opcode::Add:
    case Opcode::Sub:
    case Opcode::Mul:
    case Opcode::Div:
    case Opcode::CompareLt: {
        int64_t b, a;
        if (!pop(frame.stack, b) || !pop(frame.stack, a)) return;
        int64_t r = 0;
        switch (inst.op) {
        case Opcode::Add: r = wrap_add(a, b); break;
        case Opcode::Sub: r = wrap_sub(a, b); break;
        case Opcode::Mul: r = wrap_mul(a, b); break;
        case Opcode::Div:
            if (b == 0) return finish_trap(TrapKind::DivideByZero);
            r = wrap_div(a, b);
            break;
        case Opcode::CompareLt: r = a < b ? 1 : 0; break;
        default: break;
        }
        frame.stack.push_back(r);  // two pops preceded this push; always fits
        break;
    }

    case Opcode::Jump:
        if (inst.operand >= code.size()) return finish_trap(TrapKind::InvalidOperand);
        frame.pc = inst.operand;
        break;

    case Opcode::JumpIfFalse: {
        int64_t cond;
        if (!pop(frame.stack, cond)) return;
        if (cond == 0) {
            if (inst.operand >= code.size()) return finish_trap(TrapKind::InvalidOperand);
            frame.pc = inst.operand;
        }
        break;
    }

    case Opcode::Call: {
        if (inst.operand >= program_->functions.size())
            return finish_trap(TrapKind::InvalidOperand);
        const FunctionEntry& callee = program_->functions[inst.operand];
        if (frames_.size() >= limits_.call_depth)
            return finish_trap(TrapKind::CallDepthExceeded);
        if (frame.stack.size() < callee.arity) return finish_trap(TrapKind::StackUnderflow);

        Frame next;
        next.locals.assign(callee.slots, 0);
        // Arguments were pushed left-to-right, so they pop off in reverse.
        for (uint32_t i = callee.arity; i-- > 0;) {
            next.locals[i] = frame.stack.back();
            frame.stack.pop_back();
        }
        next.pc = callee.entry;
        next.return_pc = frame.pc;
        frames_.push_back(std::move(next));
        break;
    }

    case Opcode::Return: {
        int64_t value;
        if (!pop(frame.stack, value)) return;
        if (frames_.size() == 1) {
            // Retiring the final RETURN is still within budget even when it
            // is exactly the fuel-th instruction.
            steps_++;
            finish_ok(value);
            return;
        }
        uint32_t resume = frame.return_pc;
        frames_.pop_back();
        Frame& caller = frames_.back();
        caller.pc = resume;
        if (!push(caller.stack, value)) return;
        break;
    }
    }

    steps_++;
    if (steps_ == limits_.fuel) finish_timeout();
}

ExecResult execute(const BytecodeProgram& program, std::span<const int64_t> args,
                   const VmLimits& limits) {
    VmState vm(program, args, limits);
    while (!vm.finished()) vm.step();
    return vm.result();
}

}  // namespace gnc
