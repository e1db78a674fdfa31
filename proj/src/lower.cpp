// gnc: a stack-bytecode compiler, batch VM, and verification toolkit
// Copyright 2026 The gnc Authors.
// Licensed under the Apache License, Version 2.0.
#include "gnc/lower.hpp"

#include <optional>
#include <stdexcept>

namespace gnc {

namespace {

class FunctionLowerer {
public:
    FunctionLowerer(const Function& fn, const FunctionInfo& info) : fn_(fn) {
        out_.name = info.name;
        out_.arity = static_cast<uint16_t>(info.param_types.size());
        out_.slot_count = info.slot_count;
        new_block();
    }

    IrFunction run() {
        lower_block(fn_.body);
        if (!terminated()) {
            // Unreachable when typecheck proved all paths return, but every
            // block still needs a terminator.
            emit({IrOpcode::PushConst, 0, 0});
            emit({IrOpcode::Return, 0, 0});
        }
        return std::move(out_);
    }

private:
    const Function& fn_;
    IrFunction out_;
    uint32_t current_ = 0;
    std::optional<uint32_t> discard_slot_;

    uint32_t new_block() {
        out_.blocks.emplace_back();
        current_ = static_cast<uint32_t>(out_.blocks.size() - 1);
        return current_;
    }

    void switch_to(uint32_t block) { current_ = block; }

    void emit(IrInst inst) { out_.blocks[current_].insts.push_back(inst); }

    bool terminated() const {
        const auto& insts = out_.blocks[current_].insts;
        if (insts.empty()) return false;
        IrOpcode last = insts.back().op;
        return last == IrOpcode::Jump || last == IrOpcode::Return;
    }

    uint32_t fresh_slot() { return out_.slot_count++; }

    uint32_t discard_slot() {
        if (!discard_slot_) discard_slot_ = fresh_slot();
        return *discard_slot_;
    }

    static uint32_t slot_of(const std::optional<uint16_t>& slot) {
        if (!slot) throw std::logic_error("lower: unresolved slot");
        return *slot;
    }

    void lower_block(const Block& block) {
        for (const auto& stmt : block) lower_stmt(stmt);
    }

    void lower_stmt(const Stmt& stmt) {
        // Statements after a return in the same source block are unreachable;
        // park them in a fresh orphan block rather than corrupting this one.
        if (terminated()) new_block();
        std::visit([&](const auto& node) { lower_stmt_node(node); }, stmt.node);
    }

    void lower_stmt_node(const LetStmt& node) {
        lower_expr(node.init);
        emit({IrOpcode::StoreSlot, 0, slot_of(node.slot)});
    }

    void lower_stmt_node(const AssignStmt& node) {
        lower_expr(node.value);
        emit({IrOpcode::StoreSlot, 0, slot_of(node.slot)});
    }

    void lower_stmt_node(const IfStmt& node) {
        bool has_else = !std::holds_alternative<std::monostate>(node.else_arm);
        uint32_t cond_block = current_;

        uint32_t then_block = new_block();
        uint32_t else_block = has_else ? new_block() : 0;
        uint32_t join_block = new_block();
        if (!has_else) else_block = join_block;

        switch_to(cond_block);
        lower_expr(node.cond);
        emit({IrOpcode::JumpIfFalse, 0, else_block});
        emit({IrOpcode::Jump, 0, then_block});

        switch_to(then_block);
        lower_block(node.then_block);
        if (!terminated()) emit({IrOpcode::Jump, 0, join_block});

        if (has_else) {
            switch_to(else_block);
            if (const auto* block = std::get_if<Block>(&node.else_arm)) {
                lower_block(*block);
            } else {
                lower_stmt(*std::get<Box<Stmt>>(node.else_arm));
            }
            if (!terminated()) emit({IrOpcode::Jump, 0, join_block});
        }

        switch_to(join_block);
    }

    void lower_stmt_node(const WhileStmt& node) {
        uint32_t before = current_;
        uint32_t head = new_block();
        uint32_t body = new_block();
        uint32_t join = new_block();

        switch_to(before);
        emit({IrOpcode::Jump, 0, head});

        switch_to(head);
        lower_expr(node.cond);
        emit({IrOpcode::JumpIfFalse, 0, join});
        emit({IrOpcode::Jump, 0, body});

        switch_to(body);
        lower_block(node.body);
        if (!terminated()) emit({IrOpcode::Jump, 0, head});

        switch_to(join);
    }

    void lower_expr(const Expr& e) {
        std::visit([&](const auto& node) { lower_expr_node(node); }, e.node);
    }

    void lower_expr_node(const IntLit& node) {
        emit({IrOpcode::PushConst, node.value, 0});
    }

    void lower_expr_node(const BoolLit& node) {
        emit({IrOpcode::PushConst, node.value ? 1 : 0, 0});
    }

    void lower_expr_node(const VarRef& node) {
        emit({IrOpcode::LoadSlot, 0, slot_of(node.slot)});
    }

    void lower_expr_node(const UnaryNeg& node) {
        emit({IrOpcode::PushConst, 0, 0});
        lower_expr(*node.operand);
        emit({IrOpcode::Sub, 0, 0});
    }

    void lower_expr_node(const CallExpr& node) {
        for (const auto& arg : node.args) lower_expr(arg);
        if (!node.callee_index) throw std::logic_error("lower: unresolved callee");
        emit({IrOpcode::Call, 0, *node.callee_index});
    }

    void push_one() { emit({IrOpcode::PushConst, 1, 0}); }

    // Evaluates both operands left-to-right into fresh scratch slots so their
    // values can be re-ordered or re-used without re-evaluation.
    std::pair<uint32_t, uint32_t> spill_operands(const BinaryExpr& node) {
        uint32_t ta = fresh_slot();
        uint32_t tb = fresh_slot();
        lower_expr(*node.lhs);
        emit({IrOpcode::StoreSlot, 0, ta});
        lower_expr(*node.rhs);
        emit({IrOpcode::StoreSlot, 0, tb});
        return {ta, tb};
    }

    void load(uint32_t slot) { emit({IrOpcode::LoadSlot, 0, slot}); }

    void lower_expr_node(const BinaryExpr& node) {
        switch (node.op) {
        case BinaryOp::Add:
        case BinaryOp::Sub:
        case BinaryOp::Mul:
        case BinaryOp::Div: {
            lower_expr(*node.lhs);
            lower_expr(*node.rhs);
            IrOpcode op = node.op == BinaryOp::Add   ? IrOpcode::Add
                          : node.op == BinaryOp::Sub ? IrOpcode::Sub
                          : node.op == BinaryOp::Mul ? IrOpcode::Mul
                                                     : IrOpcode::Div;
            emit({op, 0, 0});
            return;
        }
        case BinaryOp::Lt:
            lower_expr(*node.lhs);
            lower_expr(*node.rhs);
            emit({IrOpcode::CmpLt, 0, 0});
            return;
        case BinaryOp::Ge:
            // 1 - (a < b)
            push_one();
            lower_expr(*node.lhs);
            lower_expr(*node.rhs);
            emit({IrOpcode::CmpLt, 0, 0});
            emit({IrOpcode::Sub, 0, 0});
            return;
        case BinaryOp::Gt: {
            // b < a, with a still evaluated first
            auto [ta, tb] = spill_operands(node);
            load(tb);
            load(ta);
            emit({IrOpcode::CmpLt, 0, 0});
            return;
        }
        case BinaryOp::Le: {
            // 1 - (b < a)
            auto [ta, tb] = spill_operands(node);
            push_one();
            load(tb);
            load(ta);
            emit({IrOpcode::CmpLt, 0, 0});
            emit({IrOpcode::Sub, 0, 0});
            return;
        }
        case BinaryOp::Eq: {
            // (1 - (a < b)) * (1 - (b < a))
            auto [ta, tb] = spill_operands(node);
            push_one();
            load(ta);
            load(tb);
            emit({IrOpcode::CmpLt, 0, 0});
            emit({IrOpcode::Sub, 0, 0});
            push_one();
            load(tb);
            load(ta);
            emit({IrOpcode::CmpLt, 0, 0});
            emit({IrOpcode::Sub, 0, 0});
            emit({IrOpcode::Mul, 0, 0});
            return;
        }
        case BinaryOp::Ne: {
            // (a < b) + (b < a)
            auto [ta, tb] = spill_operands(node);
            load(ta);
            load(tb);
            emit({IrOpcode::CmpLt, 0, 0});
            load(tb);
            load(ta);
            emit({IrOpcode::CmpLt, 0, 0});
            emit({IrOpcode::Add, 0, 0});
            return;
        }
        case BinaryOp::And:
            // both operands are 0/1, so multiplication is conjunction
            lower_expr(*node.lhs);
            lower_expr(*node.rhs);
            emit({IrOpcode::Mul, 0, 0});
            return;
        case BinaryOp::Or:
            // 1 - (1 - a) * (1 - b)
            push_one();
            push_one();
            lower_expr(*node.lhs);
            emit({IrOpcode::Sub, 0, 0});
            push_one();
            lower_expr(*node.rhs);
            emit({IrOpcode::Sub, 0, 0});
            emit({IrOpcode::Mul, 0, 0});
            emit({IrOpcode::Sub, 0, 0});
            return;
        }
        throw std::logic_error("lower: unknown binary operator");
    }

    void lower_stmt_node(const ReturnStmt& node) {
        lower_expr(node.value);
        emit({IrOpcode::Return, 0, 0});
    }

    void lower_stmt_node(const ExprStmt& node) {
        // No POP in the instruction set; park the value in a write-only slot.
        lower_expr(node.expr);
        emit({IrOpcode::StoreSlot, 0, discard_slot()});
    }
};

}  // namespace

IrProgram lower_to_ir(const TypedAst& typed) {
    IrProgram program;
    program.entry_function = typed.main_index;
    for (size_t i = 0; i < typed.ast.functions.size(); ++i) {
        FunctionLowerer lowerer(typed.ast.functions[i], typed.functions[i]);
        program.functions.push_back(lowerer.run());
    }
    check_ir(program);
    return program;
}

}  // namespace gnc
