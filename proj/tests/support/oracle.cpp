// gnc: a stack-bytecode compiler, batch VM, and verification toolkit
// Copyright 2026 The gnc Authors.
// Licensed under the Apache License, Version 2.0.
#include "support/oracle.hpp"

#include <limits>
#include <vector>

namespace gnc::testsupport {

namespace {

// Local wrapping primitives so the oracle does not share arithmetic code
// with the implementation under test.
int64_t o_add(int64_t a, int64_t b) {
    return static_cast<int64_t>(static_cast<uint64_t>(a) + static_cast<uint64_t>(b));
}
int64_t o_sub(int64_t a, int64_t b) {
    return static_cast<int64_t>(static_cast<uint64_t>(a) - static_cast<uint64_t>(b));
}
int64_t o_mul(int64_t a, int64_t b) {
    return static_cast<int64_t>(static_cast<uint64_t>(a) * static_cast<uint64_t>(b));
}
int64_t o_div(int64_t a, int64_t b) {
    if (a == std::numeric_limits<int64_t>::min() && b == -1) return a;
    return a / b;
}

struct TrapSignal {
    TrapKind kind;
};
struct BudgetSignal {};

class Interp {
public:
    Interp(const TypedAst& typed, const OracleOptions& options)
        : typed_(typed), options_(options) {}

    int64_t run(uint16_t function_index, std::vector<int64_t> locals) {
        const Function& fn = typed_.ast.functions[function_index];
        auto returned = exec_block(fn.body, locals);
        // Mirrors the compiled epilogue for a body the checker proved always
        // returns but that control nevertheless falls off.
        return returned ? *returned : 0;
    }

private:
    const TypedAst& typed_;
    OracleOptions options_;
    uint64_t visited_ = 0;
    uint32_t live_frames_ = 1;

    void tick() {
        if (++visited_ > options_.node_budget) throw BudgetSignal{};
    }

    int64_t eval(const Expr& e, std::vector<int64_t>& locals) {
        tick();
        if (const auto* lit = std::get_if<IntLit>(&e.node)) return lit->value;
        if (const auto* lit = std::get_if<BoolLit>(&e.node)) return lit->value ? 1 : 0;
        if (const auto* var = std::get_if<VarRef>(&e.node)) return locals.at(*var->slot);
        if (const auto* neg = std::get_if<UnaryNeg>(&e.node)) {
            return o_sub(0, eval(*neg->operand, locals));
        }
        if (const auto* bin = std::get_if<BinaryExpr>(&e.node)) {
            int64_t a = eval(*bin->lhs, locals);
            int64_t b = eval(*bin->rhs, locals);
            switch (bin->op) {
            case BinaryOp::Add: return o_add(a, b);
            case BinaryOp::Sub: return o_sub(a, b);
            case BinaryOp::Mul: return o_mul(a, b);
            case BinaryOp::Div:
                if (b == 0) throw TrapSignal{TrapKind::DivideByZero};
                return o_div(a, b);
            case BinaryOp::Lt: return a < b ? 1 : 0;
            case BinaryOp::Gt: return b < a ? 1 : 0;
            case BinaryOp::Le: return o_sub(1, b < a ? 1 : 0);
            case BinaryOp::Ge: return o_sub(1, a < b ? 1 : 0);
            case BinaryOp::Eq:
                return o_mul(o_sub(1, a < b ? 1 : 0), o_sub(1, b < a ? 1 : 0));
            case BinaryOp::Ne: return o_add(a < b ? 1 : 0, b < a ? 1 : 0);
            case BinaryOp::And: return o_mul(a, b);
            case BinaryOp::Or: return o_sub(1, o_mul(o_sub(1, a), o_sub(1, b)));
            }
            throw TrapSignal{TrapKind::InvalidOperand};
        }
        const auto& call = std::get<CallExpr>(e.node);
        std::vector<int64_t> args;
        args.reserve(call.args.size());
        for (const auto& arg : call.args) args.push_back(eval(arg, locals));
        if (live_frames_ >= options_.call_depth) {
            throw TrapSignal{TrapKind::CallDepthExceeded};
        }
        uint16_t callee = *call.callee_index;
        std::vector<int64_t> callee_locals(typed_.functions[callee].slot_count, 0);
        for (size_t i = 0; i < args.size(); ++i) callee_locals[i] = args[i];
        ++live_frames_;
        int64_t result = run(callee, std::move(callee_locals));
        --live_frames_;
        return result;
    }

    std::optional<int64_t> exec_stmt(const Stmt& s, std::vector<int64_t>& locals) {
        tick();
        if (const auto* let = std::get_if<LetStmt>(&s.node)) {
            locals.at(*let->slot) = eval(let->init, locals);
            return std::nullopt;
        }
        if (const auto* assign = std::get_if<AssignStmt>(&s.node)) {
            locals.at(*assign->slot) = eval(assign->value, locals);
            return std::nullopt;
        }
        if (const auto* ifs = std::get_if<IfStmt>(&s.node)) {
            if (eval(ifs->cond, locals) != 0) return exec_block(ifs->then_block, locals);
            if (const auto* block = std::get_if<Block>(&ifs->else_arm)) {
                return exec_block(*block, locals);
            }
            if (const auto* chained = std::get_if<Box<Stmt>>(&ifs->else_arm)) {
                return exec_stmt(**chained, locals);
            }
            return std::nullopt;
        }
        if (const auto* loop = std::get_if<WhileStmt>(&s.node)) {
            while (eval(loop->cond, locals) != 0) {
                auto returned = exec_block(loop->body, locals);
                if (returned) return returned;
            }
            return std::nullopt;
        }
        if (const auto* ret = std::get_if<ReturnStmt>(&s.node)) {
            return eval(ret->value, locals);
        }
        const auto& expr = std::get<ExprStmt>(s.node);
        eval(expr.expr, locals);
        return std::nullopt;
    }

    std::optional<int64_t> exec_block(const Block& block, std::vector<int64_t>& locals) {
        for (const auto& stmt : block) {
            auto returned = exec_stmt(stmt, locals);
            if (returned) return returned;
        }
        return std::nullopt;
    }
};

}  // namespace

ExecResult oracle_execute(const TypedAst& typed, std::span<const int64_t> args,
                          const OracleOptions& options) {
    ExecResult result;
    const FunctionInfo& info = typed.functions[typed.main_index];
    if (args.size() != info.param_types.size()) {
        result.status = ExecStatus::Trap;
        result.trap = TrapKind::InvalidOperand;
        return result;
    }
    std::vector<int64_t> locals(info.slot_count, 0);
    for (size_t i = 0; i < args.size(); ++i) locals[i] = args[i];
    Interp interp(typed, options);
    try {
        result.value = interp.run(typed.main_index, std::move(locals));
        result.status = ExecStatus::Ok;
    } catch (const TrapSignal& trap) {
        result.status = ExecStatus::Trap;
        result.trap = trap.kind;
    } catch (const BudgetSignal&) {
        result.status = ExecStatus::Timeout;
    }
    return result;
}

bool same_outcome(const ExecResult& a, const ExecResult& b) {
    if (a.status != b.status) return false;
    if (a.status == ExecStatus::Ok && a.value != b.value) return false;
    if (a.status == ExecStatus::Trap && a.trap != b.trap) return false;
    return true;
}

}  // namespace gnc::testsupport
