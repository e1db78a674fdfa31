// gnc: a stack-bytecode compiler, batch VM, and verification toolkit
// Copyright 2026 The gnc Authors.
// Licensed under the Apache License, Version 2.0.
#include "gnc/typecheck.hpp"

#include <limits>
#include <map>
#include <optional>

namespace gnc {

namespace {

struct Binding {
    uint16_t slot;
    Type type;
};

class Checker {
public:
    explicit Checker(Ast ast) : ast_(std::move(ast)) {}

    TypedAst run() {
        collect_signatures();

        for (size_t i = 0; i < ast_.functions.size(); ++i) {
            check_function(ast_.functions[i], infos_[i]);
        }

        std::optional<uint16_t> main_index;
        for (const auto& info : infos_) {
            if (info.name == "main") main_index = info.index;
        }
        if (!main_index) throw MissingMain(SourcePos{});

        return {std::move(ast_), std::move(infos_), *main_index};
    }

private:
    Ast ast_;
    std::vector<FunctionInfo> infos_;

    // Per-function state.
    std::vector<std::map<std::string, Binding>> scopes_;
    FunctionInfo* current_ = nullptr;

    void collect_signatures() {
        if (ast_.functions.size() > std::numeric_limits<uint16_t>::max())
            throw TypeError(SourcePos{}, "too many functions");
        for (size_t i = 0; i < ast_.functions.size(); ++i) {
            const Function& fn = ast_.functions[i];
            for (const auto& other : infos_) {
                if (other.name == fn.name)
                    throw TypeError(fn.pos, "duplicate function `" + fn.name + "`");
            }
            FunctionInfo info;
            info.name = fn.name;
            info.index = static_cast<uint16_t>(i);
            for (const auto& p : fn.params) info.param_types.push_back(p.type);
            info.return_type = fn.return_type;
            infos_.push_back(std::move(info));
        }
    }

    const Binding* lookup(const std::string& name) const {
        for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it) {
            auto found = it->find(name);
            if (found != it->end()) return &found->second;
        }
        return nullptr;
    }

    uint16_t declare(const std::string& name, Type type, SourcePos pos) {
        // Redeclaring any visible name is rejected; a name may be reused only
        // after its scope has closed.
        if (lookup(name))
            throw TypeError(pos, "`" + name + "` is already declared in a visible scope");
        if (current_->slot_count == std::numeric_limits<uint16_t>::max())
            throw TypeError(pos, "too many locals in function `" + current_->name + "`");
        uint16_t slot = current_->slot_count++;
        current_->slots.push_back({name, type});
        scopes_.back().emplace(name, Binding{slot, type});
        return slot;
    }

    void check_function(Function& fn, FunctionInfo& info) {
        current_ = &info;
        scopes_.clear();
        scopes_.emplace_back();
        for (const auto& p : fn.params) declare(p.name, p.type, p.pos);

        if (!check_block(fn.body))
            throw TypeError(fn.pos, "function `" + fn.name + "` may finish without returning");

        scopes_.pop_back();
        current_ = nullptr;
    }

    // Returns true when the block definitely returns on every path.
    bool check_block(Block& block) {
        scopes_.emplace_back();
        bool returns = false;
        for (Stmt& s : block) {
            if (check_stmt(s)) returns = true;
        }
        scopes_.pop_back();
        return returns;
    }

    bool check_stmt(Stmt& stmt) {
        return std::visit([&](auto& node) { return check_stmt_node(node, stmt.pos); },
                          stmt.node);
    }

    bool check_stmt_node(LetStmt& node, SourcePos pos) {
        Type init = check_expr(node.init);
        if (node.annot && *node.annot != init)
            throw TypeError(pos, "`" + node.name + "` is annotated " +
                                     type_name(*node.annot) + " but initialized with " +
                                     type_name(init));
        node.slot = declare(node.name, init, pos);
        return false;
    }

    bool check_stmt_node(AssignStmt& node, SourcePos pos) {
        const Binding* binding = lookup(node.name);
        if (!binding) throw UndefinedVariable(pos, node.name);
        Type value = check_expr(node.value);
        if (value != binding->type)
            throw TypeError(pos, "cannot assign " + std::string(type_name(value)) +
                                     " to " + type_name(binding->type) + " variable `" +
                                     node.name + "`");
        node.slot = binding->slot;
        return false;
    }

    bool check_stmt_node(IfStmt& node, SourcePos pos) {
        require_bool(node.cond, "if condition");
        (void)pos;
        bool then_returns = check_block(node.then_block);
        if (std::holds_alternative<std::monostate>(node.else_arm)) return false;
        bool else_returns;
        if (auto* block = std::get_if<Block>(&node.else_arm)) {
            else_returns = check_block(*block);
        } else {
            else_returns = check_stmt(*std::get<Box<Stmt>>(node.else_arm));
        }
        return then_returns && else_returns;
    }

    bool check_stmt_node(WhileStmt& node, SourcePos) {
        require_bool(node.cond, "while condition");
        check_block(node.body);
        // The body may never run, so a loop contributes no return guarantee.
        return false;
    }

    bool check_stmt_node(ReturnStmt& node, SourcePos pos) {
        Type value = check_expr(node.value);
        if (value != current_->return_type)
            throw TypeError(pos, "returning " + std::string(type_name(value)) +
                                     " from a function declared -> " +
                                     type_name(current_->return_type));
        return true;
    }

    bool check_stmt_node(ExprStmt& node, SourcePos) {
        check_expr(node.expr);
        return false;
    }

    void require_bool(Expr& e, const char* what) {
        if (check_expr(e) != Type::Bool)
            throw TypeError(e.pos, std::string(what) + " must be bool");
    }

    Type check_expr(Expr& e) {
        Type t = std::visit([&](auto& node) { return check_expr_node(node, e.pos); },
                            e.node);
        e.type = t;
        return t;
    }

    Type check_expr_node(IntLit&, SourcePos) { return Type::Int; }
    Type check_expr_node(BoolLit&, SourcePos) { return Type::Bool; }

    Type check_expr_node(VarRef& node, SourcePos pos) {
        const Binding* binding = lookup(node.name);
        if (!binding) throw UndefinedVariable(pos, node.name);
        node.slot = binding->slot;
        return binding->type;
    }

    Type check_expr_node(UnaryNeg& node, SourcePos pos) {
        if (check_expr(*node.operand) != Type::Int)
            throw TypeError(pos, "unary `-` needs an int operand");
        return Type::Int;
    }

    Type check_expr_node(BinaryExpr& node, SourcePos pos) {
        Type lhs = check_expr(*node.lhs);
        Type rhs = check_expr(*node.rhs);
        const char* sym = binary_op_symbol(node.op);

        switch (node.op) {
        case BinaryOp::Add:
        case BinaryOp::Sub:
        case BinaryOp::Mul:
        case BinaryOp::Div:
            if (lhs != Type::Int || rhs != Type::Int)
                throw TypeError(pos, "`" + std::string(sym) + "` needs int operands");
            return Type::Int;
        case BinaryOp::Lt:
        case BinaryOp::Le:
        case BinaryOp::Gt:
        case BinaryOp::Ge:
            if (lhs != Type::Int || rhs != Type::Int)
                throw TypeError(pos, "`" + std::string(sym) + "` needs int operands");
            return Type::Bool;
        case BinaryOp::Eq:
        case BinaryOp::Ne:
            if (lhs != rhs)
                throw TypeError(pos, "`" + std::string(sym) +
                                         "` needs operands of the same type");
            return Type::Bool;
        case BinaryOp::And:
        case BinaryOp::Or:
            if (lhs != Type::Bool || rhs != Type::Bool)
                throw TypeError(pos, "`" + std::string(sym) + "` needs bool operands");
            return Type::Bool;
        }
        throw TypeError(pos, "unknown operator");
    }

    Type check_expr_node(CallExpr& node, SourcePos pos) {
        const FunctionInfo* target = nullptr;
        for (const auto& info : infos_) {
            if (info.name == node.callee) { target = &info; break; }
        }
        if (!target) throw UndefinedFunction(pos, node.callee);
        if (node.args.size() != target->param_types.size())
            throw TypeError(pos, "`" + node.callee + "` takes " +
                                     std::to_string(target->param_types.size()) +
                                     " argument(s), got " +
                                     std::to_string(node.args.size()));
        for (size_t i = 0; i < node.args.size(); ++i) {
            Type got = check_expr(node.args[i]);
            if (got != target->param_types[i])
                throw TypeError(node.args[i].pos,
                                "argument " + std::to_string(i + 1) + " of `" +
                                    node.callee + "` must be " +
                                    type_name(target->param_types[i]));
        }
        node.callee_index = target->index;
        return target->return_type;
    }
};

}  // namespace

TypedAst typecheck(Ast ast) {
    return Checker(std::move(ast)).run();
}

}  // namespace gnc
