// gnc: a stack-bytecode compiler, batch VM, and verification toolkit
// Copyright 2026 The gnc Authors.
// Licensed under the Apache License, Version 2.0.
#include "gnc/ast.hpp"

#include <sstream>

namespace gnc {

const char* type_name(Type t) {
    return t == Type::Int ? "int" : "bool";
}

const char* binary_op_symbol(BinaryOp op) {
    switch (op) {
    case BinaryOp::Add: return "+";
    case BinaryOp::Sub: return "-";
    case BinaryOp::Mul: return "*";
    case BinaryOp::Div: return "/";
    case BinaryOp::Lt: return "<";
    case BinaryOp::Le: return "<=";
    case BinaryOp::Gt: return ">";
    case BinaryOp::Ge: return ">=";
    case BinaryOp::Eq: return "==";
    case BinaryOp::Ne: return "!=";
    case BinaryOp::And: return "&&";
    case BinaryOp::Or: return "||";
    }
    return "?";
}

namespace {

struct Dumper {
    std::ostringstream out;
    bool annotated;

    void expr(const Expr& e) {
        std::visit([&](const auto& node) { visit(node); }, e.node);
        if (annotated && e.type) out << ":" << type_name(*e.type);
    }

    void visit(const IntLit& n) { out << n.value; }
    void visit(const BoolLit& n) { out << (n.value ? "true" : "false"); }

    void visit(const VarRef& n) {
        out << n.name;
        if (annotated && n.slot) out << "@" << *n.slot;
    }

    void visit(const UnaryNeg& n) {
        out << "(- ";
        expr(*n.operand);
        out << ")";
    }

    void visit(const BinaryExpr& n) {
        out << "(" << binary_op_symbol(n.op) << " ";
        expr(*n.lhs);
        out << " ";
        expr(*n.rhs);
        out << ")";
    }

    void visit(const CallExpr& n) {
        out << "(call " << n.callee;
        if (annotated && n.callee_index) out << "#" << *n.callee_index;
        for (const auto& a : n.args) {
            out << " ";
            expr(a);
        }
        out << ")";
    }

    void block(const Block& b) {
        out << "{";
        for (const auto& s : b) {
            out << " ";
            stmt(s);
        }
        out << " }";
    }

    void stmt(const Stmt& s) {
        std::visit([&](const auto& node) { visit_stmt(node); }, s.node);
    }

    void visit_stmt(const LetStmt& n) {
        out << "(let " << n.name;
        if (annotated && n.slot) out << "@" << *n.slot;
        if (n.annot) out << ":" << type_name(*n.annot);
        out << " = ";
        expr(n.init);
        out << ")";
    }

    void visit_stmt(const AssignStmt& n) {
        out << "(set " << n.name;
        if (annotated && n.slot) out << "@" << *n.slot;
        out << " = ";
        expr(n.value);
        out << ")";
    }

    void visit_stmt(const IfStmt& n) {
        out << "(if ";
        expr(n.cond);
        out << " ";
        block(n.then_block);
        if (std::holds_alternative<Block>(n.else_arm)) {
            out << " else ";
            block(std::get<Block>(n.else_arm));
        } else if (std::holds_alternative<Box<Stmt>>(n.else_arm)) {
            out << " else ";
            stmt(*std::get<Box<Stmt>>(n.else_arm));
        }
        out << ")";
    }

    void visit_stmt(const WhileStmt& n) {
        out << "(while ";
        expr(n.cond);
        out << " ";
        block(n.body);
        out << ")";
    }

    void visit_stmt(const ReturnStmt& n) {
        out << "(return ";
        expr(n.value);
        out << ")";
    }

    void visit_stmt(const ExprStmt& n) {
        out << "(expr ";
        expr(n.expr);
        out << ")";
    }
};

}  // namespace

std::string dump(const Expr& e, bool annotated) {
    Dumper d{.out = {}, .annotated = annotated};
    d.expr(e);
    return d.out.str();
}

std::string dump(const Ast& ast, bool annotated) {
    Dumper d{.out = {}, .annotated = annotated};
    bool first = true;
    for (const auto& fn : ast.functions) {
        if (!first) d.out << "\n";
        first = false;
        d.out << "(fn " << fn.name << " (";
        for (size_t i = 0; i < fn.params.size(); ++i) {
            if (i) d.out << " ";
            d.out << fn.params[i].name << ":" << type_name(fn.params[i].type);
        }
        d.out << ") -> " << type_name(fn.return_type) << " ";
        d.block(fn.body);
        d.out << ")";
    }
    return d.out.str();
}

}  // namespace gnc
