// gnc: a stack-bytecode compiler, batch VM, and verification toolkit
// Copyright 2026 The gnc Authors.
// Licensed under the Apache License, Version 2.0.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gnc/common.hpp"

namespace gnc {

enum class Type { Int, Bool };

const char* type_name(Type t);

enum class BinaryOp {
    Add, Sub, Mul, Div,
    Lt, Le, Gt, Ge, Eq, Ne,
    And, Or,
};

const char* binary_op_symbol(BinaryOp op);

struct Expr;

struct IntLit {
    int64_t value;
};

struct BoolLit {
    bool value;
};

struct VarRef {
    std::string name;
    std::optional<uint16_t> slot;  // filled by typecheck
};

struct UnaryNeg {
    Box<Expr> operand;
};

struct BinaryExpr {
    BinaryOp op;
    Box<Expr> lhs;
    Box<Expr> rhs;
};

struct CallExpr {
    std::string callee;
    std::vector<Expr> args;
    std::optional<uint16_t> callee_index;  // filled by typecheck
};

struct Expr {
    std::variant<IntLit, BoolLit, VarRef, UnaryNeg, BinaryExpr, CallExpr> node;
    SourcePos pos;
    std::optional<Type> type;  // filled by typecheck
};

struct Stmt;
using Block = std::vector<Stmt>;

struct LetStmt {
    std::string name;
    std::optional<Type> annot;
    Expr init;
    std::optional<uint16_t> slot;  // filled by typecheck
};

struct AssignStmt {
    std::string name;
    Expr value;
    std::optional<uint16_t> slot;  // filled by typecheck
};

struct IfStmt {
    Expr cond;
    Block then_block;
    // Absent, a plain `else { ... }`, or a chained `else if ...`.
    std::variant<std::monostate, Block, Box<Stmt>> else_arm;
};

struct WhileStmt {
    Expr cond;
    Block body;
};

struct ReturnStmt {
    Expr value;
};

struct ExprStmt {
    Expr expr;
};

struct Stmt {
    std::variant<LetStmt, AssignStmt, IfStmt, WhileStmt, ReturnStmt, ExprStmt> node;
    SourcePos pos;
};

struct Param {
    std::string name;
    Type type;
    SourcePos pos;
};

struct Function {
    std::string name;
    std::vector<Param> params;
    Type return_type;
    Block body;
    SourcePos pos;
};

struct Ast {
    std::vector<Function> functions;
    size_t token_count = 0;  // tokens consumed, excluding end-of-file
};

// Structural dumps. The annotated form includes inferred types and slots and
// is stable across runs, so the tests use it for equality checks.
std::string dump(const Expr& e, bool annotated = false);
std::string dump(const Ast& ast, bool annotated = false);

}  // namespace gnc
