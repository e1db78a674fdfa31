// gnc: a stack-bytecode compiler, batch VM, and verification toolkit
// Copyright 2026 The gnc Authors.
// Licensed under the Apache License, Version 2.0.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gnc/ast.hpp"

namespace gnc {

struct SlotInfo {
    std::string name;
    Type type;
};

struct FunctionInfo {
    std::string name;
    uint16_t index = 0;
    std::vector<Type> param_types;
    Type return_type = Type::Int;
    uint16_t slot_count = 0;       // params first, then lets in declaration order
    std::vector<SlotInfo> slots;    // indexed by slot id
};

struct TypedAst {
    Ast ast;  // with slots, callee indices and expression types filled in
    std::vector<FunctionInfo> functions;
    uint16_t main_index = 0;
};

// Resolves names, assigns locals to dense slots and annotates every
// expression with its type. Throws TypeError (or a subclass) on the first
// violation encountered in program order.
TypedAst typecheck(Ast ast);

}  // namespace gnc
