// gnc: a stack-bytecode compiler, batch VM, and verification toolkit
// Copyright 2026 The gnc Authors.
// Licensed under the Apache License, Version 2.0.
#pragma once

#include <span>

#include "gnc/typecheck.hpp"
#include "gnc/vm.hpp"

namespace gnc::testsupport {

struct OracleOptions {
    // Visited-node allowance standing in for fuel. Far above what any
    // terminating generated program uses, so hitting it means divergence.
    uint64_t node_budget = 2'000'000;
    uint32_t call_depth = 64;
};

// Tree-walking interpreter over the typed AST, written independently of the
// compiler back end. It commits to the same observable semantics the
// lowering rules promise: left-to-right evaluation, both operands of && and
// || always evaluated, wrapping 64-bit arithmetic, division by zero and call
// depth exhaustion as traps. Differential tests compare its outcome with the
// VM's on compiled bytecode; steps counts node visits and is not comparable.
ExecResult oracle_execute(const TypedAst& typed, std::span<const int64_t> args,
                          const OracleOptions& options = {});

// Agreement on status, value for normal completion and trap kind for traps;
// step counts are intentionally ignored.
bool same_outcome(const ExecResult& a, const ExecResult& b);

}  // namespace gnc::testsupport
