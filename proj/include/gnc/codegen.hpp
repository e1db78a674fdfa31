// gnc: a stack-bytecode compiler, batch VM, and verification toolkit
// Copyright 2026 The gnc Authors.
// Licensed under the Apache License, Version 2.0.
#pragma once

#include <stdexcept>

#include "gnc/bytecode.hpp"
#include "gnc/ir.hpp"

namespace gnc {

// Raised when codegen meets IR that violates its own invariants (unresolved
// branch target, counts past the encodable range). Always a compiler bug.
class CodegenError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Flattens the IR into bytecode: blocks are laid out in order, labels become
// absolute instruction indices, constants are pooled (deduplicated, first use
// first) and a Jump to the block laid out immediately next is dropped.
BytecodeProgram codegen(const IrProgram& program);

}  // namespace gnc
