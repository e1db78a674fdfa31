// gnc: a stack-bytecode compiler, batch VM, and verification toolkit
// Copyright 2026 The gnc Authors.
// Licensed under the Apache License, Version 2.0.
#pragma once

#include <vector>

#include "gnc/ir.hpp"

namespace gnc {

enum class Pass {
    ConstantFold,       // peephole over constant operands and branches
    DeadStore,          // stores to slots that are never loaded
    UnreachableBlocks,  // blocks with no path from the entry block
};

const char* pass_name(Pass pass);

struct OptimizeOptions {
    std::vector<Pass> passes = default_passes();
    // Fixed-point rounds over the whole pass list. Exceeding the cap means a
    // pass keeps oscillating, which is a bug in the pass, not in the input.
    int iteration_cap = 1000;

    static std::vector<Pass> default_passes() {
        return {Pass::ConstantFold, Pass::DeadStore, Pass::UnreachableBlocks};
    }
};

// Runs the pass list repeatedly until a full round changes nothing. Each pass
// is itself a worklist that runs to its own fixed point, so a second call to
// optimize() is always a no-op. Throws std::logic_error past iteration_cap.
IrProgram optimize(IrProgram program, const OptimizeOptions& options = {});

}  // namespace gnc
