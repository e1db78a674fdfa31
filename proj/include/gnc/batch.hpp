// gnc: a stack-bytecode compiler, batch VM, and verification toolkit
// Copyright 2026 The gnc Authors.
// Licensed under the Apache License, Version 2.0.
#pragma once

#include <cstdint>
#include <vector>

#include "gnc/testsuite.hpp"
#include "gnc/vm.hpp"

namespace gnc {

struct BatchOptions {
    uint32_t warp_width = 32;
    uint32_t workers = 1;  // wall time only; results never depend on it
    VmLimits limits;
};

struct BatchResult {
    // results[program][test]
    std::vector<std::vector<ExecResult>> results;
    // Of all lane-cycles, the fraction whose opcode disagreed with the
    // cycle's majority opcode within the warp. 0 when nothing ran.
    double divergence = 0.0;
    uint64_t total_lockstep_cycles = 0;

    bool operator==(const BatchResult&) const = default;
};

// Runs every program against every test, grouped into warps of warp_width
// lanes that advance in lockstep: each cycle, every still-active lane retires
// exactly one instruction. Per-program results are identical to solo
// execute() with the same limits; warp width and worker count only influence
// the divergence accounting and wall time respectively.
BatchResult execute_batch(const std::vector<BytecodeProgram>& programs,
                          const TestSuite& suite, const BatchOptions& options = {});

}  // namespace gnc
