// gnc: a stack-bytecode compiler, batch VM, and verification toolkit
// Copyright 2026 The gnc Authors.
// Licensed under the Apache License, Version 2.0.
#pragma once

#include <cstdint>

#include "gnc/ast.hpp"

namespace gnc {

// Structural summary of a program, the input to complexity scoring.
struct FeatureVector {
    uint32_t source_len = 0;     // token count
    uint32_t nesting_depth = 0;  // deepest block nesting; 1 for a flat body
    uint32_t loop_count = 0;     // while statements
    uint32_t function_count = 0;
    uint32_t call_count = 0;     // call expressions
    bool has_recursion = false;  // direct or mutual

    bool operator==(const FeatureVector&) const = default;
};

FeatureVector extract_features(const Ast& ast);

}  // namespace gnc
