// gnc: a stack-bytecode compiler, batch VM, and verification toolkit
// Copyright 2026 The gnc Authors.
// Licensed under the Apache License, Version 2.0.
#pragma once

#include <string_view>

#include "gnc/bytecode.hpp"
#include "gnc/optimize.hpp"
#include "gnc/parser.hpp"

namespace gnc {

struct CompileOptions {
    OptimizeOptions opt;
    bool optimize_enabled = true;
    int parse_depth = kDefaultParseDepth;
};

// The whole deterministic pipeline: lex, parse, typecheck, lower, optimize,
// codegen. Byte-for-byte reproducible for fixed options; throws CompileError
// subclasses on bad input.
BytecodeProgram compile_reference(std::string_view source, const CompileOptions& options = {});

}  // namespace gnc
