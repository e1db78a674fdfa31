// gnc: a stack-bytecode compiler, batch VM, and verification toolkit
// Copyright 2026 The gnc Authors.
// Licensed under the Apache License, Version 2.0.
#include "gnc/compile.hpp"

#include "gnc/codegen.hpp"
#include "gnc/lower.hpp"
#include "gnc/typecheck.hpp"

namespace gnc {

BytecodeProgram compile_reference(std::string_view source, const CompileOptions& options) {
    TypedAst typed = typecheck(parse(source, options.parse_depth));
    IrProgram ir = lower_to_ir(typed);
    if (options.optimize_enabled) ir = optimize(ir, options.opt);
    return codegen(ir);
}

}  // namespace gnc
