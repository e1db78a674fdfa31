// gnc: a stack-bytecode compiler, batch VM, and verification toolkit
// Copyright 2026 The gnc Authors.
// Licensed under the Apache License, Version 2.0.
#pragma once

#include "gnc/ir.hpp"
#include "gnc/typecheck.hpp"

namespace gnc {

// Lowers a typed program into the stack IR.
//
// Everything evaluates left-to-right, each operand exactly once. The
// instruction set compares only with `a < b`, so the remaining comparison and
// logical operators are rewritten over 0/1 integers:
//
//   a >  b   ->  b < a                 (operand order preserved via scratch slots)
//   a >= b   ->  1 - (a < b)
//   a <= b   ->  1 - (b < a)
//   a == b   ->  (1 - (a < b)) * (1 - (b < a))
//   a != b   ->  (a < b) + (b < a)
//   a && b   ->  a * b
//   a || b   ->  1 - (1 - a) * (1 - b)
//   -x       ->  0 - x
//
// Scratch slots are appended after the declared locals; each rewrite site
// gets fresh ones so nested comparisons cannot clobber each other.
IrProgram lower_to_ir(const TypedAst& typed);

}  // namespace gnc
