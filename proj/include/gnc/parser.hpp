// gnc: a stack-bytecode compiler, batch VM, and verification toolkit
// Copyright 2026 The gnc Authors.
// Licensed under the Apache License, Version 2.0.
#pragma once

#include <string_view>
#include <vector>

#include "gnc/ast.hpp"
#include "gnc/token.hpp"

namespace gnc {

inline constexpr int kDefaultParseDepth = 64;

// Recursive-descent parser. Nesting (blocks, parentheses, unary chains,
// else-if chains) is bounded; exceeding the bound throws ParseDepthExceeded
// rather than risking a host stack overflow on adversarial input.
Ast parse_tokens(const std::vector<Token>& tokens, int max_depth = kDefaultParseDepth);

// Convenience wrapper: lex + parse.
Ast parse(std::string_view source, int max_depth = kDefaultParseDepth);

}  // namespace gnc
