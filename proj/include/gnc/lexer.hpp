// gnc: a stack-bytecode compiler, batch VM, and verification toolkit
// Copyright 2026 The gnc Authors.
// Licensed under the Apache License, Version 2.0.
#pragma once

#include <string_view>
#include <vector>

#include "gnc/token.hpp"

namespace gnc {

// Tokenizes a whole source buffer. The result always ends with an EndOfFile
// token. Throws LexError on unknown characters or out-of-range int literals.
std::vector<Token> lex(std::string_view source);

}  // namespace gnc
