// gnc: a stack-bytecode compiler, batch VM, and verification toolkit
// Copyright 2026 The gnc Authors.
// Licensed under the Apache License, Version 2.0.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gnc/common.hpp"

namespace gnc {

enum class TokenKind {
    Keyword,      // fn let if else while return true false int bool
    Identifier,
    IntLiteral,
    Operator,     // + - * / < <= > >= == != && || = ->
    Punct,        // ( ) { } , ; :
    EndOfFile,
};

struct Token {
    TokenKind kind;
    std::string text;      // exact source spelling
    int64_t int_value = 0; // set for IntLiteral
    SourcePos pos;

    bool operator==(const Token&) const = default;
};

const char* token_kind_name(TokenKind kind);

}  // namespace gnc
