// gnc: a stack-bytecode compiler, batch VM, and verification toolkit
// Copyright 2026 The gnc Authors.
// Licensed under the Apache License, Version 2.0.
#include "gnc/lexer.hpp"

#include <array>
#include <cctype>
#include <charconv>

namespace gnc {

const char* token_kind_name(TokenKind kind) {
    switch (kind) {
    case TokenKind::Keyword: return "keyword";
    case TokenKind::Identifier: return "identifier";
    case TokenKind::IntLiteral: return "int literal";
    case TokenKind::Operator: return "operator";
    case TokenKind::Punct: return "punctuation";
    case TokenKind::EndOfFile: return "end of file";
    }
    return "?";
}

namespace {

constexpr std::array<std::string_view, 10> kKeywords = {
    "fn", "let", "if", "else", "while", "return", "true", "false", "int", "bool",
};

bool is_keyword(std::string_view word) {
    for (auto kw : kKeywords)
        if (word == kw) return true;
    return false;
}

class Cursor {
public:
    explicit Cursor(std::string_view src) : src_(src) {}

    bool done() const { return i_ >= src_.size(); }
    char peek() const { return src_[i_]; }
    char peek2() const { return i_ + 1 < src_.size() ? src_[i_ + 1] : '\0'; }
    SourcePos pos() const { return pos_; }

    char take() {
        char c = src_[i_++];
        if (c == '\n') {
            pos_.line++;
            pos_.col = 1;
        } else {
            pos_.col++;
        }
        return c;
    }

private:
    std::string_view src_;
    size_t i_ = 0;
    SourcePos pos_;
};

}  // namespace

std::vector<Token> lex(std::string_view source) {
    std::vector<Token> out;
    Cursor cur(source);

    while (!cur.done()) {
        char c = cur.peek();

        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            cur.take();
            continue;
        }
        if (c == '#') {
            while (!cur.done() && cur.peek() != '\n') cur.take();
            continue;
        }

        SourcePos start = cur.pos();

        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (!cur.done() && std::isdigit(static_cast<unsigned char>(cur.peek())))
                digits.push_back(cur.take());
            int64_t value = 0;
            auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
            if (ec != std::errc{} || ptr != digits.data() + digits.size())
                throw LexError(start, "int literal out of range: " + digits);
            out.push_back({TokenKind::IntLiteral, digits, value, start});
            continue;
        }

        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string word;
            while (!cur.done() &&
                   (std::isalnum(static_cast<unsigned char>(cur.peek())) || cur.peek() == '_'))
                word.push_back(cur.take());
            TokenKind kind = is_keyword(word) ? TokenKind::Keyword : TokenKind::Identifier;
            out.push_back({kind, word, 0, start});
            continue;
        }

        // Two-character operators first.
        char c2 = cur.peek2();
        auto two = [&](const char* text) {
            cur.take();
            cur.take();
            out.push_back({TokenKind::Operator, text, 0, start});
        };
        if (c == '<' && c2 == '=') { two("<="); continue; }
        if (c == '>' && c2 == '=') { two(">="); continue; }
        if (c == '=' && c2 == '=') { two("=="); continue; }
        if (c == '!' && c2 == '=') { two("!="); continue; }
        if (c == '&' && c2 == '&') { two("&&"); continue; }
        if (c == '|' && c2 == '|') { two("||"); continue; }
        if (c == '-' && c2 == '>') { two("->"); continue; }

        switch (c) {
        case '+': case '-': case '*': case '/': case '<': case '>': case '=':
            cur.take();
            out.push_back({TokenKind::Operator, std::string(1, c), 0, start});
            continue;
        case '(': case ')': case '{': case '}': case ',': case ';': case ':':
            cur.take();
            out.push_back({TokenKind::Punct, std::string(1, c), 0, start});
            continue;
        default:
            throw LexError(start, std::string("unexpected character `") + c + "`");
        }
    }

    out.push_back({TokenKind::EndOfFile, "", 0, cur.pos()});
    return out;
}

}  // namespace gnc
