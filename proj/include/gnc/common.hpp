// gnc: a stack-bytecode compiler, batch VM, and verification toolkit
// Copyright 2026 The gnc Authors.
// Licensed under the Apache License, Version 2.0.
#pragma once

#include <cstdint>
#include <limits>
#include <memory>
#include <stdexcept>
#include <string>

namespace gnc {

struct SourcePos {
    uint32_t line = 1;  // 1-based
    uint32_t col = 1;   // 1-based, bytes

    bool operator==(const SourcePos&) const = default;
};

inline std::string to_string(SourcePos p) {
    return std::to_string(p.line) + ":" + std::to_string(p.col);
}

// Base for all diagnostics raised by the compilation phases. The VM never
// throws for guest faults; those are reported as ExecResult statuses.
class CompileError : public std::runtime_error {
public:
    CompileError(std::string phase, SourcePos pos, std::string message)
        : std::runtime_error(to_string(pos) + ": " + message),
          phase_(std::move(phase)),
          pos_(pos),
          message_(std::move(message)) {}

    const std::string& phase() const { return phase_; }
    SourcePos pos() const { return pos_; }
    const std::string& message() const { return message_; }

private:
    std::string phase_;
    SourcePos pos_;
    std::string message_;
};

class LexError : public CompileError {
public:
    LexError(SourcePos pos, std::string message)
        : CompileError("lex", pos, std::move(message)) {}
};

class ParseError : public CompileError {
public:
    ParseError(SourcePos pos, std::string expected, std::string found)
        : CompileError("parse", pos, "expected " + expected + ", found " + found),
          expected_(std::move(expected)),
          found_(std::move(found)) {}

    const std::string& expected() const { return expected_; }
    const std::string& found() const { return found_; }

private:
    std::string expected_;
    std::string found_;
};

class ParseDepthExceeded : public CompileError {
public:
    ParseDepthExceeded(SourcePos pos, int bound)
        : CompileError("parse", pos,
                       "nesting exceeds depth bound " + std::to_string(bound)) {}
};

class TypeError : public CompileError {
public:
    TypeError(SourcePos pos, std::string message)
        : CompileError("typecheck", pos, std::move(message)) {}
};

class UndefinedVariable : public TypeError {
public:
    UndefinedVariable(SourcePos pos, const std::string& name)
        : TypeError(pos, "undefined variable `" + name + "`") {}
};

class UndefinedFunction : public TypeError {
public:
    UndefinedFunction(SourcePos pos, const std::string& name)
        : TypeError(pos, "undefined function `" + name + "`") {}
};

class MissingMain : public TypeError {
public:
    explicit MissingMain(SourcePos pos)
        : TypeError(pos, "program declares no function named `main`") {}
};

// All gn arithmetic wraps at 64 bits.
inline int64_t wrap_add(int64_t a, int64_t b) {
    return static_cast<int64_t>(static_cast<uint64_t>(a) + static_cast<uint64_t>(b));
}

inline int64_t wrap_sub(int64_t a, int64_t b) {
    return static_cast<int64_t>(static_cast<uint64_t>(a) - static_cast<uint64_t>(b));
}

inline int64_t wrap_mul(int64_t a, int64_t b) {
    return static_cast<int64_t>(static_cast<uint64_t>(a) * static_cast<uint64_t>(b));
}

// Truncated division. Caller must rule out b == 0; INT64_MIN / -1 wraps.
inline int64_t wrap_div(int64_t a, int64_t b) {
    if (a == std::numeric_limits<int64_t>::min() && b == -1) return a;
    return a / b;
}

// Copyable heap box, used for recursive AST nodes.
template <typename T>
class Box {
public:
    explicit Box(T value) : ptr_(std::make_unique<T>(std::move(value))) {}
    Box(const Box& other) : ptr_(std::make_unique<T>(*other.ptr_)) {}
    Box(Box&&) noexcept = default;
    Box& operator=(const Box& other) {
        ptr_ = std::make_unique<T>(*other.ptr_);
        return *this;
    }
    Box& operator=(Box&&) noexcept = default;

    T& operator*() { return *ptr_; }
    const T& operator*() const { return *ptr_; }
    T* operator->() { return ptr_.get(); }
    const T* operator->() const { return ptr_.get(); }

private:
    std::unique_ptr<T> ptr_;
};

}  // namespace gnc
