// gnc: a stack-bytecode compiler, batch VM, and verification toolkit
// Copyright 2026 The gnc Authors.
// Licensed under the Apache License, Version 2.0.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gnc {

struct TestCase {
    std::vector<int64_t> args;
    int64_t expected = 0;

    bool operator==(const TestCase&) const = default;
};

using TestSuite = std::vector<TestCase>;

class SuiteParseError : public std::runtime_error {
public:
    SuiteParseError(size_t line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message),
          line_(line) {}

    size_t line() const { return line_; }

private:
    size_t line_;
};

// One test per line: `args: <space-separated integers> => <expected integer>`.
// Booleans are written 0/1; `#` starts a comment; blank lines are skipped.
TestSuite parse_suite(std::string_view text);

std::string serialize_suite(const TestSuite& suite);

TestSuite load_suite_file(const std::string& path);

}  // namespace gnc
