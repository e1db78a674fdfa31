// gnc: a stack-bytecode compiler, batch VM, and verification toolkit
// Copyright 2026 The gnc Authors.
// Licensed under the Apache License, Version 2.0.
#include "gnc/testsuite.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace gnc {

namespace {

std::string_view strip(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

int64_t parse_int(std::string_view word, size_t line) {
    int64_t value = 0;
    auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
    if (ec != std::errc{} || ptr != word.data() + word.size())
        throw SuiteParseError(line, "not an integer: `" + std::string(word) + "`");
    return value;
}

}  // namespace

TestSuite parse_suite(std::string_view text) {
    TestSuite suite;
    size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        size_t nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);

        if (size_t hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = strip(line);
        if (line.empty()) continue;

        if (!line.starts_with("args:"))
            throw SuiteParseError(line_no, "expected `args:` prefix");
        line = strip(line.substr(5));

        size_t arrow = line.find("=>");
        if (arrow == std::string_view::npos)
            throw SuiteParseError(line_no, "expected `=>`");

        TestCase test;
        std::istringstream words{std::string(strip(line.substr(0, arrow)))};
        for (std::string word; words >> word;)
            test.args.push_back(parse_int(word, line_no));

        std::string_view tail = strip(line.substr(arrow + 2));
        if (tail.empty()) throw SuiteParseError(line_no, "missing expected value");
        if (tail.find(' ') != std::string_view::npos)
            throw SuiteParseError(line_no, "exactly one expected value allowed");
        test.expected = parse_int(tail, line_no);
        suite.push_back(std::move(test));
    }
    return suite;
}

std::string serialize_suite(const TestSuite& suite) {
    std::ostringstream out;
    for (const auto& test : suite) {
        out << "args:";
        for (int64_t a : test.args) out << " " << a;
        out << " => " << test.expected << "\n";
    }
    return out.str();
}

TestSuite load_suite_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open suite file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_suite(buffer.str());
}

}  // namespace gnc
