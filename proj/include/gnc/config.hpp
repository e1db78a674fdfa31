// gnc: a stack-bytecode compiler, batch VM, and verification toolkit
// Copyright 2026 The gnc Authors.
// Licensed under the Apache License, Version 2.0.
#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gnc {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// `key=value` per line; `#` comments and blank lines are ignored. Keys may
// not repeat. Values keep internal spaces, outer whitespace is trimmed.
using KvMap = std::map<std::string, std::string>;

KvMap parse_kv(std::string_view text);
KvMap load_kv_file(const std::string& path);

// Typed lookups. A missing key yields the fallback; a present but malformed
// value throws ConfigError naming the key.
int64_t kv_int(const KvMap& kv, const std::string& key, int64_t fallback);
uint64_t kv_uint(const KvMap& kv, const std::string& key, uint64_t fallback);
double kv_double(const KvMap& kv, const std::string& key, double fallback);
std::string kv_string(const KvMap& kv, const std::string& key, std::string fallback);

}  // namespace gnc
