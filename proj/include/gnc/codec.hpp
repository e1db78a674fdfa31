// gnc: a stack-bytecode compiler, batch VM, and verification toolkit
// Copyright 2026 The gnc Authors.
// Licensed under the Apache License, Version 2.0.
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "gnc/bytecode.hpp"

namespace gnc {

// Wire format (all integers little-endian):
//   "GNBC"                       4 bytes
//   version (= 1)                u16
//   pool count                   u32, then each constant as i64
//   function count               u16, then per function entry u32, arity u16, slots u16
//   entry function index         u32
//   code length (instructions)   u32
//   instructions                 opcode byte, then u32 operand for the
//                                operand-bearing opcodes only
// A program with empty pool, table and code is exactly the 20-byte header.

inline constexpr uint8_t kMagic[4] = {0x47, 0x4E, 0x42, 0x43};  // "GNBC"
inline constexpr uint16_t kFormatVersion = 1;

class DecodeError : public std::runtime_error {
public:
    DecodeError(size_t offset, std::string reason)
        : std::runtime_error("byte " + std::to_string(offset) + ": " + reason),
          offset_(offset),
          reason_(std::move(reason)) {}

    size_t offset() const { return offset_; }
    const std::string& reason() const { return reason_; }

private:
    size_t offset_;
    std::string reason_;
};

std::vector<uint8_t> encode(const BytecodeProgram& p);

// Strict inverse of encode: rejects bad magic or version, truncation,
// trailing bytes, unknown opcodes and every out-of-range index, so any
// successfully decoded program satisfies the BytecodeProgram invariants.
BytecodeProgram decode(std::span<const uint8_t> bytes);

// Slot budget governing instruction `index`: the function whose region of
// the flat code array contains it (greatest entry ≤ index; ties resolved
// towards the larger budget). Empty when no function starts at or before it.
std::optional<uint16_t> region_slots(const BytecodeProgram& p, uint32_t index);

}  // namespace gnc
