// gnc: a stack-bytecode compiler, batch VM, and verification toolkit
// Copyright 2026 The gnc Authors.
// Licensed under the Apache License, Version 2.0.
#include "gnc/codec.hpp"

namespace gnc {

namespace {

void put_u16(std::vector<uint8_t>& out, uint16_t v) {
    out.push_back(static_cast<uint8_t>(v));
    out.push_back(static_cast<uint8_t>(v >> 8));
}

void put_u32(std::vector<uint8_t>& out, uint32_t v) {
    for (int shift = 0; shift < 32; shift += 8)
        out.push_back(static_cast<uint8_t>(v >> shift));
}

void put_i64(std::vector<uint8_t>& out, int64_t v) {
    uint64_t u = static_cast<uint64_t>(v);
    for (int shift = 0; shift < 64; shift += 8)
        out.push_back(static_cast<uint8_t>(u >> shift));
}

class Reader {
public:
    explicit Reader(std::span<const uint8_t> bytes) : bytes_(bytes) {}

    size_t offset() const { return off_; }
    size_t remaining() const { return bytes_.size() - off_; }

    uint8_t u8(const char* what) {
        need(1, what);
        return bytes_[off_++];
    }

    uint16_t u16(const char* what) {
        need(2, what);
        uint16_t v = static_cast<uint16_t>(bytes_[off_] | bytes_[off_ + 1] << 8);
        off_ += 2;
        return v;
    }

    uint32_t u32(const char* what) {
        need(4, what);
        uint32_t v = 0;
        for (int i = 0; i < 4; ++i) v |= static_cast<uint32_t>(bytes_[off_ + i]) << (8 * i);
        off_ += 4;
        return v;
    }

    int64_t i64(const char* what) {
        need(8, what);
        uint64_t v = 0;
        for (int i = 0; i < 8; ++i) v |= static_cast<uint64_t>(bytes_[off_ + i]) << (8 * i);
        off_ += 8;
        return static_cast<int64_t>(v);
    }

    // Rejects an impossible element count before anything is allocated, so a
    // corrupt header cannot demand gigabytes.
    void need_elements(uint64_t count, uint64_t min_size, const char* what) {
        if (count * min_size > remaining())
            throw DecodeError(off_, std::string("truncated: ") + what + " count " +
                                        std::to_string(count) + " exceeds remaining bytes");
    }

private:
    std::span<const uint8_t> bytes_;
    size_t off_ = 0;

    void need(size_t n, const char* what) {
        if (remaining() < n)
            throw DecodeError(off_, std::string("truncated ") + what);
    }
};

}  // namespace

std::vector<uint8_t> encode(const BytecodeProgram& p) {
    std::vector<uint8_t> out;
    out.insert(out.end(), std::begin(kMagic), std::end(kMagic));
    put_u16(out, kFormatVersion);

    put_u32(out, static_cast<uint32_t>(p.pool.size()));
    for (int64_t c : p.pool) put_i64(out, c);

    put_u16(out, static_cast<uint16_t>(p.functions.size()));
    for (const auto& f : p.functions) {
        put_u32(out, f.entry);
        put_u16(out, f.arity);
        put_u16(out, f.slots);
    }

    put_u32(out, p.entry_function);
    put_u32(out, static_cast<uint32_t>(p.code.size()));
    for (const auto& inst : p.code) {
        out.push_back(static_cast<uint8_t>(inst.op));
        if (opcode_has_operand(inst.op)) put_u32(out, inst.operand);
    }
    return out;
}

std::optional<uint16_t> region_slots(const BytecodeProgram& p, uint32_t index) {
    std::optional<uint32_t> best_entry;
    uint16_t slots = 0;
    for (const auto& f : p.functions) {
        if (f.entry > index) continue;
        if (!best_entry || f.entry > *best_entry) {
            best_entry = f.entry;
            slots = f.slots;
        } else if (f.entry == *best_entry && f.slots > slots) {
            slots = f.slots;
        }
    }
    if (!best_entry) return std::nullopt;
    return slots;
}

BytecodeProgram decode(std::span<const uint8_t> bytes) {
    Reader r(bytes);
    BytecodeProgram p;

    for (uint8_t expected : kMagic) {
        size_t at = r.offset();
        if (r.u8("magic") != expected) throw DecodeError(at, "bad magic");
    }
    {
        size_t at = r.offset();
        uint16_t version = r.u16("version");
        if (version != kFormatVersion)
            throw DecodeError(at, "unsupported version " + std::to_string(version));
    }

    uint32_t pool_count = r.u32("pool count");
    r.need_elements(pool_count, 8, "constant pool");
    p.pool.reserve(pool_count);
    for (uint32_t i = 0; i < pool_count; ++i) p.pool.push_back(r.i64("constant"));

    uint16_t func_count = r.u16("function count");
    r.need_elements(func_count, 8, "function table");
    p.functions.reserve(func_count);
    for (uint16_t i = 0; i < func_count; ++i) {
        FunctionEntry f;
        f.entry = r.u32("function entry");
        size_t arity_at = r.offset();
        f.arity = r.u16("function arity");
        f.slots = r.u16("function slots");
        if (f.arity > f.slots)
            throw DecodeError(arity_at, "function arity exceeds slot count");
        p.functions.push_back(f);
    }

    {
        size_t at = r.offset();
        p.entry_function = r.u32("entry function");
        if (func_count == 0) {
            if (p.entry_function != 0)
                throw DecodeError(at, "entry function index with empty function table");
        } else if (p.entry_function >= func_count) {
            throw DecodeError(at, "entry function index out of range");
        }
    }

    uint32_t code_len = r.u32("code length");
    r.need_elements(code_len, 1, "code");
    for (const auto& f : p.functions) {
        if (f.entry >= code_len)
            throw DecodeError(r.offset(), "function entry past end of code");
    }

    p.code.reserve(code_len);
    for (uint32_t i = 0; i < code_len; ++i) {
        size_t op_at = r.offset();
        uint8_t byte = r.u8("opcode");
        if (!opcode_is_valid(byte))
            throw DecodeError(op_at, "unknown opcode 0x" + [byte] {
                const char* digits = "0123456789abcdef";
                return std::string{digits[byte >> 4], digits[byte & 0xf]};
            }());
        Instruction inst{static_cast<Opcode>(byte), 0};
        if (opcode_has_operand(inst.op)) {
            size_t operand_at = r.offset();
            inst.operand = r.u32("operand");
            switch (inst.op) {
            case Opcode::LoadConst:
                if (inst.operand >= p.pool.size())
                    throw DecodeError(operand_at, "constant index out of range");
                break;
            case Opcode::Jump:
            case Opcode::JumpIfFalse:
                if (inst.operand >= code_len)
                    throw DecodeError(operand_at, "jump target out of range");
                break;
            case Opcode::Call:
                if (inst.operand >= p.functions.size())
                    throw DecodeError(operand_at, "call target out of range");
                break;
            case Opcode::LoadVar:
            case Opcode::StoreVar: {
                // Static check against the owning function's slot budget; a
                // stray instruction before every entry is left to the VM's
                // runtime bounds checks.
                auto budget = region_slots(p, i);
                if (budget && inst.operand >= *budget)
                    throw DecodeError(operand_at, "variable slot out of range");
                break;
            }
            default:
                break;
            }
        }
        p.code.push_back(inst);
    }

    if (r.remaining() != 0)
        throw DecodeError(r.offset(), "trailing bytes after code");
    return p;
}

}  // namespace gnc
