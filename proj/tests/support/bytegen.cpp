// gnc: a stack-bytecode compiler, batch VM, and verification toolkit
// Copyright 2026 The gnc Authors.
// Licensed under the Apache License, Version 2.0.
#include "support/bytegen.hpp"

#include <algorithm>
#include <array>

namespace gnc::testsupport {

namespace {

constexpr std::array<Opcode, 12> kAllOpcodes = {
    Opcode::LoadConst, Opcode::LoadVar,     Opcode::StoreVar, Opcode::Add,
    Opcode::Sub,       Opcode::Mul,         Opcode::Div,      Opcode::CompareLt,
    Opcode::Jump,      Opcode::JumpIfFalse, Opcode::Call,     Opcode::Return,
};

void put_u32(std::vector<uint8_t>& image, size_t offset, uint32_t value) {
    image[offset] = static_cast<uint8_t>(value & 0xFF);
    image[offset + 1] = static_cast<uint8_t>((value >> 8) & 0xFF);
    image[offset + 2] = static_cast<uint8_t>((value >> 16) & 0xFF);
    image[offset + 3] = static_cast<uint8_t>((value >> 24) & 0xFF);
}

int64_t random_pool_value(Rng& rng) {
    switch (rng.next_below(10)) {
        case 0:
            return INT64_MIN;
        case 1:
            return INT64_MAX;
        case 2:
            return -1;
        default:
            return rng.next_in_range(-100, 100);
    }
}

}  // namespace

ImageLayout image_layout(const BytecodeProgram& program) {
    ImageLayout layout;
    layout.function_count = 10 + 8 * program.pool.size();
    layout.entry_function = layout.function_count + 2 + 8 * program.functions.size();
    layout.code_len = layout.entry_function + 4;
    layout.code = layout.code_len + 4;
    size_t at = layout.code;
    layout.instruction_starts.reserve(program.code.size());
    for (const Instruction& ins : program.code) {
        layout.instruction_starts.push_back(at);
        at += opcode_has_operand(ins.op) ? 5 : 1;
    }
    return layout;
}

BytecodeProgram generate_valid_program(Rng& rng) {
    BytecodeProgram program;
    size_t pool_size = 1 + rng.next_below(8);
    for (size_t i = 0; i < pool_size; ++i) {
        program.pool.push_back(random_pool_value(rng));
    }

    size_t function_count = 1 + rng.next_below(4);
    std::vector<size_t> region_sizes;
    uint32_t total = 0;
    for (size_t i = 0; i < function_count; ++i) {
        size_t size = 3 + rng.next_below(8);
        FunctionEntry fn;
        fn.entry = total;
        fn.slots = static_cast<uint16_t>(1 + rng.next_below(4));
        uint16_t arity_cap = std::min<uint16_t>(fn.slots, 3);
        fn.arity = static_cast<uint16_t>(rng.next_below(arity_cap + 1u));
        program.functions.push_back(fn);
        region_sizes.push_back(size);
        total += static_cast<uint32_t>(size);
    }
    program.entry_function = static_cast<uint32_t>(rng.next_below(function_count));

    for (size_t f = 0; f < function_count; ++f) {
        uint16_t slots = program.functions[f].slots;
        for (size_t i = 0; i < region_sizes[f]; ++i) {
            Instruction ins;
            ins.op = kAllOpcodes[rng.next_below(kAllOpcodes.size())];
            switch (ins.op) {
                case Opcode::LoadConst:
                    ins.operand = static_cast<uint32_t>(rng.next_below(pool_size));
                    break;
                case Opcode::LoadVar:
                case Opcode::StoreVar:
                    ins.operand = static_cast<uint32_t>(rng.next_below(slots));
                    break;
                case Opcode::Jump:
                case Opcode::JumpIfFalse:
                    ins.operand = static_cast<uint32_t>(rng.next_below(total));
                    break;
                case Opcode::Call:
                    ins.operand = static_cast<uint32_t>(rng.next_below(function_count));
                    break;
                default:
                    break;
            }
            program.code.push_back(ins);
        }
    }
    return program;
}

std::vector<uint8_t> corrupt_image(const BytecodeProgram& program,
                                   const std::vector<uint8_t>& image, Rng& rng) {
    ImageLayout layout = image_layout(program);
    std::vector<uint8_t> bad = image;

    // Operand corruption only applies when some instruction carries one.
    std::vector<size_t> operand_sites;
    for (size_t i = 0; i < program.code.size(); ++i) {
        if (opcode_has_operand(program.code[i].op)) {
            operand_sites.push_back(layout.instruction_starts[i] + 1);
        }
    }

    size_t family = rng.next_below(operand_sites.empty() ? 8u : 9u);
    switch (family) {
        case 0: {  // cut anywhere: a mandatory field or instruction goes missing
            size_t keep = 1 + rng.next_below(bad.size() - 1);
            bad.resize(keep);
            break;
        }
        case 1:  // magic mismatch
            bad[rng.next_below(4)] ^= 0x5A;
            break;
        case 2:  // unsupported version
            bad[layout.version] = 0xFF;
            bad[layout.version + 1] = 0xFF;
            break;
        case 3:  // pool claims more entries than the image could hold
            put_u32(bad, layout.pool_count, 0xFFFFFFFFu);
            break;
        case 4: {  // trailing garbage
            size_t extra = 1 + rng.next_below(8);
            for (size_t i = 0; i < extra; ++i) {
                bad.push_back(static_cast<uint8_t>(rng.next_below(256)));
            }
            break;
        }
        case 5:  // unknown opcode
            bad[layout.instruction_starts[rng.next_below(
                layout.instruction_starts.size())]] = 0xFF;
            break;
        case 6:  // entry function index out of range
            put_u32(bad, layout.entry_function,
                    static_cast<uint32_t>(program.functions.size()));
            break;
        case 7:  // declared one more instruction than the image contains
            put_u32(bad, layout.code_len,
                    static_cast<uint32_t>(program.code.size()) + 1);
            break;
        default:  // operand far beyond any table it could index
            put_u32(bad, operand_sites[rng.next_below(operand_sites.size())],
                    0xFFFFFFFEu);
            break;
    }
    return bad;
}

}  // namespace gnc::testsupport
