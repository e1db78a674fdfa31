// gnc: a stack-bytecode compiler, batch VM, and verification toolkit
// Copyright 2026 The gnc Authors.
// Licensed under the Apache License, Version 2.0.
#include "gnc/generator.hpp"

#include <stdexcept>

#include "gnc/codec.hpp"
#include "gnc/rng.hpp"

namespace gnc {

namespace {

constexpr Opcode kAllOpcodes[] = {
    Opcode::LoadConst, Opcode::LoadVar,  Opcode::StoreVar,    Opcode::Add,
    Opcode::Sub,       Opcode::Mul,      Opcode::Div,         Opcode::CompareLt,
    Opcode::Jump,      Opcode::JumpIfFalse, Opcode::Call,     Opcode::Return,
};

// Number of valid operand values for `op` at instruction position `index`,
// or 0 when the opcode cannot appear there at all.
uint64_t operand_range(const BytecodeProgram& p, Opcode op, uint32_t index) {
    switch (op) {
    case Opcode::LoadConst: return p.pool.size();
    case Opcode::LoadVar:
    case Opcode::StoreVar: {
        auto slots = region_slots(p, index);
        return slots ? *slots : 0;
    }
    case Opcode::Jump:
    case Opcode::JumpIfFalse: return p.code.size();
    case Opcode::Call: return p.functions.size();
    default: return 1;  // operand-free; exactly one (empty) choice
    }
}

bool substitute_opcode(BytecodeProgram& p, Rng& rng) {
    if (p.code.empty()) return false;
    uint32_t site = static_cast<uint32_t>(rng.next_below(p.code.size()));

    Opcode options[12];
    size_t n = 0;
    for (Opcode op : kAllOpcodes) {
        if (op == p.code[site].op) continue;
        if (operand_range(p, op, site) == 0) continue;
        options[n++] = op;
    }
    if (n == 0) return false;

    Opcode chosen = options[rng.next_below(n)];
    Instruction inst{chosen, 0};
    if (opcode_has_operand(chosen))
        inst.operand = static_cast<uint32_t>(rng.next_below(operand_range(p, chosen, site)));
    p.code[site] = inst;
    return true;
}

bool perturb_operand(BytecodeProgram& p, Rng& rng) {
    // A site qualifies when it carries an operand with at least two valid
    // values; a bounded number of probes keeps the draw sequence finite.
    for (int probe = 0; probe < 16; ++probe) {
        if (p.code.empty()) return false;
        uint32_t site = static_cast<uint32_t>(rng.next_below(p.code.size()));
        Instruction& inst = p.code[site];
        if (!opcode_has_operand(inst.op)) continue;
        uint64_t range = operand_range(p, inst.op, site);
        if (range < 2) continue;
        uint32_t fresh;
        do {
            fresh = static_cast<uint32_t>(rng.next_below(range));
        } while (fresh == inst.operand);
        inst.operand = fresh;
        return true;
    }
    return false;
}

bool delete_instruction(BytecodeProgram& p, Rng& rng) {
    if (p.code.size() < 2) return false;
    uint32_t site = static_cast<uint32_t>(rng.next_below(p.code.size()));
    p.code.erase(p.code.begin() + site);
    uint32_t last = static_cast<uint32_t>(p.code.size() - 1);

    // Targets past the hole shift down; targets at the hole now name its
    // successor, clamped when the hole was the final instruction.
    auto fix = [&](uint32_t target) {
        if (target > site) return target - 1;
        if (target == site) return std::min(site, last);
        return target;
    };
    for (auto& inst : p.code)
        if (inst.op == Opcode::Jump || inst.op == Opcode::JumpIfFalse)
            inst.operand = fix(inst.operand);
    for (auto& f : p.functions) f.entry = fix(f.entry);
    return true;
}

bool insert_instruction(BytecodeProgram& p, Rng& rng) {
    uint32_t pos = static_cast<uint32_t>(rng.next_below(p.code.size() + 1));
    for (auto& inst : p.code)
        if ((inst.op == Opcode::Jump || inst.op == Opcode::JumpIfFalse) &&
            inst.operand >= pos)
            inst.operand++;
    for (auto& f : p.functions)
        if (f.entry >= pos) f.entry++;
    p.code.insert(p.code.begin() + pos, Instruction{Opcode::Return, 0});

    Opcode options[12];
    size_t n = 0;
    for (Opcode op : kAllOpcodes) {
        if (operand_range(p, op, pos) == 0) continue;
        options[n++] = op;
    }
    Opcode chosen = options[rng.next_below(n)];  // Return is always present
    Instruction inst{chosen, 0};
    if (opcode_has_operand(chosen))
        inst.operand = static_cast<uint32_t>(rng.next_below(operand_range(p, chosen, pos)));
    p.code[pos] = inst;
    return true;
}

bool passes_suite(const BytecodeProgram& p, const TestSuite& suite, const VmLimits& limits) {
    for (const auto& test : suite) {
        ExecResult r = execute(p, test.args, limits);
        if (r.status != ExecStatus::Ok || r.value != test.expected) return false;
    }
    return true;
}

}  // namespace

const char* mutation_kind_name(MutationKind kind) {
    switch (kind) {
    case MutationKind::OpcodeSubstitution: return "opcode-substitution";
    case MutationKind::OperandPerturbation: return "operand-perturbation";
    case MutationKind::Deletion: return "deletion";
    case MutationKind::Insertion: return "insertion";
    }
    return "?";
}

BytecodeProgram mutate_once(BytecodeProgram p, Rng& rng, const MutationWeights& weights,
                            MutationKind& applied) {
    const double w[4] = {weights.opcode_substitution, weights.operand_perturbation,
                         weights.deletion, weights.insertion};
    double total = w[0] + w[1] + w[2] + w[3];
    if (total <= 0.0) throw std::invalid_argument("mutation weights must not all be zero");

    for (int attempt = 0; attempt < 16; ++attempt) {
        double roll = rng.next_double() * total;
        int kind = 0;
        while (kind < 3 && roll >= w[kind]) roll -= w[kind], ++kind;

        bool ok = false;
        switch (static_cast<MutationKind>(kind)) {
        case MutationKind::OpcodeSubstitution: ok = substitute_opcode(p, rng); break;
        case MutationKind::OperandPerturbation: ok = perturb_operand(p, rng); break;
        case MutationKind::Deletion: ok = delete_instruction(p, rng); break;
        case MutationKind::Insertion: ok = insert_instruction(p, rng); break;
        }
        if (ok) {
            applied = static_cast<MutationKind>(kind);
            return p;
        }
    }
    // Insertion cannot fail; force it rather than looping forever on a
    // pathological weight vector.
    insert_instruction(p, rng);
    applied = MutationKind::Insertion;
    return p;
}

CandidateBatch sample_candidates_from(const BytecodeProgram& reference, std::string source_id,
                                      size_t k, const GeneratorConfig& cfg) {
    if (cfg.p_correct < 0.0 || cfg.p_correct > 1.0)
        throw std::invalid_argument("p_correct must lie in [0, 1]");
    if (cfg.kill_suite && !passes_suite(reference, *cfg.kill_suite, cfg.kill_limits))
        throw std::invalid_argument(
            "kill suite rejects the reference program; its expectations are wrong");

    CandidateBatch batch;
    batch.source_id = std::move(source_id);
    batch.reference = reference;
    batch.candidates.reserve(k);
    batch.provenance.reserve(k);

    for (size_t i = 0; i < k; ++i) {
        Rng rng(cfg.seed, i);
        bool clean = cfg.mode == GeneratorMode::Reference || rng.next_bernoulli(cfg.p_correct);
        if (clean) {
            batch.candidates.push_back(reference);
            batch.provenance.push_back({true, {}});
            continue;
        }

        for (int attempt = 0;; ++attempt) {
            if (attempt >= 64)
                throw std::runtime_error(
                    "no mutation the kill suite rejects was found in 64 attempts");

            BytecodeProgram candidate = reference;
            Provenance prov{false, {}};
            uint64_t count = 1 + rng.next_below(4);
            for (uint64_t m = 0; m < count; ++m) {
                MutationKind applied;
                candidate = mutate_once(std::move(candidate), rng, cfg.weights, applied);
                prov.mutations.push_back(applied);
            }

            // The mutations happened to preserve behavior on the suite; draw
            // a fresh corruption so "incorrect candidate" stays exact.
            if (cfg.kill_suite && passes_suite(candidate, *cfg.kill_suite, cfg.kill_limits))
                continue;

            batch.candidates.push_back(std::move(candidate));
            batch.provenance.push_back(std::move(prov));
            break;
        }
    }
    return batch;
}

CandidateBatch sample_candidates(std::string_view source, size_t k, const GeneratorConfig& cfg,
                                 const CompileOptions& compile_options) {
    BytecodeProgram reference = compile_reference(source, compile_options);
    return sample_candidates_from(reference, "<source>", k, cfg);
}

}  // namespace gnc
