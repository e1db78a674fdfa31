// gnc: a stack-bytecode compiler, batch VM, and verification toolkit
// Copyright 2026 The gnc Authors.
// Licensed under the Apache License, Version 2.0.
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gnc/bytecode.hpp"
#include "gnc/compile.hpp"
#include "gnc/testsuite.hpp"
#include "gnc/vm.hpp"

namespace gnc {

// Stand-in for a learned bytecode generator. Candidates are the reference
// compilation with probability p_correct, otherwise a structurally valid
// corruption of it, which makes per-candidate correctness a Bernoulli draw:
// exactly the process the sampling mathematics assumes.
enum class GeneratorMode {
    Reference,   // every candidate is the reference program
    Stochastic,  // Bernoulli(p_correct) clean, otherwise mutated
};

enum class MutationKind {
    OpcodeSubstitution,
    OperandPerturbation,
    Deletion,
    Insertion,
};

const char* mutation_kind_name(MutationKind kind);

struct MutationWeights {
    double opcode_substitution = 1.0;
    double operand_perturbation = 1.0;
    double deletion = 1.0;
    double insertion = 1.0;
};

struct GeneratorConfig {
    GeneratorMode mode = GeneratorMode::Stochastic;
    double p_correct = 0.5;
    MutationWeights weights;
    uint64_t seed = 0;
    // When present, every mutated candidate is re-drawn until this suite
    // rejects it. Statistical tests use it so that observed success is
    // exactly 1 - (1 - p_correct)^k rather than a lower bound.
    std::optional<TestSuite> kill_suite;
    VmLimits kill_limits;
};

struct Provenance {
    bool clean = true;
    std::vector<MutationKind> mutations;  // in application order
};

struct CandidateBatch {
    std::string source_id;
    BytecodeProgram reference;
    std::vector<BytecodeProgram> candidates;
    std::vector<Provenance> provenance;
};

// Applies one random structure-preserving mutation; used by sample_candidates
// and exposed for property tests. Jump targets and function entries are
// re-indexed (or clamped) so the result still satisfies every BytecodeProgram
// invariant.
BytecodeProgram mutate_once(BytecodeProgram p, class Rng& rng, const MutationWeights& weights,
                            MutationKind& applied);

// Draws k candidates from the generator, deterministically for a fixed
// (reference, k, cfg): candidate i consumes its own RNG stream (seed, i).
CandidateBatch sample_candidates_from(const BytecodeProgram& reference, std::string source_id,
                                      size_t k, const GeneratorConfig& cfg);

// Convenience wrapper compiling the source first; compile errors propagate.
CandidateBatch sample_candidates(std::string_view source, size_t k, const GeneratorConfig& cfg,
                                 const CompileOptions& compile_options = {});

}  // namespace gnc
