// gnc: a stack-bytecode compiler, batch VM, and verification toolkit
// Copyright 2026 The gnc Authors.
// Licensed under the Apache License, Version 2.0.
#pragma once

#include <cstdint>

namespace gnc {

// Deterministic splittable generator. The standard <random> distributions are
// not pinned across library implementations, so every sample is drawn through
// the portable helpers below to keep seeds reproducible everywhere.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {
        // Warm up so nearby seeds diverge immediately.
        next_u64();
        next_u64();
    }

    // Independent stream derived from (seed, index), e.g. one per candidate.
    Rng(uint64_t seed, uint64_t stream) : Rng(mix(mix(seed) ^ mix(stream + 0x9e3779b97f4a7c15ULL))) {}

    uint64_t next_u64() {
        // SplitMix64 step.
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix(state_);
    }

    // Uniform in [0, bound), bound > 0. Rejection-sampled, so unbiased.
    uint64_t next_below(uint64_t bound) {
        const uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            uint64_t x = next_u64();
            if (x >= threshold) return x % bound;
        }
    }

    // Uniform in [lo, hi] inclusive.
    int64_t next_in_range(int64_t lo, int64_t hi) {
        uint64_t span = static_cast<uint64_t>(hi) - static_cast<uint64_t>(lo);
        if (span == UINT64_MAX) return static_cast<int64_t>(next_u64());
        return static_cast<int64_t>(static_cast<uint64_t>(lo) + next_below(span + 1));
    }

    // Uniform in [0, 1). 53 random bits, exactly representable.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    bool next_bernoulli(double p) {
        if (p <= 0.0) return false;
        if (p >= 1.0) return true;
        return next_double() < p;
    }

private:
    static uint64_t mix(uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    uint64_t state_;
};

}  // namespace gnc
