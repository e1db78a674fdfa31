// gnc: a stack-bytecode compiler, batch VM, and verification toolkit
// Copyright 2026 The gnc Authors.
// Licensed under the Apache License, Version 2.0.
#include "gnc/batch.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <thread>

namespace gnc {

namespace {

struct UnitStats {
    uint64_t divergent = 0;
    uint64_t active = 0;
    uint64_t cycles = 0;
};

// One (test, warp) unit: lockstep-executes the warp's lanes on that test and
// writes each lane's result into out[lane - lane_begin].
UnitStats run_unit(const std::vector<BytecodeProgram>& programs, const TestCase& test,
                   size_t lane_begin, size_t lane_end, const VmLimits& limits,
                   ExecResult* out) {
    std::vector<VmState> lanes;
    lanes.reserve(lane_end - lane_begin);
    for (size_t i = lane_begin; i < lane_end; ++i)
        lanes.emplace_back(programs[i], test.args, limits);

    UnitStats stats;
    std::array<uint32_t, 256> counts{};

    for (;;) {
        // Census of the opcodes the active lanes are about to execute. A lane
        // whose pc has run off the code reports 0xFF and will trap this cycle.
        uint32_t active = 0;
        counts.fill(0);
        for (const auto& lane : lanes) {
            if (lane.finished()) continue;
            counts[lane.current_opcode_byte()]++;
            active++;
        }
        if (active == 0) break;

        // Lanes not matching the most common opcode count as divergent; on a
        // tie the lower opcode value is the majority, but either choice
        // yields the same divergent count.
        uint32_t majority_count = 0;
        for (uint32_t count : counts) majority_count = std::max(majority_count, count);

        stats.cycles++;
        stats.active += active;
        stats.divergent += active - majority_count;

        for (auto& lane : lanes) {
            if (!lane.finished()) lane.step();
        }
    }

    for (size_t i = 0; i < lanes.size(); ++i) out[i] = lanes[i].result();
    return stats;
}

}  // namespace

BatchResult execute_batch(const std::vector<BytecodeProgram>& programs,
                          const TestSuite& suite, const BatchOptions& options) {
    const size_t k = programs.size();
    const uint32_t width = options.warp_width == 0 ? 1 : options.warp_width;
    const size_t warps = (k + width - 1) / width;

    BatchResult batch;
    batch.results.assign(k, {});
    if (k == 0 || suite.empty()) return batch;
    for (auto& row : batch.results) row.assign(suite.size(), {});

    // Work units are (test, warp) pairs; every unit touches a disjoint slice
    // of the result matrix, so workers need no locks.
    const size_t units = suite.size() * warps;
    std::vector<UnitStats> stats(units);

    auto run_one = [&](size_t unit) {
        size_t test_idx = unit / warps;
        size_t warp_idx = unit % warps;
        size_t lane_begin = warp_idx * width;
        size_t lane_end = std::min(lane_begin + width, k);

        std::vector<ExecResult> column(lane_end - lane_begin);
        stats[unit] = run_unit(programs, suite[test_idx], lane_begin, lane_end,
                               options.limits, column.data());
        for (size_t i = lane_begin; i < lane_end; ++i)
            batch.results[i][test_idx] = column[i - lane_begin];
    };

    uint32_t workers = options.workers == 0 ? 1 : options.workers;
    workers = static_cast<uint32_t>(std::min<size_t>(workers, units));

    if (workers <= 1) {
        for (size_t unit = 0; unit < units; ++unit) run_one(unit);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (uint32_t w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (;;) {
                    size_t unit = next.fetch_add(1);
                    if (unit >= units) return;
                    run_one(unit);
                }
            });
        }
        for (auto& t : pool) t.join();
    }

    uint64_t divergent = 0, active = 0;
    for (const auto& s : stats) {
        divergent += s.divergent;
        active += s.active;
        batch.total_lockstep_cycles += s.cycles;
    }
    batch.divergence =
        active == 0 ? 0.0 : static_cast<double>(divergent) / static_cast<double>(active);
    return batch;
}

}  // namespace gnc
