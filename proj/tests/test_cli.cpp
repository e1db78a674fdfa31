// gnc: a stack-bytecode compiler, batch VM, and verification toolkit
// Copyright 2026 The gnc Authors.
// Licensed under the Apache License, Version 2.0.
//
// Drives the installed binary through a shell, end to end: real files, real
// argv, real exit codes. GNC_CLI_PATH is injected by the build.
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include "gnc/router.hpp"

namespace fs = std::filesystem;

namespace {

struct CliResult {
    int exit_code = -1;
    std::string output;  // stdout and stderr interleaved

    bool contains(const std::string& needle) const {
        return output.find(needle) != std::string::npos;
    }
};

CliResult run_cli(const std::string& args, const std::string& env = "") {
    std::string cmd = env.empty() ? "" : env + " ";
    cmd += std::string(GNC_CLI_PATH) + " " + args + " 2>&1";
    CliResult result;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    size_t n = 0;
    while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) {
        result.output.append(buf, n);
    }
    int raw = pclose(pipe);
    result.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return result;
}

// Every test writes into its own subdirectory so reruns and parallel ctest
// invocations cannot collide.
fs::path scratch_dir(const std::string& name) {
    fs::path dir = fs::path("cli_scratch") / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

void write_text(const fs::path& path, const std::string& text) {
    std::ofstream out(path);
    out << text;
}

const char* kSquare = "fn main(n: int) -> int { return n * n; }\n";
const char* kSquareSuite = "args: 0 => 0\nargs: 2 => 4\nargs: 9 => 81\n";
const char* kSpin =
    "fn main() -> int { let i = 0; while (0 < 1) { i = i + 1; } return i; }\n";

}  // namespace

TEST_CASE("cli: compile then run") {
    fs::path dir = scratch_dir("compile_run");
    write_text(dir / "square.gn", kSquare);

    CliResult c = run_cli("compile " + (dir / "square.gn").string() + " -o " +
                          (dir / "square.gnbc").string());
    CHECK(c.exit_code == 0);
    CHECK(fs::exists(dir / "square.gnbc"));

    CliResult r = run_cli("run " + (dir / "square.gnbc").string() + " 7");
    CHECK(r.exit_code == 0);
    CHECK(r.contains("Ok 49\n"));
    CHECK(r.contains("steps "));
}

TEST_CASE("cli: compile defaults the output to the source stem") {
    fs::path dir = scratch_dir("default_out");
    write_text(dir / "prog.gn", kSquare);
    CliResult c = run_cli("compile " + (dir / "prog.gn").string());
    CHECK(c.exit_code == 0);
    CHECK(fs::exists(dir / "prog.gnbc"));
}

TEST_CASE("cli: traps exit with code 2") {
    fs::path dir = scratch_dir("trap");
    write_text(dir / "div.gn", "fn main(n: int) -> int { return 10 / n; }\n");
    REQUIRE(run_cli("compile " + (dir / "div.gn").string()).exit_code == 0);

    CliResult r = run_cli("run " + (dir / "div.gnbc").string() + " 0");
    CHECK(r.exit_code == 2);
    CHECK(r.contains("Trap DivideByZero\n"));

    CliResult ok = run_cli("run " + (dir / "div.gnbc").string() + " 5");
    CHECK(ok.exit_code == 0);
    CHECK(ok.contains("Ok 2\n"));
}

TEST_CASE("cli: fuel exhaustion reports a timeout") {
    fs::path dir = scratch_dir("timeout");
    write_text(dir / "spin.gn", kSpin);
    REQUIRE(run_cli("compile " + (dir / "spin.gn").string()).exit_code == 0);

    CliResult r = run_cli("run " + (dir / "spin.gnbc").string() + " --fuel 100");
    CHECK(r.exit_code == 2);
    CHECK(r.contains("Timeout\n"));
    CHECK(r.contains("steps 100\n"));
}

TEST_CASE("cli: compile errors are gcc-style diagnostics on exit 1") {
    fs::path dir = scratch_dir("diag");
    write_text(dir / "bad.gn", "fn main() -> int { return x; }\n");
    CliResult r = run_cli("compile " + (dir / "bad.gn").string());
    CHECK(r.exit_code == 1);
    CHECK(r.contains("bad.gn:1:27: error: undefined variable `x`"));
}

TEST_CASE("cli: --emit prints intermediates instead of writing bytecode") {
    fs::path dir = scratch_dir("emit");
    write_text(dir / "sq.gn", kSquare);
    std::string src = (dir / "sq.gn").string();

    CliResult tokens = run_cli("compile " + src + " --emit tokens");
    CHECK(tokens.exit_code == 0);
    CHECK(tokens.contains("1:1  keyword  fn\n"));
    CHECK(tokens.contains("identifier  main\n"));
    CHECK(tokens.contains("operator  ->\n"));
    CHECK(tokens.contains("end of file\n"));

    CliResult ast = run_cli("compile " + src + " --emit ast");
    CHECK(ast.exit_code == 0);
    CHECK(ast.contains("(fn main"));
    CHECK(ast.contains(":int"));

    CliResult ir = run_cli("compile " + src + " --emit ir");
    CHECK(ir.exit_code == 0);
    CHECK(ir.contains("fn main arity=1"));
    CHECK(ir.contains("b0:"));
    CHECK(ir.contains("mul"));

    CHECK_FALSE(fs::exists(dir / "sq.gnbc"));
}

TEST_CASE("cli: batch runs a directory against a suite") {
    fs::path dir = scratch_dir("batch");
    write_text(dir / "a.gn", kSquare);
    write_text(dir / "b.gn", kSquare);
    REQUIRE(run_cli("compile " + (dir / "a.gn").string()).exit_code == 0);
    REQUIRE(run_cli("compile " + (dir / "b.gn").string()).exit_code == 0);
    write_text(dir / "suite.txt", kSquareSuite);

    CliResult r = run_cli("batch " + dir.string() + " --suite " +
                          (dir / "suite.txt").string());
    CHECK(r.exit_code == 0);
    CHECK(r.contains("a.gnbc"));
    CHECK(r.contains("b.gnbc"));
    CHECK(r.contains("3/3 passed"));
    CHECK(r.contains("..."));
    CHECK(r.contains("divergence 0.000\n"));  // identical programs in lockstep
    CHECK(r.contains("cycles "));
}

TEST_CASE("cli: batch marks failures traps and timeouts per test") {
    fs::path dir = scratch_dir("batch_mixed");
    write_text(dir / "wrong.gn", "fn main(n: int) -> int { return n + n; }\n");
    REQUIRE(run_cli("compile " + (dir / "wrong.gn").string()).exit_code == 0);
    write_text(dir / "suite.txt", kSquareSuite);

    CliResult r = run_cli("batch " + dir.string() + " --suite " +
                          (dir / "suite.txt").string());
    CHECK(r.exit_code == 0);
    // n + n matches n * n at 0 and 2 but not at 9.
    CHECK(r.contains("2/3 passed"));
    CHECK(r.contains("..F"));
}

TEST_CASE("cli: verify reports the best passing candidate") {
    fs::path dir = scratch_dir("verify_ok");
    write_text(dir / "sq.gn", kSquare);
    write_text(dir / "suite.txt", kSquareSuite);

    CliResult r = run_cli("verify " + (dir / "sq.gn").string() + " --suite " +
                          (dir / "suite.txt").string() + " --k 8 --p-correct 1");
    CHECK(r.exit_code == 0);
    CHECK(r.contains("candidates 8  verified 8\n"));
    CHECK(r.contains("best candidate 0"));
    CHECK(r.contains("reward "));
    CHECK(r.contains("divergence "));
    CHECK(r.contains("generation "));
}

TEST_CASE("cli: verify exits 3 when no candidate survives") {
    fs::path dir = scratch_dir("verify_none");
    write_text(dir / "sq.gn", kSquare);
    write_text(dir / "suite.txt", kSquareSuite);

    CliResult r = run_cli("verify " + (dir / "sq.gn").string() + " --suite " +
                          (dir / "suite.txt").string() +
                          " --k 6 --p-correct 0 --kill-verified");
    CHECK(r.exit_code == 3);
    CHECK(r.contains("no candidate passed the suite\n"));
    CHECK((r.contains("Failed") || r.contains("Trapped") || r.contains("TimedOut")));
}

TEST_CASE("cli: verify derives a suite from the reference when none is given") {
    fs::path dir = scratch_dir("verify_derived");
    write_text(dir / "sq.gn", kSquare);
    CliResult r = run_cli("verify " + (dir / "sq.gn").string() +
                          " --k 4 --p-correct 1");
    CHECK(r.exit_code == 0);
    CHECK(r.contains("verified 4\n"));
}

TEST_CASE("cli: verify --trials compares empirical and theoretical rates") {
    fs::path dir = scratch_dir("verify_trials");
    write_text(dir / "sq.gn", kSquare);
    write_text(dir / "suite.txt", kSquareSuite);

    CliResult r = run_cli("verify " + (dir / "sq.gn").string() + " --suite " +
                          (dir / "suite.txt").string() +
                          " --k 2 --p-correct 0.5 --trials 20");
    CHECK(r.exit_code == 0);
    CHECK(r.contains("trials 20  successes "));
    CHECK(r.contains("empirical "));
    CHECK(r.contains("theoretical 0.75\n"));
}

TEST_CASE("cli: route announces which path produced the bytecode") {
    fs::path dir = scratch_dir("route");
    write_text(dir / "sq.gn", kSquare);
    write_text(dir / "suite.txt", kSquareSuite);
    std::string base = "route " + (dir / "sq.gn").string() + " --suite " +
                       (dir / "suite.txt").string();

    CliResult accepted = run_cli(base + " --p-correct 1 --k-fast 8");
    CHECK(accepted.exit_code == 0);
    CHECK(accepted.contains("sampling path accepted a candidate\n"));
    CHECK(accepted.contains("score 18  threshold 25\n"));
    CHECK(accepted.contains("total "));
    CHECK(accepted.contains("ms (routing "));

    CliResult fell_back = run_cli(base + " --p-correct 0 --k-fast 8");
    CHECK(fell_back.exit_code == 0);
    CHECK(fell_back.contains("fell back to traditional\n"));

    CliResult traditional = run_cli(base + " --theta 1");
    CHECK(traditional.exit_code == 0);
    CHECK(traditional.contains("routed traditional\n"));
    CHECK(traditional.contains("threshold 1\n"));
}

TEST_CASE("cli: routed bytecode lands in the requested file and runs") {
    fs::path dir = scratch_dir("route_out");
    write_text(dir / "sq.gn", kSquare);
    write_text(dir / "suite.txt", kSquareSuite);

    CliResult r = run_cli("route " + (dir / "sq.gn").string() + " --suite " +
                          (dir / "suite.txt").string() +
                          " --p-correct 0 -o " + (dir / "out.gnbc").string());
    CHECK(r.exit_code == 0);
    REQUIRE(fs::exists(dir / "out.gnbc"));

    CliResult run = run_cli("run " + (dir / "out.gnbc").string() + " 6");
    CHECK(run.exit_code == 0);
    CHECK(run.contains("Ok 36\n"));
}

TEST_CASE("cli: calibrate fits a threshold over a corpus") {
    fs::path dir = scratch_dir("calibrate");
    write_text(dir / "sq.gn", kSquare);
    write_text(dir / "sq.suite", kSquareSuite);
    write_text(dir / "dbl.gn", "fn main(n: int) -> int { return n + n; }\n");
    write_text(dir / "dbl.suite", "args: 3 => 6\nargs: 5 => 10\n");
    write_text(dir / "orphan.gn", kSquare);  // no suite; must be skipped

    CliResult r = run_cli("calibrate " + dir.string() + " --p-correct 1 -o " +
                          (dir / "fitted.cfg").string());
    CHECK(r.exit_code == 0);
    CHECK(r.contains("dbl"));
    CHECK(r.contains("sq"));
    CHECK(r.contains("skipping orphan.gn"));
    CHECK(r.contains("sampling-ok"));
    CHECK(r.contains("misclassified 0/2\n"));

    REQUIRE(fs::exists(dir / "fitted.cfg"));
    gnc::RouterConfig fitted =
        gnc::load_router_config_file((dir / "fitted.cfg").string());
    CHECK(fitted.theta_simple == 19.0);  // one past the costlier program's 18
}

TEST_CASE("cli: cost presets print the headline figures") {
    CliResult hybrid = run_cli("cost --preset paper-section-5.2");
    CHECK(hybrid.exit_code == 0);
    CHECK(hybrid.contains("hybrid routing latency"));
    CHECK(hybrid.contains("t_hybrid"));
    CHECK(hybrid.contains("6.16 ms"));

    CliResult speedup = run_cli("cost --preset paper-section-4.4");
    CHECK(speedup.exit_code == 0);
    CHECK(speedup.contains("speedup_neural"));
    CHECK(speedup.contains("400 x"));

    CliResult unknown = run_cli("cost --preset paper-section-9.9");
    CHECK(unknown.exit_code != 0);
}

TEST_CASE("cli: cost --set overrides single parameters") {
    CliResult r = run_cli("cost --set k=46 --set p_correct=0.1");
    CHECK(r.exit_code == 0);
    CHECK(r.contains("p_success"));
    CHECK(r.contains("0.992145"));
    CHECK(r.contains("k_approx"));

    CliResult typo = run_cli("cost --set t_gen=10");
    CHECK(typo.exit_code == 1);
    CHECK(typo.contains("unknown cost parameter `t_gen`"));
}

TEST_CASE("cli: --format json emits machine-readable reports") {
    fs::path dir = scratch_dir("json");
    write_text(dir / "sq.gn", kSquare);
    REQUIRE(run_cli("compile " + (dir / "sq.gn").string()).exit_code == 0);

    CliResult r = run_cli("run " + (dir / "sq.gnbc").string() +
                          " 7 --format json");
    CHECK(r.exit_code == 0);
    nlohmann::json parsed = nlohmann::json::parse(r.output);
    CHECK(parsed["status"] == "Ok");
    CHECK(parsed["value"] == 49);
    CHECK(parsed["steps"].get<uint64_t>() > 0);

    CliResult cost = run_cli("cost --preset paper-section-6.2 --format json");
    CHECK(cost.exit_code == 0);
    nlohmann::json cost_parsed = nlohmann::json::parse(cost.output);
    CHECK(cost_parsed["title"] == "energy per program");
    CHECK(cost_parsed["entries"].is_array());
}

TEST_CASE("cli: GNC_SEED matches the --seed flag") {
    fs::path dir = scratch_dir("seed_env");
    write_text(dir / "sq.gn", kSquare);
    write_text(dir / "suite.txt", kSquareSuite);
    std::string base = "verify " + (dir / "sq.gn").string() + " --suite " +
                       (dir / "suite.txt").string() +
                       " --k 3 --p-correct 0.5 --trials 15";

    CliResult with_env = run_cli(base, "GNC_SEED=123");
    CliResult with_flag = run_cli(base + " --seed 123");
    CliResult other_seed = run_cli(base + " --seed 777");

    CHECK(with_env.exit_code == 0);
    CHECK(with_env.output == with_flag.output);
    // 15 trials at p = 7/8 virtually never repeat exactly across seeds; if
    // this ever flakes the seeds below are free to change.
    CHECK(with_env.output != other_seed.output);
}

TEST_CASE("cli: a missing subcommand or file is a usage error") {
    CHECK(run_cli("").exit_code != 0);
    CliResult missing = run_cli("compile definitely_missing.gn");
    CHECK(missing.exit_code == 1);
    CHECK(missing.contains("cannot open"));
}
