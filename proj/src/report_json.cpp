// gnc: a stack-bytecode compiler, batch VM, and verification toolkit
// Copyright 2026 The gnc Authors.
// Licensed under the Apache License, Version 2.0.
#include "gnc/report_json.hpp"

#include <json.hpp>

namespace gnc {

namespace {

using nlohmann::json;

json exec_result_to_json(const ExecResult& r) {
    json j;
    j["status"] = exec_status_name(r.status);
    j["steps"] = r.steps;
    if (r.status == ExecStatus::Ok) j["value"] = r.value;
    if (r.trap) j["trap"] = trap_kind_name(*r.trap);
    return j;
}

json batch_result_to_json(const BatchResult& b) {
    json rows = json::array();
    for (const auto& program_row : b.results) {
        json row = json::array();
        for (const auto& r : program_row) row.push_back(exec_result_to_json(r));
        rows.push_back(std::move(row));
    }
    return json{{"results", std::move(rows)},
                {"divergence", b.divergence},
                {"total_lockstep_cycles", b.total_lockstep_cycles}};
}

json verdict_to_json(const Verdict& v) {
    json j;
    j["kind"] = verdict_kind_name(v.kind);
    switch (v.kind) {
    case VerdictKind::AllPassed:
        j["total_steps"] = v.total_steps;
        break;
    case VerdictKind::Failed:
        j["test_index"] = v.test_index;
        j["got"] = v.got;
        j["expected"] = v.expected;
        break;
    case VerdictKind::Trapped:
        j["test_index"] = v.test_index;
        if (v.trap) j["trap"] = trap_kind_name(*v.trap);
        break;
    case VerdictKind::TimedOut:
        j["test_index"] = v.test_index;
        break;
    }
    return j;
}

json verification_report_to_json(const VerificationReport& r) {
    json verdicts = json::array();
    for (const auto& v : r.verdicts) verdicts.push_back(verdict_to_json(v));
    json j;
    j["verdicts"] = std::move(verdicts);
    j["verified"] = r.verified;
    if (r.best) j["best"] = *r.best;
    j["rewards"] = r.rewards;
    j["divergence"] = r.divergence;
    j["total_lockstep_cycles"] = r.total_lockstep_cycles;
    return j;
}

json failure_summary_to_json(const FailureSummary& s) {
    json by_category = json::object();
    for (const auto& [kind, count] : s.by_category) {
        by_category[verdict_kind_name(kind)] = count;
    }
    json by_trap = json::object();
    for (const auto& [kind, count] : s.by_trap) {
        by_trap[trap_kind_name(kind)] = count;
    }
    json j;
    j["by_category"] = std::move(by_category);
    j["by_trap"] = std::move(by_trap);
    if (s.modal_first_failure) j["modal_first_failure"] = *s.modal_first_failure;
    return j;
}

json cost_report_to_json(const CostReport& r) {
    json entries = json::array();
    for (const auto& e : r.entries) {
        entries.push_back(json{{"name", e.name},
                               {"value", e.value},
                               {"unit", e.unit},
                               {"formula", e.formula}});
    }
    return json{{"title", r.title}, {"entries", std::move(entries)}};
}

std::string dump(const json& j) { return j.dump(2); }

}  // namespace

std::string exec_result_json(const ExecResult& result) {
    return dump(exec_result_to_json(result));
}

std::string batch_result_json(const BatchResult& result) {
    return dump(batch_result_to_json(result));
}

std::string verification_report_json(const VerificationReport& report) {
    return dump(verification_report_to_json(report));
}

std::string failure_summary_json(const FailureSummary& summary) {
    return dump(failure_summary_to_json(summary));
}

std::string alg2_outcome_json(const Alg2Outcome& outcome) {
    json j;
    j["success"] = outcome.success;
    if (outcome.best_index) j["best_index"] = *outcome.best_index;
    j["report"] = verification_report_to_json(outcome.report);
    j["failures"] = failure_summary_to_json(outcome.failures);
    j["generation_ms"] = outcome.generation_ms;
    j["verification_ms"] = outcome.verification_ms;
    return dump(j);
}

std::string routing_outcome_json(const RoutingOutcome& outcome) {
    json j;
    j["path"] = route_path_name(outcome.path);
    j["score"] = outcome.score;
    j["routing_ms"] = outcome.routing_ms;
    j["generation_ms"] = outcome.generation_ms;
    j["verification_ms"] = outcome.verification_ms;
    j["traditional_ms"] = outcome.traditional_ms;
    j["total_ms"] = outcome.total_ms();
    return dump(j);
}

std::string calibration_result_json(const CalibrationResult& result) {
    json rows = json::array();
    for (const auto& row : result.rows) {
        rows.push_back(json{{"name", row.name},
                            {"score", row.score},
                            {"neural_succeeded", row.neural_succeeded}});
    }
    json j;
    j["theta"] = result.theta;
    j["rows"] = std::move(rows);
    j["misclassified"] = result.misclassified;
    return dump(j);
}

std::string cost_report_json(const CostReport& report) {
    return dump(cost_report_to_json(report));
}

}  // namespace gnc
