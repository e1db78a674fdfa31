// gnc: a stack-bytecode compiler, batch VM, and verification toolkit
// Copyright 2026 The gnc Authors.
// Licensed under the Apache License, Version 2.0.
#pragma once

#include <string>

#include "gnc/batch.hpp"
#include "gnc/cost.hpp"
#include "gnc/router.hpp"
#include "gnc/verifier.hpp"

namespace gnc {

// JSON renderings for the machine-readable CLI output mode. Each returns a
// serialized object; numbers keep full precision, enums become their names.

std::string exec_result_json(const ExecResult& result);
std::string batch_result_json(const BatchResult& result);
std::string verification_report_json(const VerificationReport& report);
std::string failure_summary_json(const FailureSummary& summary);
std::string alg2_outcome_json(const Alg2Outcome& outcome);
std::string routing_outcome_json(const RoutingOutcome& outcome);
std::string calibration_result_json(const CalibrationResult& result);
std::string cost_report_json(const CostReport& report);

}  // namespace gnc
