// Copyright 2026 The QDT Engine Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

/**
 * @file
 * Human-readable tables (rounded to 6 decimals) and machine-readable JSON
 * (every double at round-trip precision) for the CLI commands.
 *
 * Conventions shared by both forms: basis states are identified by their
 * 0-based flat index; prospects by their 1-based lattice position.
 */

#include <ostream>
#include <string>

#include "json.hpp"
#include "qdt/decision.hpp"
#include "qdt/machine.hpp"
#include "qdt/problem.hpp"

namespace qdt::report {

/// Fixed 6-decimal rendering; values that round to zero print unsigned.
std::string fixed6(double x, bool explicit_sign = false);

nlohmann::json problem_summary_json(const ProblemDocument& doc);
nlohmann::json basis_json(const ActionRing& ring);
nlohmann::json decision_json(const DecisionRecord& record);
nlohmann::json run_json(const MachineRun& run, const MachineConfig& cfg);
nlohmann::json explain_json(const ProblemDocument& doc);

void write_problem_summary(std::ostream& out, const ProblemDocument& doc);
void write_basis(std::ostream& out, const ActionRing& ring);
/// Optimal prospect, ordering and the normalized p/p0/q table; raw
/// columns too when `with_raw`.
void write_solution(std::ostream& out, const DecisionRecord& record, bool with_raw);
/// Raw and normalized tables with column sums.
void write_decomposition(std::ostream& out, const DecisionRecord& record);
void write_run(std::ostream& out, const MachineRun& run, const MachineConfig& cfg,
               const ActionRing& ring);
void write_explain(std::ostream& out, const ProblemDocument& doc);

}  // namespace qdt::report
