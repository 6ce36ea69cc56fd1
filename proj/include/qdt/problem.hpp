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
 * JSON problem documents.
 *
 *   {
 *     "actions": [ {"name": "A", "modes": ["a1", "a2"]}, ... ],
 *     "strategic_state": { "amplitudes": [[re, im], ...], "normalize": false },
 *     "prospects": [
 *       { "name": "p1", "amplitudes": [[re, im], ...], "support": {...} },
 *       { "name": "p2", "support": {"A": ["a1"], "B": ["b1", "b2"]},
 *         "phases": [[re, im], ...] }
 *     ],
 *     "machine": { "shots": 0, "seed": 0 }
 *   }
 *
 * Amplitude lists follow the flat basis order (first action slowest). A
 * prospect gives explicit amplitudes (optionally with a support to check
 * them against) or a support alone, which builds the uniform superposition
 * with optional per-member phases. Actions missing from a support map
 * contribute all of their modes. "normalize" defaults to false and
 * "machine" to exact evaluation. Unknown keys are rejected.
 */

#include <istream>
#include <string_view>

#include "qdt/action_algebra.hpp"
#include "qdt/decision.hpp"
#include "qdt/hilbert.hpp"
#include "qdt/machine.hpp"

namespace qdt {

struct ProblemDocument {
  ActionRing ring;
  StrategicState strategic;
  ProspectLattice lattice;
  MachineConfig machine;

  const MindSpace& space() const noexcept { return strategic.space(); }
};

/// SyntaxError (with line and column) for malformed JSON; ValidationError
/// carrying a JSON pointer to the offending field for everything else.
ProblemDocument parse_problem(std::string_view text);
ProblemDocument parse_problem(std::istream& in);

}  // namespace qdt
