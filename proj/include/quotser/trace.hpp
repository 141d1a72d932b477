/*
   Copyright 2026 The quotser authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/*
 * trace.hpp
 * ---------
 * Provenance record for a computation: an ordered list of rule applications,
 * each referring to earlier steps by index.  Replaying a trace re-executes
 * every rule and must reproduce the recorded outputs bit-for-bit; "given"
 * steps are the input data.
 *
 * Rules:
 *   given              leaf datum (params.name)
 *   space-series       params.space: descriptor; output = its polynomial
 *   classifying-series params.group: descriptor; output = its series
 *   multiply           inputs [a, b]
 *   kirwan-factor      params.d
 *   add-shifted        inputs [acc, x], params.codim: acc + t^{2c} * x
 *   subtract-shifted   inputs [acc, x], params.codim: acc - t^{2c} * x
 *   blowup-stage       inputs [current, center], params.codim
 *   exact-div          inputs [r]
 */

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "quotser/algebra.hpp"
#include "quotser/json_codec.hpp"

namespace quotser {

struct TraceStep {
    std::string label;
    std::string rule;
    std::vector<std::size_t> inputs;  // indices of earlier steps
    Json params = Json::object();
    CycloRational output;
};

struct Trace {
    std::vector<TraceStep> steps;

    std::size_t add(TraceStep step) {
        steps.push_back(std::move(step));
        return steps.size() - 1;
    }
    bool empty() const { return steps.empty(); }
    const CycloRational& result() const;
};

// Re-executes every rule; throws TraceMismatch when a recomputed output
// differs from the recorded one.  Returns the final value.
CycloRational replay(const Trace& trace);

Json trace_to_json(const Trace& trace);
Trace trace_from_json(const Json& j, const std::string& path);

}  // namespace quotser
