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

#include "quotser/trace.hpp"

#include "quotser/spaces.hpp"

namespace quotser {

const CycloRational& Trace::result() const {
    if (steps.empty()) throw Error("InternalError", "empty trace has no result");
    return steps.back().output;
}

namespace {

CycloRational shift_by(const CycloRational& x, int codim) {
    return x * IntPoly::term(1, 2 * codim);
}

CycloRational execute(const TraceStep& step, const std::vector<CycloRational>& done) {
    auto in = [&](size_t slot) -> const CycloRational& {
        if (slot >= step.inputs.size() || step.inputs[slot] >= done.size())
            throw trace_mismatch("step '" + step.label + "' references a missing input");
        return done[step.inputs[slot]];
    };
    auto param_int = [&](const char* name) {
        if (!step.params.contains(name) || !step.params[name].is_number_integer())
            throw trace_mismatch("step '" + step.label + "' lacks integer param '" + name + "'");
        return step.params[name].get<int>();
    };

    if (step.rule == "given") return step.output;
    if (step.rule == "space-series") {
        SpaceDescriptor s = space_from_json(step.params.at("space"), "/trace");
        return CycloRational(poincare_space(s));
    }
    if (step.rule == "classifying-series") {
        GroupDescriptor g = group_from_json(step.params.at("group"), "/trace");
        return poincare_classifying(g);
    }
    if (step.rule == "multiply") return in(0) * in(1);
    if (step.rule == "kirwan-factor") return CycloRational(kirwan_factor(param_int("d")));
    if (step.rule == "add-shifted") return in(0) + shift_by(in(1), param_int("codim"));
    if (step.rule == "subtract-shifted") return in(0) - shift_by(in(1), param_int("codim"));
    if (step.rule == "blowup-stage")
        return CycloRational(poincare_blowup(exact_div(in(0)), exact_div(in(1)), param_int("codim")));
    if (step.rule == "exact-div") return CycloRational(exact_div(in(0)));
    throw trace_mismatch("unknown rule '" + step.rule + "' in step '" + step.label + "'");
}

}  // namespace

CycloRational replay(const Trace& trace) {
    if (trace.empty()) throw trace_mismatch("cannot replay an empty trace");
    std::vector<CycloRational> done;
    done.reserve(trace.steps.size());
    for (const TraceStep& step : trace.steps) {
        CycloRational value = execute(step, done);
        if (!(value == step.output))
            throw trace_mismatch("step '" + step.label + "' recomputes to " + to_plain(value) +
                                 " but recorded " + to_plain(step.output));
        done.push_back(std::move(value));
    }
    return done.back();
}

Json trace_to_json(const Trace& trace) {
    Json out = Json::array();
    for (const TraceStep& step : trace.steps) {
        Json s = Json::object();
        s["step"] = step.label;
        s["rule"] = step.rule;
        s["inputs"] = Json::array();
        for (size_t i : step.inputs) s["inputs"].push_back(i);
        s["params"] = step.params;
        s["output"] = cyclo_to_json(step.output);
        out.push_back(std::move(s));
    }
    return out;
}

Trace trace_from_json(const Json& j, const std::string& path) {
    if (!j.is_array()) throw SchemaError(path, "expected an array of trace steps");
    Trace trace;
    for (size_t i = 0; i < j.size(); ++i) {
        const std::string spath = path + "/" + std::to_string(i);
        const Json& sj = j[i];
        reject_unknown_fields(sj, {"step", "rule", "inputs", "params", "output"}, spath);
        TraceStep step;
        step.label = require_string(require_field(sj, "step", spath), spath + "/step");
        step.rule = require_string(require_field(sj, "rule", spath), spath + "/rule");
        const Json& inputs = require_field(sj, "inputs", spath);
        if (!inputs.is_array()) throw SchemaError(spath + "/inputs", "expected an array");
        for (size_t k = 0; k < inputs.size(); ++k)
            step.inputs.push_back(static_cast<size_t>(
                require_int(inputs[k], spath + "/inputs/" + std::to_string(k), 0, 1 << 30)));
        step.params = require_field(sj, "params", spath);
        step.output = cyclo_from_json(require_field(sj, "output", spath), spath + "/output");
        trace.add(std::move(step));
    }
    return trace;
}

}  // namespace quotser
