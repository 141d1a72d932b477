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

#include "quotser/nonreductive.hpp"

namespace quotser {

int codim_of_uzmin(const NRProblem& p) { return p.dim_x - p.group.dim_u - p.dim_zmin; }

namespace {

bool is_h_mode(NRMode m) { return m == NRMode::h || m == NRMode::h_blowups; }

void require_monotone_stages(const NRProblem& p) {
    for (size_t i = 0; i < p.stages.size(); ++i) {
        if (i > 0 && p.stages[i].stab_dim >= p.stages[i - 1].stab_dim)
            throw stages_not_monotone("stage " + std::to_string(i) + " has stab_dim " +
                                      std::to_string(p.stages[i].stab_dim) +
                                      ", not strictly below the previous stage's " +
                                      std::to_string(p.stages[i - 1].stab_dim));
    }
}

void require_h_hypotheses(const NRProblem& p) {
    if (!p.zmin_ss_equals_s)
        throw ss_not_s("the Levi quotient of Z_min must have semistability equal to stability "
                       "(zmin_ss_equals_s) for an H-quotient series");
}

std::string zmin_name(const NRProblem& p) {
    return is_h_mode(p.mode) ? "P(Z_min // R_lambda)" : "P(Z_min)";
}

// Closed-form quotient: fold blow-up stages (if any), then multiply by the
// kirwan factor of d.
PipelineResult run_pipeline(const NRProblem& p) {
    const int d = codim_of_uzmin(p);
    if (d < 1)
        throw empty_quotient("d = dim_x - dim_u - dim_zmin = " + std::to_string(d) +
                             "; the complement of U Z_min is empty, no quotient exists");
    require_monotone_stages(p);

    PipelineResult out;
    size_t acc =
        out.trace.add({zmin_name(p), "given", {}, Json{{"name", zmin_name(p)}}, CycloRational(p.zmin_series)});
    IntPoly current = p.zmin_series;
    for (size_t i = 0; i < p.stages.size(); ++i) {
        const BlowUpStage& stage = p.stages[i];
        size_t center = out.trace.add({"stage " + std::to_string(i + 1) + " center", "given", {},
                                       Json{{"name", "stage " + std::to_string(i + 1) + " center"}},
                                       CycloRational(stage.center_series)});
        current = blowup_stage(current, stage);
        acc = out.trace.add({"stage " + std::to_string(i + 1) + ": blow up along codim " +
                                 std::to_string(stage.codim) + " center (stab_dim " +
                                 std::to_string(stage.stab_dim) + ")",
                             "blowup-stage",
                             {acc, center},
                             Json{{"codim", stage.codim}},
                             CycloRational(current)});
    }
    size_t factor = out.trace.add(
        {"kirwan factor (d = " + std::to_string(d) + ")", "kirwan-factor", {}, Json{{"d", d}},
         CycloRational(kirwan_factor(d))});
    out.series = current * kirwan_factor(d);
    out.trace.add({"quotient series", "multiply", {acc, factor}, Json::object(), CycloRational(out.series)});
    return out;
}

}  // namespace

IntPoly blowup_stage(const IntPoly& current_zmin, const BlowUpStage& stage) {
    return poincare_blowup(current_zmin, stage.center_series, stage.codim);
}

PipelineResult hat_zmin_series(const NRProblem& p) {
    require_monotone_stages(p);
    PipelineResult out;
    size_t acc =
        out.trace.add({zmin_name(p), "given", {}, Json{{"name", zmin_name(p)}}, CycloRational(p.zmin_series)});
    out.series = p.zmin_series;
    for (size_t i = 0; i < p.stages.size(); ++i) {
        const BlowUpStage& stage = p.stages[i];
        size_t center = out.trace.add({"stage " + std::to_string(i + 1) + " center", "given", {},
                                       Json{{"name", "stage " + std::to_string(i + 1) + " center"}},
                                       CycloRational(stage.center_series)});
        out.series = blowup_stage(out.series, stage);
        acc = out.trace.add({"stage " + std::to_string(i + 1) + ": blow up along codim " +
                                 std::to_string(stage.codim) + " center",
                             "blowup-stage",
                             {acc, center},
                             Json{{"codim", stage.codim}},
                             CycloRational(out.series)});
    }
    (void)acc;
    return out;
}

PipelineResult uhat_quotient(const NRProblem& p) {
    if (p.mode != NRMode::uhat || !p.stages.empty())
        throw Error("InternalError", "uhat_quotient expects mode uhat with no stages");
    return run_pipeline(p);
}

PipelineResult h_quotient(const NRProblem& p) {
    if (p.mode != NRMode::h || !p.stages.empty())
        throw Error("InternalError", "h_quotient expects mode h with no stages");
    require_h_hypotheses(p);
    return run_pipeline(p);
}

PipelineResult hat_uhat_quotient(const NRProblem& p) {
    if (p.mode != NRMode::uhat_blowups)
        throw Error("InternalError", "hat_uhat_quotient expects mode uhat_blowups");
    return run_pipeline(p);
}

PipelineResult hat_h_quotient(const NRProblem& p) {
    if (p.mode != NRMode::h_blowups)
        throw Error("InternalError", "hat_h_quotient expects mode h_blowups");
    require_h_hypotheses(p);
    return run_pipeline(p);
}

std::vector<ResolutionRecord> resolution_report(const NRProblem& p) {
    std::vector<ResolutionRecord> out;
    for (size_t i = 0; i < p.stages.size(); ++i) {
        // The stage-i center resolves the locus of points of Z_min whose
        // unipotent stabiliser dimension is at least stab_dim - 1 (the
        // grading shifts stabiliser dimensions by one between the open
        // stratum and its fixed locus).
        ResolutionRecord rec;
        rec.stage = static_cast<int>(i) + 1;
        rec.locus = "C_{≥" + std::to_string(p.stages[i].stab_dim - 1) + "}(Z_min,U)";
        rec.center_series = p.stages[i].center_series;
        out.push_back(std::move(rec));
    }
    return out;
}

}  // namespace quotser
