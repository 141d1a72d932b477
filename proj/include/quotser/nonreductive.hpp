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
 * nonreductive.hpp
 * ----------------
 * Quotient series for actions of graded unipotent groups U x Gm and of
 * internally graded groups H = U x R.  The closed-form quotients are
 *
 *     P(X // U^) = P(Z_min)        * (1 - t^{2d})/(1 - t^2)
 *     P(X // H)  = P(Z_min // R_l) * (1 - t^{2d})/(1 - t^2)
 *
 * with d = dim_x - dim_u - dim_zmin.  When semistability fails upstairs the
 * space is first desingularised by a sequence of blow-ups along the maximal
 * unipotent-stabiliser loci; the pipeline folds the smooth-center blow-up
 * formula over the stages to produce the series of the final Z_min, then
 * applies the closed form.  The fold is the single source of truth: no
 * separate closed form for the blow-up corrections is implemented.
 */

#pragma once

#include <string>
#include <vector>

#include "quotser/spaces.hpp"
#include "quotser/trace.hpp"

namespace quotser {

// H = U x R with a central one-parameter subgroup of R grading Lie U by a
// single positive weight.  `adapted` asserts the linearisation was arranged
// as the theory requires; it is trusted, not checked.
struct GradedGroupSpec {
    int dim_u = 1;
    int grading_weight = 1;
    GroupDescriptor levi{TrivialGroup{}};
    bool adapted = true;
};

// One blow-up along the locus of maximal unipotent stabiliser dimension.
// `stab_dim` values must be strictly decreasing along the stage list;
// `codim` is the codimension of the center inside the space being blown up
// at that stage; `center_series` is user-supplied (for H pipelines it is the
// series of the center's Levi quotient).
struct BlowUpStage {
    int index = 0;
    int stab_dim = 0;
    int codim = 2;
    IntPoly center_series;
};

enum class NRMode { uhat, h, uhat_blowups, h_blowups };

// For uhat modes, zmin_series/dim_zmin describe Z_min itself; for h modes
// they describe the quotient Z_min // R_lambda.
struct NRProblem {
    GradedGroupSpec group;
    int dim_x = 0;
    int dim_zmin = 0;
    IntPoly zmin_series;
    std::vector<BlowUpStage> stages;
    NRMode mode = NRMode::uhat;
    bool zmin_ss_equals_s = false;
};

struct PipelineResult {
    IntPoly series;
    Trace trace;
};

// dim_x - dim_u - dim_zmin; must be >= 1 for any quotient to exist.
int codim_of_uzmin(const NRProblem& p);

// Single blow-up step of the fold; accepts codim >= 1 (codim 1 is a no-op)
// and throws InvalidCodimension below that.
IntPoly blowup_stage(const IntPoly& current_zmin, const BlowUpStage& stage);

// Fold of blowup_stage over all stages, starting from zmin_series.  Stages
// must have strictly decreasing stab_dim (StagesNotMonotone otherwise).
PipelineResult hat_zmin_series(const NRProblem& p);

PipelineResult uhat_quotient(const NRProblem& p);       // mode uhat, no stages
PipelineResult h_quotient(const NRProblem& p);          // mode h, no stages
PipelineResult hat_uhat_quotient(const NRProblem& p);   // mode uhat_blowups
PipelineResult hat_h_quotient(const NRProblem& p);      // mode h_blowups

// Which singular locus each stage's center resolves.
struct ResolutionRecord {
    int stage = 0;  // 1-based
    std::string locus;
    IntPoly center_series;
};
std::vector<ResolutionRecord> resolution_report(const NRProblem& p);

}  // namespace quotser
