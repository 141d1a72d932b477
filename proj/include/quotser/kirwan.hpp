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
 * kirwan.hpp
 * ----------
 * Recursive engine for the equivariant Poincaré series of the semistable
 * locus of a linearised reductive-group action, via the equivariantly
 * perfect instability stratification
 *
 *     P_t^G(X) = P_t^G(X^ss) + sum_beta t^{2 d(beta)} P_t^G(S_beta),
 *
 * so the semistable series is the total equivariant series minus the
 * shifted stratum contributions.  When semistability coincides with
 * stability the semistable series is an honest polynomial, the Poincaré
 * polynomial of the quotient.
 */

#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "quotser/spaces.hpp"
#include "quotser/trace.hpp"

namespace quotser {

struct GITProblem;

// The series P_t^{Stab beta}(Z_beta^ss) supplied directly instead of by a
// nested problem.
struct ExplicitEquivariantSeries {
    CycloRational value;
};

struct StratumPiece {
    int codim = 1;  // complex codimension of this connected component's stratum
    std::variant<ExplicitEquivariantSeries, std::shared_ptr<const GITProblem>> sub;
};

struct StratumData {
    std::string label;
    std::vector<StratumPiece> pieces;  // nonempty; codims may differ per component
};

struct GITProblem {
    SpaceDescriptor space;  // total space, smooth projective
    GroupDescriptor group;
    std::vector<StratumData> strata;
    int dim_x = 0;
    int dim_g = 0;
    bool ss_equals_s = false;
};

// P_t(X) * P_t(BG).
CycloRational equivariant_total(const SpaceDescriptor& space, const GroupDescriptor& group);

// Total equivariant series minus sum over strata of t^{2 codim} times the
// piece's series (explicit leaf or recursive sub-problem).  Recursion is
// guarded: depth > 64 throws RecursionLimit, revisiting a node on the
// active stack throws CyclicProblem.
CycloRational semistable_series(const GITProblem& p, Trace* trace = nullptr);

// exact_div of the semistable series; requires ss_equals_s (else SsNotS) and
// throws NotPolynomial when the stratification data is inconsistent with a
// geometric quotient.
IntPoly quotient_series(const GITProblem& p, Trace* trace = nullptr);

}  // namespace quotser
