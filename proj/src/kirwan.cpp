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

#include "quotser/kirwan.hpp"

#include <set>

namespace quotser {

CycloRational equivariant_total(const SpaceDescriptor& space, const GroupDescriptor& group) {
    return CycloRational(poincare_space(space)) * poincare_classifying(group);
}

namespace {

constexpr int kMaxRecursionDepth = 64;

struct RecursionContext {
    int depth = 0;
    std::set<const GITProblem*> stack;
    std::string prefix;  // trace label prefix, e.g. "strata[beta+]/"
};

CycloRational semistable_impl(const GITProblem& p, Trace* trace, RecursionContext& ctx) {
    if (ctx.depth > kMaxRecursionDepth)
        throw recursion_limit("stratification nesting exceeds depth " + std::to_string(kMaxRecursionDepth) +
                              " at " + (ctx.prefix.empty() ? "/" : ctx.prefix));
    if (!ctx.stack.insert(&p).second)
        throw cyclic_problem("stratification refers back to itself at " + (ctx.prefix.empty() ? "/" : ctx.prefix));

    size_t space_step = 0, group_step = 0, acc_step = 0;
    if (trace) {
        space_step = trace->add({ctx.prefix + "total space series", "space-series", {},
                                 Json{{"space", space_to_json(p.space)}},
                                 CycloRational(poincare_space(p.space))});
        group_step = trace->add({ctx.prefix + "classifying series", "classifying-series", {},
                                 Json{{"group", group_to_json(p.group)}},
                                 poincare_classifying(p.group)});
    }
    CycloRational acc = equivariant_total(p.space, p.group);
    if (trace)
        acc_step = trace->add({ctx.prefix + "equivariant total", "multiply", {space_step, group_step},
                               Json::object(), acc});

    for (const StratumData& stratum : p.strata) {
        if (stratum.pieces.empty())
            throw Error("InternalError", "stratum '" + stratum.label + "' has no pieces");
        for (size_t i = 0; i < stratum.pieces.size(); ++i) {
            const StratumPiece& piece = stratum.pieces[i];
            if (piece.codim < 1)
                throw Error("InternalError", "stratum '" + stratum.label + "' piece has codim < 1");
            const std::string piece_name =
                "strata[" + stratum.label + "]" + (stratum.pieces.size() > 1 ? "[" + std::to_string(i) + "]" : "");
            CycloRational value;
            size_t value_step = 0;
            if (const auto* leaf = std::get_if<ExplicitEquivariantSeries>(&piece.sub)) {
                value = leaf->value;
                if (trace)
                    value_step = trace->add({ctx.prefix + piece_name + " series", "given", {},
                                             Json{{"name", piece_name}}, value});
            } else {
                RecursionContext inner = ctx;
                inner.depth = ctx.depth + 1;
                inner.prefix = ctx.prefix + piece_name + "/";
                const auto& sub = std::get<std::shared_ptr<const GITProblem>>(piece.sub);
                if (!sub) throw Error("InternalError", "null sub-problem in " + piece_name);
                value = semistable_impl(*sub, trace, inner);
                if (trace) value_step = trace->steps.size() - 1;
            }
            acc -= value * IntPoly::term(1, 2 * piece.codim);
            if (trace)
                acc_step = trace->add({ctx.prefix + "remove " + piece_name + " (codim " +
                                           std::to_string(piece.codim) + ")",
                                       "subtract-shifted",
                                       {acc_step, value_step},
                                       Json{{"codim", piece.codim}},
                                       acc});
        }
    }

    ctx.stack.erase(&p);
    return acc;
}

}  // namespace

CycloRational semistable_series(const GITProblem& p, Trace* trace) {
    RecursionContext ctx;
    return semistable_impl(p, trace, ctx);
}

IntPoly quotient_series(const GITProblem& p, Trace* trace) {
    if (!p.ss_equals_s)
        throw ss_not_s("the quotient series is only defined when semistability coincides with stability; "
                       "set ss_equals_s or request the truncated equivariant series");
    CycloRational ss = semistable_series(p, trace);
    size_t ss_step = trace ? trace->steps.size() - 1 : 0;
    IntPoly q = exact_div(ss);
    if (trace)
        trace->add({"quotient series", "exact-div", {ss_step}, Json::object(), CycloRational(q)});
    return q;
}

}  // namespace quotser
