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

#include "quotser/bb.hpp"

namespace quotser {

IntPoly assemble_bb(const std::vector<FixedComponentData>& components, Trace* trace) {
    if (components.empty()) throw empty_decomposition("a fixed-point decomposition needs at least one component");
    IntPoly total;
    size_t acc = 0;
    if (trace)
        acc = trace->add({"start", "given", {}, Json{{"name", "zero"}}, CycloRational()});
    for (size_t i = 0; i < components.size(); ++i) {
        const FixedComponentData& c = components[i];
        if (c.codim < 0) throw Error("InternalError", "negative codimension in fixed component");
        total += c.series.shifted(2 * c.codim);
        if (trace) {
            size_t given = trace->add({"component " + std::to_string(i), "given", {},
                                       Json{{"name", "component " + std::to_string(i)}},
                                       CycloRational(c.series)});
            acc = trace->add({"attach component " + std::to_string(i) + " (codim " + std::to_string(c.codim) + ")",
                              "add-shifted",
                              {acc, given},
                              Json{{"codim", c.codim}},
                              CycloRational(total)});
        }
    }
    return total;
}

TruncatedSeries equivariant_over_xmin(const IntPoly& p_zmin, int order) {
    return expand(CycloRational(p_zmin, {2}), order);
}

}  // namespace quotser
