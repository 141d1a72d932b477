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

#pragma once

#include <vector>

#include "quotser/algebra.hpp"
#include "quotser/trace.hpp"

namespace quotser {

// One fixed-point component of a multiplicative-group action, together with
// the complex codimension of its attracting cell.
struct FixedComponentData {
    IntPoly series;
    int codim = 0;
};

// Poincaré polynomial of the total space from its fixed components:
// sum_i t^{2 codim_i} * series_i.  Throws EmptyDecomposition on an empty
// list.  Order of the components does not matter.
IntPoly assemble_bb(const std::vector<FixedComponentData>& components, Trace* trace = nullptr);

// Equivariant series over the open attracting stratum, reduced to the fixed
// locus: expand(p_zmin / (1 - t^2), order).
TruncatedSeries equivariant_over_xmin(const IntPoly& p_zmin, int order);

}  // namespace quotser
