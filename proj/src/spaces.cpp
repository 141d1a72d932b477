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

#include "quotser/spaces.hpp"

#include <string>

namespace quotser {

bool BlowUpSpace::operator==(const BlowUpSpace& o) const {
    return codim == o.codim && *base == *o.base && *center == *o.center;
}

IntPoly gaussian_binomial(int k, int n) {
    if (k < 0 || n < 0 || k > n) throw Error("InternalError", "gaussian_binomial needs 0 <= k <= n");
    // [n k]_{t^2} = prod_{i=1}^{k} (1 - t^{2(n-k+i)}) / (1 - t^{2i}),
    // divided out factor by factor; each division is exact.
    IntPoly num = IntPoly::one();
    for (int i = 1; i <= k; ++i) num *= IntPoly::one() - IntPoly::term(1, 2 * (n - k + i));
    for (int i = 1; i <= k; ++i) {
        auto q = divide_one_minus_tk(num, 2 * i);
        if (!q) throw Error("InternalError", "Gaussian binomial division failed");
        num = std::move(*q);
    }
    return num;
}

IntPoly poincare_blowup(const IntPoly& p_base, const IntPoly& p_center, int codim) {
    if (codim <= 0)
        throw invalid_codimension("blow-up codimension must be >= 1, got " + std::to_string(codim));
    // Exceptional-divisor contribution: center * (t^2 + ... + t^{2(c-1)}).
    IntPoly correction;
    for (int j = 1; j < codim; ++j) correction += IntPoly::term(1, 2 * j);
    return p_base + p_center * correction;
}

IntPoly poincare_space(const SpaceDescriptor& s) {
    struct Visitor {
        IntPoly operator()(const PointSpace&) const { return IntPoly::one(); }
        IntPoly operator()(const ProjectiveSpace& p) const {
            std::map<int, Int> c;
            for (int i = 0; i <= p.n; ++i) c[2 * i] = 1;
            return IntPoly::from_coeffs(std::move(c));
        }
        IntPoly operator()(const Grassmannian& g) const { return gaussian_binomial(g.k, g.n); }
        IntPoly operator()(const SpaceProduct& p) const {
            IntPoly out = IntPoly::one();
            for (const auto& f : p.factors) out *= poincare_space(f);
            return out;
        }
        IntPoly operator()(const ExplicitPolynomial& e) const { return e.series; }
        IntPoly operator()(const BlowUpSpace& b) const {
            return poincare_blowup(poincare_space(*b.base), poincare_space(*b.center), b.codim);
        }
        IntPoly operator()(const ClassifyingSpace&) const {
            throw classifying_space_not_finite(
                "a classifying space has an infinite Poincaré series; expand its rational form instead");
        }
    };
    return std::visit(Visitor{}, s.v);
}

CycloRational poincare_classifying(const GroupDescriptor& g) {
    struct Visitor {
        CycloRational operator()(const GmGroup&) const { return CycloRational(IntPoly::one(), {2}); }
        CycloRational operator()(const TorusGroup& t) const {
            return CycloRational(IntPoly::one(), std::vector<int>(static_cast<size_t>(t.rank), 2));
        }
        CycloRational operator()(const GLGroup& gl) const {
            std::vector<int> den;
            for (int i = 1; i <= gl.n; ++i) den.push_back(2 * i);
            return CycloRational(IntPoly::one(), std::move(den));
        }
        CycloRational operator()(const SLGroup& sl) const {
            std::vector<int> den;
            for (int i = 2; i <= sl.n; ++i) den.push_back(2 * i);
            return CycloRational(IntPoly::one(), std::move(den));
        }
        CycloRational operator()(const TrivialGroup&) const { return CycloRational::one(); }
        CycloRational operator()(const GroupProduct& p) const {
            CycloRational out = CycloRational::one();
            for (const auto& f : p.factors) out *= poincare_classifying(f);
            return out;
        }
        CycloRational operator()(const ExplicitBG& e) const { return e.series; }
    };
    return std::visit(Visitor{}, g.v);
}

int dimension_of(const SpaceDescriptor& s) {
    struct Visitor {
        int operator()(const PointSpace&) const { return 0; }
        int operator()(const ProjectiveSpace& p) const { return p.n; }
        int operator()(const Grassmannian& g) const { return g.k * (g.n - g.k); }
        int operator()(const SpaceProduct& p) const {
            int d = 0;
            for (const auto& f : p.factors) d += dimension_of(f);
            return d;
        }
        int operator()(const ExplicitPolynomial& e) const { return e.dim; }
        int operator()(const BlowUpSpace& b) const { return dimension_of(*b.base); }
        int operator()(const ClassifyingSpace&) const {
            throw classifying_space_not_finite("a classifying space has no finite dimension");
        }
    };
    return std::visit(Visitor{}, s.v);
}

}  // namespace quotser
