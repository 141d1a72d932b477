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
 * spaces.hpp
 * ----------
 * Catalog of Poincaré polynomials and classifying-space series for the
 * building blocks the quotient formulas consume.
 */

#pragma once

#include <memory>
#include <variant>
#include <vector>

#include "quotser/algebra.hpp"

namespace quotser {

struct GroupDescriptor;

struct GmGroup {
    bool operator==(const GmGroup&) const = default;
};
struct TorusGroup {
    int rank = 1;
    bool operator==(const TorusGroup&) const = default;
};
struct GLGroup {
    int n = 1;
    bool operator==(const GLGroup&) const = default;
};
struct SLGroup {
    int n = 1;
    bool operator==(const SLGroup&) const = default;
};
struct TrivialGroup {
    bool operator==(const TrivialGroup&) const = default;
};
struct GroupProduct {
    std::vector<GroupDescriptor> factors;
    bool operator==(const GroupProduct&) const = default;
};
// H*(BG) supplied directly; denominator factors must all be even.
struct ExplicitBG {
    CycloRational series;
    bool operator==(const ExplicitBG&) const = default;
};

struct GroupDescriptor {
    std::variant<GmGroup, TorusGroup, GLGroup, SLGroup, TrivialGroup, GroupProduct, ExplicitBG> v;
    bool operator==(const GroupDescriptor&) const = default;
};

struct SpaceDescriptor;

struct PointSpace {
    bool operator==(const PointSpace&) const = default;
};
struct ProjectiveSpace {
    int n = 0;
    bool operator==(const ProjectiveSpace&) const = default;
};
struct Grassmannian {
    int k = 0;
    int n = 0;
    bool operator==(const Grassmannian&) const = default;
};
struct SpaceProduct {
    std::vector<SpaceDescriptor> factors;
    bool operator==(const SpaceProduct&) const = default;
};
// A polynomial given directly, with its complex dimension for duality checks.
struct ExplicitPolynomial {
    IntPoly series;
    int dim = 0;
    bool operator==(const ExplicitPolynomial&) const = default;
};
struct BlowUpSpace {
    std::shared_ptr<const SpaceDescriptor> base;
    std::shared_ptr<const SpaceDescriptor> center;
    int codim = 1;
    bool operator==(const BlowUpSpace& o) const;
};
struct ClassifyingSpace {
    GroupDescriptor group;
    bool operator==(const ClassifyingSpace&) const = default;
};

struct SpaceDescriptor {
    std::variant<PointSpace, ProjectiveSpace, Grassmannian, SpaceProduct, ExplicitPolynomial, BlowUpSpace,
                 ClassifyingSpace>
        v;
    bool operator==(const SpaceDescriptor&) const = default;
};

// Poincaré polynomial of a finite-dimensional space.  Projective space gives
// sum t^{2i}; Grassmannians are computed through the Gaussian binomial
// product formula with exact division (the partition-enumeration count is
// kept as an independent test oracle).  Throws ClassifyingSpaceNotFinite on
// a ClassifyingSpace descriptor.
IntPoly poincare_space(const SpaceDescriptor& s);

// p_base + p_center * (t^2 + t^4 + ... + t^{2(c-1)}); c = 1 is the identity.
// Throws InvalidCodimension for c <= 0.
IntPoly poincare_blowup(const IntPoly& p_base, const IntPoly& p_center, int codim);

// H*(BG) as a rational series with (1 - t^{2i}) denominator factors.
CycloRational poincare_classifying(const GroupDescriptor& g);

// Complex dimension of a finite-dimensional descriptor.
int dimension_of(const SpaceDescriptor& s);

// Gaussian binomial [n choose k] evaluated in t^2.
IntPoly gaussian_binomial(int k, int n);

}  // namespace quotser
