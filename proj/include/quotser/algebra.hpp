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
 * algebra.hpp
 * -----------
 * Exact univariate series algebra in t with integer coefficients:
 *
 *   IntPoly          sparse polynomial, arbitrary-precision coefficients
 *   CycloRational    IntPoly divided by a multiset of (1 - t^k) factors
 *   TruncatedSeries  dense power-series window [0, order]
 *
 * Every Poincaré polynomial computed by this project lives in IntPoly;
 * classifying-space series and equivariant series live in CycloRational.
 * All values are immutable after construction and safe to share across
 * threads.
 */

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "quotser/errors.hpp"

namespace quotser {

using Int = boost::multiprecision::cpp_int;

class IntPoly {
   public:
    IntPoly() = default;  // zero
    explicit IntPoly(Int constant) {
        if (constant != 0) coeffs_[0] = std::move(constant);
    }
    explicit IntPoly(long constant) : IntPoly(Int(constant)) {}

    // c * t^degree
    static IntPoly term(Int c, int degree);
    static IntPoly one() { return IntPoly(Int(1)); }
    // Canonicalizes: drops zero entries, rejects negative degrees.
    static IntPoly from_coeffs(std::map<int, Int> coeffs);

    bool is_zero() const { return coeffs_.empty(); }
    // Degree of the zero polynomial is -1.
    int degree() const { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }
    Int coeff(int degree) const;
    const std::map<int, Int>& coeffs() const { return coeffs_; }

    IntPoly& operator+=(const IntPoly& rhs);
    IntPoly& operator-=(const IntPoly& rhs);
    IntPoly& operator*=(const IntPoly& rhs);
    friend IntPoly operator+(IntPoly lhs, const IntPoly& rhs) { return lhs += rhs; }
    friend IntPoly operator-(IntPoly lhs, const IntPoly& rhs) { return lhs -= rhs; }
    friend IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs);
    IntPoly operator-() const;

    // Multiplication by t^k.
    IntPoly shifted(int k) const;

    bool operator==(const IntPoly&) const = default;

   private:
    std::map<int, Int> coeffs_;  // degree -> coefficient, no zeros stored
};

// Exact quotient p / (1 - t^k), or nullopt if the division leaves a
// remainder. k >= 1.
std::optional<IntPoly> divide_one_minus_tk(const IntPoly& p, int k);

// 1 + t^2 + ... + t^{2(d-1)}, the exact quotient (1 - t^{2d})/(1 - t^2).
// Throws EmptyQuotient for d <= 0: that value of d means the quotient being
// described is empty or ill-posed, not zero-dimensional.
IntPoly kirwan_factor(int d);

// Evaluation at t = -1.
Int euler_characteristic(const IntPoly& p);

// coeff_k == coeff_{2n-k} for 0 <= k <= 2n and coeff_k == 0 above 2n;
// Poincaré duality for an n-dimensional variety with at worst finite
// quotient singularities.
bool is_palindromic(const IntPoly& p, int n);

class TruncatedSeries {
   public:
    explicit TruncatedSeries(int order);
    static TruncatedSeries of_poly(const IntPoly& p, int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    Int coeff(int degree) const;
    const std::vector<Int>& coeffs() const { return coeffs_; }
    void set_coeff(int degree, Int value);

    // Arithmetic truncates to the smaller order.
    friend TruncatedSeries operator+(const TruncatedSeries&, const TruncatedSeries&);
    friend TruncatedSeries operator-(const TruncatedSeries&, const TruncatedSeries&);
    friend TruncatedSeries operator*(const TruncatedSeries&, const TruncatedSeries&);

    bool operator==(const TruncatedSeries&) const = default;

   private:
    std::vector<Int> coeffs_;  // index = degree, size = order + 1
};

// numerator / prod_j (1 - t^{k_j}).  The factor list is kept as a sorted
// multiset; factors dividing the numerator exactly are cancelled on
// construction, so a value with an empty denominator is an honest
// polynomial.
class CycloRational {
   public:
    CycloRational() = default;  // zero
    explicit CycloRational(IntPoly numerator, std::vector<int> denominator_factors = {});
    static CycloRational one() { return CycloRational(IntPoly::one()); }

    const IntPoly& numerator() const { return num_; }
    const std::vector<int>& denominator_factors() const { return den_; }
    bool is_polynomial() const { return den_.empty(); }
    bool is_zero() const { return num_.is_zero(); }

    CycloRational& operator+=(const CycloRational& rhs);
    CycloRational& operator-=(const CycloRational& rhs);
    CycloRational& operator*=(const CycloRational& rhs);
    friend CycloRational operator+(CycloRational lhs, const CycloRational& rhs) { return lhs += rhs; }
    friend CycloRational operator-(CycloRational lhs, const CycloRational& rhs) { return lhs -= rhs; }
    friend CycloRational operator*(CycloRational lhs, const CycloRational& rhs) { return lhs *= rhs; }
    CycloRational operator*(const IntPoly& rhs) const;

    // Value equality (cross-multiplied), independent of representation.
    bool operator==(const CycloRational& rhs) const;

   private:
    IntPoly num_;
    std::vector<int> den_;  // sorted ascending, each entry one (1 - t^k)
    void normalize();
};

// prod_j (1 - t^{k_j})
IntPoly product_of_factors(const std::vector<int>& factors);

// Formal power-series expansion of r through degree `order` inclusive.
TruncatedSeries expand(const CycloRational& r, int order);

// The polynomial equal to r, or NotPolynomial if any denominator factor
// fails to divide the numerator exactly.  Succeeding means the input data
// described an honest geometric quotient.
IntPoly exact_div(const CycloRational& r);

// Canonical plain-text rendering (ascending degree, `1 + 2*t^2 + t^4`,
// unit coefficients elided, t^1 written `t`).  This is the golden-file
// format; do not change it casually.
std::string to_plain(const IntPoly& p);
std::string to_plain(const TruncatedSeries& s);
std::string to_plain(const CycloRational& r);
std::string to_latex(const IntPoly& p);
std::string to_latex(const TruncatedSeries& s);

// Inverse of to_plain for polynomials; throws SchemaError on bad syntax.
IntPoly parse_poly(const std::string& text);

}  // namespace quotser
