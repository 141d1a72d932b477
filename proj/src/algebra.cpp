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

#include "quotser/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace quotser {

IntPoly IntPoly::term(Int c, int degree) {
    IntPoly p;
    if (degree < 0) throw Error("InternalError", "negative degree in IntPoly::term");
    if (c != 0) p.coeffs_[degree] = std::move(c);
    return p;
}

IntPoly IntPoly::from_coeffs(std::map<int, Int> coeffs) {
    IntPoly p;
    for (auto& [d, c] : coeffs) {
        if (d < 0) throw Error("InternalError", "negative degree in IntPoly::from_coeffs");
        if (c != 0) p.coeffs_.emplace(d, std::move(c));
    }
    return p;
}

Int IntPoly::coeff(int degree) const {
    auto it = coeffs_.find(degree);
    return it == coeffs_.end() ? Int(0) : it->second;
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
    for (const auto& [d, c] : rhs.coeffs_) {
        Int& mine = coeffs_[d];
        mine += c;
        if (mine == 0) coeffs_.erase(d);
    }
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
    for (const auto& [d, c] : rhs.coeffs_) {
        Int& mine = coeffs_[d];
        mine -= c;
        if (mine == 0) coeffs_.erase(d);
    }
    return *this;
}

IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs) {
    IntPoly out;
    for (const auto& [da, ca] : lhs.coeffs_)
        for (const auto& [db, cb] : rhs.coeffs_) {
            Int& slot = out.coeffs_[da + db];
            slot += ca * cb;
        }
    for (auto it = out.coeffs_.begin(); it != out.coeffs_.end();)
        it = (it->second == 0) ? out.coeffs_.erase(it) : std::next(it);
    return out;
}

IntPoly& IntPoly::operator*=(const IntPoly& rhs) { return *this = *this * rhs; }

IntPoly IntPoly::operator-() const {
    IntPoly out;
    for (const auto& [d, c] : coeffs_) out.coeffs_[d] = -c;
    return out;
}

IntPoly IntPoly::shifted(int k) const {
    IntPoly out;
    for (const auto& [d, c] : coeffs_) out.coeffs_[d + k] = c;
    return out;
}

std::optional<IntPoly> divide_one_minus_tk(const IntPoly& p, int k) {
    if (k < 1) throw Error("InternalError", "divide_one_minus_tk requires k >= 1");
    if (p.is_zero()) return IntPoly();
    // q_d = p_d + q_{d-k}; exactness checked by multiplying back.
    const int deg = p.degree();
    std::map<int, Int> q;
    Int carry;
    for (int d = 0; d <= deg; ++d) {
        Int qd = p.coeff(d);
        if (d >= k) {
            auto it = q.find(d - k);
            if (it != q.end()) qd += it->second;
        }
        if (qd != 0) q.emplace(d, std::move(qd));
    }
    IntPoly candidate = IntPoly::from_coeffs(std::move(q));
    IntPoly back = candidate - candidate.shifted(k);
    if (back == p) return candidate;
    return std::nullopt;
}

IntPoly kirwan_factor(int d) {
    if (d <= 0)
        throw empty_quotient("kirwan factor needs d >= 1, got d = " + std::to_string(d) +
                             " (the locus being quotiented is empty or ill-posed)");
    std::map<int, Int> c;
    for (int j = 0; j < d; ++j) c[2 * j] = 1;
    return IntPoly::from_coeffs(std::move(c));
}

Int euler_characteristic(const IntPoly& p) {
    Int chi = 0;
    for (const auto& [d, c] : p.coeffs())
        chi += (d % 2 == 0) ? c : -c;
    return chi;
}

bool is_palindromic(const IntPoly& p, int n) {
    if (n < 0) return false;
    if (p.degree() > 2 * n) return false;
    for (int k = 0; k <= n; ++k)
        if (p.coeff(k) != p.coeff(2 * n - k)) return false;
    return true;
}

TruncatedSeries::TruncatedSeries(int order) {
    if (order < 0) throw Error("InternalError", "negative truncation order");
    coeffs_.assign(static_cast<size_t>(order) + 1, Int(0));
}

TruncatedSeries TruncatedSeries::of_poly(const IntPoly& p, int order) {
    TruncatedSeries s(order);
    for (const auto& [d, c] : p.coeffs())
        if (d <= order) s.coeffs_[static_cast<size_t>(d)] = c;
    return s;
}

Int TruncatedSeries::coeff(int degree) const {
    if (degree < 0 || degree > order()) return 0;
    return coeffs_[static_cast<size_t>(degree)];
}

void TruncatedSeries::set_coeff(int degree, Int value) {
    if (degree < 0 || degree > order()) throw Error("InternalError", "degree outside truncation window");
    coeffs_[static_cast<size_t>(degree)] = std::move(value);
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries out(std::min(a.order(), b.order()));
    for (int d = 0; d <= out.order(); ++d) out.coeffs_[static_cast<size_t>(d)] = a.coeff(d) + b.coeff(d);
    return out;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries out(std::min(a.order(), b.order()));
    for (int d = 0; d <= out.order(); ++d) out.coeffs_[static_cast<size_t>(d)] = a.coeff(d) - b.coeff(d);
    return out;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries out(std::min(a.order(), b.order()));
    for (int i = 0; i <= out.order(); ++i) {
        if (a.coeff(i) == 0) continue;
        for (int j = 0; i + j <= out.order(); ++j)
            out.coeffs_[static_cast<size_t>(i + j)] += a.coeff(i) * b.coeff(j);
    }
    return out;
}

CycloRational::CycloRational(IntPoly numerator, std::vector<int> denominator_factors)
    : num_(std::move(numerator)), den_(std::move(denominator_factors)) {
    for (int k : den_)
        if (k < 1) throw Error("InternalError", "denominator factor exponent must be >= 1");
    std::sort(den_.begin(), den_.end());
    normalize();
}

void CycloRational::normalize() {
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < den_.size(); ++i) {
            if (auto q = divide_one_minus_tk(num_, den_[i])) {
                num_ = std::move(*q);
                den_.erase(den_.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
                break;
            }
        }
    }
}

namespace {

// Multiset helpers on sorted factor lists.
std::vector<int> multiset_diff(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<int> multiset_union_max(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace

IntPoly product_of_factors(const std::vector<int>& factors) {
    IntPoly out = IntPoly::one();
    for (int k : factors) out *= IntPoly::one() - IntPoly::term(1, k);
    return out;
}

CycloRational& CycloRational::operator+=(const CycloRational& rhs) {
    std::vector<int> common = multiset_union_max(den_, rhs.den_);
    IntPoly n = num_ * product_of_factors(multiset_diff(common, den_)) +
                rhs.num_ * product_of_factors(multiset_diff(common, rhs.den_));
    *this = CycloRational(std::move(n), std::move(common));
    return *this;
}

CycloRational& CycloRational::operator-=(const CycloRational& rhs) {
    std::vector<int> common = multiset_union_max(den_, rhs.den_);
    IntPoly n = num_ * product_of_factors(multiset_diff(common, den_)) -
                rhs.num_ * product_of_factors(multiset_diff(common, rhs.den_));
    *this = CycloRational(std::move(n), std::move(common));
    return *this;
}

CycloRational& CycloRational::operator*=(const CycloRational& rhs) {
    std::vector<int> den = den_;
    den.insert(den.end(), rhs.den_.begin(), rhs.den_.end());
    *this = CycloRational(num_ * rhs.num_, std::move(den));
    return *this;
}

CycloRational CycloRational::operator*(const IntPoly& rhs) const {
    return CycloRational(num_ * rhs, den_);
}

bool CycloRational::operator==(const CycloRational& rhs) const {
    if (den_ == rhs.den_) return num_ == rhs.num_;
    return num_ * product_of_factors(rhs.den_) == rhs.num_ * product_of_factors(den_);
}

TruncatedSeries expand(const CycloRational& r, int order) {
    TruncatedSeries s = TruncatedSeries::of_poly(r.numerator(), order);
    // Multiplying by 1/(1 - t^k) is a strided prefix sum.
    for (int k : r.denominator_factors()) {
        for (int d = k; d <= order; ++d) {
            Int v = s.coeff(d) + s.coeff(d - k);
            s.set_coeff(d, std::move(v));
        }
    }
    return s;
}

IntPoly exact_div(const CycloRational& r) {
    // Construction already cancelled every factor that divides exactly, so
    // any factor left means a genuine remainder somewhere.
    if (!r.is_polynomial()) {
        std::ostringstream os;
        os << "denominator factor";
        for (int k : r.denominator_factors()) os << " (1-t^" << k << ")";
        os << " does not divide the numerator " << to_plain(r.numerator());
        throw not_polynomial(os.str());
    }
    return r.numerator();
}

namespace {

void append_term(std::ostringstream& os, bool& first, const Int& c, int d, bool latex) {
    Int a = c;
    if (first) {
        if (a < 0) {
            os << "-";
            a = -a;
        }
        first = false;
    } else {
        if (a < 0) {
            os << " - ";
            a = -a;
        } else {
            os << " + ";
        }
    }
    if (d == 0) {
        os << a.str();
        return;
    }
    if (a != 1) os << a.str() << (latex ? "" : "*");
    if (d == 1)
        os << "t";
    else if (latex)
        os << "t^{" << d << "}";
    else
        os << "t^" << d;
}

std::string render_poly(const IntPoly& p, bool latex) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, c] : p.coeffs()) append_term(os, first, c, d, latex);
    return os.str();
}

std::string render_series(const TruncatedSeries& s, bool latex) {
    std::ostringstream os;
    bool first = true;
    for (int d = 0; d <= s.order(); ++d)
        if (s.coeff(d) != 0) append_term(os, first, s.coeff(d), d, latex);
    if (first) os << "0";
    if (latex)
        os << " + O(t^{" << (s.order() + 1) << "})";
    else
        os << " + O(t^" << (s.order() + 1) << ")";
    return os.str();
}

}  // namespace

std::string to_plain(const IntPoly& p) { return render_poly(p, false); }
std::string to_latex(const IntPoly& p) { return render_poly(p, true); }
std::string to_plain(const TruncatedSeries& s) { return render_series(s, false); }
std::string to_latex(const TruncatedSeries& s) { return render_series(s, true); }

std::string to_plain(const CycloRational& r) {
    std::string num = to_plain(r.numerator());
    if (r.is_polynomial()) return num;
    std::ostringstream os;
    if (r.numerator().coeffs().size() > 1)
        os << "(" << num << ")";
    else
        os << num;
    os << "/";
    if (r.denominator_factors().size() > 1) os << "(";
    for (int k : r.denominator_factors()) {
        if (k == 1)
            os << "(1-t)";
        else
            os << "(1-t^" << k << ")";
    }
    if (r.denominator_factors().size() > 1) os << ")";
    return os.str();
}

IntPoly parse_poly(const std::string& text) {
    std::map<int, Int> coeffs;
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    if (i == text.size()) throw SchemaError("/", "empty polynomial expression");
    bool first = true;
    while (i < text.size()) {
        int sign = 1;
        skip_ws();
        if (!first || text[i] == '+' || text[i] == '-') {
            if (i >= text.size() || (text[i] != '+' && text[i] != '-'))
                throw SchemaError("/", "expected '+' or '-' at position " + std::to_string(i) + " in '" + text + "'");
            sign = (text[i] == '-') ? -1 : 1;
            ++i;
            skip_ws();
        }
        first = false;
        Int mag = 0;
        bool saw_digits = false;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            mag = mag * 10 + (text[i] - '0');
            saw_digits = true;
            ++i;
        }
        skip_ws();
        if (saw_digits && i < text.size() && text[i] == '*') {
            ++i;
            skip_ws();
        }
        int deg = 0;
        if (i < text.size() && text[i] == 't') {
            ++i;
            deg = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
                    throw SchemaError("/", "expected exponent digits in '" + text + "'");
                deg = 0;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                    deg = deg * 10 + (text[i] - '0');
                    ++i;
                }
            }
            if (!saw_digits) mag = 1;
        } else if (!saw_digits) {
            throw SchemaError("/", "expected a term at position " + std::to_string(i) + " in '" + text + "'");
        }
        coeffs[deg] += sign * mag;
        skip_ws();
    }
    return IntPoly::from_coeffs(std::move(coeffs));
}

}  // namespace quotser
