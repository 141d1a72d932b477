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

#include "quotser/json_codec.hpp"

#include <algorithm>
#include <cctype>

namespace quotser {

namespace {

bool parse_decimal(const std::string& s, Int& out) {
    if (s.empty()) return false;
    size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (size_t k = i; k < s.size(); ++k)
        if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
    out = Int(s);
    return true;
}

Int coeff_from_json(const Json& v, const std::string& path) {
    if (v.is_number_integer()) return Int(v.get<long long>());
    if (v.is_string()) {
        Int c;
        if (parse_decimal(v.get<std::string>(), c)) return c;
        throw SchemaError(path, "coefficient string is not a decimal integer");
    }
    throw SchemaError(path, "coefficient must be an integer or a decimal string");
}

}  // namespace

const Json& require_field(const Json& j, const char* name, const std::string& path) {
    if (!j.is_object()) throw SchemaError(path, "expected an object");
    auto it = j.find(name);
    if (it == j.end()) throw SchemaError(path + "/" + name, "missing required field");
    return *it;
}

int require_int(const Json& j, const std::string& path, long long min_value, long long max_value) {
    if (!j.is_number_integer()) throw SchemaError(path, "expected an integer");
    long long v = j.get<long long>();
    if (v < min_value || v > max_value)
        throw SchemaError(path, "value " + std::to_string(v) + " outside allowed range [" +
                                    std::to_string(min_value) + ", " + std::to_string(max_value) + "]");
    return static_cast<int>(v);
}

bool require_bool(const Json& j, const std::string& path) {
    if (!j.is_boolean()) throw SchemaError(path, "expected a boolean");
    return j.get<bool>();
}

std::string require_string(const Json& j, const std::string& path) {
    if (!j.is_string()) throw SchemaError(path, "expected a string");
    return j.get<std::string>();
}

void reject_unknown_fields(const Json& j, std::initializer_list<const char*> known, const std::string& path) {
    if (!j.is_object()) throw SchemaError(path, "expected an object");
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (std::find_if(known.begin(), known.end(), [&](const char* k) { return key == k; }) == known.end())
            throw SchemaError(path + "/" + key, "unknown field");
    }
}

Json poly_to_json(const IntPoly& p) {
    Json out = Json::object();
    for (const auto& [d, c] : p.coeffs()) out[std::to_string(d)] = c.str();
    return out;
}

IntPoly poly_from_json(const Json& j, const std::string& path) {
    if (!j.is_object()) throw SchemaError(path, "expected a degree -> coefficient object");
    std::map<int, Int> coeffs;
    for (const auto& [key, value] : j.items()) {
        const std::string kpath = path + "/" + key;
        if (key.empty() || !std::all_of(key.begin(), key.end(),
                                        [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
            throw SchemaError(kpath, "degree key must be a nonnegative integer");
        int degree = 0;
        try {
            degree = std::stoi(key);
        } catch (const std::exception&) {
            throw SchemaError(kpath, "degree key out of range");
        }
        coeffs[degree] += coeff_from_json(value, kpath);
    }
    return IntPoly::from_coeffs(std::move(coeffs));
}

Json cyclo_to_json(const CycloRational& r) {
    Json out = Json::object();
    out["numerator"] = poly_to_json(r.numerator());
    out["denominator"] = Json::array();
    for (int k : r.denominator_factors()) out["denominator"].push_back(k);
    return out;
}

CycloRational cyclo_from_json(const Json& j, const std::string& path) {
    reject_unknown_fields(j, {"numerator", "denominator"}, path);
    IntPoly num = poly_from_json(require_field(j, "numerator", path), path + "/numerator");
    std::vector<int> den;
    const Json& dj = require_field(j, "denominator", path);
    if (!dj.is_array()) throw SchemaError(path + "/denominator", "expected an array of exponents");
    for (size_t i = 0; i < dj.size(); ++i)
        den.push_back(require_int(dj[i], path + "/denominator/" + std::to_string(i), 1, 1'000'000));
    return CycloRational(std::move(num), std::move(den));
}

Json series_to_json(const TruncatedSeries& s) {
    Json out = Json::object();
    out["order"] = s.order();
    Json coeffs = Json::object();
    for (int d = 0; d <= s.order(); ++d)
        if (s.coeff(d) != 0) coeffs[std::to_string(d)] = s.coeff(d).str();
    out["coefficients"] = std::move(coeffs);
    return out;
}

Json space_to_json(const SpaceDescriptor& s) {
    struct Visitor {
        Json operator()(const PointSpace&) const { return Json{{"type", "point"}}; }
        Json operator()(const ProjectiveSpace& p) const { return Json{{"type", "projective"}, {"n", p.n}}; }
        Json operator()(const Grassmannian& g) const {
            return Json{{"type", "grassmannian"}, {"k", g.k}, {"n", g.n}};
        }
        Json operator()(const SpaceProduct& p) const {
            Json factors = Json::array();
            for (const auto& f : p.factors) factors.push_back(space_to_json(f));
            return Json{{"type", "product"}, {"factors", std::move(factors)}};
        }
        Json operator()(const ExplicitPolynomial& e) const {
            return Json{{"type", "poly"}, {"coeffs", poly_to_json(e.series)}, {"dim", e.dim}};
        }
        Json operator()(const BlowUpSpace& b) const {
            return Json{{"type", "blowup"},
                        {"base", space_to_json(*b.base)},
                        {"center", space_to_json(*b.center)},
                        {"codim", b.codim}};
        }
        Json operator()(const ClassifyingSpace& c) const {
            return Json{{"type", "classifying"}, {"group", group_to_json(c.group)}};
        }
    };
    return std::visit(Visitor{}, s.v);
}

SpaceDescriptor space_from_json(const Json& j, const std::string& path) {
    std::string type = require_string(require_field(j, "type", path), path + "/type");
    if (type == "point") {
        reject_unknown_fields(j, {"type"}, path);
        return SpaceDescriptor{PointSpace{}};
    }
    if (type == "projective") {
        reject_unknown_fields(j, {"type", "n"}, path);
        return SpaceDescriptor{ProjectiveSpace{require_int(require_field(j, "n", path), path + "/n", 0, 1 << 20)}};
    }
    if (type == "grassmannian") {
        reject_unknown_fields(j, {"type", "k", "n"}, path);
        int n = require_int(require_field(j, "n", path), path + "/n", 0, 4096);
        int k = require_int(require_field(j, "k", path), path + "/k", 0, 4096);
        if (k > n) throw SchemaError(path + "/k", "requires 0 <= k <= n");
        return SpaceDescriptor{Grassmannian{k, n}};
    }
    if (type == "product") {
        reject_unknown_fields(j, {"type", "factors"}, path);
        const Json& fj = require_field(j, "factors", path);
        if (!fj.is_array()) throw SchemaError(path + "/factors", "expected an array");
        SpaceProduct p;
        for (size_t i = 0; i < fj.size(); ++i)
            p.factors.push_back(space_from_json(fj[i], path + "/factors/" + std::to_string(i)));
        return SpaceDescriptor{std::move(p)};
    }
    if (type == "poly") {
        reject_unknown_fields(j, {"type", "coeffs", "dim"}, path);
        ExplicitPolynomial e;
        e.series = poly_from_json(require_field(j, "coeffs", path), path + "/coeffs");
        e.dim = require_int(require_field(j, "dim", path), path + "/dim", 0, 1 << 20);
        return SpaceDescriptor{std::move(e)};
    }
    if (type == "blowup") {
        reject_unknown_fields(j, {"type", "base", "center", "codim"}, path);
        BlowUpSpace b;
        b.base = std::make_shared<SpaceDescriptor>(space_from_json(require_field(j, "base", path), path + "/base"));
        b.center =
            std::make_shared<SpaceDescriptor>(space_from_json(require_field(j, "center", path), path + "/center"));
        b.codim = require_int(require_field(j, "codim", path), path + "/codim", 1, 1 << 20);
        return SpaceDescriptor{std::move(b)};
    }
    if (type == "classifying") {
        reject_unknown_fields(j, {"type", "group"}, path);
        return SpaceDescriptor{ClassifyingSpace{group_from_json(require_field(j, "group", path), path + "/group")}};
    }
    throw SchemaError(path + "/type", "unknown space type '" + type + "'");
}

Json group_to_json(const GroupDescriptor& g) {
    struct Visitor {
        Json operator()(const GmGroup&) const { return Json{{"type", "gm"}}; }
        Json operator()(const TorusGroup& t) const { return Json{{"type", "torus"}, {"rank", t.rank}}; }
        Json operator()(const GLGroup& gl) const { return Json{{"type", "gl"}, {"n", gl.n}}; }
        Json operator()(const SLGroup& sl) const { return Json{{"type", "sl"}, {"n", sl.n}}; }
        Json operator()(const TrivialGroup&) const { return Json{{"type", "trivial"}}; }
        Json operator()(const GroupProduct& p) const {
            Json factors = Json::array();
            for (const auto& f : p.factors) factors.push_back(group_to_json(f));
            return Json{{"type", "product"}, {"factors", std::move(factors)}};
        }
        Json operator()(const ExplicitBG& e) const {
            Json out = Json{{"type", "bg-explicit"}};
            out["numerator"] = poly_to_json(e.series.numerator());
            out["denominator"] = Json::array();
            for (int k : e.series.denominator_factors()) out["denominator"].push_back(k);
            return out;
        }
    };
    return std::visit(Visitor{}, g.v);
}

GroupDescriptor group_from_json(const Json& j, const std::string& path) {
    std::string type = require_string(require_field(j, "type", path), path + "/type");
    if (type == "gm") {
        reject_unknown_fields(j, {"type"}, path);
        return GroupDescriptor{GmGroup{}};
    }
    if (type == "torus") {
        reject_unknown_fields(j, {"type", "rank"}, path);
        return GroupDescriptor{TorusGroup{require_int(require_field(j, "rank", path), path + "/rank", 1, 4096)}};
    }
    if (type == "gl") {
        reject_unknown_fields(j, {"type", "n"}, path);
        return GroupDescriptor{GLGroup{require_int(require_field(j, "n", path), path + "/n", 1, 4096)}};
    }
    if (type == "sl") {
        reject_unknown_fields(j, {"type", "n"}, path);
        return GroupDescriptor{SLGroup{require_int(require_field(j, "n", path), path + "/n", 1, 4096)}};
    }
    if (type == "trivial") {
        reject_unknown_fields(j, {"type"}, path);
        return GroupDescriptor{TrivialGroup{}};
    }
    if (type == "product") {
        reject_unknown_fields(j, {"type", "factors"}, path);
        const Json& fj = require_field(j, "factors", path);
        if (!fj.is_array()) throw SchemaError(path + "/factors", "expected an array");
        GroupProduct p;
        for (size_t i = 0; i < fj.size(); ++i)
            p.factors.push_back(group_from_json(fj[i], path + "/factors/" + std::to_string(i)));
        return GroupDescriptor{std::move(p)};
    }
    if (type == "bg-explicit") {
        reject_unknown_fields(j, {"type", "numerator", "denominator"}, path);
        IntPoly num = poly_from_json(require_field(j, "numerator", path), path + "/numerator");
        std::vector<int> den;
        const Json& dj = require_field(j, "denominator", path);
        if (!dj.is_array()) throw SchemaError(path + "/denominator", "expected an array of exponents");
        for (size_t i = 0; i < dj.size(); ++i) {
            const std::string ipath = path + "/denominator/" + std::to_string(i);
            int k = require_int(dj[i], ipath, 1, 1'000'000);
            // Generators of H*(BG) sit in even degree.
            if (k % 2 != 0) throw SchemaError(ipath, "bg-explicit denominator exponents must be even");
            den.push_back(k);
        }
        return GroupDescriptor{ExplicitBG{CycloRational(std::move(num), std::move(den))}};
    }
    throw SchemaError(path + "/type", "unknown group type '" + type + "'");
}

}  // namespace quotser
