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

#include "quotser/io.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace quotser {

bool ResultEnvelope::all_checks_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

namespace {

// ---------------------------------------------------------------- decoding

FileOptions options_from_json(const Json& j, const std::string& path) {
    reject_unknown_fields(j, {"truncate", "format"}, path);
    FileOptions out;
    if (j.contains("truncate")) out.truncate = require_int(j["truncate"], path + "/truncate", 0, 1 << 20);
    if (j.contains("format")) {
        std::string f = require_string(j["format"], path + "/format");
        if (f != "plain" && f != "latex" && f != "json")
            throw SchemaError(path + "/format", "format must be plain, latex or json");
        out.format = f;
    }
    return out;
}

GITProblem git_problem_from_json(const Json& j, const std::string& path, int depth) {
    if (depth > 64) throw SchemaError(path, "problem nesting deeper than 64 levels");
    reject_unknown_fields(j, {"space", "group", "dim_x", "dim_g", "ss_equals_s", "strata"}, path);
    GITProblem p;
    p.space = space_from_json(require_field(j, "space", path), path + "/space");
    p.group = group_from_json(require_field(j, "group", path), path + "/group");
    p.dim_x = require_int(require_field(j, "dim_x", path), path + "/dim_x", 0, 1 << 20);
    p.dim_g = require_int(require_field(j, "dim_g", path), path + "/dim_g", 0, 1 << 20);
    p.ss_equals_s = require_bool(require_field(j, "ss_equals_s", path), path + "/ss_equals_s");
    const Json& sj = require_field(j, "strata", path);
    if (!sj.is_array()) throw SchemaError(path + "/strata", "expected an array");
    std::set<std::string> labels;
    for (size_t i = 0; i < sj.size(); ++i) {
        const std::string spath = path + "/strata/" + std::to_string(i);
        reject_unknown_fields(sj[i], {"label", "pieces"}, spath);
        StratumData stratum;
        stratum.label = require_string(require_field(sj[i], "label", spath), spath + "/label");
        if (!labels.insert(stratum.label).second)
            throw SchemaError(spath + "/label", "duplicate stratum label '" + stratum.label + "'");
        const Json& pj = require_field(sj[i], "pieces", spath);
        if (!pj.is_array() || pj.empty()) throw SchemaError(spath + "/pieces", "expected a nonempty array");
        for (size_t k = 0; k < pj.size(); ++k) {
            const std::string ppath = spath + "/pieces/" + std::to_string(k);
            reject_unknown_fields(pj[k], {"codim", "leaf", "sub"}, ppath);
            StratumPiece piece;
            piece.codim = require_int(require_field(pj[k], "codim", ppath), ppath + "/codim", 1, 1 << 20);
            const bool has_leaf = pj[k].contains("leaf");
            const bool has_sub = pj[k].contains("sub");
            if (has_leaf == has_sub)
                throw SchemaError(ppath, "a piece carries exactly one of 'leaf' or 'sub'");
            if (has_leaf)
                piece.sub = ExplicitEquivariantSeries{cyclo_from_json(pj[k]["leaf"], ppath + "/leaf")};
            else
                piece.sub = std::make_shared<const GITProblem>(
                    git_problem_from_json(pj[k]["sub"], ppath + "/sub", depth + 1));
            stratum.pieces.push_back(std::move(piece));
        }
        p.strata.push_back(std::move(stratum));
    }
    return p;
}

NRProblem nr_problem_from_json(const Json& j, const std::string& path, NRMode mode, bool allow_trivial_stages) {
    reject_unknown_fields(
        j, {"group", "dim_x", "dim_zmin", "zmin_series", "zmin_ss_equals_s", "stages"}, path);
    NRProblem p;
    p.mode = mode;
    const Json& gj = require_field(j, "group", path);
    reject_unknown_fields(gj, {"dim_u", "grading_weight", "levi", "adapted"}, path + "/group");
    p.group.dim_u = require_int(require_field(gj, "dim_u", path + "/group"), path + "/group/dim_u", 1, 1 << 20);
    p.group.grading_weight = require_int(require_field(gj, "grading_weight", path + "/group"),
                                         path + "/group/grading_weight", 1, 1 << 20);
    p.group.levi = group_from_json(require_field(gj, "levi", path + "/group"), path + "/group/levi");
    p.group.adapted = require_bool(require_field(gj, "adapted", path + "/group"), path + "/group/adapted");
    p.dim_x = require_int(require_field(j, "dim_x", path), path + "/dim_x", 0, 1 << 20);
    p.dim_zmin = require_int(require_field(j, "dim_zmin", path), path + "/dim_zmin", 0, 1 << 20);
    p.zmin_series = poly_from_json(require_field(j, "zmin_series", path), path + "/zmin_series");
    p.zmin_ss_equals_s =
        require_bool(require_field(j, "zmin_ss_equals_s", path), path + "/zmin_ss_equals_s");
    if (j.contains("stages")) {
        const Json& stj = j["stages"];
        if (!stj.is_array()) throw SchemaError(path + "/stages", "expected an array");
        const bool blowup_mode = (mode == NRMode::uhat_blowups || mode == NRMode::h_blowups);
        if (!blowup_mode && !stj.empty())
            throw SchemaError(path + "/stages",
                              "this problem kind takes no blow-up stages; use the -blowups variant");
        for (size_t i = 0; i < stj.size(); ++i) {
            const std::string spath = path + "/stages/" + std::to_string(i);
            reject_unknown_fields(stj[i], {"i", "stab_dim", "codim", "center_series"}, spath);
            BlowUpStage stage;
            stage.index = require_int(require_field(stj[i], "i", spath), spath + "/i", 0, 1 << 20);
            stage.stab_dim =
                require_int(require_field(stj[i], "stab_dim", spath), spath + "/stab_dim", 0, 1 << 20);
            stage.codim = require_int(require_field(stj[i], "codim", spath), spath + "/codim", 1, 1 << 20);
            if (stage.codim == 1 && !allow_trivial_stages)
                throw SchemaError(spath + "/codim",
                                  "a codim-1 center makes the blow-up a no-op and usually signals a data "
                                  "entry error; pass --allow-trivial-stages to permit it");
            stage.center_series =
                poly_from_json(require_field(stj[i], "center_series", spath), spath + "/center_series");
            p.stages.push_back(std::move(stage));
        }
    }
    return p;
}

// ---------------------------------------------------------------- encoding

Json options_to_json(const FileOptions& o) {
    Json out = Json::object();
    if (o.truncate) out["truncate"] = *o.truncate;
    if (o.format) out["format"] = *o.format;
    return out;
}

Json git_problem_to_json(const GITProblem& p) {
    Json out = Json::object();
    out["space"] = space_to_json(p.space);
    out["group"] = group_to_json(p.group);
    out["dim_x"] = p.dim_x;
    out["dim_g"] = p.dim_g;
    out["ss_equals_s"] = p.ss_equals_s;
    Json strata = Json::array();
    for (const StratumData& s : p.strata) {
        Json sj = Json::object();
        sj["label"] = s.label;
        Json pieces = Json::array();
        for (const StratumPiece& piece : s.pieces) {
            Json pj = Json::object();
            pj["codim"] = piece.codim;
            if (const auto* leaf = std::get_if<ExplicitEquivariantSeries>(&piece.sub))
                pj["leaf"] = cyclo_to_json(leaf->value);
            else
                pj["sub"] = git_problem_to_json(*std::get<std::shared_ptr<const GITProblem>>(piece.sub));
            pieces.push_back(std::move(pj));
        }
        sj["pieces"] = std::move(pieces);
        strata.push_back(std::move(sj));
    }
    out["strata"] = std::move(strata);
    return out;
}

Json nr_problem_to_json(const NRProblem& p) {
    Json out = Json::object();
    Json group = Json::object();
    group["dim_u"] = p.group.dim_u;
    group["grading_weight"] = p.group.grading_weight;
    group["levi"] = group_to_json(p.group.levi);
    group["adapted"] = p.group.adapted;
    out["group"] = std::move(group);
    out["dim_x"] = p.dim_x;
    out["dim_zmin"] = p.dim_zmin;
    out["zmin_series"] = poly_to_json(p.zmin_series);
    out["zmin_ss_equals_s"] = p.zmin_ss_equals_s;
    Json stages = Json::array();
    for (const BlowUpStage& s : p.stages) {
        Json sj = Json::object();
        sj["i"] = s.index;
        sj["stab_dim"] = s.stab_dim;
        sj["codim"] = s.codim;
        sj["center_series"] = poly_to_json(s.center_series);
        stages.push_back(std::move(sj));
    }
    out["stages"] = std::move(stages);
    return out;
}

// ---------------------------------------------------------------- checks

Check check_nonnegative(const std::variant<IntPoly, TruncatedSeries>& result) {
    Check c{"nonnegative-coefficients", true, ""};
    auto flag = [&](int degree, const Int& v) {
        c.pass = false;
        c.detail = "coefficient of t^" + std::to_string(degree) + " is " + v.str();
    };
    if (const auto* p = std::get_if<IntPoly>(&result)) {
        for (const auto& [d, v] : p->coeffs())
            if (v < 0) {
                flag(d, v);
                break;
            }
    } else {
        const auto& s = std::get<TruncatedSeries>(result);
        for (int d = 0; d <= s.order(); ++d)
            if (s.coeff(d) < 0) {
                flag(d, s.coeff(d));
                break;
            }
    }
    if (c.pass) c.detail = "all coefficients >= 0";
    return c;
}

Check check_palindromic(const IntPoly& p, int n) {
    Check c{"palindromic", false, ""};
    if (n < 0) {
        c.detail = "declared quotient dimension is negative (" + std::to_string(n) + ")";
        return c;
    }
    c.pass = is_palindromic(p, n);
    c.detail = c.pass ? "satisfies Poincaré duality at n = " + std::to_string(n)
                      : "fails Poincaré duality at n = " + std::to_string(n);
    return c;
}

Check check_trace_replay(const Trace& trace) {
    Check c{"trace-replay", false, ""};
    try {
        replay(trace);
        c.pass = true;
        c.detail = std::to_string(trace.steps.size()) + " steps replayed";
    } catch (const Error& e) {
        c.detail = e.what();
    }
    return c;
}

CycloRational strata_contribution(const GITProblem& p) {
    CycloRational sum;
    for (const StratumData& stratum : p.strata)
        for (const StratumPiece& piece : stratum.pieces) {
            CycloRational v;
            if (const auto* leaf = std::get_if<ExplicitEquivariantSeries>(&piece.sub))
                v = leaf->value;
            else
                v = semistable_series(*std::get<std::shared_ptr<const GITProblem>>(piece.sub));
            sum += v * IntPoly::term(1, 2 * piece.codim);
        }
    return sum;
}

Check check_perfectness(const GITProblem& p, const CycloRational& semistable) {
    Check c{"perfectness-identity", false, ""};
    try {
        CycloRational lhs = semistable + strata_contribution(p);
        CycloRational rhs = equivariant_total(p.space, p.group);
        c.pass = lhs == rhs;
        c.detail = c.pass ? "semistable series plus stratum contributions reproduces the total"
                          : "stratum contributions do not reconstruct the total equivariant series";
    } catch (const Error& e) {
        c.detail = e.what();
    }
    return c;
}

Check check_euler_bookkeeping(const NRProblem& p, const IntPoly& result) {
    Check c{"euler-bookkeeping", false, ""};
    const int d = codim_of_uzmin(p);
    Int expected = euler_characteristic(p.zmin_series);
    for (const BlowUpStage& s : p.stages)
        expected += Int(s.codim - 1) * euler_characteristic(s.center_series);
    expected *= d;  // the kirwan factor contributes d at t = -1
    Int got = euler_characteristic(result);
    c.pass = (got == expected);
    c.detail = "chi = " + got.str() + ", expected " + expected.str();
    return c;
}

Check check_factorization(const NRProblem& p, const IntPoly& result) {
    Check c{"kirwan-factor-divides", false, ""};
    const int d = codim_of_uzmin(p);
    try {
        IntPoly folded = result * (IntPoly::one() - IntPoly::term(1, 2));
        IntPoly quotient = exact_div(CycloRational(std::move(folded), {2 * d}));
        IntPoly expected = p.zmin_series;
        for (const BlowUpStage& s : p.stages) expected = blowup_stage(expected, s);
        c.pass = (quotient == expected);
        c.detail = c.pass ? "(1-t^" + std::to_string(2 * d) + ")/(1-t^2) divides the output exactly"
                          : "dividing out the kirwan factor does not recover the folded series";
    } catch (const Error& e) {
        c.detail = e.what();
    }
    return c;
}

Check check_euler_additivity(const BBProblem& p, const IntPoly& result) {
    Check c{"euler-additivity", false, ""};
    Int expected = 0;
    for (const FixedComponentData& comp : p.components) expected += euler_characteristic(comp.series);
    Int got = euler_characteristic(result);
    c.pass = (got == expected);
    c.detail = "chi = " + got.str() + ", expected " + expected.str();
    return c;
}

// ---------------------------------------------------------------- compute

int effective_truncate(const ProblemFile& file, const ComputeSettings& settings) {
    if (settings.truncate) return *settings.truncate;
    if (file.options.truncate) return *file.options.truncate;
    return settings.default_truncate;
}

ResultEnvelope compute_space(const SpaceProblem& p, int truncate) {
    ResultEnvelope env;
    if (const auto* cs = std::get_if<ClassifyingSpace>(&p.space.v)) {
        CycloRational series = poincare_classifying(cs->group);
        env.trace.add({"classifying series", "classifying-series", {},
                       Json{{"group", group_to_json(cs->group)}}, series});
        env.result = expand(series, truncate);
        env.checks.push_back(check_nonnegative(env.result));
        env.checks.push_back(check_trace_replay(env.trace));
        return env;
    }
    IntPoly poly = poincare_space(p.space);
    env.trace.add({"catalog series", "space-series", {}, Json{{"space", space_to_json(p.space)}},
                   CycloRational(poly)});
    env.result = poly;
    env.checks.push_back(check_nonnegative(env.result));
    env.checks.push_back(check_palindromic(poly, dimension_of(p.space)));
    env.checks.push_back(check_trace_replay(env.trace));
    return env;
}

ResultEnvelope compute_bb(const BBProblem& p) {
    ResultEnvelope env;
    IntPoly poly = assemble_bb(p.components, &env.trace);
    env.result = poly;
    env.checks.push_back(check_nonnegative(env.result));
    env.checks.push_back(check_euler_additivity(p, poly));
    env.checks.push_back(check_trace_replay(env.trace));
    size_t open_strata = 0;
    for (const FixedComponentData& c : p.components)
        if (c.codim == 0) ++open_strata;
    if (open_strata != 1)
        env.warnings.push_back("a connected total space has exactly one codim-0 component; this input has " +
                               std::to_string(open_strata));
    return env;
}

ResultEnvelope compute_reductive(const GITProblem& p, int truncate) {
    ResultEnvelope env;
    if (p.ss_equals_s) {
        IntPoly q = quotient_series(p, &env.trace);
        env.result = q;
        env.checks.push_back(
            Check{"exact-division", true, "the semistable series is an honest polynomial"});
        env.checks.push_back(check_nonnegative(env.result));
        env.checks.push_back(check_palindromic(q, p.dim_x - p.dim_g));
        env.checks.push_back(check_perfectness(p, CycloRational(q)));
        env.checks.push_back(check_trace_replay(env.trace));
        return env;
    }
    CycloRational ss = semistable_series(p, &env.trace);
    env.result = expand(ss, truncate);
    env.checks.push_back(check_nonnegative(env.result));
    env.checks.push_back(check_perfectness(p, ss));
    env.checks.push_back(check_trace_replay(env.trace));
    env.warnings.push_back(
        "semistability does not equal stability: the result is the truncated equivariant series of the "
        "semistable locus, not a quotient series");
    return env;
}

ResultEnvelope compute_nr(const NRProblem& p) {
    PipelineResult result;
    switch (p.mode) {
        case NRMode::uhat: result = uhat_quotient(p); break;
        case NRMode::h: result = h_quotient(p); break;
        case NRMode::uhat_blowups: result = hat_uhat_quotient(p); break;
        case NRMode::h_blowups: result = hat_h_quotient(p); break;
    }
    ResultEnvelope env;
    env.result = result.series;
    env.trace = std::move(result.trace);
    const int d = codim_of_uzmin(p);
    env.checks.push_back(check_nonnegative(env.result));
    env.checks.push_back(check_palindromic(result.series, p.dim_zmin + d - 1));
    env.checks.push_back(check_euler_bookkeeping(p, result.series));
    env.checks.push_back(check_factorization(p, result.series));
    env.checks.push_back(check_trace_replay(env.trace));
    if (!p.group.adapted)
        env.warnings.push_back("the linearisation is not flagged adapted; the quotient formulas assume an "
                               "adapted linearisation");
    for (const BlowUpStage& s : p.stages)
        if (s.codim == 1)
            env.warnings.push_back("stage " + std::to_string(s.index) +
                                   " has a codim-1 center and is a no-op blow-up");
    return env;
}

}  // namespace

ProblemFile decode_problem_file(const Json& document, bool allow_trivial_stages) {
    if (!document.is_object()) throw SchemaError("/", "a problem file is a JSON object");
    ProblemFile file;
    file.schema_version =
        require_string(require_field(document, "schema_version", ""), "/schema_version");
    if (file.schema_version != "1")
        throw SchemaError("/schema_version", "unsupported schema version '" + file.schema_version + "'");
    file.problem = require_string(require_field(document, "problem", ""), "/problem");
    if (document.contains("options")) file.options = options_from_json(document["options"], "/options");

    Json payload = document;
    payload.erase("schema_version");
    payload.erase("problem");
    payload.erase("options");

    if (file.problem == "space") {
        reject_unknown_fields(payload, {"space"}, "");
        file.payload = SpaceProblem{space_from_json(require_field(payload, "space", ""), "/space")};
    } else if (file.problem == "bb") {
        reject_unknown_fields(payload, {"components"}, "");
        const Json& cj = require_field(payload, "components", "");
        if (!cj.is_array()) throw SchemaError("/components", "expected an array");
        BBProblem bb;
        for (size_t i = 0; i < cj.size(); ++i) {
            const std::string cpath = "/components/" + std::to_string(i);
            reject_unknown_fields(cj[i], {"series", "codim"}, cpath);
            FixedComponentData comp;
            comp.series = poly_from_json(require_field(cj[i], "series", cpath), cpath + "/series");
            comp.codim = require_int(require_field(cj[i], "codim", cpath), cpath + "/codim", 0, 1 << 20);
            bb.components.push_back(std::move(comp));
        }
        file.payload = std::move(bb);
    } else if (file.problem == "reductive") {
        file.payload = git_problem_from_json(payload, "", 0);
    } else if (file.problem == "uhat" || file.problem == "h" || file.problem == "uhat-blowups" ||
               file.problem == "h-blowups") {
        NRMode mode = file.problem == "uhat"           ? NRMode::uhat
                      : file.problem == "h"            ? NRMode::h
                      : file.problem == "uhat-blowups" ? NRMode::uhat_blowups
                                                       : NRMode::h_blowups;
        file.payload = nr_problem_from_json(payload, "", mode, allow_trivial_stages);
    } else {
        throw SchemaError("/problem", "unknown problem kind '" + file.problem + "'");
    }
    return file;
}

Json encode_problem_file(const ProblemFile& file) {
    Json out = Json::object();
    out["schema_version"] = file.schema_version;
    out["problem"] = file.problem;
    if (const auto* sp = std::get_if<SpaceProblem>(&file.payload)) {
        out["space"] = space_to_json(sp->space);
    } else if (const auto* bb = std::get_if<BBProblem>(&file.payload)) {
        Json components = Json::array();
        for (const FixedComponentData& c : bb->components) {
            Json cj = Json::object();
            cj["series"] = poly_to_json(c.series);
            cj["codim"] = c.codim;
            components.push_back(std::move(cj));
        }
        out["components"] = std::move(components);
    } else if (const auto* git = std::get_if<GITProblem>(&file.payload)) {
        Json pj = git_problem_to_json(*git);
        for (auto& [k, v] : pj.items()) out[k] = v;
    } else {
        Json pj = nr_problem_to_json(std::get<NRProblem>(file.payload));
        for (auto& [k, v] : pj.items()) out[k] = v;
    }
    Json opts = options_to_json(file.options);
    if (!opts.empty()) out["options"] = std::move(opts);
    return out;
}

ResultEnvelope compute(const ProblemFile& file, const ComputeSettings& settings) {
    const int truncate = effective_truncate(file, settings);
    if (const auto* sp = std::get_if<SpaceProblem>(&file.payload)) return compute_space(*sp, truncate);
    if (const auto* bb = std::get_if<BBProblem>(&file.payload)) return compute_bb(*bb);
    if (const auto* git = std::get_if<GITProblem>(&file.payload)) return compute_reductive(*git, truncate);
    return compute_nr(std::get<NRProblem>(file.payload));
}

Json envelope_to_json(const ResultEnvelope& envelope) {
    Json out = Json::object();
    if (const auto* p = std::get_if<IntPoly>(&envelope.result)) {
        Json r = Json::object();
        r["type"] = "polynomial";
        r["coefficients"] = poly_to_json(*p);
        out["result"] = std::move(r);
    } else {
        Json sj = series_to_json(std::get<TruncatedSeries>(envelope.result));
        Json r = Json::object();
        r["type"] = "series";
        r["order"] = sj["order"];
        r["coefficients"] = sj["coefficients"];
        out["result"] = std::move(r);
    }
    out["trace"] = trace_to_json(envelope.trace);
    Json checks = Json::array();
    for (const Check& c : envelope.checks) {
        Json cj = Json::object();
        cj["name"] = c.name;
        cj["pass"] = c.pass;
        cj["detail"] = c.detail;
        checks.push_back(std::move(cj));
    }
    out["checks"] = std::move(checks);
    out["warnings"] = envelope.warnings;
    return out;
}

std::string render_result(const ResultEnvelope& envelope, const std::string& format) {
    if (format == "latex") {
        if (const auto* p = std::get_if<IntPoly>(&envelope.result)) return to_latex(*p);
        return to_latex(std::get<TruncatedSeries>(envelope.result));
    }
    if (const auto* p = std::get_if<IntPoly>(&envelope.result)) return to_plain(*p);
    return to_plain(std::get<TruncatedSeries>(envelope.result));
}

VerifyReport verify(const Json& document, const ComputeSettings& settings) {
    VerifyReport report;
    ProblemFile file;
    try {
        file = decode_problem_file(document, settings.allow_trivial_stages);
        report.checks.push_back(Check{"schema", true, "payload validates"});
    } catch (const SchemaError& e) {
        report.checks.push_back(Check{"schema", false, e.what()});
        report.ok = false;
        return report;
    }
    try {
        ResultEnvelope env = compute(file, settings);
        report.checks.insert(report.checks.end(), env.checks.begin(), env.checks.end());
        report.ok = env.all_checks_pass();
    } catch (const Error& e) {
        report.checks.push_back(Check{"computation", false, e.what()});
        report.ok = false;
    }
    return report;
}

std::string catalog_text() {
    std::ostringstream os;
    auto space_line = [&](const std::string& name, const SpaceDescriptor& s) {
        os << "  " << name;
        for (size_t i = name.size(); i < 38; ++i) os << ' ';
        os << to_plain(poincare_space(s)) << "\n";
    };
    auto group_line = [&](const std::string& name, const GroupDescriptor& g) {
        os << "  " << name;
        for (size_t i = name.size(); i < 38; ++i) os << ' ';
        os << to_plain(poincare_classifying(g)) << "\n";
    };
    os << "spaces (sample parameters):\n";
    space_line("point", SpaceDescriptor{PointSpace{}});
    space_line("projective, n=2", SpaceDescriptor{ProjectiveSpace{2}});
    space_line("grassmannian, k=2 n=4", SpaceDescriptor{Grassmannian{2, 4}});
    SpaceProduct p1p1{{SpaceDescriptor{ProjectiveSpace{1}}, SpaceDescriptor{ProjectiveSpace{1}}}};
    space_line("product, [P1, P1]", SpaceDescriptor{p1p1});
    space_line("poly, coeffs {0:1, 2:1} dim 1",
               SpaceDescriptor{ExplicitPolynomial{parse_poly("1 + t^2"), 1}});
    BlowUpSpace bl{std::make_shared<SpaceDescriptor>(SpaceDescriptor{ProjectiveSpace{2}}),
                   std::make_shared<SpaceDescriptor>(SpaceDescriptor{PointSpace{}}), 2};
    space_line("blowup, P2 along a point codim 2", SpaceDescriptor{bl});
    os << "classifying spaces (sample parameters):\n";
    group_line("trivial", GroupDescriptor{TrivialGroup{}});
    group_line("gm", GroupDescriptor{GmGroup{}});
    group_line("torus, rank 2", GroupDescriptor{TorusGroup{2}});
    group_line("gl, n=2", GroupDescriptor{GLGroup{2}});
    group_line("sl, n=2", GroupDescriptor{SLGroup{2}});
    group_line("bg-explicit, 1/((1-t^2)(1-t^4))",
               GroupDescriptor{ExplicitBG{CycloRational(IntPoly::one(), {2, 4})}});
    return os.str();
}

}  // namespace quotser
