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
 * quotser — exact Poincaré-series calculator for GIT quotients.
 *
 * Exit codes: 0 success, 1 usage or schema error, 2 verification failure,
 * 3 computation error.
 */

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "quotser/io.hpp"

namespace {

namespace fs = std::filesystem;
using quotser::Json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerification = 2;
constexpr int kExitComputation = 3;

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw quotser::SchemaError("/", "cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw quotser::SchemaError("/", std::string("invalid JSON: ") + e.what());
    }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

struct ComputeFlags {
    std::string input;
    std::string batch_dir;
    std::string format;
    int truncate = -1;
    bool allow_trivial_stages = false;
};

quotser::ComputeSettings settings_from(const ComputeFlags& flags) {
    quotser::ComputeSettings s;
    if (flags.truncate >= 0) s.truncate = flags.truncate;
    s.allow_trivial_stages = flags.allow_trivial_stages;
    return s;
}

int run_compute_one(const ComputeFlags& flags) {
    Json doc = load_json(flags.input);
    quotser::ProblemFile file = quotser::decode_problem_file(doc, flags.allow_trivial_stages);
    quotser::ResultEnvelope env = quotser::compute(file, settings_from(flags));

    std::string format = !flags.format.empty() ? flags.format
                         : file.options.format ? *file.options.format
                                               : std::string("plain");
    if (format == "json")
        std::cout << dump(quotser::envelope_to_json(env));
    else
        std::cout << quotser::render_result(env, format) << "\n";

    for (const std::string& w : env.warnings) std::cerr << "warning: " << w << "\n";
    if (!env.all_checks_pass()) {
        for (const quotser::Check& c : env.checks)
            if (!c.pass) std::cerr << "check failed: " << c.name << " (" << c.detail << ")\n";
        return kExitVerification;
    }
    return kExitOk;
}

int run_compute_batch(const ComputeFlags& flags) {
    std::vector<fs::path> inputs;
    for (const auto& entry : fs::directory_iterator(flags.batch_dir))
        if (entry.is_regular_file() && entry.path().extension() == ".json" &&
            entry.path().string().find(".result.json") == std::string::npos)
            inputs.push_back(entry.path());
    std::sort(inputs.begin(), inputs.end());

    struct Outcome {
        std::string message;
        int code = kExitOk;
    };
    std::vector<std::future<Outcome>> futures;
    futures.reserve(inputs.size());
    for (const fs::path& path : inputs) {
        futures.push_back(std::async(std::launch::async, [path, &flags]() -> Outcome {
            try {
                Json doc = load_json(path.string());
                quotser::ProblemFile file = quotser::decode_problem_file(doc, flags.allow_trivial_stages);
                quotser::ResultEnvelope env = quotser::compute(file, settings_from(flags));
                fs::path out = path;
                out.replace_extension(".result.json");
                std::ofstream os(out);
                os << dump(quotser::envelope_to_json(env));
                if (!env.all_checks_pass()) return {"checks failed", kExitVerification};
                return {"ok", kExitOk};
            } catch (const quotser::SchemaError& e) {
                return {e.what(), kExitUsage};
            } catch (const quotser::Error& e) {
                return {e.what(), kExitComputation};
            }
        }));
    }
    int exit = kExitOk;
    for (size_t i = 0; i < inputs.size(); ++i) {
        Outcome outcome = futures[i].get();
        std::cout << inputs[i].filename().string() << ": " << outcome.message << "\n";
        exit = std::max(exit, outcome.code);
    }
    return exit;
}

int run_verify(const ComputeFlags& flags) {
    Json doc = load_json(flags.input);
    quotser::VerifyReport report = quotser::verify(doc, settings_from(flags));
    for (const quotser::Check& c : report.checks) {
        std::cout << "check " << c.name << ": " << (c.pass ? "pass" : "fail");
        if (!c.detail.empty()) std::cout << " (" << c.detail << ")";
        std::cout << "\n";
    }
    std::cout << "verification: " << (report.ok ? "PASS" : "FAIL") << "\n";
    return report.ok ? kExitOk : kExitVerification;
}

int run_expand(const std::string& expr, int order, const std::string& format) {
    auto semi = expr.find(';');
    std::string num_text = expr.substr(0, semi);
    std::vector<int> den;
    if (semi != std::string::npos) {
        std::stringstream rest(expr.substr(semi + 1));
        std::string item;
        while (std::getline(rest, item, ',')) {
            if (item.empty()) continue;
            try {
                int k = std::stoi(item);
                if (k < 1) throw std::invalid_argument("k");
                den.push_back(k);
            } catch (const std::exception&) {
                throw quotser::SchemaError("/", "denominator entries must be positive integers, got '" + item + "'");
            }
        }
    }
    quotser::CycloRational r(quotser::parse_poly(num_text), std::move(den));
    quotser::TruncatedSeries s = quotser::expand(r, order);
    if (format == "latex")
        std::cout << quotser::to_latex(s) << "\n";
    else if (format == "json")
        std::cout << dump(quotser::series_to_json(s));
    else
        std::cout << quotser::to_plain(s) << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quotser — exact Poincaré series of GIT quotients"};
    app.require_subcommand(1);

    ComputeFlags flags;

    CLI::App* compute = app.add_subcommand("compute", "compute the series for a problem file");
    compute->add_option("-i,--input", flags.input, "problem file (JSON)");
    compute->add_option("--batch", flags.batch_dir, "process every .json file in a directory concurrently");
    compute->add_option("--truncate", flags.truncate, "truncation order for infinite series (default 64)");
    compute->add_option("--format", flags.format, "plain | latex | json")
        ->check(CLI::IsMember({"plain", "latex", "json"}));
    compute->add_flag("--allow-trivial-stages", flags.allow_trivial_stages,
                      "permit codim-1 (no-op) blow-up stages");

    CLI::App* verify = app.add_subcommand("verify", "run the checks for a problem file, no result output");
    verify->add_option("-i,--input", flags.input, "problem file (JSON)")->required();
    verify->add_flag("--allow-trivial-stages", flags.allow_trivial_stages,
                     "permit codim-1 (no-op) blow-up stages");

    CLI::App* catalog = app.add_subcommand("catalog", "list built-in spaces and groups with sample series");

    std::string expand_expr;
    int expand_order = 16;
    CLI::App* expand = app.add_subcommand("expand", "expand \"num;den\" as a power series");
    expand->add_option("-e,--expr", expand_expr,
                       "rational expression: polynomial, ';', comma-separated k-list for (1-t^k) factors")
        ->required();
    expand->add_option("-N,--order", expand_order, "truncation order")->required();
    expand->add_option("--format", flags.format, "plain | latex | json")
        ->check(CLI::IsMember({"plain", "latex", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (compute->parsed()) {
            if (!flags.batch_dir.empty() && !flags.input.empty()) {
                std::cerr << "error: pass either --input or --batch, not both\n";
                return kExitUsage;
            }
            if (!flags.batch_dir.empty()) return run_compute_batch(flags);
            if (flags.input.empty()) {
                std::cerr << "error: --input is required without --batch\n";
                return kExitUsage;
            }
            return run_compute_one(flags);
        }
        if (verify->parsed()) return run_verify(flags);
        if (catalog->parsed()) {
            std::cout << quotser::catalog_text();
            return kExitOk;
        }
        if (expand->parsed()) return run_expand(expand_expr, expand_order, flags.format);
    } catch (const quotser::SchemaError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const quotser::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitComputation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitComputation;
    }
    return kExitUsage;
}
