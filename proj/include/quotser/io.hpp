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
 * io.hpp
 * ------
 * Problem-file parsing and validation, computation dispatch, invariant
 * verification and output formatting.  A problem file is a single JSON
 * object:
 *
 *   {"schema_version": "1", "problem": "<kind>", ...payload...,
 *    "options": {"truncate": 64, "format": "plain"}}
 *
 * with kinds: space | bb | reductive | uhat | h | uhat-blowups | h-blowups.
 */

#pragma once

#include <optional>
#include <variant>

#include "quotser/bb.hpp"
#include "quotser/kirwan.hpp"
#include "quotser/nonreductive.hpp"

namespace quotser {

struct SpaceProblem {
    SpaceDescriptor space;
};

struct BBProblem {
    std::vector<FixedComponentData> components;
};

struct FileOptions {
    std::optional<int> truncate;
    std::optional<std::string> format;  // plain | latex | json
};

struct ProblemFile {
    std::string schema_version = "1";
    std::string problem;
    std::variant<SpaceProblem, BBProblem, GITProblem, NRProblem> payload;
    FileOptions options;
};

struct ComputeSettings {
    std::optional<int> truncate;      // overrides the file's option
    bool allow_trivial_stages = false;
    int default_truncate = 64;
};

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct ResultEnvelope {
    std::variant<IntPoly, TruncatedSeries> result;
    Trace trace;
    std::vector<Check> checks;
    std::vector<std::string> warnings;

    bool all_checks_pass() const;
};

ProblemFile decode_problem_file(const Json& document, bool allow_trivial_stages = false);
Json encode_problem_file(const ProblemFile& file);

// Dispatches to the owning module, attaches the trace and the standard
// checks (coefficient nonnegativity, palindromicity at the declared
// quotient dimension, Euler bookkeeping for blow-up pipelines, trace
// replay).  Throws Error subclasses on schema or computation failure.
ResultEnvelope compute(const ProblemFile& file, const ComputeSettings& settings = {});

Json envelope_to_json(const ResultEnvelope& envelope);

// Plain or latex rendering of the result value.
std::string render_result(const ResultEnvelope& envelope, const std::string& format);

// Check report with no result emission: schema and computation failures are
// folded into the report instead of escaping as exceptions.
struct VerifyReport {
    std::vector<Check> checks;
    bool ok = false;
};
VerifyReport verify(const Json& document, const ComputeSettings& settings = {});

// Listing of the built-in space and group variants with sample series.
std::string catalog_text();

}  // namespace quotser
