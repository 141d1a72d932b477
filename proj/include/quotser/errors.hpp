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

#include <stdexcept>
#include <string>

namespace quotser {

// Every failure carries a stable code (used in CLI output and tests) and a
// human-readable message that includes either a JSON path or a trace step
// label.
class Error : public std::runtime_error {
   public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

   private:
    std::string code_;
};

// Input file failed validation. `path` is a JSON pointer into the offending
// document, e.g. "/stages/0/codim".
class SchemaError : public Error {
   public:
    SchemaError(std::string path, const std::string& message)
        : Error("SchemaError", "at " + path + ": " + message), path_(std::move(path)) {}

    const std::string& path() const noexcept { return path_; }

   private:
    std::string path_;
};

inline Error not_polynomial(const std::string& detail) { return Error("NotPolynomial", detail); }
inline Error empty_quotient(const std::string& detail) { return Error("EmptyQuotient", detail); }
inline Error invalid_codimension(const std::string& detail) { return Error("InvalidCodimension", detail); }
inline Error classifying_space_not_finite(const std::string& detail) {
    return Error("ClassifyingSpaceNotFinite", detail);
}
inline Error empty_decomposition(const std::string& detail) { return Error("EmptyDecomposition", detail); }
inline Error stages_not_monotone(const std::string& detail) { return Error("StagesNotMonotone", detail); }
inline Error ss_not_s(const std::string& detail) { return Error("SsNotS", detail); }
inline Error recursion_limit(const std::string& detail) { return Error("RecursionLimit", detail); }
inline Error cyclic_problem(const std::string& detail) { return Error("CyclicProblem", detail); }
inline Error trace_mismatch(const std::string& detail) { return Error("TraceMismatch", detail); }

}  // namespace quotser
