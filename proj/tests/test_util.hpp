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

#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "quotser/algebra.hpp"

namespace quotser::testing {

// Shorthand for expected values: P("1 + 2*t^2 + t^4").
inline IntPoly P(const std::string& text) { return parse_poly(text); }

inline IntPoly random_poly(std::mt19937_64& rng, int max_degree = 40, long max_coeff = 1'000'000) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<int> nterm(0, 8);
    std::uniform_int_distribution<long> coeff(-max_coeff, max_coeff);
    std::map<int, Int> coeffs;
    const int terms = nterm(rng);
    for (int i = 0; i < terms; ++i) coeffs[deg(rng)] += Int(coeff(rng));
    return IntPoly::from_coeffs(std::move(coeffs));
}

inline IntPoly random_nonneg_poly(std::mt19937_64& rng, int max_degree = 12, long max_coeff = 9) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<int> nterm(1, 5);
    std::uniform_int_distribution<long> coeff(0, max_coeff);
    std::map<int, Int> coeffs;
    const int terms = nterm(rng);
    for (int i = 0; i < terms; ++i) coeffs[deg(rng)] += Int(coeff(rng));
    coeffs[0] += 1;
    return IntPoly::from_coeffs(std::move(coeffs));
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace quotser::testing
