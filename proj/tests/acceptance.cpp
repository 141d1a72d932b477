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
 * Acceptance suite: one criterion per section, one PASS/FAIL line each.
 * Runs the shipped fixtures through the library and the installed CLI and
 * checks results, invariants, error paths, exit codes and determinism.
 */

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <random>
#include <sstream>

#include "quotser/bb.hpp"
#include "quotser/io.hpp"
#include "test_util.hpp"

using namespace quotser;
using quotser::testing::P;
using quotser::testing::read_file;

namespace {

const std::string kFixtures = FIXTURE_DIR;
const std::string kCli = CLI_PATH;

int g_failures = 0;

void report(int criterion, const std::string& name, bool pass, const std::string& detail = "") {
    std::cout << "criterion " << criterion << " " << name << ": " << (pass ? "PASS" : "FAIL");
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << std::endl;
    if (!pass) ++g_failures;
}

double ms_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

ResultEnvelope compute_fixture(const std::string& name, double* elapsed_ms = nullptr) {
    Json doc = Json::parse(read_file(kFixtures + "/" + name));
    ProblemFile file = decode_problem_file(doc);
    auto start = std::chrono::steady_clock::now();
    ResultEnvelope env = compute(file);
    if (elapsed_ms) *elapsed_ms = ms_since(start);
    return env;
}

struct CliResult {
    int exit_code = -1;
    std::string output;  // stdout + stderr
};

CliResult run_cli(const std::string& args) {
    CliResult result;
    std::string command = kCli + " " + args + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) return result;
    std::array<char, 4096> buffer{};
    while (size_t n = fread(buffer.data(), 1, buffer.size(), pipe)) result.output.append(buffer.data(), n);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

// Fixture-scale oracle checks, each returning a failure description or "".

std::string expect_result(const std::string& fixture, const std::string& want, double budget_ms) {
    double elapsed = 0.0;
    ResultEnvelope env = compute_fixture(fixture, &elapsed);
    std::string got = render_result(env, "plain");
    if (got != want) return "expected '" + want + "', computed '" + got + "'";
    if (elapsed >= budget_ms) return "took " + std::to_string(elapsed) + " ms";
    return "";
}

void criterion_1() {
    std::string fail = expect_result("space_blowup_p2_point.json", "1 + 2*t^2 + t^4", 10.0);
    report(1, "blow-up formula oracle", fail.empty(), fail);
}

void criterion_2() {
    double elapsed = 0.0;
    ResultEnvelope env = compute_fixture("reductive_p3_gm.json", &elapsed);
    std::string fail;
    if (render_result(env, "plain") != "1 + 2*t^2 + t^4")
        fail = "computed '" + render_result(env, "plain") + "'";
    for (const Check& c : env.checks)
        if ((c.name == "exact-division" || c.name == "palindromic") && !c.pass)
            fail = c.name + " check failed";
    if (fail.empty() && elapsed >= 10.0) fail = "too slow";
    report(2, "reductive engine oracle A (P^3 // Gm)", fail.empty(), fail);
}

void criterion_3() {
    std::string fail = expect_result("reductive_p1cubed_sl2.json", "1", 10.0);
    report(3, "reductive engine oracle B ((P^1)^3 // SL(2))", fail.empty(), fail);
}

void criterion_4() {
    std::string fail = expect_result("uhat_p2.json", "1", 10.0);
    report(4, "graded-unipotent quotient oracle (P^2)", fail.empty(), fail);
}

void criterion_5() {
    std::string fail = expect_result("uhat_blowups_twostage.json", "1 + 3*t^2 + 3*t^4 + t^6", 10.0);
    report(5, "blow-up pipeline oracle (two stages)", fail.empty(), fail);
}

// Criterion 6: seed-pinned randomized invariant suite, >= 500 cases total.
void criterion_6() {
    auto start = std::chrono::steady_clock::now();
    std::mt19937_64 rng(0x5eed2026);
    int cases = 0;
    std::ostringstream why;

    auto fail = [&](const std::string& msg) {
        if (why.tellp() == 0) why << msg;
    };

    // Telescoping identity for the kirwan factor.
    for (int d = 1; d <= 32; ++d) {
        ++cases;
        if (kirwan_factor(d) * (IntPoly::one() - IntPoly::term(1, 2)) !=
            IntPoly::one() - IntPoly::term(1, 2 * d))
            fail("kirwan telescoping failed at d=" + std::to_string(d));
    }

    // Grassmannian symmetry and binomial coefficient sums against the
    // partition-enumeration oracle.
    for (int n = 0; n <= 8; ++n)
        for (int k = 0; k <= n; ++k) {
            cases += 2;
            IntPoly g = poincare_space(SpaceDescriptor{Grassmannian{k, n}});
            if (g != poincare_space(SpaceDescriptor{Grassmannian{n - k, n}}))
                fail("grassmannian symmetry failed");
            Int sum = 0;
            for (const auto& [d, c] : g.coeffs()) sum += c;
            Int binom = 1;
            for (int i = 1; i <= k; ++i) binom = binom * (n - k + i) / i;
            if (sum != binom) fail("grassmannian coefficient sum failed");
        }

    // Euler additivity of blow-ups.
    std::uniform_int_distribution<int> cdist(1, 6);
    for (int i = 0; i < 150; ++i) {
        ++cases;
        IntPoly base = quotser::testing::random_poly(rng, 16, 1000);
        IntPoly center = quotser::testing::random_poly(rng, 10, 1000);
        int c = cdist(rng);
        if (euler_characteristic(poincare_blowup(base, center, c)) !=
            euler_characteristic(base) + Int(c - 1) * euler_characteristic(center))
            fail("euler additivity failed");
    }

    // Pipelines with no stages reduce to the closed-form quotients.
    std::uniform_int_distribution<int> ddist(1, 5), udist(1, 3), zdist(0, 4);
    for (int i = 0; i < 150; ++i) {
        ++cases;
        NRProblem p;
        p.group.dim_u = udist(rng);
        p.dim_zmin = zdist(rng);
        p.dim_x = p.group.dim_u + p.dim_zmin + ddist(rng);
        p.zmin_series = quotser::testing::random_nonneg_poly(rng);
        p.zmin_ss_equals_s = true;
        p.mode = (i % 2 == 0) ? NRMode::uhat_blowups : NRMode::h_blowups;
        NRProblem closed = p;
        closed.mode = (i % 2 == 0) ? NRMode::uhat : NRMode::h;
        IntPoly with_stages =
            (i % 2 == 0) ? hat_uhat_quotient(p).series : hat_h_quotient(p).series;
        IntPoly direct = (i % 2 == 0) ? uhat_quotient(closed).series : h_quotient(closed).series;
        if (with_stages != direct) fail("empty-stage pipeline does not reduce to the closed form");
    }

    // Perfectness reconstruction on the shipped reductive fixtures and on
    // random stratifications.
    for (const char* name : {"reductive_p3_gm.json", "reductive_p1cubed_sl2.json"}) {
        ++cases;
        Json doc = Json::parse(read_file(kFixtures + std::string("/") + name));
        ProblemFile file = decode_problem_file(doc);
        const GITProblem& p = std::get<GITProblem>(file.payload);
        CycloRational total = semistable_series(p);
        for (const StratumData& s : p.strata)
            for (const StratumPiece& piece : s.pieces)
                total += std::get<ExplicitEquivariantSeries>(piece.sub).value *
                         IntPoly::term(1, 2 * piece.codim);
        if (!(total == equivariant_total(p.space, p.group))) fail("fixture perfectness failed");
    }
    std::uniform_int_distribution<int> ndist(0, 4), kdist(1, 3);
    for (int i = 0; i < 100; ++i) {
        ++cases;
        GITProblem p;
        p.space = SpaceDescriptor{ProjectiveSpace{ndist(rng) + 1}};
        p.group = GroupDescriptor{GmGroup{}};
        const int nstrata = ndist(rng);
        for (int s = 0; s < nstrata; ++s) {
            std::vector<int> den;
            for (int k = kdist(rng); k > 0; --k) den.push_back(2 * kdist(rng));
            StratumData stratum;
            stratum.label = "s" + std::to_string(s);
            stratum.pieces.push_back(
                {kdist(rng), ExplicitEquivariantSeries{
                                 CycloRational(quotser::testing::random_nonneg_poly(rng), den)}});
            p.strata.push_back(std::move(stratum));
        }
        CycloRational total = semistable_series(p);
        for (const StratumData& s : p.strata)
            for (const StratumPiece& piece : s.pieces)
                total += std::get<ExplicitEquivariantSeries>(piece.sub).value *
                         IntPoly::term(1, 2 * piece.codim);
        if (!(total == equivariant_total(p.space, p.group))) fail("random perfectness failed");
    }

    // Fixed-point assembly of projective space.
    for (int n = 0; n <= 10; ++n) {
        ++cases;
        std::vector<FixedComponentData> comps;
        for (int i = 0; i <= n; ++i) comps.push_back({P("1"), i});
        if (assemble_bb(comps) != poincare_space(SpaceDescriptor{ProjectiveSpace{n}}))
            fail("fixed-point assembly of projective space failed");
    }

    double elapsed = ms_since(start);
    bool ok = why.tellp() == 0 && cases >= 500 && elapsed < 5000.0;
    std::ostringstream detail;
    detail << cases << " cases in " << static_cast<int>(elapsed) << " ms";
    if (why.tellp() != 0) detail << "; " << why.str();
    report(6, "randomized invariant suite", ok, detail.str());
}

// Criterion 7: negative paths surface the documented error and exit code.
void criterion_7() {
    std::ostringstream why;
    auto expect = [&](const std::string& args, int want_exit, const std::string& want_text) {
        CliResult r = run_cli(args);
        if (r.exit_code != want_exit)
            why << "[" << args << " -> exit " << r.exit_code << ", wanted " << want_exit << "] ";
        else if (r.output.find(want_text) == std::string::npos)
            why << "[" << args << " missing '" << want_text << "'] ";
    };
    const std::string bad = kFixtures + "/bad";
    expect("compute -i " + bad + "/sign_corrupted_stratification.json", 3, "NotPolynomial");
    expect("verify -i " + bad + "/sign_corrupted_stratification.json", 2, "NotPolynomial");
    expect("verify -i " + bad + "/codim0_stage.json", 2, "/stages/0/codim");
    expect("compute -i " + bad + "/empty_quotient.json", 3, "EmptyQuotient");
    expect("verify -i " + bad + "/empty_quotient.json", 2, "EmptyQuotient");
    expect("compute -i " + bad + "/nonmonotone_stages.json", 3, "StagesNotMonotone");
    expect("verify -i " + bad + "/nonmonotone_stages.json", 2, "StagesNotMonotone");
    report(7, "negative-path suite", why.tellp() == 0, why.str());
}

// Criterion 8: byte-identical envelopes on repeated computation.
void criterion_8() {
    std::ostringstream why;
    namespace fs = std::filesystem;
    for (const auto& entry : fs::directory_iterator(kFixtures)) {
        if (!entry.is_regular_file() || entry.path().extension() != ".json") continue;
        ProblemFile file = decode_problem_file(Json::parse(read_file(entry.path().string())));
        std::string a = envelope_to_json(compute(file)).dump(2);
        std::string b = envelope_to_json(compute(file)).dump(2);
        if (a != b) why << "[" << entry.path().filename().string() << " not deterministic] ";
    }
    CliResult first = run_cli("compute --format json -i " + kFixtures + "/reductive_p3_gm.json");
    CliResult second = run_cli("compute --format json -i " + kFixtures + "/reductive_p3_gm.json");
    if (first.output != second.output || first.exit_code != second.exit_code)
        why << "[CLI output not deterministic] ";
    report(8, "determinism", why.tellp() == 0, why.str());
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    std::cout << "acceptance: " << (8 - g_failures) << "/8 criteria passed" << std::endl;
    return g_failures == 0 ? 0 : 1;
}
