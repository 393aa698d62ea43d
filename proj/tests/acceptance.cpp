// Acceptance runner: one PASS/FAIL line per criterion.  Criterion 13 re-runs
// every suite with the same seed and compares the JSON reports byte for byte.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "noether/limits.hpp"
#include "noether/suites.hpp"

int main(int argc, char** argv) {
    CLI::App app{"acceptance criteria runner"};
    std::uint64_t seed = 7;
    std::string out_dir;
    std::vector<int> only;
    app.add_option("--seed", seed, "RNG seed shared by all suites");
    app.add_option("--out", out_dir, "directory for per-criterion JSON reports");
    app.add_option("--only", only, "run only these criteria (1-12); skips the determinism re-run");
    CLI11_PARSE(app, argc, argv);

    noether::SuiteConfig cfg;
    cfg.seed = seed;
    bool all_pass = true;
    std::vector<std::string> first_dumps;
    using Clock = std::chrono::steady_clock;

    for (const auto& suite : noether::acceptance_suites()) {
        if (!only.empty() && std::find(only.begin(), only.end(), suite.id) == only.end()) continue;
        const auto t0 = Clock::now();
        noether::SuiteOutcome o;
        std::string error;
        try {
            o = suite.run(cfg);
        } catch (const std::exception& e) {
            error = e.what();
            o.id = suite.id;
            o.name = suite.name;
            o.pass = false;
            o.report = noether::Json{{"error", error}};
        }
        const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        const bool in_time = secs < suite.budget_seconds;
        const bool ok = o.pass && in_time;
        all_pass = all_pass && ok;
        std::printf("[%s] criterion %2d: %-38s %8.2f s (budget %g s)%s%s\n", ok ? "PASS" : "FAIL", suite.id,
                    suite.name.c_str(), secs, suite.budget_seconds, in_time ? "" : " over budget",
                    error.empty() ? "" : (" error: " + error).c_str());
        std::fflush(stdout);
        noether::Json doc{{"schema", noether::kSchemaVersion}, {"criterion", suite.id}, {"name", suite.name},
                          {"seed", seed}, {"report", o.report}};
        first_dumps.push_back(doc.dump(2));
        if (!out_dir.empty()) {
            std::ofstream f(out_dir + "/criterion_" + std::to_string(suite.id) + ".json");
            f << first_dumps.back() << "\n";
        }
        if (!ok && o.pass == false) std::cout << "  report: " << o.report.dump() << "\n";
    }

    if (only.empty()) {
        const auto t0 = Clock::now();
        bool identical = true;
        std::size_t k = 0;
        for (const auto& suite : noether::acceptance_suites()) {
            std::string dump;
            try {
                auto o = suite.run(cfg);
                dump = noether::Json{{"schema", noether::kSchemaVersion}, {"criterion", suite.id},
                                     {"name", suite.name}, {"seed", seed}, {"report", o.report}}
                           .dump(2);
            } catch (const std::exception& e) {
                dump = noether::Json{{"schema", noether::kSchemaVersion}, {"criterion", suite.id},
                                     {"name", suite.name}, {"seed", seed}, {"report", {{"error", e.what()}}}}
                           .dump(2);
            }
            if (dump != first_dumps[k++]) {
                identical = false;
                std::printf("  criterion %d report differs on re-run\n", suite.id);
            }
        }
        const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        all_pass = all_pass && identical;
        std::printf("[%s] criterion 13: %-38s %8.2f s\n", identical ? "PASS" : "FAIL",
                    "deterministic JSON reports", secs);
    }
    std::printf("%s\n", all_pass ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL");
    return all_pass ? 0 : 1;
}
