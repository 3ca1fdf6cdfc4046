// Acceptance battery: one line per criterion, exit status 0 iff all pass.

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>

#include "dismantle/suite.hpp"

int main(int argc, char** argv)
{
    dismantle::SuiteOptions opt;
    for (int i = 1; i < argc; ++i) {
        if (!std::strcmp(argv[i], "--seed") && i + 1 < argc)
            opt.seed = std::strtoull(argv[++i], nullptr, 10);
        else if (!std::strcmp(argv[i], "--only") && i + 1 < argc)
            opt.only.emplace_back(argv[++i]);
        else {
            std::fprintf(stderr, "usage: acceptance [--seed N] [--only P<k>]...\n");
            return 2;
        }
    }
    opt.on_result = [](const dismantle::CriterionResult& r) {
        std::printf("%-4s %s  %zu cases, %zu failed, %.2fs  %s | %s\n", r.id.c_str(), r.passed ? "PASS" : "FAIL",
                    r.cases, r.failures, r.seconds, r.title.c_str(), r.detail.c_str());
        std::fflush(stdout);
    };
    try {
        const auto report = dismantle::run_suite(opt);
        std::printf("%s (seed %llu)\n", report.passed() ? "ALL PASS" : "SOME CRITERIA FAILED",
                    static_cast<unsigned long long>(opt.seed));
        return report.passed() ? 0 : 1;
    } catch (const dismantle::Error& e) {
        std::fprintf(stderr, "%s: %s\n", dismantle::to_string(e.kind()), e.what());
        return 2;
    }
}
