// Acceptance runner: one PASS/FAIL line per criterion. Exit status 0 only if all pass.

#include <cstdio>
#include <cstdlib>
#include <string>

#include "finestruct/verify.hpp"

namespace v = finestruct::verify;

int main(int argc, char** argv) {
    v::Options o;
    if (argc > 1) o.seed = std::strtoull(argv[1], nullptr, 10);
    const bool verbose = std::getenv("FINESTRUCT_VERBOSE") != nullptr;

    bool all = true;
    for (auto g : v::kGroups) {
        const auto r = v::run_group(g, o);
        bool pass = r.pass();
        std::string note;
        if (r.criterion == 1 && r.seconds >= 30.0) {
            pass = false;
            note = " (runtime limit 30s exceeded)";
        }
        double worst = 0.0;
        for (const auto& c : r.checks)
            if (!c.reject) worst = std::max(worst, c.residual / c.tol);
        std::printf("criterion %d %-16s %s  checks=%zu worst residual/tol=%.2e  %.2fs%s\n", r.criterion, r.group.c_str(),
                    pass ? "PASS" : "FAIL", r.checks.size(), worst, r.seconds, note.c_str());
        for (const auto& c : r.checks)
            if (verbose || !c.pass())
                std::printf("    %s %s: %.3g %s %.3g\n", c.pass() ? "ok  " : "FAIL", c.name.c_str(), c.residual,
                            c.reject ? ">" : "<=", c.tol);
        all = all && pass;
    }
    std::fflush(stdout);
    return all ? 0 : 1;
}
