#include <cstdio>

#include "bhl/suite.hpp"

int main() {
    int failed = 0;
    for (int i = 1; i <= bhl::criterion_count(); ++i) {
        bhl::Criterion c = bhl::run_criterion(i);
        std::printf("criterion %d: %s %s (%.1fs)\n", c.number, c.passed() ? "PASS" : "FAIL", c.title.c_str(),
                    c.seconds);
        if (!c.in_budget()) std::printf("  over budget: %.1fs allowed\n", c.budget);
        for (const auto& k : c.report.checks)
            if (k.status != bhl::Status::Pass)
                std::printf("  %s: %s %s\n", k.id.c_str(), bhl::status_str(k.status).c_str(), k.witness.c_str());
        std::fflush(stdout);
        if (!c.passed()) ++failed;
    }
    std::printf("%d of %d criteria passed\n", bhl::criterion_count() - failed, bhl::criterion_count());
    return failed == 0 ? 0 : 1;
}
