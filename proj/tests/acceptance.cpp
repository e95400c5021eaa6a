// Integration gate: runs every verification criterion and prints one
// pass/fail line per criterion. Exits nonzero if any fails.

#include <cstdio>

#include "mbp/verify.hpp"

int main() {
    bool all = true;
    for (const mbp::Criterion& c : mbp::run_acceptance()) {
        std::printf("[%s] %d. %s (%.2fs) — %s\n", c.pass ? "PASS" : "FAIL", c.id, c.name.c_str(),
                    c.seconds, c.detail.c_str());
        std::fflush(stdout);
        all = all && c.pass;
    }
    if (!all) std::printf("verification FAILED\n");
    return all ? 0 : 1;
}
