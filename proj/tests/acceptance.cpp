// One line per acceptance criterion; exit status 1 if any fails.

#include <cstdio>

#include "checks.hpp"

int main() {
    using namespace trigspline::oracle;
    int failures = 0;
    for (int id = 1; id <= check_count; ++id) {
        const CheckResult r = run_check(id);
        std::printf("[%s] %d. %s (%.1f s): %s\n", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(), r.seconds,
                    r.detail.c_str());
        std::fflush(stdout);
        failures += r.passed ? 0 : 1;
    }
    std::printf("%d/%d criteria passed\n", check_count - failures, check_count);
    return failures == 0 ? 0 : 1;
}
