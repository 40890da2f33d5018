// Runs every inequality of the catalog on its standard grid and prints one
// summary line per case.

#include <cstdio>

#include <struvekit/inequalities.hpp>

int main() {
    namespace sk = struvekit;
    int failing = 0;
    std::printf("%-22s %7s %7s %12s %s\n", "case", "tested", "skipped", "min margin", "violations");
    for (const auto& o : sk::run_all()) {
        if (!o.report) {
            std::printf("%-22s error: %s\n", o.case_id.c_str(), o.error.c_str());
            ++failing;
            continue;
        }
        const auto& r = *o.report;
        std::printf("%-22s %7d %7d %12.3e %zu\n", r.case_id.c_str(), r.points_tested, r.points_skipped,
                    r.min_margin.value_or(0.0), r.violations.size());
        if (!r.violations.empty()) ++failing;
    }
    return failing == 0 ? 0 : 1;
}
