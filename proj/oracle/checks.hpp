#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "trigspline/splines.hpp"

namespace trigspline::oracle {

struct CheckOptions {
    std::uint64_t seed = 20'241'015;
    OracleConfig oracle;
};

struct CheckResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

inline constexpr int check_count = 9;

/// Runs one acceptance check, 1..check_count.
CheckResult run_check(int id, const CheckOptions& options = {});
std::vector<CheckResult> run_checks(const std::vector<int>& ids, const CheckOptions& options = {});

/// Published |det| values of the N = 9 collocation matrices on Δ1^(0).
struct DeterminantCell {
    std::string kind;
    int order = 1;
    double expected = 0.0;
};
const std::vector<DeterminantCell>& reference_determinants();

/// Within 1% relative, or within 1e-6 absolute for entries <= 1e-6 (below
/// 1e-12 for an entry of exactly 0).
bool determinant_matches(double computed, double expected);

/// Every supported (family, i1, i2) combination with the given remaining
/// fields.
std::vector<SplineConfig> supported_configs(FactorKind factor, int order, int derivative, int count,
                                            const TruncationPolicy& truncation);

} // namespace trigspline::oracle
