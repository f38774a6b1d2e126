#pragma once

#include <vector>

namespace iscover {

struct PairedTResult {
    double t = 0.0;  // +/-infinity when differences have zero variance but nonzero mean
    bool significant_at_p01 = false;
};

// Standard paired t statistic on a - b, two-sided at p = .01 against
// tabulated critical values (next lower tabulated df above 30). All-zero
// differences give t = 0, not significant; zero variance with nonzero mean
// is reported significant.
PairedTResult paired_t_test(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace iscover
