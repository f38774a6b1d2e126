#include "iscover/stats.hpp"

#include <cmath>
#include <limits>

#include "iscover/errors.hpp"

namespace iscover {

namespace {

// Two-sided critical values of Student's t at p = .01.
constexpr double kCritByDf[] = {
    63.657, 9.925, 5.841, 4.604, 4.032, 3.707, 3.499, 3.355, 3.250, 3.169,  // df 1..10
    3.106,  3.055, 3.012, 2.977, 2.947, 2.921, 2.898, 2.878, 2.861, 2.845,  // df 11..20
    2.831,  2.819, 2.807, 2.797, 2.787, 2.779, 2.771, 2.763, 2.756, 2.750,  // df 21..30
};

double critical_value(int df) {
    if (df <= 30) return kCritByDf[df - 1];
    // Conservative: the next lower tabulated df has the larger critical value.
    if (df < 60) return 2.704;   // df 40
    if (df < 120) return 2.660;  // df 60
    if (df < 1000) return 2.617; // df 120
    return 2.576;
}

}  // namespace

PairedTResult paired_t_test(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) throw parameter_error("paired_t_test: length mismatch");
    const int n = static_cast<int>(a.size());
    if (n < 2) throw parameter_error("paired_t_test: need at least two pairs");

    double mean = 0;
    for (int i = 0; i < n; ++i) mean += a[i] - b[i];
    mean /= n;

    double ss = 0;
    for (int i = 0; i < n; ++i) {
        double d = (a[i] - b[i]) - mean;
        ss += d * d;
    }
    double var = ss / (n - 1);

    PairedTResult res;
    if (var == 0.0) {
        if (mean == 0.0) return res;  // t = 0, not significant
        res.t = mean > 0 ? std::numeric_limits<double>::infinity()
                         : -std::numeric_limits<double>::infinity();
        res.significant_at_p01 = true;
        return res;
    }
    res.t = mean / std::sqrt(var / n);
    res.significant_at_p01 = std::abs(res.t) > critical_value(n - 1);
    return res;
}

}  // namespace iscover
