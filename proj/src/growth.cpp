#include "semispec/growth.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace semispec {

namespace {

// Exact log n! by summation; sequences are short enough that the Stirling
// series buys nothing.
std::vector<double> log_factorials(int n_max) {
    std::vector<double> lf(static_cast<size_t>(n_max) + 1, 0.0);
    for (int n = 1; n <= n_max; ++n) lf[static_cast<size_t>(n)] = lf[static_cast<size_t>(n) - 1] + std::log(n);
    return lf;
}

void require_window(const CommutatorSequence& seq, int min_n) {
    if (seq.n_max < min_n)
        fail(Errc::WindowTooShort, "growth estimation needs n_max >= " + std::to_string(min_n));
}

} // namespace

double order_estimate(const CommutatorSequence& seq) {
    if (seq.hit_zero) return 0.0;
    require_window(seq, 50);

    // For coefficient norms ||a_n|| ~ C v^n / n! the direct surrogate
    // n log n / (-log||a_n||) carries an O(1/log n) bias, far above the
    // accuracy needed here. Regressing -log||a_n||/n against log n over
    // the tail recovers 1/order as the slope with bias O(log n / n).
    const std::vector<double> lf = log_factorials(seq.n_max);
    const int begin = std::max(2, seq.n_max / 2);
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int count = 0;
    for (int n = begin; n <= seq.n_max; ++n) {
        const double x = std::log(static_cast<double>(n));
        const double y = (lf[static_cast<size_t>(n)] - seq.log_norms[static_cast<size_t>(n)]) / n;
        sx += x; sy += y; sxx += x * x; sxy += x * y;
        ++count;
    }
    const double slope = (count * sxy - sx * sy) / (count * sxx - sx * sx);
    if (!(slope > 0.0)) return std::numeric_limits<double>::infinity();
    return 1.0 / slope;
}

double type_estimate(const CommutatorSequence& seq, double order) {
    if (seq.hit_zero) return 0.0;
    if (std::abs(order - 1.0) > 0.2)
        fail(Errc::BadInput, "type_estimate: identity with varrho holds only at exponential order");
    require_window(seq, 50);

    const std::vector<double> lf = log_factorials(seq.n_max);
    const int begin = std::max(2, seq.n_max / 2);
    double best = 0.0;
    for (int n = begin; n <= seq.n_max; ++n) {
        const double log_coeff = seq.log_norms[static_cast<size_t>(n)] - lf[static_cast<size_t>(n)];
        const double t = (1.0 / std::numbers::e) * n * std::exp(log_coeff / n);
        best = std::max(best, t);
    }
    return best;
}

GrowthEstimate growth_estimate(const CommutatorSequence& seq) {
    GrowthEstimate out;
    out.n_used = seq.hit_zero ? seq.zero_index : seq.n_max;
    if (seq.hit_zero) {
        out.degenerate = true;
        return out;   // constant function: order 0, type 0
    }
    out.order = order_estimate(seq);
    out.type_applicable = std::abs(out.order - 1.0) <= 0.2;
    if (out.type_applicable) out.type = type_estimate(seq, out.order);
    return out;
}

} // namespace semispec
