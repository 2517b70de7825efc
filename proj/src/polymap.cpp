#include "gspec/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace gspec {

double PolyMapReport::evaluate(double x) const {
    if (!coefficients) throw std::logic_error("polynomial map is unstable; no coefficients to evaluate");
    const auto& c = *coefficients;
    if (c.empty()) return 0.0;
    double acc = c.back();
    for (std::size_t k = c.size() - 1; k-- > 0;) acc = acc * (x - nodes[k]) + c[k];
    return acc;
}

PolyMapReport polynomial_spectrum_map(const Spectrum& src, const Spectrum& dst, double merge_tol) {
    if (src.size() != dst.size()) throw std::invalid_argument("polynomial_spectrum_map: spectra differ in length");
    if (merge_tol < 0.0) throw std::invalid_argument("polynomial_spectrum_map: merge tolerance must be non-negative");
    const std::size_t n = src.size();

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return src.values[a] < src.values[b]; });

    PolyMapReport report;
    report.min_input_gap = std::numeric_limits<double>::infinity();
    std::vector<double> node_values;

    // Walk the sorted inputs, chaining neighbours closer than merge_tol into clusters.
    std::size_t start = 0;
    while (start < n) {
        std::size_t end = start + 1;
        while (end < n) {
            const double gap = src.values[order[end]] - src.values[order[end - 1]];
            report.min_input_gap = std::min(report.min_input_gap, gap);
            if (gap > merge_tol) break;
            ++end;
        }
        double x_sum = 0.0;
        double y_sum = 0.0;
        double y_lo = std::numeric_limits<double>::infinity();
        double y_hi = -std::numeric_limits<double>::infinity();
        for (std::size_t k = start; k < end; ++k) {
            const double y = dst.values[order[k]];
            x_sum += src.values[order[k]];
            y_sum += y;
            y_lo = std::min(y_lo, y);
            y_hi = std::max(y_hi, y);
        }
        const double count = static_cast<double>(end - start);
        if (end - start > 1) {
            report.output_span_over_degenerate_inputs = std::max(report.output_span_over_degenerate_inputs, y_hi - y_lo);
            if (y_hi - y_lo > merge_tol) report.unstable = true;
        }
        report.nodes.push_back(x_sum / count);
        node_values.push_back(y_sum / count);
        start = end;
    }

    if (report.unstable) return report;

    // Divided-difference table, updated in place column by column.
    std::vector<double> coef = node_values;
    for (std::size_t level = 1; level < coef.size(); ++level) {
        for (std::size_t i = coef.size() - 1; i >= level; --i) {
            coef[i] = (coef[i] - coef[i - 1]) / (report.nodes[i] - report.nodes[i - level]);
        }
    }
    report.coefficients = std::move(coef);
    for (std::size_t i = 0; i < n; ++i) {
        report.max_residual = std::max(report.max_residual, std::abs(report.evaluate(src.values[i]) - dst.values[i]));
    }
    return report;
}

}  // namespace gspec
