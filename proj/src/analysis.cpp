#include "termnet/analysis.hpp"

#include <cmath>
#include <vector>

#include "termnet/error.hpp"

namespace termnet {
namespace {

// Normalization of the discrete law: 1 / sum_{k >= k_min} k^-alpha.
// Direct summation with an integral tail bound; alpha > 1 is guaranteed by
// the MLE formula.
double discrete_prefactor(double alpha, int k_min) {
    double sum = 0.0;
    const int cutoff = 1000000;
    for (int k = k_min; k < cutoff; ++k) {
        double term = std::pow(static_cast<double>(k), -alpha);
        sum += term;
        if (term < sum * 1e-14) return 1.0 / sum;
    }
    sum += std::pow(static_cast<double>(cutoff), 1.0 - alpha) / (alpha - 1.0);
    return 1.0 / sum;
}

}  // namespace

DegreeDistribution out_degree_distribution(const Nnht& net) {
    DegreeDistribution dist;
    dist.total_nodes = static_cast<int>(net.nodes.size());
    for (int d : net.out_degrees()) ++dist.counts[d];
    return dist;
}

PowerLawFit fit_power_law(const DegreeDistribution& dist, int k_min, FitMethod method) {
    if (k_min < 1) throw Error("k_min must be at least 1");

    std::vector<std::pair<int, int>> bins;  // (k, count), k >= k_min, count > 0
    for (const auto& [k, count] : dist.counts)
        if (k >= k_min && count > 0) bins.emplace_back(k, count);

    if (bins.size() < 3)
        throw InsufficientDataError("insufficient data: need at least 3 nonzero degree bins with k >= " +
                                    std::to_string(k_min) + ", have " + std::to_string(bins.size()));

    PowerLawFit fit;
    fit.k_min = k_min;
    fit.method = method;
    fit.bins_used = static_cast<int>(bins.size());
    for (const auto& [k, count] : bins) fit.nodes_used += count;

    if (method == FitMethod::LogLogLS) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        const double n = static_cast<double>(bins.size());
        std::vector<std::pair<double, double>> pts;
        pts.reserve(bins.size());
        for (const auto& [k, count] : bins) {
            double x = std::log2(static_cast<double>(k));
            double y = std::log2(static_cast<double>(count) / dist.total_nodes);
            pts.emplace_back(x, y);
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
        }
        double denom = n * sxx - sx * sx;
        if (denom == 0.0) throw InsufficientDataError("insufficient data: degenerate degree bins");
        double slope = (n * sxy - sx * sy) / denom;
        double intercept = (sy - slope * sx) / n;
        double ssr = 0;
        for (const auto& [x, y] : pts) {
            double r = y - (intercept + slope * x);
            ssr += r * r;
        }
        fit.alpha = std::fabs(slope);
        fit.c = std::exp2(intercept);
        fit.residual = ssr;
    } else {
        double log_sum = 0.0;
        for (const auto& [k, count] : bins)
            log_sum += count * std::log(static_cast<double>(k) / (k_min - 0.5));
        fit.alpha = 1.0 + fit.nodes_used / log_sum;
        fit.c = discrete_prefactor(fit.alpha, k_min);
    }
    return fit;
}

const char* fit_method_name(FitMethod method) {
    return method == FitMethod::LogLogLS ? "loglog" : "mle";
}

}  // namespace termnet
