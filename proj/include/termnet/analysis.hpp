#pragma once

#include <map>
#include <optional>
#include <string>

#include "termnet/nnht.hpp"

namespace termnet {

struct DegreeDistribution {
    std::map<int, int> counts;  // degree k -> node count, k = 0 included
    int total_nodes = 0;
};

enum class FitMethod { LogLogLS, Mle };

/// Fit of p(k) = C * k^(-alpha) to a degree histogram. alpha is reported as a
/// positive magnitude. residual is the least-squares sum of squared log2
/// residuals; absent for the MLE route.
struct PowerLawFit {
    double alpha = 0.0;
    double c = 0.0;
    int k_min = 1;
    FitMethod method = FitMethod::LogLogLS;
    std::optional<double> residual;
    int bins_used = 0;   // nonzero bins with k >= k_min
    int nodes_used = 0;  // nodes with degree >= k_min (MLE sample size)
};

DegreeDistribution out_degree_distribution(const Nnht& net);

/// LogLogLS: ordinary least squares of log2(count/total) against log2(k) over
/// nonzero bins with k >= k_min. Mle: continuous-approximation estimator
/// alpha = 1 + m / sum(ln(k_i / (k_min - 0.5))) over the m degrees >= k_min.
/// Throws InsufficientDataError when fewer than 3 usable bins exist.
PowerLawFit fit_power_law(const DegreeDistribution& dist, int k_min, FitMethod method);

const char* fit_method_name(FitMethod method);

}  // namespace termnet
