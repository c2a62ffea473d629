#pragma once

#include <functional>
#include <vector>

namespace levset {

struct GaussLegendreRule {
    std::vector<double> nodes;    // on (-1, 1)
    std::vector<double> weights;  // sum to 2
};

/// Nodes and weights of the n-point Gauss-Legendre rule (Newton iteration
/// on the Legendre recurrence). Rules are cached per n.
const GaussLegendreRule& gauss_legendre(int n);

/// Integrate f over [a, b] with the n-point rule.
template <typename F>
double integrate_gl(F&& f, double a, double b, int n) {
    const GaussLegendreRule& rule = gauss_legendre(n);
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double sum = 0.0;
    for (int i = 0; i < n; ++i) sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
    return half * sum;
}

/// Panel-adaptive Gauss-Legendre: bisect until the panel estimate is stable
/// to abs_tol. Throws NumericalError if max_depth is exhausted.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double abs_tol, int nodes = 24, int max_depth = 28);

}  // namespace levset
