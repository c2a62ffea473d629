#include "levset/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "levset/common.hpp"

namespace levset {

namespace {

GaussLegendreRule compute_rule(int n) {
    GaussLegendreRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        // Chebyshev start, Newton refine on P_n.
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (x * p0 - p1) / (x * x - 1.0);
            double dx = p0 / pp;
            x -= dx;
            if (std::fabs(dx) < 1e-15) break;
        }
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        double w = 2.0 / ((1.0 - x * x) * pp * pp);
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

}  // namespace

const GaussLegendreRule& gauss_legendre(int n) {
    static std::map<int, GaussLegendreRule> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, compute_rule(n)).first;
    return it->second;
}

namespace {

double adaptive_rec(const std::function<double(double)>& f, double a, double b,
                    double whole, double abs_tol, int nodes, int depth) {
    double mid = 0.5 * (a + b);
    double left = integrate_gl(f, a, mid, nodes);
    double right = integrate_gl(f, mid, b, nodes);
    if (std::fabs(left + right - whole) <= abs_tol || depth <= 0) {
        if (depth <= 0 && std::fabs(left + right - whole) > abs_tol)
            throw NumericalError("adaptive quadrature did not converge");
        return left + right;
    }
    return adaptive_rec(f, a, mid, left, 0.5 * abs_tol, nodes, depth - 1) +
           adaptive_rec(f, mid, b, right, 0.5 * abs_tol, nodes, depth - 1);
}

}  // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double abs_tol, int nodes, int max_depth) {
    double whole = integrate_gl(f, a, b, nodes);
    return adaptive_rec(f, a, b, whole, abs_tol, nodes, max_depth);
}

}  // namespace levset
