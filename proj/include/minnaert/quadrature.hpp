#pragma once

#include <memory>
#include <vector>

#include "minnaert/types.hpp"

namespace minnaert {

struct GaussRule {
    std::vector<double> x;  // nodes on [-1, 1], ascending
    std::vector<double> w;
};

// Gauss-Legendre rule of the given order. Rules are cached; the returned
// reference stays valid for the lifetime of the program.
const GaussRule& gauss_legendre(int order);

// Integrates f over [a, b] with a single Gauss-Legendre panel.
template <class F>
auto gauss_panel(const GaussRule& g, double a, double b, F&& f) -> decltype(f(0.0)) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    decltype(f(0.0)) s{};
    for (std::size_t i = 0; i < g.x.size(); ++i) s += g.w[i] * f(c + h * g.x[i]);
    return s * h;
}

// Product rule on the unit sphere: Gauss-Legendre in cos(theta), trapezoid in phi.
struct SphereRule {
    int n_theta = 0;
    int n_phi = 0;
    std::vector<Vec3> points;
    std::vector<double> weights;
};

std::shared_ptr<const SphereRule> sphere_rule(int n_theta = 48, int n_phi = 96);

}  // namespace minnaert
