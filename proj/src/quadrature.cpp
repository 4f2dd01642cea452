#include "minnaert/quadrature.hpp"

#include <boost/math/special_functions/legendre.hpp>
#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace minnaert {

namespace {

GaussRule build_rule(int order) {
    if (order < 1) throw std::invalid_argument("Gauss-Legendre order must be positive");
    const std::vector<double> pos = boost::math::legendre_p_zeros<double>(order);
    GaussRule g;
    auto weight = [order](double x) {
        const double d = boost::math::legendre_p_prime(order, x);
        return 2.0 / ((1.0 - x * x) * d * d);
    };
    // legendre_p_zeros returns the non-negative zeros in ascending order.
    for (auto it = pos.rbegin(); it != pos.rend(); ++it) {
        if (*it == 0.0) continue;
        g.x.push_back(-*it);
        g.w.push_back(weight(*it));
    }
    for (double x : pos) {
        g.x.push_back(x);
        g.w.push_back(weight(x));
    }
    return g;
}

}  // namespace

const GaussRule& gauss_legendre(int order) {
    static std::mutex mtx;
    static std::map<int, std::unique_ptr<GaussRule>> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto& slot = cache[order];
    if (!slot) slot = std::make_unique<GaussRule>(build_rule(order));
    return *slot;
}

std::shared_ptr<const SphereRule> sphere_rule(int n_theta, int n_phi) {
    static std::mutex mtx;
    static std::map<std::pair<int, int>, std::shared_ptr<const SphereRule>> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto& slot = cache[{n_theta, n_phi}];
    if (slot) return slot;
    if (n_phi < 1) throw std::invalid_argument("phi node count must be positive");
    auto rule = std::make_shared<SphereRule>();
    rule->n_theta = n_theta;
    rule->n_phi = n_phi;
    // gauss_legendre takes its own lock on a different mutex, so no deadlock.
    const GaussRule& g = gauss_legendre(n_theta);
    const double dphi = 2.0 * kPi / n_phi;
    for (int i = 0; i < n_theta; ++i) {
        const double ct = g.x[i];
        const double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
        for (int j = 0; j < n_phi; ++j) {
            const double phi = j * dphi;
            rule->points.push_back({st * std::cos(phi), st * std::sin(phi), ct});
            rule->weights.push_back(g.w[i] * dphi);
        }
    }
    slot = rule;
    return slot;
}

}  // namespace minnaert
