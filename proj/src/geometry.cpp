#include "cfem/geometry.hpp"

#include "cfem/error.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

namespace cfem {

Mesh::Mesh(std::vector<double> nodes) : nodes_(std::move(nodes)) {
    if (nodes_.size() < 3) {
        throw InvalidArgument("mesh needs at least 2 elements, got " +
                              std::to_string(nodes_.empty() ? 0 : nodes_.size() - 1));
    }
    for (std::size_t k = 0; k + 1 < nodes_.size(); ++k) {
        if (!(nodes_[k] < nodes_[k + 1])) {
            throw InvalidArgument("mesh nodes must be strictly increasing (node " +
                                  std::to_string(k + 1) + ")");
        }
        h_max_ = std::max(h_max_, nodes_[k + 1] - nodes_[k]);
    }
}

std::size_t Mesh::locate(double x) const {
    if (!(x >= nodes_.front() && x <= nodes_.back())) {
        throw InvalidArgument("point " + std::to_string(x) + " lies outside the mesh");
    }
    auto it = std::upper_bound(nodes_.begin(), nodes_.end(), x);
    auto k = static_cast<std::size_t>(it - nodes_.begin());
    return std::min(k == 0 ? 0 : k - 1, element_count() - 1);
}

Mesh uniform_mesh(double x_l, double x_r, std::size_t n) {
    if (!(x_l < x_r)) {
        throw InvalidArgument("degenerate domain: need x_l < x_r");
    }
    if (n < 2) {
        throw InvalidArgument("uniform mesh needs n >= 2 elements");
    }
    std::vector<double> nodes(n + 1);
    const double h = (x_r - x_l) / static_cast<double>(n);
    for (std::size_t i = 0; i <= n; ++i) {
        nodes[i] = x_l + static_cast<double>(i) * h;
    }
    nodes.back() = x_r;
    return Mesh(std::move(nodes));
}

namespace {

// P_n(x) and P_n'(x) by the three-term recurrence.
std::pair<double, double> legendre(std::size_t n, double x) {
    double p0 = 1.0;
    double p1 = x;
    for (std::size_t j = 2; j <= n; ++j) {
        const double jd = static_cast<double>(j);
        const double p2 = ((2.0 * jd - 1.0) * x * p1 - (jd - 1.0) * p0) / jd;
        p0 = p1;
        p1 = p2;
    }
    const double nd = static_cast<double>(n);
    return {p1, nd * (x * p1 - p0) / (x * x - 1.0)};
}

// Roots of P_n by Newton's method from the Chebyshev-like initial guess.
QuadratureRule compute_gauss_legendre(std::size_t n) {
    QuadratureRule rule;
    rule.points.resize(n);
    rule.weights.resize(n);
    const std::size_t half = (n + 1) / 2;
    for (std::size_t i = 0; i < half; ++i) {
        double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) /
                            (static_cast<double>(n) + 0.5));
        for (int iter = 0; iter < 100; ++iter) {
            const auto [p, dp] = legendre(n, x);
            const double dx = p / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) {
                break;
            }
        }
        const double dp = legendre(n, x).second;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.points[i] = -x;
        rule.points[n - 1 - i] = x;
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) {
        rule.points[n / 2] = 0.0;
    }
    return rule;
}

const std::array<QuadratureRule, kMaxGaussPoints + 1>& gauss_table() {
    static const auto table = [] {
        std::array<QuadratureRule, kMaxGaussPoints + 1> t;
        for (std::size_t n = 1; n <= kMaxGaussPoints; ++n) {
            t[n] = compute_gauss_legendre(n);
        }
        return t;
    }();
    return table;
}

}  // namespace

QuadratureRule gauss_legendre(std::size_t n_q) {
    if (n_q < 1 || n_q > kMaxGaussPoints) {
        throw InvalidArgument("unsupported Gauss-Legendre order " + std::to_string(n_q) +
                              " (expected 1.." + std::to_string(kMaxGaussPoints) + ")");
    }
    return gauss_table()[n_q];
}

}  // namespace cfem
