#ifndef CFEM_GEOMETRY_HPP
#define CFEM_GEOMETRY_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace cfem {

/// Closed interval [lo, hi].
struct Interval {
    double lo = 0.0;
    double hi = 1.0;

    double length() const { return hi - lo; }
    bool contains(double x) const { return x >= lo && x <= hi; }
};

/** Ordered 1D node set x_0 < x_1 < ... < x_n. Element k is [x_k, x_{k+1}].
 * Immutable once built. */
class Mesh {
  public:
    explicit Mesh(std::vector<double> nodes);

    std::span<const double> nodes() const { return nodes_; }
    double node(std::size_t i) const { return nodes_[i]; }
    std::size_t node_count() const { return nodes_.size(); }
    std::size_t element_count() const { return nodes_.size() - 1; }

    double left(std::size_t k) const { return nodes_[k]; }
    double right(std::size_t k) const { return nodes_[k + 1]; }
    double width(std::size_t k) const { return nodes_[k + 1] - nodes_[k]; }
    double h_max() const { return h_max_; }
    Interval domain() const { return {nodes_.front(), nodes_.back()}; }

    /// Element k with x_k <= x < x_{k+1}; the last element for x = x_n.
    std::size_t locate(double x) const;

  private:
    std::vector<double> nodes_;
    double h_max_ = 0.0;
};

Mesh uniform_mesh(double x_l, double x_r, std::size_t n);

/// Gauss rule on the reference interval [-1, 1].
struct QuadratureRule {
    std::vector<double> points;
    std::vector<double> weights;

    std::size_t order() const { return points.size(); }
};

constexpr std::size_t kMaxGaussPoints = 16;

/// Gauss-Legendre rule with n_q points, 1 <= n_q <= 16.
QuadratureRule gauss_legendre(std::size_t n_q);

/// Sum of w_i * (b - a)/2 * g(mapped point) over the reference rule.
template <class F>
double integrate_element(const QuadratureRule& rule, double a, double b, F&& g) {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.order(); ++i) {
        sum += rule.weights[i] * g(mid + half * rule.points[i]);
    }
    return half * sum;
}

}  // namespace cfem

#endif
