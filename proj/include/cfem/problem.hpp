#ifndef CFEM_PROBLEM_HPP
#define CFEM_PROBLEM_HPP

#include "cfem/geometry.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <string>

namespace cfem {

/** A real function of one variable, optionally carrying its analytic
 * derivative (which may in turn carry its own). Evaluators must be pure. */
class ScalarField {
  public:
    using Function = std::function<double(double)>;

    explicit ScalarField(Function value);
    ScalarField(Function value, Function slope);
    ScalarField(Function value, Function slope, Function curvature);
    ScalarField(Function value, ScalarField derivative);

    static ScalarField constant(double c);

    double operator()(double x) const { return value_(x); }

    bool has_derivative() const { return derivative_ != nullptr; }
    /// Analytic derivative, or nullptr when none is attached.
    const ScalarField* derivative() const { return derivative_.get(); }

    /// Set only for fields built with constant().
    std::optional<double> constant_value() const { return constant_; }

  private:
    Function value_;
    std::shared_ptr<const ScalarField> derivative_;
    std::optional<double> constant_;
};

/// 5-point finite-difference derivative of g at x. The stencil is central
/// unless it would leave `domain`, in which case it is one-sided.
double finite_difference(const ScalarField::Function& g, double x, const Interval& domain);

/// Analytic derivative when attached, otherwise finite_difference().
double field_deriv(const ScalarField& field, double x, const Interval& domain);

/** Boundary data at one endpoint. With n the outward unit normal:
 *   Dirichlet: u = g
 *   Neumann:   du/dn = g
 *   Robin:     beta du/dn + alpha (u - g) = 0,  alpha >= 0 */
struct BoundaryCondition {
    enum class Kind { Dirichlet, Neumann, Robin };

    Kind kind = Kind::Dirichlet;
    double value = 0.0;
    double alpha = 0.0;

    static BoundaryCondition dirichlet(double g);
    static BoundaryCondition neumann(double g);
    static BoundaryCondition robin(double alpha, double g);

    bool is_dirichlet() const { return kind == Kind::Dirichlet; }
};

/// -(beta u')' + q u = f on the domain, plus boundary data and, for error
/// studies, the exact solution (with its derivative attached).
struct ProblemSpec {
    std::string name;
    Interval domain;
    ScalarField beta = ScalarField::constant(1.0);
    ScalarField q = ScalarField::constant(0.0);
    ScalarField f = ScalarField::constant(0.0);
    BoundaryCondition left;
    BoundaryCondition right;
    std::optional<ScalarField> exact;
};

struct CoefficientBounds {
    double beta_min = 0.0;
    double q_min = 0.0;
};

/// Samples beta and q at every quadrature point of the mesh. Throws
/// CoercivityError when beta <= 0 or q < 0 anywhere; returns the sampled minima.
CoefficientBounds validate_coefficients(const ProblemSpec& problem, const Mesh& mesh,
                                        const QuadratureRule& rule);

/// The default domain of the catalog problems.
inline constexpr Interval kCatalogDomain{0.0, 2.0};

namespace catalog {

/// -u'' = f with u = sin(k x); beta = 1, q = 0.
ProblemSpec poisson(double k, Interval domain = kCatalogDomain);

/// u = sin(k1 x) cos(k2 x) with beta = e^x, q = x^2 and f manufactured analytically.
ProblemSpec variable(double k1, double k2, Interval domain = kCatalogDomain);

}  // namespace catalog

}  // namespace cfem

#endif
