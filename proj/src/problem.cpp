#include "cfem/problem.hpp"

#include "cfem/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace cfem {

ScalarField::ScalarField(Function value) : value_(std::move(value)) {}

ScalarField::ScalarField(Function value, Function slope)
    : value_(std::move(value)), derivative_(std::make_shared<const ScalarField>(std::move(slope))) {}

ScalarField::ScalarField(Function value, Function slope, Function curvature)
    : value_(std::move(value)),
      derivative_(std::make_shared<const ScalarField>(std::move(slope), std::move(curvature))) {}

ScalarField::ScalarField(Function value, ScalarField derivative)
    : value_(std::move(value)), derivative_(std::make_shared<const ScalarField>(std::move(derivative))) {}

ScalarField ScalarField::constant(double c) {
    // Two analytic levels are all any caller needs (beta'' at most).
    ScalarField curvature([](double) { return 0.0; });
    curvature.constant_ = 0.0;
    ScalarField slope([](double) { return 0.0; }, std::move(curvature));
    slope.constant_ = 0.0;
    ScalarField field([c](double) { return c; }, std::move(slope));
    field.constant_ = c;
    return field;
}

double finite_difference(const ScalarField::Function& g, double x, const Interval& domain) {
    if (!domain.contains(x)) {
        std::ostringstream msg;
        msg << "derivative requested at x = " << x << " outside [" << domain.lo << ", "
            << domain.hi << "]";
        throw InvalidArgument(msg.str());
    }
    static const double kStepScale = std::pow(std::numeric_limits<double>::epsilon(), 0.2);
    const double h = std::max(1.0, std::abs(x)) * kStepScale;
    if (x - 2.0 * h >= domain.lo && x + 2.0 * h <= domain.hi) {
        return (g(x - 2.0 * h) - 8.0 * g(x - h) + 8.0 * g(x + h) - g(x + 2.0 * h)) / (12.0 * h);
    }
    // One-sided fourth-order stencil pointing into the domain.
    const double s = (x - 2.0 * h < domain.lo) ? h : -h;
    return (-25.0 * g(x) + 48.0 * g(x + s) - 36.0 * g(x + 2.0 * s) + 16.0 * g(x + 3.0 * s) -
            3.0 * g(x + 4.0 * s)) /
           (12.0 * s);
}

double field_deriv(const ScalarField& field, double x, const Interval& domain) {
    if (const ScalarField* d = field.derivative()) {
        if (!domain.contains(x)) {
            std::ostringstream msg;
            msg << "derivative requested at x = " << x << " outside [" << domain.lo << ", "
                << domain.hi << "]";
            throw InvalidArgument(msg.str());
        }
        return (*d)(x);
    }
    return finite_difference([&field](double t) { return field(t); }, x, domain);
}

BoundaryCondition BoundaryCondition::dirichlet(double g) { return {Kind::Dirichlet, g, 0.0}; }

BoundaryCondition BoundaryCondition::neumann(double g) { return {Kind::Neumann, g, 0.0}; }

BoundaryCondition BoundaryCondition::robin(double alpha, double g) {
    if (!(alpha >= 0.0)) {
        throw InvalidArgument("Robin coefficient must be non-negative");
    }
    return {Kind::Robin, g, alpha};
}

CoefficientBounds validate_coefficients(const ProblemSpec& problem, const Mesh& mesh,
                                        const QuadratureRule& rule) {
    CoefficientBounds bounds{std::numeric_limits<double>::infinity(),
                             std::numeric_limits<double>::infinity()};
    for (std::size_t k = 0; k < mesh.element_count(); ++k) {
        const double half = 0.5 * mesh.width(k);
        const double mid = 0.5 * (mesh.left(k) + mesh.right(k));
        for (double p : rule.points) {
            const double x = mid + half * p;
            const double beta = problem.beta(x);
            const double q = problem.q(x);
            if (!(beta > 0.0)) {
                std::ostringstream msg;
                msg << "coefficient beta is not positive: beta(" << x << ") = " << beta;
                throw CoercivityError(msg.str());
            }
            if (!(q >= 0.0)) {
                std::ostringstream msg;
                msg << "coefficient q is negative: q(" << x << ") = " << q;
                throw CoercivityError(msg.str());
            }
            bounds.beta_min = std::min(bounds.beta_min, beta);
            bounds.q_min = std::min(bounds.q_min, q);
        }
    }
    return bounds;
}

namespace catalog {

namespace {

void check_domain(const Interval& domain) {
    if (!(domain.lo < domain.hi)) {
        throw InvalidArgument("degenerate domain: need x_l < x_r");
    }
}

std::string format_parameter(double k) {
    std::ostringstream out;
    out.precision(17);
    out << k;
    return out.str();
}

}  // namespace

ProblemSpec poisson(double k, Interval domain) {
    if (k == 0.0) {
        throw InvalidArgument("poisson: wave number k must be nonzero");
    }
    check_domain(domain);
    ProblemSpec p;
    p.name = "poisson(k=" + format_parameter(k) + ")";
    p.domain = domain;
    p.beta = ScalarField::constant(1.0);
    p.q = ScalarField::constant(0.0);
    p.f = ScalarField([k](double x) { return k * k * std::sin(k * x); },
                      [k](double x) { return k * k * k * std::cos(k * x); });
    p.exact = ScalarField([k](double x) { return std::sin(k * x); },
                          [k](double x) { return k * std::cos(k * x); },
                          [k](double x) { return -k * k * std::sin(k * x); });
    p.left = BoundaryCondition::dirichlet((*p.exact)(domain.lo));
    p.right = BoundaryCondition::dirichlet((*p.exact)(domain.hi));
    return p;
}

ProblemSpec variable(double k1, double k2, Interval domain) {
    if (k1 == 0.0 && k2 == 0.0) {
        throw InvalidArgument("variable: (k1, k2) must not both be zero");
    }
    check_domain(domain);

    // u and its first three derivatives in terms of s_i = sin(k_i x), c_i = cos(k_i x).
    struct Terms {
        double u, du, d2u, d3u;
    };
    auto terms = [k1, k2](double x) {
        const double s1 = std::sin(k1 * x), c1 = std::cos(k1 * x);
        const double s2 = std::sin(k2 * x), c2 = std::cos(k2 * x);
        const double kk = k1 * k1 + k2 * k2;
        Terms t{};
        t.u = s1 * c2;
        t.du = k1 * c1 * c2 - k2 * s1 * s2;
        t.d2u = -kk * s1 * c2 - 2.0 * k1 * k2 * c1 * s2;
        t.d3u = -k1 * (k1 * k1 + 3.0 * k2 * k2) * c1 * c2 + k2 * (3.0 * k1 * k1 + k2 * k2) * s1 * s2;
        return t;
    };

    ProblemSpec p;
    p.name = "variable(k1=" + format_parameter(k1) + ",k2=" + format_parameter(k2) + ")";
    p.domain = domain;
    p.beta = ScalarField([](double x) { return std::exp(x); }, [](double x) { return std::exp(x); },
                         [](double x) { return std::exp(x); });
    p.q = ScalarField([](double x) { return x * x; }, [](double x) { return 2.0 * x; },
                      [](double) { return 2.0; });
    // f = -(e^x u')' + x^2 u = -e^x (u'' + u') + x^2 u
    p.f = ScalarField(
        [terms](double x) {
            const Terms t = terms(x);
            return -std::exp(x) * (t.d2u + t.du) + x * x * t.u;
        },
        [terms](double x) {
            const Terms t = terms(x);
            return -std::exp(x) * (t.d3u + 2.0 * t.d2u + t.du) + 2.0 * x * t.u + x * x * t.du;
        });
    p.exact = ScalarField([terms](double x) { return terms(x).u; },
                          [terms](double x) { return terms(x).du; },
                          [terms](double x) { return terms(x).d2u; });
    p.left = BoundaryCondition::dirichlet((*p.exact)(domain.lo));
    p.right = BoundaryCondition::dirichlet((*p.exact)(domain.hi));
    return p;
}

}  // namespace catalog

}  // namespace cfem
