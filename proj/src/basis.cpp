#include "cfem/basis.hpp"

#include "cfem/error.hpp"

#include <sstream>
#include <string>

namespace cfem {

ValueSlope hat(const Mesh& mesh, std::size_t i, double x) {
    if (i >= mesh.node_count()) {
        throw InvalidArgument("hat index " + std::to_string(i) + " out of range");
    }
    const std::size_t k = mesh.locate(x);
    if (k == i) {
        const double h = mesh.width(k);
        return {(mesh.right(k) - x) / h, -1.0 / h};
    }
    if (k + 1 == i) {
        const double h = mesh.width(k);
        return {(x - mesh.left(k)) / h, 1.0 / h};
    }
    return {};
}

ValueSlope element_weight(const Mesh& mesh, std::size_t k, double x) {
    if (k >= mesh.element_count()) {
        throw InvalidArgument("element index " + std::to_string(k) + " out of range");
    }
    const double a = mesh.left(k);
    const double b = mesh.right(k);
    if (x < a || x > b) {
        std::ostringstream msg;
        msg << "x = " << x << " is outside element " << k << " [" << a << ", " << b << "]";
        throw InvalidArgument(msg.str());
    }
    return {(x - a) * (x - b), 2.0 * x - a - b};
}

namespace {

// d/dx (num/den) by the quotient rule when both derivatives are analytic,
// otherwise by differencing the ratio itself.
double ratio_slope(const ScalarField& num, const ScalarField& den, double x, const Interval& domain) {
    if (num.has_derivative() && den.has_derivative()) {
        const double n = num(x);
        const double d = den(x);
        return ((*num.derivative())(x) * d - n * (*den.derivative())(x)) / (d * d);
    }
    return finite_difference([&](double t) { return num(t) / den(t); }, x, domain);
}

ValueSlope drift_ratio(const ScalarField& beta, double b, double x, const Interval& domain) {
    if (beta.constant_value()) {
        return {};
    }
    const double db = field_deriv(beta, x, domain);
    const ScalarField* d = beta.derivative();
    if (d != nullptr && d->has_derivative()) {
        const double d2b = (*d->derivative())(x);
        return {db / b, (d2b * b - db * db) / (b * b)};
    }
    auto ratio = [&](double t) { return field_deriv(beta, t, domain) / beta(t); };
    return {db / b, finite_difference(ratio, x, domain)};
}

}  // namespace

EnrichmentCoefficients enrichment_coefficients(const ProblemSpec& problem, double x) {
    const double b = problem.beta(x);
    if (!(b > 0.0)) {
        std::ostringstream msg;
        msg << "coefficient beta is not positive: beta(" << x << ") = " << b;
        throw CoercivityError(msg.str());
    }
    EnrichmentCoefficients c;
    c.beta = b;
    c.drift = drift_ratio(problem.beta, b, x, problem.domain);
    if (problem.q.constant_value() != 0.0) {
        c.reaction = {problem.q(x) / b, ratio_slope(problem.q, problem.beta, x, problem.domain)};
    }
    if (problem.f.constant_value() != 0.0) {
        c.source = {problem.f(x) / b, ratio_slope(problem.f, problem.beta, x, problem.domain)};
    }
    return c;
}

ValueSlope enrich_linear(const EnrichmentCoefficients& c, ValueSlope linear, ValueSlope weight) {
    const auto& [r, dr] = c.drift;
    const auto& [s, ds] = c.reaction;
    const auto& [w, dw] = weight;
    const auto& [l, dl] = linear;
    return {l - 0.5 * r * w * dl + 0.5 * s * w * l,
            dl - 0.5 * (dr * w + r * dw) * dl + 0.5 * (ds * w + s * dw) * l + 0.5 * s * w * dl};
}

ValueSlope bubble_term(const EnrichmentCoefficients& c, ValueSlope weight) {
    const auto& [g, dg] = c.source;
    return {-0.5 * g * weight.value, -0.5 * (dg * weight.value + g * weight.slope)};
}

ValueSlope modified_trial(const ProblemSpec& problem, const Mesh& mesh, std::size_t i, double x) {
    const ValueSlope phi = hat(mesh, i, x);
    const std::size_t k = mesh.locate(x);
    return enrich_linear(enrichment_coefficients(problem, x), phi, element_weight(mesh, k, x));
}

ValueSlope bubble(const ProblemSpec& problem, const Mesh& mesh, std::size_t k, double x) {
    const ValueSlope w = element_weight(mesh, k, x);
    return bubble_term(enrichment_coefficients(problem, x), w);
}

}  // namespace cfem
