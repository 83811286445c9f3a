#include "cfem/solve.hpp"

#include "cfem/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace cfem {

std::string_view to_string(Method method) {
    switch (method) {
        case Method::P1:
            return "p1";
        case Method::PosteriorCorrected:
            return "posterior";
        case Method::Compact:
            return "compact";
    }
    return "unknown";
}

Method parse_method(std::string_view name) {
    if (name == "p1") return Method::P1;
    if (name == "posterior") return Method::PosteriorCorrected;
    if (name == "compact") return Method::Compact;
    throw InvalidArgument("unknown method '" + std::string(name) + "' (expected p1, posterior or compact)");
}

std::vector<double> thomas_solve(const TridiagonalSystem& system) {
    const std::size_t m = system.size();
    if (m == 0 || system.rhs.size() != m || system.sub.size() + 1 != m || system.super.size() + 1 != m) {
        throw InvalidArgument("malformed tridiagonal system");
    }
    double scale = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        scale = std::max(scale, std::abs(system.diag[i]));
        if (i + 1 < m) {
            scale = std::max({scale, std::abs(system.sub[i]), std::abs(system.super[i])});
        }
    }
    const double tiny = 1e-300 * std::max(scale, 1.0);

    std::vector<double> upper(m > 1 ? m - 1 : 0);
    std::vector<double> x(m);
    double pivot = system.diag[0];
    for (std::size_t i = 0;; ++i) {
        if (!(std::abs(pivot) >= tiny)) {
            throw SingularSystemError("singular tridiagonal system: zero pivot in row " + std::to_string(i));
        }
        const double carried = i == 0 ? 0.0 : system.sub[i - 1] * x[i - 1];
        x[i] = (system.rhs[i] - carried) / pivot;
        if (i + 1 == m) {
            break;
        }
        upper[i] = system.super[i] / pivot;
        pivot = system.diag[i + 1] - system.sub[i] * upper[i];
    }
    for (std::size_t i = m - 1; i-- > 0;) {
        x[i] -= upper[i] * x[i + 1];
    }
    return x;
}

DiscreteSolution::DiscreteSolution(Method method, ProblemSpec problem, Mesh mesh, std::vector<double> coeffs)
    : method_(method), problem_(std::move(problem)), mesh_(std::move(mesh)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != mesh_.node_count()) {
        throw InvalidArgument("coefficient count does not match the mesh");
    }
}

ValueSlope DiscreteSolution::evaluate(double x) const {
    const std::size_t k = mesh_.locate(x);
    const double a = mesh_.left(k);
    const double b = mesh_.right(k);
    const double h = b - a;
    const double slope = (coeffs_[k + 1] - coeffs_[k]) / h;
    const ValueSlope linear{(coeffs_[k] * (b - x) + coeffs_[k + 1] * (x - a)) / h, slope};
    const ValueSlope w{(x - a) * (x - b), 2.0 * x - a - b};

    switch (method_) {
        case Method::P1:
            return linear;
        case Method::PosteriorCorrected: {
            const double beta = problem_.beta(x);
            const double f = problem_.f(x);
            const double df = field_deriv(problem_.f, x, problem_.domain);
            return {linear.value - w.value * f / (2.0 * beta),
                    linear.slope - (w.slope * f + w.value * df) / (2.0 * beta)};
        }
        case Method::Compact: {
            const EnrichmentCoefficients c = enrichment_coefficients(problem_, x);
            const ValueSlope enriched = enrich_linear(c, linear, w);
            const ValueSlope bub = bubble_term(c, w);
            return {enriched.value + bub.value, enriched.slope + bub.slope};
        }
    }
    return linear;
}

namespace {

Mesh mesh_for(const ProblemSpec& problem, std::size_t n) {
    return uniform_mesh(problem.domain.lo, problem.domain.hi, n);
}

std::vector<double> nodal_coefficients(const TridiagonalSystem& system, const ProblemSpec& problem,
                                       const Mesh& mesh) {
    const std::vector<double> unknowns = thomas_solve(system);
    std::vector<double> coeffs(mesh.node_count());
    std::copy(unknowns.begin(), unknowns.end(), coeffs.begin() + static_cast<std::ptrdiff_t>(system.first_node));
    if (problem.left.is_dirichlet()) {
        coeffs.front() = problem.left.value;
    }
    if (problem.right.is_dirichlet()) {
        coeffs.back() = problem.right.value;
    }
    return coeffs;
}

}  // namespace

bool has_constant_coefficients(const ProblemSpec& problem) {
    const auto beta_c = problem.beta.constant_value();
    const auto q_c = problem.q.constant_value();
    if (beta_c && q_c) {
        return *q_c == 0.0;
    }
    constexpr int kSamples = 64;
    double beta_lo = std::numeric_limits<double>::infinity();
    double beta_hi = -beta_lo;
    double q_max = 0.0;
    for (int i = 0; i < kSamples; ++i) {
        const double x = problem.domain.lo + problem.domain.length() * i / (kSamples - 1);
        const double b = problem.beta(x);
        beta_lo = std::min(beta_lo, b);
        beta_hi = std::max(beta_hi, b);
        q_max = std::max(q_max, std::abs(problem.q(x)));
    }
    const bool beta_constant = beta_c || (beta_hi - beta_lo) <= 1e-12 * std::abs(beta_hi);
    const bool q_zero = q_c ? *q_c == 0.0 : q_max <= 1e-14;
    return beta_constant && q_zero;
}

DiscreteSolution solve_p1(const ProblemSpec& problem, const Mesh& mesh, const SolveOptions& options) {
    const TridiagonalSystem sys = assemble_classical(problem, mesh, gauss_legendre(options.assembly_points));
    return DiscreteSolution(Method::P1, problem, mesh, nodal_coefficients(sys, problem, mesh));
}

DiscreteSolution solve_p1(const ProblemSpec& problem, std::size_t n, const SolveOptions& options) {
    return solve_p1(problem, mesh_for(problem, n), options);
}

DiscreteSolution solve_posterior(const ProblemSpec& problem, const Mesh& mesh, const SolveOptions& options) {
    if (!has_constant_coefficients(problem)) {
        throw ConstantCoefficientRequired(
            "ConstantCoefficientRequired: posterior correction needs constant beta and q == 0; use the compact method for "
            "problem " + problem.name);
    }
    const TridiagonalSystem sys = assemble_classical(problem, mesh, gauss_legendre(options.assembly_points));
    return DiscreteSolution(Method::PosteriorCorrected, problem, mesh, nodal_coefficients(sys, problem, mesh));
}

DiscreteSolution solve_posterior(const ProblemSpec& problem, std::size_t n, const SolveOptions& options) {
    return solve_posterior(problem, mesh_for(problem, n), options);
}

DiscreteSolution solve_compact(const ProblemSpec& problem, const Mesh& mesh, const SolveOptions& options) {
    const TridiagonalSystem sys = assemble_compact(problem, mesh, gauss_legendre(options.assembly_points));
    return DiscreteSolution(Method::Compact, problem, mesh, nodal_coefficients(sys, problem, mesh));
}

DiscreteSolution solve_compact(const ProblemSpec& problem, std::size_t n, const SolveOptions& options) {
    return solve_compact(problem, mesh_for(problem, n), options);
}

DiscreteSolution solve(const ProblemSpec& problem, const Mesh& mesh, Method method, const SolveOptions& options) {
    switch (method) {
        case Method::P1:
            return solve_p1(problem, mesh, options);
        case Method::PosteriorCorrected:
            return solve_posterior(problem, mesh, options);
        case Method::Compact:
            return solve_compact(problem, mesh, options);
    }
    throw InvalidArgument("unknown method");
}

DiscreteSolution solve(const ProblemSpec& problem, std::size_t n, Method method, const SolveOptions& options) {
    return solve(problem, mesh_for(problem, n), method, options);
}

}  // namespace cfem
