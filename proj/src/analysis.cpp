#include "cfem/analysis.hpp"

#include "cfem/error.hpp"

#include <cmath>
#include <future>

namespace cfem {

namespace {

template <class Integrand>
double integrate_mesh(const Mesh& mesh, const NormOptions& options, Integrand&& g) {
    if (options.subdivisions == 0) {
        throw InvalidArgument("norm quadrature needs at least one subdivision per element");
    }
    const QuadratureRule rule = gauss_legendre(options.points);
    double total = 0.0;
    for (std::size_t k = 0; k < mesh.element_count(); ++k) {
        const double h = mesh.width(k) / static_cast<double>(options.subdivisions);
        for (std::size_t s = 0; s < options.subdivisions; ++s) {
            const double a = mesh.left(k) + static_cast<double>(s) * h;
            const double b = s + 1 == options.subdivisions ? mesh.right(k) : a + h;
            total += integrate_element(rule, a, b, g);
        }
    }
    return total;
}

}  // namespace

double error_l2(const DiscreteSolution& solution, const ScalarField& exact, const NormOptions& options) {
    const double sq = integrate_mesh(solution.mesh(), options, [&](double x) {
        const double e = exact(x) - solution.value(x);
        return e * e;
    });
    return std::sqrt(sq);
}

double error_h1(const DiscreteSolution& solution, const ScalarField& exact, const NormOptions& options) {
    const ScalarField* du = exact.derivative();
    if (du == nullptr) {
        throw InvalidArgument("H1 error needs the analytic derivative of the exact solution");
    }
    const double sq = integrate_mesh(solution.mesh(), options, [&](double x) {
        const ValueSlope uh = solution.evaluate(x);
        const double de = (*du)(x) - uh.slope;
        if (options.full_h1) {
            const double e = exact(x) - uh.value;
            return de * de + e * e;
        }
        return de * de;
    });
    return std::sqrt(sq);
}

double convergence_order(double e1, double e2, std::size_t n1, std::size_t n2) {
    if (!(e1 > 0.0) || !(e2 > 0.0)) {
        throw InvalidArgument("convergence order needs positive errors");
    }
    if (n1 == n2 || n1 == 0 || n2 == 0) {
        throw InvalidArgument("convergence order needs two distinct positive resolutions");
    }
    return std::abs(std::log(e1 / e2) / std::log(static_cast<double>(n2) / static_cast<double>(n1)));
}

RefinementReport refinement_study(const ProblemSpec& problem, Method method, std::span<const std::size_t> levels,
                                  const StudyOptions& options) {
    if (levels.size() < 2) {
        throw InvalidArgument("a refinement study needs at least two levels");
    }
    for (std::size_t i = 1; i < levels.size(); ++i) {
        if (levels[i] <= levels[i - 1]) {
            throw InvalidArgument("refinement levels must be strictly increasing");
        }
    }
    if (!problem.exact) {
        throw InvalidArgument("refinement study needs a problem with an exact solution");
    }

    auto run_level = [&](std::size_t n) {
        const DiscreteSolution sol = solve(problem, n, method, options.solve);
        RefinementRow row;
        row.n = n;
        row.l2_error = error_l2(sol, *problem.exact, options.norm);
        row.h1_error = error_h1(sol, *problem.exact, options.norm);
        return row;
    };

    RefinementReport report;
    report.method = method;
    report.problem = problem.name;
    report.norm = options.norm;
    if (options.parallel) {
        std::vector<std::future<RefinementRow>> pending;
        pending.reserve(levels.size());
        for (std::size_t n : levels) {
            pending.push_back(std::async(std::launch::async, run_level, n));
        }
        for (auto& f : pending) {
            report.rows.push_back(f.get());
        }
    } else {
        for (std::size_t n : levels) {
            report.rows.push_back(run_level(n));
        }
    }
    for (std::size_t i = 1; i < report.rows.size(); ++i) {
        RefinementRow& cur = report.rows[i];
        const RefinementRow& prev = report.rows[i - 1];
        if (prev.l2_error > 0.0 && cur.l2_error > 0.0) {
            cur.l2_order = convergence_order(prev.l2_error, cur.l2_error, prev.n, cur.n);
        }
        if (prev.h1_error > 0.0 && cur.h1_error > 0.0) {
            cur.h1_order = convergence_order(prev.h1_error, cur.h1_error, prev.n, cur.n);
        }
    }
    return report;
}

}  // namespace cfem
