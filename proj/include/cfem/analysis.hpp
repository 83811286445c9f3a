#ifndef CFEM_ANALYSIS_HPP
#define CFEM_ANALYSIS_HPP

#include "cfem/problem.hpp"
#include "cfem/solve.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cfem {

/// Error-norm quadrature: `points`-point Gauss on each of `subdivisions`
/// equal pieces of every element.
struct NormOptions {
    std::size_t points = 7;
    std::size_t subdivisions = 4;
    /// error_h1 reports the full H1 norm instead of the seminorm.
    bool full_h1 = false;
};

/// || u - u_h ||_{L2}
double error_l2(const DiscreteSolution& solution, const ScalarField& exact, const NormOptions& options = {});

/// || u' - u_h' ||_{L2}, or the full H1 norm when options.full_h1 is set.
/// The exact field must carry an analytic derivative.
double error_h1(const DiscreteSolution& solution, const ScalarField& exact, const NormOptions& options = {});

/// |log(e1/e2) / log(n2/n1)|
double convergence_order(double e1, double e2, std::size_t n1, std::size_t n2);

struct RefinementRow {
    std::size_t n = 0;
    double l2_error = 0.0;
    std::optional<double> l2_order;
    double h1_error = 0.0;
    std::optional<double> h1_order;
};

struct RefinementReport {
    Method method = Method::Compact;
    std::string problem;
    std::vector<RefinementRow> rows;
    NormOptions norm;
};

struct StudyOptions {
    SolveOptions solve;
    NormOptions norm;
    /// Solve the levels concurrently. Row order is unaffected.
    bool parallel = true;
};

/// Solves at every level (strictly increasing, at least two) and fills the
/// order columns from consecutive rows. The problem needs an exact solution.
RefinementReport refinement_study(const ProblemSpec& problem, Method method, std::span<const std::size_t> levels,
                                  const StudyOptions& options = {});

}  // namespace cfem

#endif
