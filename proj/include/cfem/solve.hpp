#ifndef CFEM_SOLVE_HPP
#define CFEM_SOLVE_HPP

#include "cfem/assembly.hpp"
#include "cfem/basis.hpp"
#include "cfem/geometry.hpp"
#include "cfem/problem.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cfem {

enum class Method { P1, PosteriorCorrected, Compact };

std::string_view to_string(Method method);
/// Accepts "p1", "posterior", "compact".
Method parse_method(std::string_view name);

/// Forward elimination / back substitution without pivoting.
/// Throws SingularSystemError on a (near) zero pivot.
std::vector<double> thomas_solve(const TridiagonalSystem& system);

struct SolveOptions {
    std::size_t assembly_points = 5;
};

/** Nodal coefficients plus the method's evaluator. At mesh nodes every
 * method returns the coefficient itself, since all corrections carry the
 * factor (x - x_k)(x - x_{k+1}). */
class DiscreteSolution {
  public:
    DiscreteSolution(Method method, ProblemSpec problem, Mesh mesh, std::vector<double> coeffs);

    Method method() const { return method_; }
    const Mesh& mesh() const { return mesh_; }
    const ProblemSpec& problem() const { return problem_; }
    std::span<const double> coefficients() const { return coeffs_; }

    double value(double x) const { return evaluate(x).value; }
    double slope(double x) const { return evaluate(x).slope; }
    ValueSlope evaluate(double x) const;

  private:
    Method method_;
    ProblemSpec problem_;
    Mesh mesh_;
    std::vector<double> coeffs_;
};

DiscreteSolution solve_p1(const ProblemSpec& problem, const Mesh& mesh, const SolveOptions& options = {});
DiscreteSolution solve_p1(const ProblemSpec& problem, std::size_t n, const SolveOptions& options = {});

/// P1 solution plus the local interpolation-error correction
/// -(x - x_k)(x - x_{k+1}) f(x) / (2 beta). Requires constant beta and q == 0.
DiscreteSolution solve_posterior(const ProblemSpec& problem, const Mesh& mesh,
                                 const SolveOptions& options = {});
DiscreteSolution solve_posterior(const ProblemSpec& problem, std::size_t n,
                                 const SolveOptions& options = {});

/// Compact third-order method: enriched trial space, same tridiagonal structure as P1.
DiscreteSolution solve_compact(const ProblemSpec& problem, const Mesh& mesh,
                               const SolveOptions& options = {});
DiscreteSolution solve_compact(const ProblemSpec& problem, std::size_t n,
                               const SolveOptions& options = {});

DiscreteSolution solve(const ProblemSpec& problem, const Mesh& mesh, Method method,
                       const SolveOptions& options = {});
DiscreteSolution solve(const ProblemSpec& problem, std::size_t n, Method method,
                       const SolveOptions& options = {});

/// True when beta is constant and q vanishes, judged from catalog flags or,
/// failing that, by sampling 64 points of the domain.
bool has_constant_coefficients(const ProblemSpec& problem);

}  // namespace cfem

#endif
