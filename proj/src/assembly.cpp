#include "cfem/assembly.hpp"

#include "cfem/basis.hpp"
#include "cfem/error.hpp"

#include <array>

namespace cfem {

namespace {

void check_mesh(const ProblemSpec& problem, const Mesh& mesh) {
    const Interval d = mesh.domain();
    if (d.lo != problem.domain.lo || d.hi != problem.domain.hi) {
        throw InvalidArgument("mesh does not span the problem domain");
    }
}

// Local 2x2 element matrix (rows = test, cols = trial) and load.
struct ElementContribution {
    std::array<std::array<double, 2>, 2> a{};
    std::array<double, 2> load{};
};

void scatter(TridiagonalSystem& sys, std::size_t k, const ElementContribution& e) {
    sys.diag[k] += e.a[0][0];
    sys.diag[k + 1] += e.a[1][1];
    sys.super[k] += e.a[0][1];
    sys.sub[k] += e.a[1][0];
    sys.rhs[k] += e.load[0];
    sys.rhs[k + 1] += e.load[1];
}

template <class ElementKernel>
TridiagonalSystem assemble(const ProblemSpec& problem, const Mesh& mesh, const QuadratureRule& rule,
                           ElementKernel&& kernel) {
    check_mesh(problem, mesh);
    validate_coefficients(problem, mesh, rule);
    TridiagonalSystem sys(mesh.node_count());
    for (std::size_t k = 0; k < mesh.element_count(); ++k) {
        scatter(sys, k, kernel(k));
    }
    return sys;
}

}  // namespace

TridiagonalSystem assemble_classical_operator(const ProblemSpec& problem, const Mesh& mesh,
                                              const QuadratureRule& rule) {
    return assemble(problem, mesh, rule, [&](std::size_t k) {
        ElementContribution e;
        const double a = mesh.left(k);
        const double b = mesh.right(k);
        const double h = b - a;
        const double half = 0.5 * h;
        const std::array<double, 2> dphi{-1.0 / h, 1.0 / h};
        for (std::size_t p = 0; p < rule.order(); ++p) {
            const double x = 0.5 * (a + b) + half * rule.points[p];
            const double wq = half * rule.weights[p];
            const std::array<double, 2> phi{(b - x) / h, (x - a) / h};
            const double beta = problem.beta(x);
            const double q = problem.q(x);
            const double f = problem.f(x);
            for (int i = 0; i < 2; ++i) {
                for (int j = 0; j < 2; ++j) {
                    e.a[i][j] += wq * (beta * dphi[j] * dphi[i] + q * phi[j] * phi[i]);
                }
                e.load[i] += wq * f * phi[i];
            }
        }
        return e;
    });
}

TridiagonalSystem assemble_compact_operator(const ProblemSpec& problem, const Mesh& mesh,
                                            const QuadratureRule& rule) {
    return assemble(problem, mesh, rule, [&](std::size_t k) {
        ElementContribution e;
        const double a = mesh.left(k);
        const double b = mesh.right(k);
        const double h = b - a;
        const double half = 0.5 * h;
        const std::array<double, 2> dphi{-1.0 / h, 1.0 / h};
        for (std::size_t p = 0; p < rule.order(); ++p) {
            const double x = 0.5 * (a + b) + half * rule.points[p];
            const double wq = half * rule.weights[p];
            const std::array<double, 2> phi{(b - x) / h, (x - a) / h};
            const ValueSlope w{(x - a) * (x - b), 2.0 * x - a - b};
            const EnrichmentCoefficients c = enrichment_coefficients(problem, x);
            const double q = problem.q(x);
            const double f = problem.f(x);
            const std::array<ValueSlope, 2> psi{enrich_linear(c, {phi[0], dphi[0]}, w),
                                                enrich_linear(c, {phi[1], dphi[1]}, w)};
            // The bubble vanishes at both element ends, so its stiffness term is
            // integrated by parts: int beta B' phi_i' = -int beta' B phi_i'.
            const double bub = bubble_term(c, w).value;
            const double dbeta = c.beta * c.drift.value;
            for (int i = 0; i < 2; ++i) {
                for (int j = 0; j < 2; ++j) {
                    e.a[i][j] += wq * (c.beta * psi[j].slope * dphi[i] + q * psi[j].value * phi[i]);
                }
                e.load[i] += wq * (f * phi[i] + dbeta * bub * dphi[i] - q * bub * phi[i]);
            }
        }
        return e;
    });
}

TridiagonalSystem apply_boundary(TridiagonalSystem sys, const ProblemSpec& problem) {
    const std::size_t m = sys.size();
    if (sys.first_node != 0 || m < 3) {
        throw InvalidArgument("apply_boundary expects an unconstrained system over all nodes");
    }

    auto natural = [&](const BoundaryCondition& bc, std::size_t row, double x) {
        if (bc.kind == BoundaryCondition::Kind::Neumann) {
            sys.rhs[row] += problem.beta(x) * bc.value;
        } else if (bc.kind == BoundaryCondition::Kind::Robin) {
            sys.diag[row] += bc.alpha;
            sys.rhs[row] += bc.alpha * bc.value;
        }
    };
    natural(problem.left, 0, problem.domain.lo);
    natural(problem.right, m - 1, problem.domain.hi);

    if (problem.right.is_dirichlet()) {
        sys.rhs[m - 2] -= sys.super[m - 2] * problem.right.value;
        sys.diag.pop_back();
        sys.rhs.pop_back();
        sys.sub.pop_back();
        sys.super.pop_back();
    }
    if (problem.left.is_dirichlet()) {
        sys.rhs[1] -= sys.sub[0] * problem.left.value;
        sys.diag.erase(sys.diag.begin());
        sys.rhs.erase(sys.rhs.begin());
        sys.sub.erase(sys.sub.begin());
        sys.super.erase(sys.super.begin());
        sys.first_node = 1;
    }
    return sys;
}

TridiagonalSystem assemble_classical(const ProblemSpec& problem, const Mesh& mesh,
                                     const QuadratureRule& rule) {
    return apply_boundary(assemble_classical_operator(problem, mesh, rule), problem);
}

TridiagonalSystem assemble_compact(const ProblemSpec& problem, const Mesh& mesh,
                                   const QuadratureRule& rule) {
    return apply_boundary(assemble_compact_operator(problem, mesh, rule), problem);
}

}  // namespace cfem
