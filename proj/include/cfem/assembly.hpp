#ifndef CFEM_ASSEMBLY_HPP
#define CFEM_ASSEMBLY_HPP

#include "cfem/geometry.hpp"
#include "cfem/problem.hpp"

#include <cstddef>
#include <vector>

namespace cfem {

/** Banded system A U = F. Row r couples unknowns r-1, r, r+1:
 *   sub[r-1] = A(r, r-1), diag[r] = A(r, r), super[r] = A(r, r+1).
 * Unknown r is the coefficient of mesh node first_node + r. */
struct TridiagonalSystem {
    std::vector<double> sub;
    std::vector<double> diag;
    std::vector<double> super;
    std::vector<double> rhs;
    std::size_t first_node = 0;

    std::size_t size() const { return diag.size(); }

    explicit TridiagonalSystem(std::size_t m = 0)
        : sub(m > 0 ? m - 1 : 0), diag(m), super(m > 0 ? m - 1 : 0), rhs(m) {}
};

/// Classical P1 Galerkin operator on every node, boundary conditions not applied.
TridiagonalSystem assemble_classical_operator(const ProblemSpec& problem, const Mesh& mesh,
                                              const QuadratureRule& rule);

/// Petrov-Galerkin operator of the compact method on every node: enriched
/// trial functions against hat test functions, with the source bubble's
/// action moved to the right-hand side. Boundary conditions not applied.
TridiagonalSystem assemble_compact_operator(const ProblemSpec& problem, const Mesh& mesh,
                                            const QuadratureRule& rule);

/// Eliminates Dirichlet nodes and adds the natural boundary terms of
/// Neumann and Robin ends. Expects a system over all mesh nodes.
TridiagonalSystem apply_boundary(TridiagonalSystem system, const ProblemSpec& problem);

TridiagonalSystem assemble_classical(const ProblemSpec& problem, const Mesh& mesh,
                                     const QuadratureRule& rule);

TridiagonalSystem assemble_compact(const ProblemSpec& problem, const Mesh& mesh,
                                   const QuadratureRule& rule);

}  // namespace cfem

#endif
