#include "doctest.h"
#include "oracles.hpp"

#include "cfem/assembly.hpp"
#include "cfem/basis.hpp"
#include "cfem/error.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace cfem;
using std::numbers::pi;

namespace {

ProblemSpec constant_problem(double beta, double q, double f, Interval domain = {0.0, 1.0}) {
    ProblemSpec p;
    p.domain = domain;
    p.beta = ScalarField::constant(beta);
    p.q = ScalarField::constant(q);
    p.f = ScalarField::constant(f);
    p.left = BoundaryCondition::dirichlet(0.0);
    p.right = BoundaryCondition::dirichlet(0.0);
    return p;
}

// Element-wise composite 3-point Gauss with hard-coded nodes: touches only
// interior points, where hats and enriched functions are smooth.
template <class G>
double brute_integral(const Mesh& mesh, G&& g) {
    constexpr int kPanels = 400;
    const double r = std::sqrt(0.6);
    double total = 0.0;
    for (std::size_t k = 0; k < mesh.element_count(); ++k) {
        const double d = mesh.width(k) / kPanels;
        for (int s = 0; s < kPanels; ++s) {
            const double c = mesh.left(k) + (s + 0.5) * d;
            total += d / 18.0 * (5.0 * g(c - 0.5 * d * r) + 8.0 * g(c) + 5.0 * g(c + 0.5 * d * r));
        }
    }
    return total;
}

// a(psi_j, phi_i) and the load over all node pairs, evaluated through the
// basis module only.
oracle::Dense brute_operator(const ProblemSpec& p, const Mesh& mesh, bool compact) {
    const std::size_t m = mesh.node_count();
    oracle::Dense a(m, std::vector<double>(m, 0.0));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = (i > 0 ? i - 1 : 0); j < std::min(m, i + 2); ++j) {
            a[i][j] = brute_integral(mesh, [&](double x) {
                const ValueSlope test = hat(mesh, i, x);
                const ValueSlope trial = compact ? modified_trial(p, mesh, j, x) : hat(mesh, j, x);
                return p.beta(x) * trial.slope * test.slope + p.q(x) * trial.value * test.value;
            });
        }
    }
    return a;
}

std::vector<double> brute_load(const ProblemSpec& p, const Mesh& mesh, bool compact) {
    std::vector<double> rhs(mesh.node_count());
    for (std::size_t i = 0; i < rhs.size(); ++i) {
        rhs[i] = brute_integral(mesh, [&](double x) {
            const ValueSlope test = hat(mesh, i, x);
            double v = p.f(x) * test.value;
            if (compact) {
                const ValueSlope b = bubble(p, mesh, mesh.locate(x), x);
                v -= p.beta(x) * b.slope * test.slope + p.q(x) * b.value * test.value;
            }
            return v;
        });
    }
    return rhs;
}

}  // namespace

TEST_CASE("classical stiffness on a uniform mesh") {
    const ProblemSpec p = constant_problem(1.0, 0.0, 0.0);
    const Mesh mesh = uniform_mesh(0.0, 1.0, 8);
    const double h = 0.125;
    const TridiagonalSystem s = assemble_classical(p, mesh, gauss_legendre(5));
    REQUIRE(s.size() == 7);
    REQUIRE(s.sub.size() == 6);
    REQUIRE(s.super.size() == 6);
    CHECK(s.first_node == 1);
    for (std::size_t i = 0; i < 7; ++i) {
        CHECK(s.diag[i] == doctest::Approx(2.0 / h).epsilon(1e-14));
        CHECK(s.rhs[i] == 0.0);
    }
    for (std::size_t i = 0; i < 6; ++i) {
        CHECK(s.sub[i] == doctest::Approx(-1.0 / h).epsilon(1e-14));
        CHECK(s.super[i] == s.sub[i]);
    }
}

TEST_CASE("classical stiffness plus mass") {
    const ProblemSpec p = constant_problem(1.0, 1.0, 0.0);
    const Mesh mesh = uniform_mesh(0.0, 1.0, 10);
    const double h = 0.1;
    const TridiagonalSystem s = assemble_classical(p, mesh, gauss_legendre(5));
    for (double d : s.diag) CHECK(d == doctest::Approx(2.0 / h + 2.0 * h / 3.0).epsilon(1e-14));
    for (double o : s.sub) CHECK(o == doctest::Approx(-1.0 / h + h / 6.0).epsilon(1e-14));
}

TEST_CASE("classical operator matches a brute-force integration of the bilinear form") {
    const ProblemSpec p = catalog::variable(5 * pi, 0.0);
    const Mesh mesh({0.0, 0.2, 0.45, 0.6, 1.1, 1.3, 1.75, 2.0});
    const TridiagonalSystem s = assemble_classical_operator(p, mesh, gauss_legendre(5));
    const oracle::Dense a = brute_operator(p, mesh, false);
    const oracle::Dense got = oracle::to_dense(s);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CAPTURE(i);
        const double scale = std::abs(a[i][i]);
        for (std::size_t j = 0; j < a.size(); ++j) CHECK(std::abs(got[i][j] - a[i][j]) <= 1e-10 * scale);
    }
    const std::vector<double> rhs = brute_load(p, mesh, false);
    // Elements here are wide against sin(5 pi x), so compare the load at a high Gauss order.
    const TridiagonalSystem fine = assemble_classical_operator(p, mesh, gauss_legendre(16));
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(std::abs(fine.rhs[i] - rhs[i]) <= 1e-9 * (1.0 + std::abs(rhs[i])));
}

TEST_CASE("compact operator matches a brute-force Petrov-Galerkin integration") {
    const ProblemSpec p = catalog::variable(5 * pi, 0.0);
    const Mesh mesh = uniform_mesh(0.0, 2.0, 8);
    const TridiagonalSystem s = assemble_compact_operator(p, mesh, gauss_legendre(5));
    const oracle::Dense a = brute_operator(p, mesh, true);
    const oracle::Dense got = oracle::to_dense(s);
    const std::vector<double> rhs = brute_load(p, mesh, true);
    double rhs_scale = 0.0;
    for (double r : rhs) rhs_scale = std::max(rhs_scale, std::abs(r));
    for (std::size_t i = 0; i < a.size(); ++i) {
        CAPTURE(i);
        const double scale = std::abs(a[i][i]);
        for (std::size_t j = 0; j < a.size(); ++j) {
            CHECK(std::abs(got[i][j] - a[i][j]) <= 1e-10 * scale);
        }
        // 5-point Gauss is coarse against sin(5 pi x) on h = 1/4.
        CHECK(std::abs(s.rhs[i] - rhs[i]) <= 2e-2 * rhs_scale);
    }
    const TridiagonalSystem fine = assemble_compact_operator(p, mesh, gauss_legendre(16));
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(std::abs(fine.rhs[i] - rhs[i]) <= 1e-10 * rhs_scale);
}

TEST_CASE("zero source gives a zero load") {
    const ProblemSpec p = constant_problem(2.0, 3.0, 0.0);
    const TridiagonalSystem s = assemble_classical(p, uniform_mesh(0.0, 1.0, 6), gauss_legendre(5));
    for (double r : s.rhs) CHECK(r == 0.0);
}

TEST_CASE("compact system reduces to the classical one for constant beta and q == 0") {
    for (const ProblemSpec& p : {constant_problem(1.0, 0.0, 1.0), constant_problem(3.0, 0.0, -2.0),
                                 catalog::poisson(5 * pi)}) {
        CAPTURE(p.name);
        const Mesh mesh = uniform_mesh(p.domain.lo, p.domain.hi, 16);
        const TridiagonalSystem c = assemble_classical(p, mesh, gauss_legendre(5));
        const TridiagonalSystem k = assemble_compact(p, mesh, gauss_legendre(5));
        REQUIRE(c.size() == k.size());
        for (std::size_t i = 0; i < c.size(); ++i) {
            CHECK(std::abs(c.diag[i] - k.diag[i]) <= 1e-13 * std::abs(c.diag[i]));
            if (i + 1 < c.size()) {
                CHECK(std::abs(c.sub[i] - k.sub[i]) <= 1e-13 * std::abs(c.sub[i]));
                CHECK(std::abs(c.super[i] - k.super[i]) <= 1e-13 * std::abs(c.super[i]));
            }
        }
    }
    // Constant f/beta: the bubble's load vanishes to rounding.
    const ProblemSpec p = constant_problem(1.0, 0.0, 1.0);
    const Mesh mesh = uniform_mesh(0.0, 1.0, 16);
    const TridiagonalSystem c = assemble_classical(p, mesh, gauss_legendre(5));
    const TridiagonalSystem k = assemble_compact(p, mesh, gauss_legendre(5));
    for (std::size_t i = 0; i < c.size(); ++i) CHECK(std::abs(c.rhs[i] - k.rhs[i]) <= 1e-13 * std::abs(c.rhs[i]));
}

TEST_CASE("compact system is tridiagonal and symmetric") {
    // Integrating the enrichment terms by parts pairs them up symmetrically,
    // so the Petrov-Galerkin matrix stays symmetric even with variable beta and q.
    const ProblemSpec var = catalog::variable(5 * pi, 5 * pi);
    const TridiagonalSystem s = assemble_compact(var, uniform_mesh(0.0, 2.0, 8), gauss_legendre(5));
    CHECK(s.size() == 7);
    CHECK(s.sub.size() == 6);
    CHECK(s.super.size() == 6);
    for (std::size_t n : {4u, 8u, 13u}) {
        const TridiagonalSystem a = assemble_compact_operator(var, uniform_mesh(0.0, 2.0, n), gauss_legendre(16));
        for (std::size_t i = 0; i < a.sub.size(); ++i) CHECK(a.sub[i] == doctest::Approx(a.super[i]).epsilon(1e-12));
    }
}

TEST_CASE("classical matrix is symmetric and positive definite") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> unif(0.2, 3.0);
    for (int trial = 0; trial < 20; ++trial) {
        const double a = unif(rng), b = unif(rng), c = unif(rng);
        ProblemSpec p;
        p.name = "random";
        p.domain = {0.0, 1.0 + c};
        p.beta = ScalarField([a, b](double x) { return a + b * x * x; });
        p.q = ScalarField([c](double x) { return c * (1.0 + std::sin(5 * x)); });
        p.f = ScalarField([a](double x) { return std::cos(a * x); });
        p.left = BoundaryCondition::dirichlet(unif(rng));
        p.right = trial % 2 ? BoundaryCondition::robin(unif(rng), 0.5) : BoundaryCondition::dirichlet(0.0);
        const std::size_t n = 4 + static_cast<std::size_t>(trial % 12);
        const TridiagonalSystem s = assemble_classical(p, uniform_mesh(p.domain.lo, p.domain.hi, n), gauss_legendre(5));
        double scale = 0.0;
        for (double d : s.diag) scale = std::max(scale, std::abs(d));
        for (std::size_t i = 0; i < s.sub.size(); ++i) CHECK(std::abs(s.sub[i] - s.super[i]) <= 1e-13 * scale);
        const oracle::Dense dense = oracle::to_dense(s);
        for (std::size_t k = 1; k <= dense.size(); ++k) CHECK(oracle::determinant(oracle::leading_block(dense, k)) > 0.0);
    }
}

TEST_CASE("assembly does not depend on element traversal order") {
    // Mirroring the problem (x -> -x) reverses the element order; entries must mirror.
    ProblemSpec p;
    p.domain = {0.0, 1.5};
    p.beta = ScalarField([](double x) { return 1.0 + x * x; });
    p.q = ScalarField([](double x) { return std::exp(x); });
    p.f = ScalarField([](double x) { return std::sin(4 * x); });
    ProblemSpec m = p;
    m.domain = {-1.5, 0.0};
    m.beta = ScalarField([](double x) { return 1.0 + x * x; });
    m.q = ScalarField([](double x) { return std::exp(-x); });
    m.f = ScalarField([](double x) { return std::sin(-4 * x); });
    const std::size_t n = 9;
    const TridiagonalSystem a = assemble_classical_operator(p, uniform_mesh(0.0, 1.5, n), gauss_legendre(5));
    const TridiagonalSystem b = assemble_classical_operator(m, uniform_mesh(-1.5, 0.0, n), gauss_legendre(5));
    for (std::size_t i = 0; i <= n; ++i) {
        CHECK(a.diag[i] == doctest::Approx(b.diag[n - i]).epsilon(1e-13));
        CHECK(a.rhs[i] == doctest::Approx(b.rhs[n - i]).epsilon(1e-13));
    }
    for (std::size_t i = 0; i < n; ++i) CHECK(a.super[i] == doctest::Approx(b.sub[n - 1 - i]).epsilon(1e-13));

    const TridiagonalSystem again = assemble_classical_operator(p, uniform_mesh(0.0, 1.5, n), gauss_legendre(5));
    CHECK(again.diag == a.diag);
    CHECK(again.rhs == a.rhs);
}

TEST_CASE("boundary conditions: unknown counts") {
    ProblemSpec p = constant_problem(1.0, 1.0, 1.0);
    const Mesh mesh = uniform_mesh(0.0, 1.0, 8);
    CHECK(assemble_classical(p, mesh, gauss_legendre(3)).size() == 7);
    p.right = BoundaryCondition::neumann(0.0);
    const TridiagonalSystem mixed = assemble_classical(p, mesh, gauss_legendre(3));
    CHECK(mixed.size() == 8);
    CHECK(mixed.first_node == 1);
    p.left = BoundaryCondition::neumann(0.0);
    const TridiagonalSystem free = assemble_classical(p, mesh, gauss_legendre(3));
    CHECK(free.size() == 9);
    CHECK(free.first_node == 0);
}

TEST_CASE("Dirichlet elimination against a dense oracle") {
    ProblemSpec p = constant_problem(1.0, 0.0, 0.0);
    p.left = BoundaryCondition::dirichlet(2.0);
    const Mesh mesh = uniform_mesh(0.0, 1.0, 4);
    const double h = 0.25;
    const TridiagonalSystem raw = assemble_classical_operator(p, mesh, gauss_legendre(2));
    const TridiagonalSystem s = apply_boundary(raw, p);
    CHECK(s.rhs[0] == doctest::Approx(2.0 / h));
    CHECK(s.rhs[1] == 0.0);

    // Dense oracle: move the known columns to the right-hand side by hand.
    const oracle::Dense full = oracle::to_dense(raw);
    std::vector<double> expected_rhs;
    for (std::size_t i = 1; i <= 3; ++i) expected_rhs.push_back(raw.rhs[i] - full[i][0] * 2.0 - full[i][4] * 0.0);
    for (std::size_t i = 0; i < 3; ++i) CHECK(s.rhs[i] == doctest::Approx(expected_rhs[i]));
    const oracle::Dense reduced = oracle::to_dense(s);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) CHECK(reduced[i][j] == doctest::Approx(full[i + 1][j + 1]));
}

TEST_CASE("Neumann and Robin natural terms") {
    ProblemSpec p = constant_problem(1.0, 0.0, 0.0);
    p.beta = ScalarField([](double x) { return 1.0 + x; });
    p.left = BoundaryCondition::dirichlet(0.0);
    p.right = BoundaryCondition::neumann(3.0);
    const Mesh mesh = uniform_mesh(0.0, 1.0, 4);
    const TridiagonalSystem raw = assemble_classical_operator(p, mesh, gauss_legendre(3));
    const TridiagonalSystem neu = apply_boundary(raw, p);
    CHECK(neu.rhs.back() == doctest::Approx(raw.rhs.back() + 2.0 * 3.0));
    CHECK(neu.diag.back() == doctest::Approx(raw.diag.back()));

    p.right = BoundaryCondition::robin(0.5, 4.0);
    const TridiagonalSystem rob = apply_boundary(raw, p);
    CHECK(rob.diag.back() == doctest::Approx(raw.diag.back() + 0.5));
    CHECK(rob.rhs.back() == doctest::Approx(raw.rhs.back() + 2.0));

    p.left = BoundaryCondition::neumann(1.0);
    const TridiagonalSystem both = apply_boundary(raw, p);
    CHECK(both.rhs.front() == doctest::Approx(raw.rhs.front() + 1.0 * 1.0));

    CHECK_THROWS_AS(apply_boundary(neu, p), InvalidArgument);
}

TEST_CASE("assembly rejects bad inputs") {
    ProblemSpec p = constant_problem(1.0, 0.0, 1.0);
    CHECK_THROWS_AS(assemble_classical(p, uniform_mesh(0.0, 2.0, 4), gauss_legendre(3)), InvalidArgument);
    p.domain = {-1.0, 1.0};
    p.beta = ScalarField([](double x) { return x; });
    CHECK_THROWS_AS(assemble_classical(p, uniform_mesh(-1.0, 1.0, 4), gauss_legendre(3)), CoercivityError);
    CHECK_THROWS_AS(assemble_compact(p, uniform_mesh(-1.0, 1.0, 4), gauss_legendre(3)), CoercivityError);
}
