#ifndef CFEM_BASIS_HPP
#define CFEM_BASIS_HPP

#include "cfem/geometry.hpp"
#include "cfem/problem.hpp"

#include <cstddef>

namespace cfem {

struct ValueSlope {
    double value = 0.0;
    double slope = 0.0;
};

/// Hat function of node i at x. The slope is one-sided: at an interior node
/// it is taken from the element to the right.
ValueSlope hat(const Mesh& mesh, std::size_t i, double x);

/// w(x) = (x - x_k)(x - x_{k+1}) on element k and its derivative.
ValueSlope element_weight(const Mesh& mesh, std::size_t k, double x);

/** Coefficient ratios that drive the enrichment, sampled at one point:
 *   drift    = beta'/beta
 *   reaction = q/beta
 *   source   = f/beta
 * each with its x-derivative. */
struct EnrichmentCoefficients {
    double beta = 1.0;
    ValueSlope drift;
    ValueSlope reaction;
    ValueSlope source;
};

/// Throws CoercivityError if beta(x) <= 0.
EnrichmentCoefficients enrichment_coefficients(const ProblemSpec& problem, double x);

/** Applies the quadratic correction to a function that is linear on the
 * element (value and constant slope given at the point):
 *   l - 1/2 (beta'/beta) w l' + 1/2 (q/beta) w l
 * The f-dependent term is not included; see bubble_term(). */
ValueSlope enrich_linear(const EnrichmentCoefficients& c, ValueSlope linear, ValueSlope weight);

/// -1/2 (f/beta) w, the per-element source bubble.
ValueSlope bubble_term(const EnrichmentCoefficients& c, ValueSlope weight);

/// Enriched trial function psi_i at x (the hat with the drift and reaction
/// corrections of the element containing x).
ValueSlope modified_trial(const ProblemSpec& problem, const Mesh& mesh, std::size_t i, double x);

/// Bubble of element k at x.
ValueSlope bubble(const ProblemSpec& problem, const Mesh& mesh, std::size_t k, double x);

}  // namespace cfem

#endif
