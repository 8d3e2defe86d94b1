/**
 * @file wps.hpp
 * @brief A general quasi-smooth hypersurface X_d in P(a0..a4): well-formedness,
 *        anti-canonical volume, weighted monomial counting, and the
 *        singularity basket read off the vertex and edge strata.
 *
 * "General member" semantics throughout: every monomial of the right degree
 * is assumed present with a generic nonzero coefficient. No polynomial is
 * ever manipulated.
 */
#ifndef ORBIFANO_WPS_HPP
#define ORBIFANO_WPS_HPP

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "orbifano/basket.hpp"
#include "orbifano/rational.hpp"

namespace orbifano {

/// True iff every 4-element subset of the weights has gcd 1.
bool well_formed(std::span<const std::int64_t, 5> weights);

class WeightedHypersurface {
public:
    /// Requires all weights >= 1, well_formed(weights), and amplitude
    /// sum(a_i) - d >= 1. Throws BadArgument / NotWellFormed / BadAmplitude.
    WeightedHypersurface(std::array<std::int64_t, 5> weights, std::int64_t degree);

    const std::array<std::int64_t, 5>& weights() const { return weights_; }
    std::int64_t degree() const { return degree_; }

    /// alpha = sum(a_i) - d; alpha = 1 means -K_X = O(1).
    std::int64_t amplitude() const;

    bool operator==(const WeightedHypersurface&) const = default;

private:
    std::array<std::int64_t, 5> weights_;
    std::int64_t degree_;
};

/// (-K_X)^3 = alpha^3 d / (a0 a1 a2 a3 a4), exact.
Rational volume(const WeightedHypersurface& x);

/// Number of solutions of sum(a_i n_i) = d in non-negative integers, by
/// dynamic programming (one pass per weight over a table of size d+1).
/// Works for any number of weights; d >= 0.
Int monomial_count(std::span<const std::int64_t> weights, std::int64_t degree);

/// Quotient types at coordinate points of the general member. A vertex i
/// contributes iff a_i > 1 and a_i does not divide d; its tangent monomial
/// x_i^k x_j uses the smallest j != i with a_j = d mod a_i and a_j <= d, and
/// the type is normalize_cyclic_quotient of the three transverse weights
/// mod a_i. Throws NotQuasiSmoothAtVertex when no tangent index exists and
/// AmbiguousType when two tangent indices disagree on the type.
std::vector<OrbifoldPoint> vertex_singularities(const WeightedHypersurface& x);

/// Quotient types along coordinate edges, with the number of points of each
/// type. For an edge {i, j} with r = gcd(a_i, a_j) > 1 the general member
/// meets the edge in (q_max - q_min) r / a_i isolated points, where q ranges
/// over the exponents of the degree-d binary monomials x_i^p x_j^q; each has
/// type normalize_cyclic_quotient of the three off-edge weights mod r.
/// Throws EdgeContained when no binary monomial exists, Unsupported when r
/// shares a factor with an off-edge weight, NonIntegralOrbitCount when the
/// count formula fails to be integral.
std::vector<std::pair<OrbifoldPoint, std::int64_t>>
edge_singularities(const WeightedHypersurface& x);

/// The full basket: vertex types plus edge types with multiplicity, merged
/// in canonical order.
Basket basket_of(const WeightedHypersurface& x);

} // namespace orbifano

#endif
