/**
 * @file search.hpp
 * @brief Exhaustive enumeration of baskets numerically compatible with a
 *        prescribed anti-canonical volume.
 *
 * A desk-scale audit of the basket-uniqueness statement behind the volume
 * bound: under the gamma budget sum(r - 1/r) < gamma_bound (default 24,
 * Kawamata's bound for terminal Fano 3-folds; configurable, never silently
 * assumed) every candidate multiset of point types is tested for an exactly
 * matching l(2) value and plurigenus integrality up to depth M.
 */
#ifndef ORBIFANO_SEARCH_HPP
#define ORBIFANO_SEARCH_HPP

#include <cstdint>
#include <vector>

#include "orbifano/basket.hpp"
#include "orbifano/rational.hpp"

namespace orbifano {

struct SearchConfig {
    Rational volume;
    Rational gamma_bound = Rational(24);
    std::int64_t integrality_depth = 20; // integrality enforced for 1 <= m <= depth

    /// Hard cap on basket size implied by the cheapest point type (1,2) with
    /// gamma = 3/2: floor(gamma_bound / (3/2)).
    Int max_points() const { return (gamma_bound * Rational(2, 3)).floor(); }
};

/// Admissible exact values of l(2) = v/2 + 3 - h^0(-K) for
/// h^0 in {0, ..., floor(v/2 + 3)}, listed descending. Requires v > 0;
/// never empty.
std::vector<Rational> l2_targets(const Rational& volume);

/// All candidate point types (b, r) with gamma(r) < gamma_bound, ascending
/// by (r, b). The enumeration order of the depth-first search.
std::vector<OrbifoldPoint> candidate_point_types(const Rational& gamma_bound);

/// Depth-first enumeration over multisets of candidate types (non-decreasing
/// choices, each multiset visited once). A partial basket is pruned as soon
/// as its gamma sum reaches gamma_bound or its l(2) sum exceeds the largest
/// target; both quantities only grow, so the prunes cannot lose a valid
/// completion. A complete basket is emitted iff its l(2) sum equals one of
/// l2_targets(volume) and the plurigenus is a non-negative integer for all
/// 1 <= m <= integrality_depth. Every emitted basket is re-verified post hoc
/// through the riemann_roch module. Output in canonical sorted order; an
/// empty result is a valid outcome.
std::vector<Basket> enumerate_baskets(const SearchConfig& config);

} // namespace orbifano

#endif
