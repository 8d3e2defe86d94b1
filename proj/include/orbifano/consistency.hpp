/**
 * @file consistency.hpp
 * @brief Cross-checks between the two routes to the anti-plurigenera of a
 *        hypersurface with alpha = 1: Riemann-Roch from (volume, basket)
 *        versus the Hilbert series (1-q^d)/prod(1-q^{a_i}), plus the
 *        monomial-count probe for defining relations.
 */
#ifndef ORBIFANO_CONSISTENCY_HPP
#define ORBIFANO_CONSISTENCY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orbifano/riemann_roch.hpp"
#include "orbifano/series.hpp"
#include "orbifano/wps.hpp"

namespace orbifano {

struct SeriesMismatch {
    std::int64_t m = 0;
    Int rr_value;
    Int hilbert_value;
};

struct RelationProbe {
    Int monomials;
    Int h0;
    Int deficit; // monomials - h0 = independent relations in this degree
};

struct ConsistencyReport {
    std::string entry_name;
    std::optional<Rational> volume;
    std::optional<Basket> basket;
    std::int64_t checked_order = 0;
    bool match = false;
    std::optional<SeriesMismatch> first_mismatch;
    std::vector<std::pair<std::int64_t, RelationProbe>> relation_deficits;
    std::vector<std::string> failures; // extraction errors, reported not thrown
};

/// Hilbert series of X_d as a polarization by O(1): expand_rational_series
/// of (1-q^d)/prod(1-q^{a_i}) up to order N. Throws AmplitudeNotOne unless
/// alpha = 1 (otherwise O(1) is not -K and the coefficients are not
/// anti-plurigenera).
TruncatedSeries hypersurface_series(const WeightedHypersurface& x, std::int64_t order);

/// Compares genus_sequence(t, N) against hypersurface_series(x, N)
/// coefficientwise and records the first mismatch, if any. Never throws;
/// errors land in report.failures.
ConsistencyReport cross_check(const FanoNumericalType& t, const WeightedHypersurface& x,
                              std::int64_t order);

/// Extracts (volume(x), basket_of(x)) and runs the comparison above.
ConsistencyReport cross_check(const WeightedHypersurface& x, std::int64_t order);

/// (monomial count in degree m, h^0(-mK) from Riemann-Roch, difference).
/// Requires alpha = 1, m >= 0.
RelationProbe relation_probe(const WeightedHypersurface& x, std::int64_t m);

} // namespace orbifano

#endif
