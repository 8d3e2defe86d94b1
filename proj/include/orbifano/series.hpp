/**
 * @file series.hpp
 * @brief Truncated formal power series with exact integer coefficients.
 *
 * Only products of (1 - q^k)^{+-1} are supported; that is all the Hilbert
 * series of weighted hypersurfaces need.
 */
#ifndef ORBIFANO_SERIES_HPP
#define ORBIFANO_SERIES_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "orbifano/rational.hpp"

namespace orbifano {

class TruncatedSeries {
public:
    /// The series 1 + 0*q + ... truncated at order N (N >= 0).
    static TruncatedSeries one(std::int64_t order);

    std::int64_t order() const { return static_cast<std::int64_t>(coeffs_.size()) - 1; }

    /// Coefficient of q^m, 0 <= m <= order().
    const Int& operator[](std::int64_t m) const { return coeffs_[static_cast<std::size_t>(m)]; }

    const std::vector<Int>& coefficients() const { return coeffs_; }

    /// *this *= (1 - q^k), exact on all retained coefficients. k >= 1.
    void multiply_one_minus_power(std::int64_t k);

    /// *this *= (1 - q^k)^{-1} via the substitution (1-q^k)^{-1} = sum q^{k j}.
    void divide_one_minus_power(std::int64_t k);

    bool operator==(const TruncatedSeries&) const = default;

private:
    explicit TruncatedSeries(std::int64_t order);

    std::vector<Int> coeffs_; // index m = coefficient of q^m
};

/// Coefficients of  prod_j (1 - q^{d_j}) * prod_i (1 - q^{a_i})^{-1}  up to
/// order N. Empty exponent lists are allowed (empty product = 1); every
/// exponent must be >= 1 and N >= 0.
TruncatedSeries expand_rational_series(std::span<const std::int64_t> numerator_exponents,
                                       std::span<const std::int64_t> denominator_exponents,
                                       std::int64_t order);

/// Default truncation order used by every consumer unless overridden.
inline constexpr std::int64_t kDefaultTruncationOrder = 100;

} // namespace orbifano

#endif
