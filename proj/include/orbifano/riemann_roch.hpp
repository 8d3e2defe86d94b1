/**
 * @file riemann_roch.hpp
 * @brief Orbifold Riemann-Roch for terminal Fano 3-folds:
 *
 *   h^0(-mK) = (1/12) m (m+1) (2m+1) (-K)^3 + (2m+1) - l(m+1),
 *
 * evaluated exactly from the volume and the Reid basket. The formula is taken
 * as the definition of the numerical h^0; no vanishing theorem is modeled.
 */
#ifndef ORBIFANO_RIEMANN_ROCH_HPP
#define ORBIFANO_RIEMANN_ROCH_HPP

#include <cstdint>
#include <vector>

#include "orbifano/basket.hpp"
#include "orbifano/rational.hpp"

namespace orbifano {

/// The numerical invariants a terminal Fano 3-fold exposes to Riemann-Roch:
/// (-K_X)^3 > 0 and the basket B_X.
struct FanoNumericalType {
    Rational volume;
    Basket basket;
};

/// Error thrown when the formula yields a non-integral or negative value for
/// some m; carries the offending m and the exact rational so callers can log
/// near-misses.
class PlurigenusError : public Error {
public:
    PlurigenusError(Errc code, const std::string& message, std::int64_t m, Rational value)
        : Error(code, message), m_(m), value_(std::move(value)) {}

    std::int64_t m() const { return m_; }
    const Rational& value() const { return value_; }

private:
    std::int64_t m_;
    Rational value_;
};

/// l(n) = sum over basket points of l_contribution(p, n). n >= 1.
Rational l_value(const Basket& basket, std::int64_t n);

/// h^0(X, -mK_X) for m >= 0. Throws PlurigenusError with code NotAnInteger
/// when the exact value is non-integral (inconsistent volume/basket pair) and
/// NegativeGenus when integral but < 0.
Int plurigenus(const FanoNumericalType& t, std::int64_t m);

/// [h^0(-0K), ..., h^0(-NK)]; fails fast on the first offending m.
std::vector<Int> genus_sequence(const FanoNumericalType& t, std::int64_t order);

/// The unique volume v with plurigenus((v, basket), 1) = h0, namely
/// v = 2 (h0 - 3 + l(2)). Throws NonPositiveVolume when v <= 0.
Rational volume_from_genus(const Int& h0, const Basket& basket);

} // namespace orbifano

#endif
