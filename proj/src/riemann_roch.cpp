#include "orbifano/riemann_roch.hpp"

namespace orbifano {

Rational l_value(const Basket& basket, std::int64_t n) {
    Rational sum;
    for (const OrbifoldPoint& p : basket.points()) sum += l_contribution(p, n);
    return sum;
}

Int plurigenus(const FanoNumericalType& t, std::int64_t m) {
    if (m < 0) fail(Errc::bad_argument, "plurigenus needs m >= 0");
    if (!(t.volume > Rational(0)))
        fail(Errc::bad_argument, "volume must be positive, got " + t.volume.str());

    // (1/12) m (m+1) (2m+1) v + (2m+1) - l(m+1)
    Int two_m_plus_1 = Int(2) * m + 1;
    Rational value = Rational(Int(m) * (m + 1) * two_m_plus_1, 12) * t.volume +
                     Rational(two_m_plus_1) - l_value(t.basket, m + 1);
    if (!value.is_integer())
        throw PlurigenusError(Errc::not_an_integer,
                              "h^0(-" + std::to_string(m) + "K) = " + value.str() +
                                  " is not an integer",
                              m, value);
    if (value.sign() < 0)
        throw PlurigenusError(Errc::negative_genus,
                              "h^0(-" + std::to_string(m) + "K) = " + value.str() +
                                  " is negative",
                              m, value);
    return value.numerator();
}

std::vector<Int> genus_sequence(const FanoNumericalType& t, std::int64_t order) {
    if (order < 0) fail(Errc::bad_argument, "genus_sequence needs N >= 0");
    std::vector<Int> seq;
    seq.reserve(static_cast<std::size_t>(order) + 1);
    for (std::int64_t m = 0; m <= order; ++m) seq.push_back(plurigenus(t, m));
    return seq;
}

Rational volume_from_genus(const Int& h0, const Basket& basket) {
    if (h0 < 0) fail(Errc::bad_argument, "h0 must be >= 0");
    Rational v = Rational(2) * (Rational(h0) - Rational(3) + l_value(basket, 2));
    if (!(v > Rational(0)))
        fail(Errc::non_positive_volume,
             "h0 = " + h0.str() + " forces volume " + v.str() + " <= 0");
    return v;
}

} // namespace orbifano
