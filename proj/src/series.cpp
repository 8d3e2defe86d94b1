#include "orbifano/series.hpp"

namespace orbifano {

TruncatedSeries::TruncatedSeries(std::int64_t order) {
    if (order < 0) fail(Errc::bad_argument, "series order must be >= 0");
    coeffs_.assign(static_cast<std::size_t>(order) + 1, Int(0));
}

TruncatedSeries TruncatedSeries::one(std::int64_t order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = 1;
    return s;
}

void TruncatedSeries::multiply_one_minus_power(std::int64_t k) {
    if (k < 1) fail(Errc::bad_argument, "exponent must be >= 1");
    // c[m] -= c[m-k], top down so each source is still the old value
    for (std::int64_t m = order(); m >= k; --m)
        coeffs_[static_cast<std::size_t>(m)] -= coeffs_[static_cast<std::size_t>(m - k)];
}

void TruncatedSeries::divide_one_minus_power(std::int64_t k) {
    if (k < 1) fail(Errc::bad_argument, "exponent must be >= 1");
    // c[m] += c[m-k], bottom up: convolution with 1 + q^k + q^2k + ...
    for (std::int64_t m = k; m <= order(); ++m)
        coeffs_[static_cast<std::size_t>(m)] += coeffs_[static_cast<std::size_t>(m - k)];
}

TruncatedSeries expand_rational_series(std::span<const std::int64_t> numerator_exponents,
                                       std::span<const std::int64_t> denominator_exponents,
                                       std::int64_t order) {
    TruncatedSeries s = TruncatedSeries::one(order);
    for (std::int64_t d : numerator_exponents) s.multiply_one_minus_power(d);
    for (std::int64_t a : denominator_exponents) s.divide_one_minus_power(a);
    return s;
}

} // namespace orbifano
