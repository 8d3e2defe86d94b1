#include "orbifano/consistency.hpp"

namespace orbifano {

TruncatedSeries hypersurface_series(const WeightedHypersurface& x, std::int64_t order) {
    if (x.amplitude() != 1)
        fail(Errc::amplitude_not_one,
             "amplitude is " + std::to_string(x.amplitude()) +
                 "; O(1) is the anti-canonical polarization only when alpha = 1");
    const std::int64_t num[] = {x.degree()};
    return expand_rational_series(num, x.weights(), order);
}

ConsistencyReport cross_check(const FanoNumericalType& t, const WeightedHypersurface& x,
                              std::int64_t order) {
    ConsistencyReport report;
    report.checked_order = order;
    report.volume = t.volume;
    report.basket = t.basket;
    try {
        TruncatedSeries hilbert = hypersurface_series(x, order);
        for (std::int64_t m = 0; m <= order; ++m) {
            Int rr = plurigenus(t, m);
            if (rr != hilbert[m]) {
                report.first_mismatch = SeriesMismatch{m, rr, hilbert[m]};
                break;
            }
        }
    } catch (const Error& e) {
        report.failures.push_back(e.tagged());
    }
    report.match = !report.first_mismatch && report.failures.empty();
    return report;
}

ConsistencyReport cross_check(const WeightedHypersurface& x, std::int64_t order) {
    FanoNumericalType t;
    try {
        t.volume = volume(x);
        t.basket = basket_of(x);
    } catch (const Error& e) {
        ConsistencyReport report;
        report.checked_order = order;
        report.failures.push_back(e.tagged());
        report.match = false;
        return report;
    }
    return cross_check(t, x, order);
}

RelationProbe relation_probe(const WeightedHypersurface& x, std::int64_t m) {
    if (m < 0) fail(Errc::bad_argument, "relation_probe needs m >= 0");
    if (x.amplitude() != 1)
        fail(Errc::amplitude_not_one,
             "relation probe compares against -mK sections; needs alpha = 1");
    RelationProbe probe;
    probe.monomials = monomial_count(x.weights(), m);
    probe.h0 = plurigenus({volume(x), basket_of(x)}, m);
    probe.deficit = probe.monomials - probe.h0;
    return probe;
}

} // namespace orbifano
