#include "orbifano/search.hpp"

#include <algorithm>

#include "orbifano/riemann_roch.hpp"

namespace orbifano {

std::vector<Rational> l2_targets(const Rational& volume) {
    if (!(volume > Rational(0)))
        fail(Errc::bad_argument, "volume must be positive, got " + volume.str());
    Rational base = volume / Rational(2) + Rational(3); // l(2) at h^0(-K) = 0
    Int top = base.floor();
    std::vector<Rational> out;
    for (Int h0 = 0; h0 <= top; ++h0) out.push_back(base - Rational(h0));
    return out;
}

std::vector<OrbifoldPoint> candidate_point_types(const Rational& gamma_bound) {
    std::vector<OrbifoldPoint> types;
    for (std::int64_t r = 2; Rational(r) - Rational(1, r) < gamma_bound; ++r)
        for (std::int64_t b = 1; 2 * b <= r; ++b)
            if (std::gcd(b, r) == 1) types.push_back({b, r});
    return types;
}

namespace {

struct Dfs {
    const SearchConfig& config;
    const std::vector<OrbifoldPoint>& types;
    std::vector<Rational> type_gamma;
    std::vector<Rational> type_l2;
    // ltab[t][n-2] = l_contribution(types[t], n) for n = 2 .. depth+1
    std::vector<std::vector<Rational>> ltab;
    Rational l2_cap; // largest l(2) target: v/2 + 3
    std::vector<std::size_t> stack;
    std::vector<Basket> results;

    explicit Dfs(const SearchConfig& cfg, const std::vector<OrbifoldPoint>& ts)
        : config(cfg), types(ts) {
        l2_cap = cfg.volume / Rational(2) + Rational(3);
        type_gamma.reserve(types.size());
        type_l2.reserve(types.size());
        ltab.reserve(types.size());
        for (OrbifoldPoint p : types) {
            type_gamma.push_back(gamma_of(p));
            type_l2.push_back(l_contribution(p, 2));
            std::vector<Rational> row;
            for (std::int64_t n = 2; n <= config.integrality_depth + 1; ++n)
                row.push_back(l_contribution(p, n));
            ltab.push_back(std::move(row));
        }
    }

    // h^0(-mK) integral and >= 0 for all 1 <= m <= depth. The m = 1 case is
    // exactly membership of the l(2) sum in l2_targets(volume): both say
    // v/2 + 3 - l(2) is an integer in [0, floor(v/2 + 3)].
    bool accept() const {
        for (std::int64_t m = 1; m <= config.integrality_depth; ++m) {
            Rational l(0);
            for (std::size_t t : stack) l += ltab[t][static_cast<std::size_t>(m) - 1];
            Int two_m_plus_1 = Int(2) * m + 1;
            Rational h = Rational(Int(m) * (m + 1) * two_m_plus_1, 12) * config.volume +
                         Rational(two_m_plus_1) - l;
            if (!h.is_integer() || h.sign() < 0) return false;
        }
        return true;
    }

    void run(std::size_t start, const Rational& gamma_sum, const Rational& l2_sum) {
        // the m = 1 test is cheap; only a target hit pays for the deep check
        Rational h1 = l2_cap - l2_sum;
        if (h1.is_integer() && h1.sign() >= 0 && accept()) {
            std::vector<OrbifoldPoint> points;
            points.reserve(stack.size());
            for (std::size_t t : stack) points.push_back(types[t]);
            results.emplace_back(std::move(points));
        }
        if (Int(static_cast<std::int64_t>(stack.size())) >= config.max_points()) return;
        for (std::size_t t = start; t < types.size(); ++t) {
            Rational gamma_next = gamma_sum + type_gamma[t];
            // gamma is non-decreasing along the type order: once over, all
            // later siblings are over too
            if (!(gamma_next < config.gamma_bound)) break;
            Rational l2_next = l2_sum + type_l2[t];
            if (l2_next > l2_cap) continue; // l(2) only grows; not monotone in t
            stack.push_back(t);
            run(t, gamma_next, l2_next);
            stack.pop_back();
        }
    }
};

} // namespace

std::vector<Basket> enumerate_baskets(const SearchConfig& config) {
    if (!(config.volume > Rational(0)))
        fail(Errc::bad_argument, "volume must be positive, got " + config.volume.str());
    if (config.gamma_bound < Rational(0))
        fail(Errc::bad_argument, "gamma bound must be non-negative");
    if (config.integrality_depth < 1)
        fail(Errc::bad_argument, "integrality depth must be >= 1");

    std::vector<OrbifoldPoint> types = candidate_point_types(config.gamma_bound);
    Dfs dfs(config, types);
    dfs.run(0, Rational(0), Rational(0));

    std::sort(dfs.results.begin(), dfs.results.end());

    // independent re-verification through the Riemann-Roch module; a failure
    // here means an unsound prune or acceptance bug
    for (const Basket& basket : dfs.results) {
        try {
            genus_sequence({config.volume, basket}, config.integrality_depth);
        } catch (const Error& e) {
            throw std::logic_error("search emitted a basket that fails re-verification: {" +
                                   to_string(basket) + "}: " + e.tagged());
        }
    }
    return dfs.results;
}

} // namespace orbifano
