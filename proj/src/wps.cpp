#include "orbifano/wps.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>

namespace orbifano {

namespace {

std::string weights_str(std::span<const std::int64_t> w) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
    os << ")";
    return os.str();
}

} // namespace

bool well_formed(std::span<const std::int64_t, 5> weights) {
    // every 4-subset = drop one weight
    for (std::size_t skip = 0; skip < 5; ++skip) {
        std::int64_t g = 0;
        for (std::size_t i = 0; i < 5; ++i)
            if (i != skip) g = std::gcd(g, weights[i]);
        if (g != 1) return false;
    }
    return true;
}

WeightedHypersurface::WeightedHypersurface(std::array<std::int64_t, 5> weights,
                                           std::int64_t degree)
    : weights_(weights), degree_(degree) {
    for (std::int64_t a : weights_)
        if (a < 1)
            fail(Errc::bad_argument, "weights must be positive, got " + weights_str(weights_));
    if (degree_ < 1) fail(Errc::bad_argument, "degree must be positive");
    if (!well_formed(std::span<const std::int64_t, 5>(weights_)))
        fail(Errc::not_well_formed,
             "weights " + weights_str(weights_) + " are not well-formed");
    if (amplitude() < 1)
        fail(Errc::bad_amplitude, "amplitude sum(a_i) - d = " + std::to_string(amplitude()) +
                                      " must be >= 1");
}

std::int64_t WeightedHypersurface::amplitude() const {
    std::int64_t sum = 0;
    for (std::int64_t a : weights_) sum += a;
    return sum - degree_;
}

Rational volume(const WeightedHypersurface& x) {
    Int alpha = x.amplitude();
    Int prod = 1;
    for (std::int64_t a : x.weights()) prod *= a;
    return Rational(alpha * alpha * alpha * x.degree(), prod);
}

Int monomial_count(std::span<const std::int64_t> weights, std::int64_t degree) {
    if (degree < 0) fail(Errc::bad_argument, "degree must be >= 0");
    for (std::int64_t a : weights)
        if (a < 1) fail(Errc::bad_argument, "weights must be positive");
    // table[m] = number of solutions using the weights processed so far
    std::vector<Int> table(static_cast<std::size_t>(degree) + 1, Int(0));
    table[0] = 1;
    for (std::int64_t a : weights)
        for (std::int64_t m = a; m <= degree; ++m)
            table[static_cast<std::size_t>(m)] += table[static_cast<std::size_t>(m - a)];
    return table[static_cast<std::size_t>(degree)];
}

std::vector<OrbifoldPoint> vertex_singularities(const WeightedHypersurface& x) {
    const auto& a = x.weights();
    const std::int64_t d = x.degree();
    std::vector<OrbifoldPoint> out;
    for (std::size_t i = 0; i < 5; ++i) {
        if (a[i] <= 1 || d % a[i] == 0) continue; // a_i | d: general member misses the vertex
        // tangent monomial x_i^k x_j exists iff a_j = d mod a_i and a_j <= d
        std::optional<OrbifoldPoint> type;
        for (std::size_t j = 0; j < 5; ++j) {
            if (j == i || a[j] > d || a[j] % a[i] != d % a[i]) continue;
            std::int64_t w[3];
            int n = 0;
            for (std::size_t k = 0; k < 5; ++k)
                if (k != i && k != j) w[n++] = a[k];
            OrbifoldPoint p = normalize_cyclic_quotient(w[0], w[1], w[2], a[i]);
            if (type && *type != p)
                fail(Errc::ambiguous_type,
                     "tangent indices disagree at the weight-" + std::to_string(a[i]) +
                         " vertex: " + to_string(*type) + " vs " + to_string(p));
            if (!type) type = p; // smallest valid j decides; later ones only checked
        }
        if (!type)
            fail(Errc::not_quasi_smooth_at_vertex,
                 "no tangent monomial x^k x_j at the weight-" + std::to_string(a[i]) +
                     " vertex of degree " + std::to_string(d));
        out.push_back(*type);
    }
    return out;
}

std::vector<std::pair<OrbifoldPoint, std::int64_t>>
edge_singularities(const WeightedHypersurface& x) {
    const auto& a = x.weights();
    const std::int64_t d = x.degree();
    std::vector<std::pair<OrbifoldPoint, std::int64_t>> out;
    for (std::size_t i = 0; i < 5; ++i) {
        for (std::size_t j = i + 1; j < 5; ++j) {
            std::int64_t r = std::gcd(a[i], a[j]);
            if (r <= 1) continue;
            std::int64_t w[3];
            int n = 0;
            for (std::size_t k = 0; k < 5; ++k)
                if (k != i && k != j) w[n++] = a[k];
            const std::string edge = "edge (" + std::to_string(a[i]) + "," +
                                     std::to_string(a[j]) + ")";
            for (std::int64_t wk : w)
                if (std::gcd(r, wk) != 1)
                    fail(Errc::unsupported,
                         edge + ": stabilizer " + std::to_string(r) +
                             " shares a factor with off-edge weight " + std::to_string(wk));

            // binary monomials x_i^p x_j^q of degree d
            std::int64_t q_min = -1, q_max = -1;
            for (std::int64_t q = 0; q * a[j] <= d; ++q) {
                if ((d - q * a[j]) % a[i] != 0) continue;
                if (q_min < 0) q_min = q;
                q_max = q;
            }
            if (q_min < 0)
                fail(Errc::edge_contained,
                     edge + " lies inside the hypersurface (no binary monomial of degree " +
                         std::to_string(d) + ")");
            if ((q_max - q_min) * r % a[i] != 0)
                fail(Errc::non_integral_orbit_count,
                     edge + ": (q_max - q_min) r / a_i = " + std::to_string(q_max - q_min) +
                         " * " + std::to_string(r) + " / " + std::to_string(a[i]));
            std::int64_t count = (q_max - q_min) * r / a[i];
            if (count == 0) continue;
            out.emplace_back(normalize_cyclic_quotient(w[0], w[1], w[2], r), count);
        }
    }
    return out;
}

Basket basket_of(const WeightedHypersurface& x) {
    Basket basket;
    for (OrbifoldPoint p : vertex_singularities(x)) basket.add(p);
    for (const auto& [p, count] : edge_singularities(x))
        for (std::int64_t c = 0; c < count; ++c) basket.add(p);
    return basket;
}

} // namespace orbifano
