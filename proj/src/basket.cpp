#include "orbifano/basket.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

namespace orbifano {

std::string to_string(OrbifoldPoint p) {
    return std::to_string(p.b) + "/" + std::to_string(p.r);
}

Basket::Basket(std::vector<OrbifoldPoint> points) : points_(std::move(points)) {
    std::sort(points_.begin(), points_.end());
}

void Basket::add(OrbifoldPoint p) {
    points_.insert(std::upper_bound(points_.begin(), points_.end(), p), p);
}

std::strong_ordering Basket::operator<=>(const Basket& o) const {
    return std::lexicographical_compare_three_way(points_.begin(), points_.end(),
                                                  o.points_.begin(), o.points_.end());
}

std::string to_string(const Basket& basket) {
    std::string out;
    for (const OrbifoldPoint& p : basket.points()) {
        if (!out.empty()) out += ",";
        out += to_string(p);
    }
    return out;
}

Basket parse_basket(std::string_view text) {
    std::vector<OrbifoldPoint> points;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string_view raw = text.substr(pos, comma == std::string_view::npos
                                                    ? std::string_view::npos
                                                    : comma - pos);
        std::string token;
        for (char c : raw)
            if (!std::isspace(static_cast<unsigned char>(c))) token += c;

        if (!token.empty()) {
            auto reject = [&] {
                fail(Errc::bad_argument, "basket token '" + token + "' is not 'b/r'");
            };
            std::size_t slash = token.find('/');
            if (slash == std::string_view::npos) reject();
            std::int64_t b = 0, r = 0;
            try {
                std::size_t used = 0;
                b = std::stoll(token.substr(0, slash), &used);
                if (used != slash) reject();
                r = std::stoll(token.substr(slash + 1), &used);
                if (used != token.size() - slash - 1) reject();
            } catch (const std::logic_error&) {
                reject();
            }
            try {
                points.push_back(canonical_pair(b, r));
            } catch (const Error& e) {
                fail(e.code(), "basket token '" + token + "': " + e.what());
            }
        } else if (!(pos == 0 && comma == std::string_view::npos)) {
            // empty token between commas; only the fully empty string is the
            // empty basket
            fail(Errc::bad_argument, "empty basket token at position " + std::to_string(pos));
        }
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return Basket(std::move(points));
}

OrbifoldPoint canonical_pair(std::int64_t b, std::int64_t r) {
    if (r < 2) fail(Errc::bad_argument, "index r must be >= 2, got " + std::to_string(r));
    std::int64_t bp = b % r;
    if (bp < 0) bp += r;
    if (bp == 0 || std::gcd(bp, r) != 1)
        fail(Errc::non_coprime, "b = " + std::to_string(b) + " is not coprime to r = " +
                                    std::to_string(r));
    return OrbifoldPoint{std::min(bp, r - bp), r};
}

OrbifoldPoint normalize_cyclic_quotient(std::int64_t w1, std::int64_t w2, std::int64_t w3,
                                        std::int64_t r) {
    if (r < 2) fail(Errc::bad_argument, "index r must be >= 2, got " + std::to_string(r));
    auto mod = [r](std::int64_t x) {
        std::int64_t m = x % r;
        return m < 0 ? m + r : m;
    };
    auto mulmod = [r](std::int64_t a, std::int64_t b) {
        return static_cast<std::int64_t>(static_cast<__int128>(a) * b % r);
    };
    const std::int64_t w[3] = {mod(w1), mod(w2), mod(w3)};
    const std::string triple = "(" + std::to_string(w1) + "," + std::to_string(w2) + "," +
                               std::to_string(w3) + ") mod " + std::to_string(r);

    // Exhaustive unit search: r is small, so no shortcuts. For each unit u,
    // try every way of assigning {u w1, u w2, u w3} to the pattern {1, r-1, b}.
    std::optional<OrbifoldPoint> found;
    for (std::int64_t u = 1; u < r; ++u) {
        if (std::gcd(u, r) != 1) continue;
        std::int64_t s[3] = {mulmod(u, w[0]), mulmod(u, w[1]), mulmod(u, w[2])};
        for (int i = 0; i < 3; ++i) {
            if (s[i] != 1) continue;
            for (int j = 0; j < 3; ++j) {
                if (j == i || s[j] != r - 1) continue;
                std::int64_t b = s[3 - i - j];
                if (b == 0 || std::gcd(b, r) != 1) continue;
                OrbifoldPoint p = canonical_pair(b, r);
                if (found && *found != p)
                    fail(Errc::ambiguous_type,
                         "units disagree on the type of " + triple + ": " + to_string(*found) +
                             " vs " + to_string(p));
                found = p;
            }
        }
    }
    if (!found)
        fail(Errc::not_terminal_type,
             "no unit scales " + triple + " into the pattern {1, r-1, b}");
    return *found;
}

Rational gamma_of(OrbifoldPoint p) {
    return Rational(p.r) - Rational(1, p.r);
}

Rational l_contribution(OrbifoldPoint p, std::int64_t n) {
    if (n < 1) fail(Errc::bad_argument, "l_contribution needs n >= 1");
    Int numerator = 0;
    for (std::int64_t j = 1; j < n; ++j) {
        // smallest non-negative residue of j*b mod r
        auto res = static_cast<std::int64_t>(static_cast<__int128>(j % p.r) * p.b % p.r);
        numerator += Int(res) * (p.r - res);
    }
    return Rational(numerator, Int(2) * p.r);
}

} // namespace orbifano
