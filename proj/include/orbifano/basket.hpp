/**
 * @file basket.hpp
 * @brief Reid baskets: terminal cyclic quotient types 1/r(1,-1,b) and their
 *        local Riemann-Roch contributions.
 */
#ifndef ORBIFANO_BASKET_HPP
#define ORBIFANO_BASKET_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "orbifano/rational.hpp"

namespace orbifano {

/// A virtual cyclic quotient point of type 1/r(1,-1,b), stored canonically:
/// r >= 2, gcd(b, r) = 1 and 0 < b <= r/2 (b and r-b name the same type).
/// Construct through canonical_pair or normalize_cyclic_quotient.
struct OrbifoldPoint {
    std::int64_t b = 1;
    std::int64_t r = 2;

    bool operator==(const OrbifoldPoint&) const = default;
    // canonical order: by r, then b
    std::strong_ordering operator<=>(const OrbifoldPoint& o) const {
        if (auto c = r <=> o.r; c != 0) return c;
        return b <=> o.b;
    }
};

std::string to_string(OrbifoldPoint p); // "b/r"

/// Multiset of orbifold points kept in canonical (r, b) order, so equality
/// is structural.
class Basket {
public:
    Basket() = default;
    explicit Basket(std::vector<OrbifoldPoint> points);

    void add(OrbifoldPoint p);

    const std::vector<OrbifoldPoint>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }

    bool operator==(const Basket&) const = default;
    // lexicographic on the canonical point sequence; a deterministic total
    // order for result listings
    std::strong_ordering operator<=>(const Basket& o) const;

private:
    std::vector<OrbifoldPoint> points_;
};

/// "b/r,b/r,..." with canonical order; empty basket renders as "".
std::string to_string(const Basket& basket);

/// Parses comma-separated "b/r" tokens (whitespace ignored; "" is the empty
/// basket). Throws BadArgument or NonCoprime naming the offending token.
Basket parse_basket(std::string_view text);

/// Canonical representative of the type 1/r(1,-1,b): reduces b mod r and
/// folds b <-> r-b. Throws NonCoprime when gcd(b mod r, r) != 1 or b = 0 mod r.
OrbifoldPoint canonical_pair(std::int64_t b, std::int64_t r);

/// Identifies the quotient type of the action with weights (w1, w2, w3) mod r
/// by searching all units u in (Z/r)^* for a scaling with
/// {u w1, u w2, u w3} = {1, r-1, b} mod r. Throws NotTerminalType when no unit
/// works (in particular when some w_i = 0 mod r) and AmbiguousType when two
/// units disagree on the canonical b (tripwire; never fires for quasi-smooth
/// inputs).
OrbifoldPoint normalize_cyclic_quotient(std::int64_t w1, std::int64_t w2, std::int64_t w3,
                                        std::int64_t r);

/// Search weight r - 1/r of a point; the basket enumeration budget.
Rational gamma_of(OrbifoldPoint p);

/// sum_{j=1}^{n-1} jb~ (r - jb~) / (2r) with jb~ the smallest non-negative
/// residue of j*b mod r. n = 1 gives 0.
Rational l_contribution(OrbifoldPoint p, std::int64_t n);

} // namespace orbifano

#endif
