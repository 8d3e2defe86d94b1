/**
 * @file catalog.hpp
 * @brief Hypersurface family catalogs (JSON) and the end-to-end verify
 *        workflow over their entries.
 */
#ifndef ORBIFANO_CATALOG_HPP
#define ORBIFANO_CATALOG_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orbifano/consistency.hpp"

namespace orbifano {

struct CatalogEntry {
    std::string name;
    std::array<std::int64_t, 5> weights{};
    std::int64_t degree = 0;
    std::optional<Rational> expected_volume;
    std::optional<Basket> expected_basket;
    std::optional<std::vector<Int>> expected_genus_prefix;
};

/// Parses a catalog file: a JSON array of objects with keys "name",
/// "weights" (5 positive integers), "degree", and optional "expected_volume"
/// ("p/q" string), "expected_basket" ("b/r,..." string, "" = empty),
/// "expected_genus_prefix" (integer array). Throws IoFailure when the file
/// cannot be read, MalformedEntry with entry/field context, DuplicateName.
std::vector<CatalogEntry> parse_catalog(const std::string& path);

/// Same, from an in-memory document.
std::vector<CatalogEntry> parse_catalog_text(const std::string& text);

/// One row of a verify report: a named check with its outcome. Informational
/// rows (relation probe values) carry pass = true unless the computation
/// itself failed.
struct EntryCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyReport {
    ConsistencyReport consistency;
    std::vector<EntryCheck> checks;
    bool pass = false; // conjunction of all checks
};

/// Runs the full battery on one entry: well-formedness, volume, basket,
/// Riemann-Roch vs Hilbert cross-check to order N, relation probe at the
/// hypersurface degree, and comparisons against every expected_* field
/// present. Failures are report content; this never throws.
VerifyReport verify_entry(const CatalogEntry& entry, std::int64_t order);

} // namespace orbifano

#endif
