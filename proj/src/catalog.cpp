#include "orbifano/catalog.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace orbifano {

namespace {

using nlohmann::json;

[[noreturn]] void malformed(const std::string& where, const std::string& what) {
    fail(Errc::malformed_entry, where + ": " + what);
}

std::int64_t require_positive_int(const json& j, const std::string& where,
                                  const std::string& field) {
    if (!j.is_number_integer())
        malformed(where, "field '" + field + "' must be an integer");
    auto v = j.get<std::int64_t>();
    if (v < 1) malformed(where, "field '" + field + "' must be positive");
    return v;
}

CatalogEntry parse_entry(const json& j, std::size_t index) {
    std::string where = "entry " + std::to_string(index);
    if (!j.is_object()) malformed(where, "not a JSON object");
    if (!j.contains("name") || !j.at("name").is_string())
        malformed(where, "missing string field 'name'");
    CatalogEntry entry;
    entry.name = j.at("name").get<std::string>();
    where += " ('" + entry.name + "')";

    static const std::set<std::string> known = {"name",          "weights",
                                                "degree",        "expected_volume",
                                                "expected_basket", "expected_genus_prefix"};
    for (const auto& [key, value] : j.items())
        if (!known.count(key)) malformed(where, "unknown field '" + key + "'");

    if (!j.contains("weights") || !j.at("weights").is_array())
        malformed(where, "missing array field 'weights'");
    const json& w = j.at("weights");
    if (w.size() != 5)
        malformed(where, "field 'weights' must hold exactly 5 integers, got " +
                             std::to_string(w.size()));
    for (std::size_t i = 0; i < 5; ++i)
        entry.weights[i] = require_positive_int(w[i], where, "weights[" + std::to_string(i) + "]");

    if (!j.contains("degree")) malformed(where, "missing field 'degree'");
    entry.degree = require_positive_int(j.at("degree"), where, "degree");

    if (j.contains("expected_volume")) {
        if (!j.at("expected_volume").is_string())
            malformed(where, "field 'expected_volume' must be a \"p/q\" string");
        try {
            entry.expected_volume = Rational::parse(j.at("expected_volume").get<std::string>());
        } catch (const Error& e) {
            malformed(where, std::string("field 'expected_volume': ") + e.what());
        }
    }
    if (j.contains("expected_basket")) {
        if (!j.at("expected_basket").is_string())
            malformed(where, "field 'expected_basket' must be a \"b/r,...\" string");
        try {
            entry.expected_basket = parse_basket(j.at("expected_basket").get<std::string>());
        } catch (const Error& e) {
            malformed(where, std::string("field 'expected_basket': ") + e.what());
        }
    }
    if (j.contains("expected_genus_prefix")) {
        const json& g = j.at("expected_genus_prefix");
        if (!g.is_array() || g.empty())
            malformed(where, "field 'expected_genus_prefix' must be a non-empty array");
        std::vector<Int> prefix;
        for (const json& v : g) {
            if (!v.is_number_integer() || v.get<std::int64_t>() < 0)
                malformed(where, "field 'expected_genus_prefix' must hold non-negative integers");
            prefix.emplace_back(v.get<std::int64_t>());
        }
        entry.expected_genus_prefix = std::move(prefix);
    }
    return entry;
}

} // namespace

std::vector<CatalogEntry> parse_catalog_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        fail(Errc::malformed_entry, std::string("catalog is not valid JSON: ") + e.what());
    }
    if (!doc.is_array()) fail(Errc::malformed_entry, "catalog must be a JSON array of entries");

    std::vector<CatalogEntry> entries;
    std::set<std::string> names;
    for (std::size_t i = 0; i < doc.size(); ++i) {
        CatalogEntry entry = parse_entry(doc[i], i);
        if (!names.insert(entry.name).second)
            fail(Errc::duplicate_name, "catalog entry name '" + entry.name + "' appears twice");
        entries.push_back(std::move(entry));
    }
    return entries;
}

std::vector<CatalogEntry> parse_catalog(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(Errc::io_failure, "cannot open catalog file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) fail(Errc::io_failure, "error reading catalog file '" + path + "'");
    return parse_catalog_text(buffer.str());
}

VerifyReport verify_entry(const CatalogEntry& entry, std::int64_t order) {
    VerifyReport report;
    auto check = [&report](const std::string& name, bool pass, std::string detail) {
        report.checks.push_back({name, pass, std::move(detail)});
    };

    std::optional<WeightedHypersurface> x;
    try {
        x.emplace(entry.weights, entry.degree);
        check("well_formed", true, "");
    } catch (const Error& e) {
        check("well_formed", false, e.tagged());
        report.consistency.entry_name = entry.name;
        report.consistency.checked_order = order;
        report.consistency.failures.push_back(e.tagged());
    }

    if (x) {
        report.consistency = cross_check(*x, order);
        report.consistency.entry_name = entry.name;

        if (report.consistency.volume) {
            std::string got = report.consistency.volume->str();
            if (entry.expected_volume) {
                bool ok = *report.consistency.volume == *entry.expected_volume;
                check("volume", ok,
                      ok ? got : got + " (expected " + entry.expected_volume->str() + ")");
            } else {
                check("volume", true, got);
            }
        } else {
            check("volume", false, "extraction failed");
        }

        if (report.consistency.basket) {
            std::string got = to_string(*report.consistency.basket);
            if (entry.expected_basket) {
                bool ok = *report.consistency.basket == *entry.expected_basket;
                check("basket", ok,
                      ok ? got : got + " (expected " + to_string(*entry.expected_basket) + ")");
            } else {
                check("basket", true, got);
            }
        } else {
            check("basket", false, "extraction failed");
        }

        if (entry.expected_genus_prefix) {
            const auto& prefix = *entry.expected_genus_prefix;
            std::string detail;
            bool ok = false;
            if (report.consistency.volume && report.consistency.basket) {
                try {
                    auto seq = genus_sequence(
                        {*report.consistency.volume, *report.consistency.basket},
                        static_cast<std::int64_t>(prefix.size()) - 1);
                    ok = seq == prefix;
                    for (std::size_t i = 0; i < seq.size(); ++i)
                        detail += (i ? "," : "") + seq[i].str();
                    if (!ok) detail += " (does not match expected prefix)";
                } catch (const Error& e) {
                    detail = e.tagged();
                }
            } else {
                detail = "extraction failed";
            }
            check("genus_prefix", ok, detail);
        }

        {
            std::string detail = "to order " + std::to_string(order);
            if (report.consistency.first_mismatch) {
                const auto& mm = *report.consistency.first_mismatch;
                detail = "first mismatch at m=" + std::to_string(mm.m) + ": rr=" +
                         mm.rr_value.str() + " hilbert=" + mm.hilbert_value.str();
            } else if (!report.consistency.failures.empty()) {
                detail = report.consistency.failures.front();
            }
            check("series_match", report.consistency.match, detail);
        }

        // reported, not asserted: the deficit is data about the entry
        try {
            RelationProbe probe = relation_probe(*x, entry.degree);
            report.consistency.relation_deficits.emplace_back(entry.degree, probe);
            check("relation_probe", true,
                  "d=" + std::to_string(entry.degree) + ": monomials=" + probe.monomials.str() +
                      " h0=" + probe.h0.str() + " deficit=" + probe.deficit.str());
        } catch (const Error& e) {
            check("relation_probe", false, e.tagged());
        }
    }

    report.pass = true;
    for (const EntryCheck& c : report.checks) report.pass = report.pass && c.pass;
    return report;
}

} // namespace orbifano
