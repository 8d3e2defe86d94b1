#include "orbifano/cli.hpp"

#include <cstdlib>
#include <functional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "orbifano/catalog.hpp"
#include "orbifano/search.hpp"

namespace orbifano::cli {

namespace {

using nlohmann::json;

std::int64_t default_order() {
    if (const char* env = std::getenv("ORBIFANO_TRUNCATE")) {
        try {
            std::size_t used = 0;
            std::int64_t n = std::stoll(env, &used);
            if (used == std::string(env).size() && n >= 0) return n;
        } catch (const std::logic_error&) {
        }
        fail(Errc::bad_argument,
             "ORBIFANO_TRUNCATE must be a non-negative integer, got '" + std::string(env) + "'");
    }
    return kDefaultTruncationOrder;
}

std::vector<std::int64_t> parse_weights(const std::string& text) {
    std::vector<std::int64_t> weights;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) {
        try {
            std::size_t used = 0;
            std::int64_t w = std::stoll(token, &used);
            if (used != token.size() || w < 1) throw std::invalid_argument(token);
            weights.push_back(w);
        } catch (const std::logic_error&) {
            fail(Errc::bad_argument, "weight token '" + token + "' is not a positive integer");
        }
    }
    if (weights.empty()) fail(Errc::bad_argument, "empty weight list");
    return weights;
}

std::array<std::int64_t, 5> parse_weights5(const std::string& text) {
    std::vector<std::int64_t> w = parse_weights(text);
    if (w.size() != 5)
        fail(Errc::bad_argument,
             "expected exactly 5 comma-separated weights, got " + std::to_string(w.size()));
    return {w[0], w[1], w[2], w[3], w[4]};
}

json weights_json(std::span<const std::int64_t> w) {
    json a = json::array();
    for (std::int64_t v : w) a.push_back(v);
    return a;
}

std::string join_weights(const json& a) {
    std::string s;
    for (const auto& v : a) s += (s.empty() ? "" : ",") + v.dump();
    return s;
}

// ---- human renderers: one per subcommand, reading only the JSON payload ----

std::string render_rr(const json& j) {
    std::ostringstream os;
    if (j.contains("m")) {
        os << j.at("h0").get<std::string>() << "\n";
    } else {
        for (const auto& row : j.at("genus_sequence"))
            os << "h^0(-" << row.at("m").get<std::int64_t>() << "K) = "
               << row.at("h0").get<std::string>() << "\n";
    }
    return os.str();
}

std::string render_hilbert(const json& j) {
    std::ostringstream os;
    const auto& coeffs = j.at("coefficients");
    for (std::size_t m = 0; m < coeffs.size(); ++m)
        os << m << "\t" << coeffs[m].get<std::string>() << "\n";
    return os.str();
}

std::string render_basket(const json& j) {
    std::ostringstream os;
    os << "basket " << j.at("basket").get<std::string>() << "\n"
       << "volume " << j.at("volume").get<std::string>() << "\n"
       << "gamma_sum " << j.at("gamma_sum").get<std::string>() << "\n";
    return os.str();
}

std::string render_count(const json& j) {
    return j.at("count").get<std::string>() + "\n";
}

std::string render_verify(const json& j) {
    std::ostringstream os;
    for (const auto& entry : j.at("entries")) {
        os << "== " << entry.at("name").get<std::string>() << ": weights ("
           << join_weights(entry.at("weights")) << "), degree "
           << entry.at("degree").get<std::int64_t>() << "\n";
        for (const auto& c : entry.at("checks")) {
            os << "   " << c.at("name").get<std::string>() << ": "
               << (c.at("pass").get<bool>() ? "PASS" : "FAIL");
            if (const auto& d = c.at("detail").get<std::string>(); !d.empty()) os << "  " << d;
            os << "\n";
        }
        os << "   result: " << (entry.at("pass").get<bool>() ? "PASS" : "FAIL") << "\n";
    }
    os << j.at("passed").get<std::int64_t>() << "/" << j.at("total").get<std::int64_t>()
       << " entries pass\n";
    return os.str();
}

std::string render_search(const json& j) {
    std::ostringstream os;
    os << "search volume=" << j.at("volume").get<std::string>() << " gamma_bound<"
       << j.at("gamma_bound").get<std::string>() << " depth=" << j.at("depth").get<std::int64_t>()
       << "\n";
    os << "found " << j.at("count").get<std::int64_t>() << " basket(s)\n";
    for (const auto& row : j.at("baskets"))
        os << "  {" << row.at("basket").get<std::string>() << "}  h0(-K)="
           << row.at("h0").get<std::string>() << "  gamma_sum="
           << row.at("gamma_sum").get<std::string>() << "\n";
    os << "unique: " << (j.at("unique").get<bool>() ? "yes" : "no") << "\n";
    return os.str();
}

std::string render(const std::string& command, const json& payload) {
    if (command == "rr") return render_rr(payload);
    if (command == "hilbert") return render_hilbert(payload);
    if (command == "basket") return render_basket(payload);
    if (command == "count") return render_count(payload);
    if (command == "verify") return render_verify(payload);
    if (command == "search") return render_search(payload);
    fail(Errc::bad_argument, "unknown command '" + command + "'");
}

void emit(std::ostream& out, const std::string& command, const json& payload, bool as_json) {
    if (as_json)
        out << payload.dump(2) << "\n";
    else
        out << render(command, payload);
}

json verify_report_json(const CatalogEntry& entry, const VerifyReport& report) {
    json e;
    e["name"] = entry.name;
    e["weights"] = weights_json(entry.weights);
    e["degree"] = entry.degree;
    json checks = json::array();
    for (const EntryCheck& c : report.checks)
        checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    e["checks"] = checks;
    if (report.consistency.volume) e["volume"] = report.consistency.volume->str();
    if (report.consistency.basket) e["basket"] = to_string(*report.consistency.basket);
    e["match"] = report.consistency.match;
    e["checked_order"] = report.consistency.checked_order;
    if (report.consistency.first_mismatch) {
        const auto& mm = *report.consistency.first_mismatch;
        e["first_mismatch"] = {
            {"m", mm.m}, {"rr", mm.rr_value.str()}, {"hilbert", mm.hilbert_value.str()}};
    }
    if (!report.consistency.relation_deficits.empty()) {
        const auto& [degree, probe] = report.consistency.relation_deficits.front();
        e["relation_probe"] = {{"degree", degree},
                               {"monomials", probe.monomials.str()},
                               {"h0", probe.h0.str()},
                               {"deficit", probe.deficit.str()}};
    }
    e["pass"] = report.pass;
    return e;
}

struct CommandContext {
    std::ostream& out;
    std::ostream& err;
    int exit_code = kExitOk;
};

void setup_rr(CLI::App& app, CommandContext& ctx) {
    auto* cmd = app.add_subcommand("rr", "anti-plurigenera from volume and basket");
    auto volume_text = std::make_shared<std::string>();
    auto basket_text = std::make_shared<std::string>();
    auto m = std::make_shared<std::int64_t>(-1);
    auto upto = std::make_shared<std::int64_t>(-1);
    auto as_json = std::make_shared<bool>(false);
    cmd->add_option("--volume", *volume_text, "(-K)^3 as p/q")->required();
    cmd->add_option("--basket", *basket_text, "basket as b/r,... ('' = empty)");
    auto* opt_m = cmd->add_option("--m", *m, "single multiple m");
    auto* opt_upto = cmd->add_option("--upto", *upto, "all multiples 0..N");
    opt_m->excludes(opt_upto);
    opt_upto->excludes(opt_m);
    cmd->add_flag("--json", *as_json, "machine-readable output");

    cmd->callback([&ctx, volume_text, basket_text, m, upto, as_json, opt_m, opt_upto] {
        FanoNumericalType t{Rational::parse(*volume_text), parse_basket(*basket_text)};
        json j;
        j["volume"] = t.volume.str();
        j["basket"] = to_string(t.basket);
        if (opt_m->count() > 0) {
            if (*m < 0) fail(Errc::bad_argument, "--m must be >= 0");
            j["m"] = *m;
            j["h0"] = plurigenus(t, *m).str();
        } else {
            std::int64_t order = opt_upto->count() > 0 ? *upto : default_order();
            if (order < 0) fail(Errc::bad_argument, "--upto must be >= 0");
            j["upto"] = order;
            json rows = json::array();
            std::vector<Int> seq = genus_sequence(t, order);
            for (std::size_t i = 0; i < seq.size(); ++i)
                rows.push_back({{"m", static_cast<std::int64_t>(i)}, {"h0", seq[i].str()}});
            j["genus_sequence"] = rows;
        }
        emit(ctx.out, "rr", j, *as_json);
    });
}

void setup_hilbert(CLI::App& app, CommandContext& ctx) {
    auto* cmd = app.add_subcommand("hilbert", "Hilbert series of a weighted hypersurface");
    auto weights_text = std::make_shared<std::string>();
    auto degree = std::make_shared<std::int64_t>(0);
    auto truncate = std::make_shared<std::int64_t>(-1);
    auto as_json = std::make_shared<bool>(false);
    cmd->add_option("--weights", *weights_text, "5 comma-separated weights")->required();
    cmd->add_option("--degree", *degree, "hypersurface degree")->required();
    auto* opt_n = cmd->add_option("--truncate", *truncate, "truncation order N");
    cmd->add_flag("--json", *as_json, "machine-readable output");

    cmd->callback([&ctx, weights_text, degree, truncate, as_json, opt_n] {
        WeightedHypersurface x(parse_weights5(*weights_text), *degree);
        std::int64_t order = opt_n->count() > 0 ? *truncate : default_order();
        if (order < 0) fail(Errc::bad_argument, "--truncate must be >= 0");
        TruncatedSeries s = hypersurface_series(x, order);
        json j;
        j["weights"] = weights_json(x.weights());
        j["degree"] = x.degree();
        j["order"] = order;
        json coeffs = json::array();
        for (const Int& c : s.coefficients()) coeffs.push_back(c.str());
        j["coefficients"] = coeffs;
        emit(ctx.out, "hilbert", j, *as_json);
    });
}

void setup_basket(CLI::App& app, CommandContext& ctx) {
    auto* cmd = app.add_subcommand("basket", "singularity basket of a general member");
    auto weights_text = std::make_shared<std::string>();
    auto degree = std::make_shared<std::int64_t>(0);
    auto as_json = std::make_shared<bool>(false);
    cmd->add_option("--weights", *weights_text, "5 comma-separated weights")->required();
    cmd->add_option("--degree", *degree, "hypersurface degree")->required();
    cmd->add_flag("--json", *as_json, "machine-readable output");

    cmd->callback([&ctx, weights_text, degree, as_json] {
        WeightedHypersurface x(parse_weights5(*weights_text), *degree);
        Basket basket = basket_of(x);
        Rational gamma_sum;
        for (OrbifoldPoint p : basket.points()) gamma_sum += gamma_of(p);
        json j;
        j["weights"] = weights_json(x.weights());
        j["degree"] = x.degree();
        j["basket"] = to_string(basket);
        j["volume"] = volume(x).str();
        j["gamma_sum"] = gamma_sum.str();
        emit(ctx.out, "basket", j, *as_json);
    });
}

void setup_count(CLI::App& app, CommandContext& ctx) {
    auto* cmd = app.add_subcommand("count", "weighted monomial count");
    auto weights_text = std::make_shared<std::string>();
    auto degree = std::make_shared<std::int64_t>(-1);
    auto as_json = std::make_shared<bool>(false);
    cmd->add_option("--weights", *weights_text, "comma-separated weights")->required();
    cmd->add_option("--degree", *degree, "target degree")->required();
    cmd->add_flag("--json", *as_json, "machine-readable output");

    cmd->callback([&ctx, weights_text, degree, as_json] {
        std::vector<std::int64_t> weights = parse_weights(*weights_text);
        json j;
        j["weights"] = weights_json(weights);
        j["degree"] = *degree;
        j["count"] = monomial_count(weights, *degree).str();
        emit(ctx.out, "count", j, *as_json);
    });
}

void setup_verify(CLI::App& app, CommandContext& ctx) {
    auto* cmd = app.add_subcommand("verify", "run all checks over a catalog");
    auto path = std::make_shared<std::string>();
    auto truncate = std::make_shared<std::int64_t>(-1);
    auto as_json = std::make_shared<bool>(false);
    cmd->add_option("--catalog", *path, "catalog JSON file")->required();
    auto* opt_n = cmd->add_option("--truncate", *truncate, "cross-check order N");
    cmd->add_flag("--json", *as_json, "machine-readable output");

    cmd->callback([&ctx, path, truncate, as_json, opt_n] {
        std::vector<CatalogEntry> entries = parse_catalog(*path);
        std::int64_t order = opt_n->count() > 0 ? *truncate : default_order();
        if (order < 0) fail(Errc::bad_argument, "--truncate must be >= 0");
        json j;
        j["catalog"] = *path;
        json rows = json::array();
        std::int64_t passed = 0;
        for (const CatalogEntry& entry : entries) {
            VerifyReport report = verify_entry(entry, order);
            if (report.pass) ++passed;
            rows.push_back(verify_report_json(entry, report));
        }
        j["entries"] = rows;
        j["total"] = static_cast<std::int64_t>(entries.size());
        j["passed"] = passed;
        emit(ctx.out, "verify", j, *as_json);
        if (passed != static_cast<std::int64_t>(entries.size())) ctx.exit_code = kExitCheckFailed;
    });
}

void setup_search(CLI::App& app, CommandContext& ctx) {
    auto* cmd = app.add_subcommand("search", "enumerate baskets compatible with a volume");
    auto volume_text = std::make_shared<std::string>();
    auto gamma_text = std::make_shared<std::string>("24");
    auto depth = std::make_shared<std::int64_t>(20);
    auto as_json = std::make_shared<bool>(false);
    cmd->add_option("--volume", *volume_text, "(-K)^3 as p/q")->required();
    cmd->add_option("--gamma-bound", *gamma_text, "strict bound on sum(r - 1/r), default 24");
    cmd->add_option("--depth", *depth, "plurigenus integrality depth M, default 20");
    cmd->add_flag("--json", *as_json, "machine-readable output");

    cmd->callback([&ctx, volume_text, gamma_text, depth, as_json] {
        SearchConfig config;
        config.volume = Rational::parse(*volume_text);
        config.gamma_bound = Rational::parse(*gamma_text);
        config.integrality_depth = *depth;
        std::vector<Basket> baskets = enumerate_baskets(config);

        json j;
        j["volume"] = config.volume.str();
        j["gamma_bound"] = config.gamma_bound.str();
        j["depth"] = config.integrality_depth;
        j["count"] = static_cast<std::int64_t>(baskets.size());
        j["unique"] = baskets.size() == 1;
        json rows = json::array();
        for (const Basket& basket : baskets) {
            Rational gamma_sum;
            for (OrbifoldPoint p : basket.points()) gamma_sum += gamma_of(p);
            rows.push_back({{"basket", to_string(basket)},
                            {"h0", plurigenus({config.volume, basket}, 1).str()},
                            {"gamma_sum", gamma_sum.str()}});
        }
        j["baskets"] = rows;
        emit(ctx.out, "search", j, *as_json);
    });
}

} // namespace

std::string render_human_from_json(const std::string& command, const std::string& json_text) {
    return render(command, json::parse(json_text));
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact orbifold Riemann-Roch for terminal Fano 3-folds"};
    app.name("orbifano");
    app.require_subcommand(1);
    CommandContext ctx{out, err};
    setup_rr(app, ctx);
    setup_hilbert(app, ctx);
    setup_basket(app, ctx);
    setup_count(app, ctx);
    setup_verify(app, ctx);
    setup_search(app, ctx);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        err << e.tagged() << "\n";
        // input that never parsed is a usage error; domain errors on
        // syntactically valid input are check failures
        switch (e.code()) {
            case Errc::bad_argument:
            case Errc::zero_denominator:
            case Errc::non_coprime: // only reachable from basket token parsing
            case Errc::io_failure:
            case Errc::malformed_entry:
            case Errc::duplicate_name:
                return kExitUsage;
            default:
                return kExitCheckFailed;
        }
    }
    return ctx.exit_code;
}

} // namespace orbifano::cli
