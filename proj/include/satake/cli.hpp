#pragma once

// Command-line front end. `run` executes a parsed RunConfig; `main_entry`
// parses arguments with CLI11 first. Exit codes: 0 all checks pass,
// 1 a checked invariant failed, 2 usage error.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "satake/verify.hpp"

namespace satake::cli {

enum class Command { kostka, stalks, hilbert_check, pairing_check, centralizer_check, tensor, verify_all };
enum class OutputFormat { json, csv, pretty };

class UsageError : public Error {
public:
    using Error::Error;
};

struct RunConfig {
    Command command = Command::verify_all;
    std::optional<std::string> family;  // "lorentz" or "octonionic"
    std::optional<int> n;
    std::optional<long> lmax;
    std::optional<OutputFormat> format;
    std::uint64_t seed = 1;
    DegreeConvention convention = DegreeConvention::perverse;
    std::size_t samples = 100;
    std::optional<std::string> type;
    std::optional<std::string> lambda;
    std::optional<std::string> mu;
    std::optional<std::string> shape;
    std::optional<std::string> content;
};

inline IntVector parse_int_list(const std::string& text, const std::string& what)
{
    IntVector out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        long v = 0;
        try {
            v = std::stol(item, &used);
        } catch (const std::exception&) {
            throw UsageError(what + ": '" + text + "' is not a comma-separated integer list");
        }
        if (used != item.size())
            throw UsageError(what + ": '" + text + "' is not a comma-separated integer list");
        out.push_back(v);
    }
    if (out.empty())
        throw UsageError(what + " is empty");
    return out;
}

inline std::optional<RealFormFamily> resolve_family(const RunConfig& cfg)
{
    if (!cfg.family) {
        if (cfg.n)
            throw UsageError("--n requires --family lorentz");
        return std::nullopt;
    }
    if (*cfg.family == "lorentz") {
        if (!cfg.n)
            throw UsageError("--family lorentz requires --n");
        if (*cfg.n < 2)
            throw UsageError("--n must be at least 2");
        return RealFormFamily::lorentz(*cfg.n);
    }
    if (*cfg.family == "octonionic") {
        if (cfg.n)
            throw UsageError("--n does not apply to the octonionic family");
        return RealFormFamily::octonionic();
    }
    throw UsageError("unknown family '" + *cfg.family + "' (expected lorentz or octonionic)");
}

inline RealFormFamily require_family(const RunConfig& cfg)
{
    auto f = resolve_family(cfg);
    if (!f)
        throw UsageError("this command requires --family");
    return *f;
}

inline std::vector<RealFormFamily> families_or_all(const RunConfig& cfg)
{
    auto f = resolve_family(cfg);
    return f ? std::vector<RealFormFamily>{*f} : all_families();
}

inline OutputFormat format_or(const RunConfig& cfg, OutputFormat fallback, bool csv_allowed)
{
    const OutputFormat f = cfg.format.value_or(fallback);
    if (f == OutputFormat::csv && !csv_allowed)
        throw UsageError("--format csv is not available for this command");
    return f;
}

inline long sweep_bound(const RunConfig& cfg, long fallback)
{
    const long b = cfg.lmax.value_or(fallback);
    if (b < 0)
        throw UsageError("sweep bounds must be nonnegative");
    return b;
}

inline void print_status(std::ostream& out, const CheckResult& r)
{
    out << (r.passed ? "PASS " : "FAIL ") << r.name;
    if (!r.detail.empty())
        out << " (" << r.detail << ")";
    out << '\n';
}

inline nlohmann::json checks_json(const std::vector<CheckResult>& results)
{
    nlohmann::json checks = nlohmann::json::array();
    nlohmann::json failures = nlohmann::json::array();
    for (const auto& r : results) {
        checks.push_back({{"name", r.name}, {"status", r.passed ? "PASS" : "FAIL"}, {"detail", r.detail}});
        if (!r.passed)
            failures.push_back(r.name);
    }
    return {{"checks", checks}, {"failures", failures}, {"passed", failures.empty()}};
}

inline int emit_checks(const std::vector<CheckResult>& results, OutputFormat fmt, std::ostream& out)
{
    const bool ok = std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
    if (fmt == OutputFormat::json) {
        out << checks_json(results).dump(2) << '\n';
    } else {
        long failed = 0;
        for (const auto& r : results) {
            print_status(out, r);
            failed += r.passed ? 0 : 1;
        }
        out << "summary: " << results.size() - failed << " passed, " << failed << " failed\n";
    }
    return ok ? 0 : 1;
}

namespace detail {

inline int run_kostka(const RunConfig& cfg, std::ostream& out)
{
    const OutputFormat fmt = format_or(cfg, OutputFormat::pretty, false);
    nlohmann::json j;
    QPolynomial k;
    if (cfg.shape || cfg.content) {
        if (!cfg.shape || !cfg.content || cfg.type || cfg.lambda || cfg.mu)
            throw UsageError("kostka takes either --shape and --content, or --type, --lambda and --mu");
        const Partition shape = parse_int_list(*cfg.shape, "--shape");
        const Partition content = parse_int_list(*cfg.content, "--content");
        k = kostka_charge(shape, content);
        j = {{"shape", shape}, {"content", content}};
    } else {
        if (!cfg.type || !cfg.lambda || !cfg.mu)
            throw UsageError("kostka requires --type, --lambda and --mu");
        const RootSystem sys(parse_cartan_type(*cfg.type));
        const Weight lam = sys.weight(parse_int_list(*cfg.lambda, "--lambda"));
        const Weight mu = sys.weight(parse_int_list(*cfg.mu, "--mu"));
        k = kostka_foulkes(sys, lam, mu);
        j = {{"type", sys.type().name()}, {"lambda", lam.coords}, {"mu", mu.coords}};
    }
    if (fmt == OutputFormat::json) {
        nlohmann::json coeffs = nlohmann::json::array();
        for (long e = 0; e <= k.degree(); ++e)
            coeffs.push_back(integer_json(k.coefficient(static_cast<unsigned>(e))));
        j["polynomial"] = k.str();
        j["coefficients"] = coeffs;
        out << j.dump(2) << '\n';
    } else {
        out << k.str() << '\n';
    }
    return 0;
}

inline int run_stalks(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    const RealFormFamily fam = require_family(cfg);
    const OutputFormat fmt = format_or(cfg, OutputFormat::csv, true);
    StalkTable table(fam);
    if (cfg.lambda || cfg.mu) {
        if (!cfg.lambda || !cfg.mu)
            throw UsageError("--lambda and --mu must be given together");
        if (cfg.lmax)
            throw UsageError("--lmax cannot be combined with --lambda/--mu");
        const RealWeight lam{parse_int_list(*cfg.lambda, "--lambda")};
        const RealWeight mu{parse_int_list(*cfg.mu, "--mu")};
        check_real_weight(fam, lam);
        check_real_weight(fam, mu);
        const StalkResult r = stalk_polynomial(fam, lam, mu);
        if (r.diagnostic)
            err << "note: " << *r.diagnostic << '\n';
        table.set(lam, mu, r.stalks);
    } else {
        table = stalk_table(fam, sweep_bound(cfg, 6));
    }
    switch (fmt) {
    case OutputFormat::csv: out << table_to_csv(table, cfg.convention); break;
    case OutputFormat::json: out << table_to_json(table, cfg.convention).dump(2) << '\n'; break;
    case OutputFormat::pretty:
        for (const auto& [key, stalks] : table.entries()) {
            out << "lambda=" << key.first.str() << " mu=" << key.second.str() << ":";
            const auto shifted = apply_convention(fam, key.first, stalks, cfg.convention);
            if (shifted.empty())
                out << " 0";
            for (const auto& [d, dim] : shifted)
                out << " H^" << d << "=" << dim;
            out << '\n';
        }
        break;
    }
    return 0;
}

inline int run_hilbert(const RunConfig& cfg, std::ostream& out)
{
    const OutputFormat fmt = format_or(cfg, OutputFormat::pretty, false);
    bool ok = true;
    nlohmann::json reports = nlohmann::json::array();
    for (const auto& fam : families_or_all(cfg)) {
        nlohmann::json rep = graded_report_json(fam);
        for (const auto& [name, passed] : rep["checks"].items()) {
            ok = ok && passed.get<bool>();
            if (fmt == OutputFormat::pretty)
                print_status(out, {"graded." + name + "." + fam.name(), passed.get<bool>(), ""});
        }
        if (fmt == OutputFormat::pretty)
            for (const auto& [name, degs] : rep["degree_multisets"].items())
                out << "  " << name << " = " << degs.dump() << '\n';
        reports.push_back(std::move(rep));
    }
    if (fmt == OutputFormat::json)
        out << (reports.size() == 1 ? reports[0] : reports).dump(2) << '\n';
    return ok ? 0 : 1;
}

inline int run_pairing(const RunConfig& cfg, std::ostream& out)
{
    const OutputFormat fmt = format_or(cfg, OutputFormat::pretty, false);
    bool ok = true;
    nlohmann::json reports = nlohmann::json::array();
    for (const auto& fam : families_or_all(cfg)) {
        const long bound = sweep_bound(cfg, fam.kind() == FamilyKind::Lorentz ? 40 : 12);
        std::vector<RealWeight> weights = dominant_real_weights(fam, bound);
        nlohmann::json failures = nlohmann::json::array();
        for (const auto& w : weights) {
            if (check_pairing_identity(fam, w))
                continue;
            const auto s = pairing_sides(fam, w);
            failures.push_back({{"lambda", real_weight_to_json(w)}, {"rho_G", s.rho_G.str()},
                                {"n_X_rho_check", s.n_X_rho_check.str()}});
        }
        ok = ok && failures.empty();
        if (fmt == OutputFormat::pretty)
            print_status(out, {"pairing." + fam.name(), failures.empty(),
                               std::to_string(weights.size()) + " weights, box " + std::to_string(bound)});
        reports.push_back({{"family", family_to_json(fam)}, {"checked", weights.size()}, {"failures", failures}});
    }
    if (fmt == OutputFormat::json)
        out << (reports.size() == 1 ? reports[0] : reports).dump(2) << '\n';
    return ok ? 0 : 1;
}

inline int run_centralizer(const RunConfig& cfg, std::ostream& out)
{
    const OutputFormat fmt = format_or(cfg, OutputFormat::pretty, false);
    if (cfg.samples == 0)
        throw UsageError("--samples must be positive");
    bool ok = true;
    nlohmann::json reports = nlohmann::json::array();
    for (const auto& fam : families_or_all(cfg)) {
        const CentralizerReport r = centralizer_suite(fam, cfg.samples, cfg.seed);
        ok = ok && r.passed();
        if (fmt == OutputFormat::pretty) {
            const std::string f = fam.name();
            print_status(out, {"centralizer.regularity." + f, r.regularity.passed(),
                               std::to_string(r.regularity.samples) + " samples"});
            for (const auto& fail : r.regularity.failures)
                out << "  " << fail << '\n';
            print_status(out, {"centralizer.equivariance." + f, r.equivariance, ""});
            print_status(out, {"centralizer.equivariance_symbolic." + f, r.equivariance_symbolic, ""});
            print_status(out, {"centralizer.nu_char_poly." + f, r.nu_char_poly, ""});
        }
        reports.push_back(centralizer_report_json(fam, r));
    }
    if (fmt == OutputFormat::json)
        out << (reports.size() == 1 ? reports[0] : reports).dump(2) << '\n';
    return ok ? 0 : 1;
}

inline int run_tensor(const RunConfig& cfg, std::ostream& out)
{
    const OutputFormat fmt = format_or(cfg, OutputFormat::pretty, true);
    if (!cfg.type || !cfg.lambda || !cfg.mu)
        throw UsageError("tensor requires --type, --lambda and --mu");
    const RootSystem sys(parse_cartan_type(*cfg.type));
    const Weight lam = sys.weight(parse_int_list(*cfg.lambda, "--lambda"));
    const Weight mu = sys.weight(parse_int_list(*cfg.mu, "--mu"));
    const WeightMultiset parts = tensor_decompose(sys, lam, mu);
    switch (fmt) {
    case OutputFormat::json: {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& [w, m] : parts)
            arr.push_back({{"weight", w.coords}, {"multiplicity", integer_json(m)}});
        out << arr.dump(2) << '\n';
        break;
    }
    case OutputFormat::csv:
        out << "weight,multiplicity\n";
        for (const auto& [w, m] : parts) {
            std::string coords = format_coords(w.coords);
            out << '"' << coords.substr(1, coords.size() - 2) << "\"," << m << '\n';
        }
        break;
    case OutputFormat::pretty:
        for (const auto& [w, m] : parts)
            out << m << " x V" << format_coords(w.coords) << '\n';
        break;
    }
    return 0;
}

inline int run_verify_all(const RunConfig& cfg, std::ostream& out)
{
    const OutputFormat fmt = format_or(cfg, OutputFormat::pretty, false);
    if (cfg.samples == 0)
        throw UsageError("--samples must be positive");
    VerifySettings s;
    s.seed = cfg.seed;
    s.samples = cfg.samples;
    if (cfg.lmax) {
        s.lorentz_box = sweep_bound(cfg, 0);
        s.octonionic_box = s.lorentz_box;
    }
    return emit_checks(verify_all(resolve_family(cfg), s), fmt, out);
}

} // namespace detail

inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    try {
        switch (cfg.command) {
        case Command::kostka: return detail::run_kostka(cfg, out);
        case Command::stalks: return detail::run_stalks(cfg, out, err);
        case Command::hilbert_check: return detail::run_hilbert(cfg, out);
        case Command::pairing_check: return detail::run_pairing(cfg, out);
        case Command::centralizer_check: return detail::run_centralizer(cfg, out);
        case Command::tensor: return detail::run_tensor(cfg, out);
        case Command::verify_all: return detail::run_verify_all(cfg, out);
        }
    } catch (const InconsistencyError& e) {
        err << "inconsistency: " << e.what() << '\n';
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

/// Parses `args` (without the program name) and runs the selected command.
inline int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Kostka-Foulkes polynomials, IC-stalk tables and identity checks for PSO(2n-1,1) and PE6(F4)",
                 "satake_kit"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string format_text, convention_text;
    long long seed = 1;
    long long samples = 100;

    auto family_opts = [&](CLI::App* sub) {
        sub->add_option("--family", cfg.family, "lorentz or octonionic")
            ->check(CLI::IsMember({"lorentz", "octonionic"}));
        sub->add_option("--n", cfg.n, "Lorentz parameter n >= 2");
    };
    auto format_opt = [&](CLI::App* sub, std::vector<std::string> allowed) {
        sub->add_option("--format", format_text, "output format")->check(CLI::IsMember(allowed));
    };
    auto weight_opts = [&](CLI::App* sub) {
        sub->add_option("--lambda", cfg.lambda, "comma-separated coordinates");
        sub->add_option("--mu", cfg.mu, "comma-separated coordinates");
    };
    auto bound_opt = [&](CLI::App* sub) {
        sub->add_option("--lmax,--box", cfg.lmax, "sweep bound");
    };

    auto* kostka = app.add_subcommand("kostka", "Kostka-Foulkes polynomial K_{lambda,mu}(q)");
    kostka->add_option("--type", cfg.type, "a1 or a2");
    weight_opts(kostka);
    kostka->add_option("--shape", cfg.shape, "partition, e.g. 2,1");
    kostka->add_option("--content", cfg.content, "partition, e.g. 1,1,1");
    format_opt(kostka, {"json", "pretty"});

    auto* stalks = app.add_subcommand("stalks", "IC-stalk dimensions of spherical orbit closures");
    family_opts(stalks);
    bound_opt(stalks);
    weight_opts(stalks);
    format_opt(stalks, {"json", "csv", "pretty"});
    stalks->add_option("--convention", convention_text, "perverse or shifted")
        ->check(CLI::IsMember({"perverse", "shifted"}));

    auto* hilbert = app.add_subcommand("hilbert-check", "graded degree and Hilbert-series identities");
    family_opts(hilbert);
    format_opt(hilbert, {"json", "pretty"});

    auto* pairing = app.add_subcommand("pairing-check", "<lambda, rho_G> = n_X <lambda, rho_X-check>");
    family_opts(pairing);
    bound_opt(pairing);
    format_opt(pairing, {"json", "pretty"});

    auto* central = app.add_subcommand("centralizer-check", "regular centralizers of e^T and equivariance");
    family_opts(central);
    central->add_option("--samples", samples, "random sample points per family");
    central->add_option("--seed", seed, "sampling seed");
    format_opt(central, {"json", "pretty"});

    auto* tensor = app.add_subcommand("tensor", "tensor product decomposition in A1 or A2");
    tensor->add_option("--type", cfg.type, "a1 or a2");
    weight_opts(tensor);
    format_opt(tensor, {"json", "csv", "pretty"});

    auto* verify = app.add_subcommand("verify-all", "run the full verification suite");
    family_opts(verify);
    bound_opt(verify);
    verify->add_option("--samples", samples, "random sample points per family");
    verify->add_option("--seed", seed, "sampling seed");
    format_opt(verify, {"json", "pretty"});

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    if (kostka->parsed())
        cfg.command = Command::kostka;
    else if (stalks->parsed())
        cfg.command = Command::stalks;
    else if (hilbert->parsed())
        cfg.command = Command::hilbert_check;
    else if (pairing->parsed())
        cfg.command = Command::pairing_check;
    else if (central->parsed())
        cfg.command = Command::centralizer_check;
    else if (tensor->parsed())
        cfg.command = Command::tensor;
    else
        cfg.command = Command::verify_all;

    if (format_text == "json")
        cfg.format = OutputFormat::json;
    else if (format_text == "csv")
        cfg.format = OutputFormat::csv;
    else if (format_text == "pretty")
        cfg.format = OutputFormat::pretty;
    if (convention_text == "shifted")
        cfg.convention = DegreeConvention::shifted;
    if (seed < 0 || samples < 0) {
        err << "error: --seed and --samples must be nonnegative\n";
        return 2;
    }
    cfg.seed = static_cast<std::uint64_t>(seed);
    cfg.samples = static_cast<std::size_t>(samples);
    return run(cfg, out, err);
}

} // namespace satake::cli
