#include "coorbit/cli.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "coorbit/cross_check.hpp"
#include "coorbit/oracle.hpp"
#include "coorbit/orbits.hpp"
#include "coorbit/serialize.hpp"

namespace coorbit {

JsonValue to_json(const OutputEnvelope& envelope)
{
    JsonValue out = JsonValue::object();
    out["command"] = envelope.command;
    out["inputs"] = envelope.inputs;
    out["result"] = envelope.result;
    out["schema_version"] = envelope.schema_version;
    return out;
}

namespace {

struct GlobalOpts {
    std::string format = "text";
    bool keep_order = false;
    bool allow_full_group = false;
    int max_n = 8;
};

// Unordered input convention: compositions are canonicalized by sorting
// descending where the result is order-invariant (poincare, oracle).
// Refinement-sensitive inputs (split, tower) always keep the given order,
// since sorting would change which inclusion is being asked about.
Composition parse_unordered_composition(const std::string& text, bool keep_order)
{
    Composition p = Composition::parse(text);
    return keep_order ? p : p.sorted_descending();
}

std::vector<mpz_class> parse_series_coeffs(const std::string& text)
{
    std::vector<mpz_class> coeffs;
    std::istringstream is(text);
    std::string token;
    while (std::getline(is, token, ',')) {
        try {
            coeffs.emplace_back(token);
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("series: bad integer '" + token + "'");
        }
    }
    if (coeffs.empty())
        throw std::invalid_argument("series: empty coefficient list");
    return coeffs;
}

GradedDims parse_series(const std::string& text)
{
    return GradedDims(parse_series_coeffs(text));
}

OutputEnvelope cmd_poincare(const GlobalOpts& opts, const std::string& composition_arg,
                            bool have_cpn, int cpn_arg, const std::string& grassmannian_arg)
{
    const int selected = (!composition_arg.empty() ? 1 : 0) + (have_cpn ? 1 : 0) +
                         (!grassmannian_arg.empty() ? 1 : 0);
    if (selected != 1)
        throw std::invalid_argument(
            "poincare: exactly one of --composition, --cpn, --grassmannian is required");

    OutputEnvelope env;
    env.command = "poincare";
    env.inputs = JsonValue::object();

    GradedDims series;
    std::string label;
    long long complex_dim = 0;

    if (!composition_arg.empty()) {
        Composition p = parse_unordered_composition(composition_arg, opts.keep_order);
        auto orbit = OrbitDescriptor::for_stabilizer(p);
        series = poincare_partial_flag(p);
        label = orbit.label;
        complex_dim = orbit.complex_dim();
        env.inputs["composition"] = p.to_string();
        env.inputs["keep_order"] = opts.keep_order;
    } else if (have_cpn) {
        series = poincare_cpn(cpn_arg);
        label = "CP^" + std::to_string(cpn_arg);
        complex_dim = cpn_arg;
        env.inputs["cpn"] = cpn_arg;
    } else {
        std::vector<int> kn;
        for (const auto& part : parse_series_coeffs(grassmannian_arg)) {
            if (!part.fits_sint_p())
                throw std::invalid_argument("poincare: --grassmannian value out of range");
            kn.push_back(static_cast<int>(part.get_si()));
        }
        if (kn.size() != 2 || kn[0] < 0 || kn[1] < kn[0] || kn[1] < 1)
            throw std::invalid_argument("poincare: --grassmannian expects k,n with 0 <= k <= n, n >= 1");
        const int k = kn[0], n = kn[1];
        std::vector<int> parts;
        if (k > 0)
            parts.push_back(k);
        if (n - k > 0)
            parts.push_back(n - k);
        Composition p(parts);
        auto orbit = OrbitDescriptor::for_stabilizer(p);
        series = poincare_partial_flag(p);
        label = orbit.label;
        complex_dim = orbit.complex_dim();
        env.inputs["grassmannian"] = std::to_string(k) + "," + std::to_string(n);
    }

    env.result = JsonValue::object();
    env.result["complex_dim"] = complex_dim;
    env.result["label"] = label;
    env.result["series"] = to_json(series);
    env.result["top_degree"] = series.top_degree();
    env.result["total_dim"] = total_dim(series);

    std::ostringstream text;
    text << "orbit: " << label << "\n";
    render_series_text(text, series, "");
    text << "complex dim: " << complex_dim << "   top degree: " << series.top_degree() << "\n";
    env.text = text.str();
    env.exit_code = kExitOk;
    return env;
}

OutputEnvelope cmd_split(const GlobalOpts& opts, const std::string& fine_arg,
                         const std::string& coarse_arg, const std::string& lhs_arg,
                         const std::string& base_arg, const std::vector<std::string>& fiber_args)
{
    const bool composition_mode = !fine_arg.empty() || !coarse_arg.empty();
    const bool series_mode = !lhs_arg.empty() || !base_arg.empty() || !fiber_args.empty();
    if (composition_mode == series_mode)
        throw std::invalid_argument(
            "split: use either --fine/--coarse or the supplied-series form --lhs/--base/--fiber");

    OutputEnvelope env;
    env.command = "split";
    env.inputs = JsonValue::object();
    SplitCertificate cert;

    if (composition_mode) {
        if (fine_arg.empty() || coarse_arg.empty())
            throw std::invalid_argument("split: both --fine and --coarse are required");
        Composition fine = Composition::parse(fine_arg);
        Composition coarse = Composition::parse(coarse_arg);
        if (coarse.is_full_group() && !opts.allow_full_group)
            throw std::invalid_argument("split: coarse composition " + coarse.to_string() +
                                        " is the full group U(" + std::to_string(coarse.n()) +
                                        "); pass --allow-full-group to permit the point base");
        env.inputs["allow_full_group"] = opts.allow_full_group;
        env.inputs["coarse"] = coarse.to_string();
        env.inputs["fine"] = fine.to_string();
        cert = verify_split(fine, coarse);
    } else {
        if (lhs_arg.empty() || base_arg.empty())
            throw std::invalid_argument("split: supplied-series form requires --lhs and --base");
        std::vector<LabeledSeries> factors;
        factors.push_back({"base", parse_series(base_arg)});
        JsonValue fibers = JsonValue::array();
        for (std::size_t i = 0; i < fiber_args.size(); ++i) {
            factors.push_back({"fiber " + std::to_string(i + 1), parse_series(fiber_args[i])});
            fibers.push_back(fiber_args[i]);
        }
        env.inputs["base"] = base_arg;
        env.inputs["fibers"] = std::move(fibers);
        env.inputs["lhs"] = lhs_arg;
        cert = check_series_split("supplied lhs", parse_series(lhs_arg), std::move(factors));
    }

    env.result = JsonValue::object();
    env.result["certificate"] = to_json(cert);

    std::ostringstream text;
    render_certificate_text(text, cert);
    env.text = text.str();
    env.exit_code = cert.verdict ? kExitOk : kExitVerdictFalse;
    return env;
}

OutputEnvelope cmd_tower(const GlobalOpts& opts, const std::string& chain_arg)
{
    if (chain_arg.empty())
        throw std::invalid_argument("tower: --chain is required");
    std::vector<Composition> chain = parse_chain(chain_arg);
    Tower tower = verify_tower(chain, opts.allow_full_group);

    bool all_true = tower.product_certificate.verdict;
    for (const auto& cert : tower.step_certificates)
        all_true = all_true && cert.verdict;

    OutputEnvelope env;
    env.command = "tower";
    env.inputs = JsonValue::object();
    env.inputs["allow_full_group"] = opts.allow_full_group;
    env.inputs["chain"] = chain_to_string(chain);
    env.result = JsonValue::object();
    env.result["tower"] = to_json(tower);

    std::ostringstream text;
    render_tower_text(text, tower);
    env.text = text.str();
    env.exit_code = all_true ? kExitOk : kExitVerdictFalse;
    return env;
}

OutputEnvelope cmd_verify_paper(const GlobalOpts& opts)
{
    OutputEnvelope env;
    env.command = "verify-paper";
    env.inputs = JsonValue::object();
    env.inputs["max_n"] = opts.max_n;

    bool all_true = true;

    auto u4 = verify_u4_example();
    JsonValue u4_json = JsonValue::array();
    for (const auto& cert : u4) {
        all_true = all_true && cert.verdict;
        u4_json.push_back(to_json(cert));
    }

    JsonValue flag_json = JsonValue::array();
    for (int n = 2; n <= opts.max_n; ++n) {
        auto cert = verify_flag_corollary(n);
        all_true = all_true && cert.verdict;
        JsonValue row = JsonValue::object();
        row["n"] = n;
        row["verdict"] = cert.verdict;
        flag_json.push_back(std::move(row));
    }

    SweepResult sweep = verify_refinement_sweep(opts.max_n);
    all_true = all_true && sweep.failures == 0;

    env.result = JsonValue::object();
    env.result["all_true"] = all_true;
    env.result["flag_corollary"] = std::move(flag_json);
    env.result["sweep"] = to_json(sweep);
    env.result["u4_example"] = std::move(u4_json);

    std::ostringstream text;
    text << "U(4) worked example: " << u4.size() << " certificates, "
         << (std::all_of(u4.begin(), u4.end(), [](const auto& c) { return c.verdict; }) ? "all true"
                                                                                        : "FAILURES")
         << "\n";
    if (opts.max_n >= 2)
        text << "flag corollary: n = 2.." << opts.max_n << ", "
             << (all_true ? "all true" : "see JSON for failures") << "\n";
    text << "refinement sweep: n <= " << sweep.max_n << ", " << sweep.pairs_checked
         << " pairs checked, " << sweep.failures << " failures\n";
    text << (all_true ? "all certificates true" : "CERTIFICATE FAILURES PRESENT") << "\n";
    env.text = text.str();
    env.exit_code = all_true ? kExitOk : kExitVerdictFalse;
    return env;
}

OutputEnvelope cmd_oracle(const GlobalOpts& opts, const std::string& composition_arg,
                          bool have_flag_n, int flag_n)
{
    const int selected = (!composition_arg.empty() ? 1 : 0) + (have_flag_n ? 1 : 0);
    if (selected != 1)
        throw std::invalid_argument("oracle: exactly one of --composition, --flag-n is required");

    OutputEnvelope env;
    env.command = "oracle";
    env.inputs = JsonValue::object();
    env.result = JsonValue::object();
    std::ostringstream text;

    if (!composition_arg.empty()) {
        Composition p = parse_unordered_composition(composition_arg, opts.keep_order);
        env.inputs["composition"] = p.to_string();
        env.inputs["keep_order"] = opts.keep_order;
        CrossCheckReport report = cross_check(p);
        env.result["report"] = to_json(report);
        render_report_text(text, report);
        env.exit_code = report.all_agree ? kExitOk : kExitVerdictFalse;
    } else {
        env.inputs["flag_n"] = flag_n;
        GradedDims enumerated = flag_series_by_enumeration(flag_n);
        SplitCertificate cert =
            check_series_split("closed-form", poincare_flag(flag_n), {{"coset-oracle", enumerated}},
                               {"independent recomputation by permutation enumeration"});
        env.result["agreement"] = cert.verdict;
        env.result["certificate"] = to_json(cert);
        env.result["enumeration_size"] = total_dim(enumerated);
        text << "flag closed form vs inversion enumeration, n = " << flag_n << "\n";
        text << "enumeration size: " << total_dim(enumerated).get_str() << "\n";
        render_series_text(text, enumerated, "series");
        text << "agreement: " << (cert.verdict ? "true" : "false") << "\n";
        env.exit_code = cert.verdict ? kExitOk : kExitVerdictFalse;
    }
    env.text = text.str();
    return env;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"exact rational-cohomology Betti numbers of U(n) coadjoint orbits, "
                 "with splitting verifiers and brute-force oracles"};
    app.require_subcommand(1);

    GlobalOpts opts;
    app.add_option("--format", opts.format, "output format")->check(CLI::IsMember({"text", "json"}));
    app.add_flag("--keep-order", opts.keep_order, "do not sort unordered composition input");
    app.add_flag("--allow-full-group", opts.allow_full_group,
                 "permit the full group U(n) as the coarse stabilizer / chain endpoint");
    app.add_option("--max-n", opts.max_n, "bound for verify-paper sweeps (default 8)");

    auto* poincare = app.add_subcommand("poincare", "Betti numbers of one orbit");
    std::string composition_arg, grassmannian_arg;
    int cpn_arg = 0;
    poincare->add_option("--composition", composition_arg, "stabilizer block sizes, e.g. 2,2");
    poincare->add_option("--cpn", cpn_arg, "complex projective space CP^j");
    poincare->add_option("--grassmannian", grassmannian_arg, "Grassmannian G_{k,n-k} as k,n");

    auto* split = app.add_subcommand("split", "verify one splitting identity");
    std::string fine_arg, coarse_arg, lhs_arg, base_arg;
    std::vector<std::string> fiber_args;
    split->add_option("--fine", fine_arg, "fine composition (total space)");
    split->add_option("--coarse", coarse_arg, "coarse composition (base)");
    split->add_option("--lhs", lhs_arg, "supplied lhs series (dense coefficients)");
    split->add_option("--base", base_arg, "supplied base series");
    split->add_option("--fiber", fiber_args, "supplied fiber series (repeatable)");

    auto* tower = app.add_subcommand("tower", "verify a full refinement chain");
    std::string chain_arg;
    tower->add_option("--chain", chain_arg, "pipe-separated chain, e.g. \"1,1,1,1|1,1,2|2,2\"");

    auto* verify_paper =
        app.add_subcommand("verify-paper", "run the worked identities and the exhaustive sweep");

    auto* oracle = app.add_subcommand("oracle", "cross-check closed forms against enumeration");
    std::string oracle_composition;
    int flag_n = 0;
    oracle->add_option("--composition", oracle_composition, "composition to cross-check");
    oracle->add_option("--flag-n", flag_n, "flag manifold rank for the permutation oracle");

    for (auto* sub : {poincare, split, tower, verify_paper, oracle})
        sub->fallthrough();

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        OutputEnvelope env;
        if (app.got_subcommand(poincare))
            env = cmd_poincare(opts, composition_arg, poincare->count("--cpn") > 0, cpn_arg,
                               grassmannian_arg);
        else if (app.got_subcommand(split))
            env = cmd_split(opts, fine_arg, coarse_arg, lhs_arg, base_arg, fiber_args);
        else if (app.got_subcommand(tower))
            env = cmd_tower(opts, chain_arg);
        else if (app.got_subcommand(verify_paper))
            env = cmd_verify_paper(opts);
        else
            env = cmd_oracle(opts, oracle_composition, oracle->count("--flag-n") > 0, flag_n);

        if (opts.format == "json")
            out << to_json(env).dump() << "\n";
        else
            out << env.text;
        return env.exit_code;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace coorbit
