#include "cutdom/cli.hpp"

#include "cutdom/campaign.hpp"
#include "cutdom/errors.hpp"
#include "cutdom/io.hpp"
#include "cutdom/minors.hpp"

#include "CLI11.hpp"

#include <functional>
#include <iomanip>
#include <ostream>

namespace cutdom::cli {

namespace {

struct Context {
    std::ostream& out;
    std::ostream& err;
    std::string out_path;
    bool no_timing = false;
    std::size_t dd_budget = kDefaultRayBudget;

    void emit(const Json& j) const
    {
        if (out_path.empty()) out << j.dump(2) << '\n';
        else write_json_file(out_path, j);
    }
    DdOptions dd() const { return {dd_budget}; }
};

Multigraph load_graph(const std::string& path) { return graph_from_json(read_json_file(path)); }

int cmd_kstar(Context& ctx, const std::string& graph_path)
{
    const auto g = load_graph(graph_path);
    Json j{{"nodes", g.node_count()}, {"edges", g.edge_count()}};
    Integer value = 0;
    Json facets = Json::array();
    if (is_connected(g)) {
        const auto s = simplify(g);
        for (const auto& cert : facet_list(s.graph, ctx.dd())) {
            if (cert.min_int_rhs() > value) value = cert.min_int_rhs();
            facets.push_back(to_json(cert));
        }
        if (s.graph.edge_count() != g.edge_count()) {
            // Facets are stated on the simple graph; map its edges back.
            j["simple_graph"] = to_json(s.graph);
            j["simple_edge_representative"] = s.representative;
        }
    }
    j["kstar"] = value.get_str();
    j["facet_count"] = facets.size();
    j["facets"] = facets;
    ctx.emit(j);
    ctx.err << "kstar = " << value << '\n' << "facets: " << facets.size() << '\n';
    return kExitOk;
}

int cmd_certify(Context& ctx, const std::string& graph_path, const std::string& weights_path, int k)
{
    const auto g = load_graph(graph_path);
    const auto c = weights_from_json(read_json_file(weights_path), g.edge_count());
    const auto cert = certify_facet(g, c);
    Json j{{"certificate", to_json(cert)}};
    ctx.err << "status = " << to_string(cert.status) << ", lambda = " << to_string(cert.lambda)
            << ", family size = " << cert.family.size() << ", rank = " << cert.rank;
    if (cert.status != FacetStatus::zero_lambda) ctx.err << ", min_int_rhs = " << cert.min_int_rhs();
    ctx.err << '\n';
    if (cert.lambda > 0) {
        const auto report = structural_report(g, c, k, cert.family);
        j["structural_report"] = to_json(report);
        j["structural_report"]["k"] = k;
        ctx.err << "structural checks (k = " << k << "): ";
        std::size_t failed = 0;
        for (const auto& check : report.checks) {
            if (check.applicable && !check.passed) {
                ctx.err << (failed++ ? ", " : "failed ") << check.name;
            }
        }
        ctx.err << (failed ? "" : "all applicable passed") << '\n';
    }
    ctx.emit(j);
    return kExitOk;
}

int cmd_minor(Context& ctx, const std::string& host_path, const std::string& pattern_name)
{
    const auto& pattern = pattern_by_name(pattern_name);
    const auto host = load_graph(host_path);
    const auto s = simplify(host);
    auto model = has_minor(s.graph, pattern);
    Json j{{"pattern", pattern.name}, {"has_minor", model.has_value()}};
    if (model) {
        for (auto& e : model->edge_witness) e = s.representative[e];
        std::string why;
        if (!verify_minor_model(host, pattern.graph, *model, &why)) {
            throw InvariantViolation("mapped minor model rejected: " + why);
        }
        j["model"] = to_json(*model);
    }
    ctx.emit(j);
    ctx.err << pattern.name << " minor: " << (model ? "yes" : "no") << '\n';
    return kExitOk;
}

int verdict_exit(Verdict v) { return v == Verdict::pass ? kExitOk : kExitFail; }

int cmd_campaign(Context& ctx, bool is_main, CampaignOptions opts)
{
    opts.dd = ctx.dd();
    const auto report = is_main ? verify_main(opts) : verify_fn(opts);
    ctx.emit(to_json(report, !ctx.no_timing));
    ctx.err << report.name << ": " << report.records.size() << " graphs, " << report.skipped << " skipped, "
            << report.failures.size() << " failures";
    if (is_main) {
        ctx.err << ", " << report.facets_checked << " facets checked\nminimal non-2-graphs:";
        for (const auto& name : report.minimal_non_2) ctx.err << ' ' << name;
        if (report.minimal_non_2.empty()) ctx.err << " none";
    } else {
        ctx.err << "\nGTSP differs from SUBTOUR on:";
        for (const auto& r : report.records)
            if (r.gtsp_equal && !*r.gtsp_equal) ctx.err << ' ' << r.graph6;
    }
    for (const auto& f : report.failures) ctx.err << "\nfailure " << f.kind << " on " << f.graph6 << ": " << f.message;
    ctx.err << "\nverdict: " << to_string(report.verdict) << " (" << std::fixed << std::setprecision(1)
            << report.elapsed_ms / 1000 << " s)\n";
    return verdict_exit(report.verdict);
}

int cmd_family(Context& ctx, const std::string& fixture_path)
{
    const auto report = certify_family(read_json_file(fixture_path));
    ctx.emit(to_json(report));
    ctx.err << std::left << std::setw(16) << "member" << std::setw(7) << "nodes" << std::setw(7) << "edges"
            << std::setw(8) << "lambda" << std::setw(14) << "min_int_rhs" << "status\n";
    for (const auto& m : report.members) {
        ctx.err << std::setw(16) << m.name << std::setw(7) << m.graph.node_count() << std::setw(7)
                << m.graph.edge_count() << std::setw(8) << to_string(m.certificate.lambda) << std::setw(14)
                << m.certificate.min_int_rhs().get_str() << (m.failure.empty() ? "ok" : m.failure) << '\n';
    }
    ctx.err << "growth at least doubling: " << (report.growth_ok ? "yes" : "no") << '\n'
            << "verdict: " << to_string(report.verdict) << '\n';
    return verdict_exit(report.verdict);
}

int cmd_ef_check(Context& ctx, const std::string& graph_path, int root)
{
    const auto g = load_graph(graph_path);
    if (root < 0 || root >= g.node_count()) throw std::invalid_argument("root is not a node of the graph");
    const auto report = ef_projection_check(g, root, ctx.dd());
    ctx.emit(to_json(report));
    ctx.err << "ef-check root " << root << ": " << (report.holds ? "true" : "false") << " (" << report.arborescences
            << " arborescences, " << report.projected_vertices << " projected vertices)\n";
    for (const auto& p : report.problems) ctx.err << "  " << p << '\n';
    return report.holds ? kExitOk : kExitFail;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    Context ctx{out, err, {}, false, kDefaultRayBudget};
    CLI::App app{"Facets of the cut dominant: k*, facet certificates, minors and verification campaigns", "cutdom"};
    app.require_subcommand(1, 1);
    // Global options may also follow the subcommand.
    app.fallthrough();
    app.add_option("--out", ctx.out_path, "Write the JSON report to this file instead of stdout");
    app.add_option("--dd-budget", ctx.dd_budget, "Maximum number of live rays in vertex enumeration")
        ->check(CLI::PositiveNumber);

    std::function<int()> action;
    std::string graph_path, weights_path, pattern_name, fixture_path;
    int k = 2, root = 0;
    CampaignOptions campaign;
    bool no_patterns = false;

    auto* kstar_cmd = app.add_subcommand("kstar", "Print k* and the full facet list of CUT(G)");
    kstar_cmd->add_option("graph", graph_path, "Graph JSON file")->required();
    kstar_cmd->callback([&] { action = [&] { return cmd_kstar(ctx, graph_path); }; });

    auto* certify_cmd = app.add_subcommand("certify", "Facet certificate and structural report for a weight vector");
    certify_cmd->add_option("graph", graph_path, "Graph JSON file")->required();
    certify_cmd->add_option("weights", weights_path, "Weights JSON file")->required();
    certify_cmd->add_option("--k", k, "Normalize to lambda = k for the structural report")->check(CLI::PositiveNumber);
    certify_cmd->callback([&] { action = [&] { return cmd_certify(ctx, graph_path, weights_path, k); }; });

    auto* minor_cmd = app.add_subcommand("minor", "Search for a prism, pyramid or m1 minor");
    minor_cmd->add_option("host", graph_path, "Host graph JSON file")->required();
    minor_cmd->add_option("--pattern", pattern_name, "Pattern graph")
        ->required()
        ->check(CLI::IsMember({"prism", "pyramid", "m1"}));
    minor_cmd->callback([&] { action = [&] { return cmd_minor(ctx, graph_path, pattern_name); }; });

    auto add_campaign = [&](const char* name, const char* help, bool is_main) {
        auto* cmd = app.add_subcommand(name, help);
        cmd->add_option("--max-nodes", campaign.max_nodes, "Largest catalog graph")->required();
        cmd->add_option("--max-edges", campaign.max_edges, "Largest edge count")->required();
        cmd->add_option("--jobs", campaign.jobs, "Worker threads")->check(CLI::PositiveNumber);
        cmd->add_flag("--no-timing", ctx.no_timing, "Omit timing fields so reports compare byte for byte");
        if (!is_main) {
            cmd->add_flag("--no-patterns", no_patterns, "Do not add prism, pyramid and m1 to the catalog");
        }
        cmd->callback([&, is_main] {
            action = [&, is_main] {
                campaign.include_patterns = !is_main && !no_patterns;
                return cmd_campaign(ctx, is_main, campaign);
            };
        });
    };
    add_campaign("verify-main", "k* <= 2 iff no prism or pyramid minor, over a graph catalog", true);
    add_campaign("verify-fn", "GTSP = SUBTOUR iff no prism, pyramid or m1 minor, over a graph catalog", false);

    auto* family_cmd = app.add_subcommand("family", "Certify a weighted graph family and its right-hand-side growth");
    family_cmd->add_option("fixture", fixture_path, "Family fixture JSON file")->required();
    family_cmd->callback([&] { action = [&] { return cmd_family(ctx, fixture_path); }; });

    auto* ef_cmd = app.add_subcommand("ef-check", "Check the arborescence extended formulation projects onto CUT(G)");
    ef_cmd->add_option("graph", graph_path, "Graph JSON file")->required();
    ef_cmd->add_option("--root", root, "Root node")->required();
    ef_cmd->callback([&] { action = [&] { return cmd_ef_check(ctx, graph_path, root); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitRefused;
    }

    try {
        return action();
    } catch (const SizeGuardError& e) {
        err << "refused (size guard): " << e.what() << '\n';
    } catch (const BudgetExceededError& e) {
        err << "refused: " << e.what() << '\n';
    } catch (const IoError& e) {
        err << "refused (input): " << e.what() << '\n';
    } catch (const std::invalid_argument& e) {
        err << "refused (input): " << e.what() << '\n';
    } catch (const InvariantViolation& e) {
        err << "internal invariant violated: " << e.what() << '\n';
        return kExitInvariant;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInvariant;
    }
    return kExitRefused;
}

}  // namespace cutdom::cli
