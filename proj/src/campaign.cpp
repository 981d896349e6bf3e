#include "cutdom/campaign.hpp"

#include "cutdom/errors.hpp"
#include "cutdom/minors.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <map>
#include <mutex>
#include <set>
#include <thread>

namespace cutdom {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start)
{
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Runs fn(i) for i in [0, n) on `jobs` threads; the first exception is
// rethrown after all workers stop.
template <typename Fn>
void parallel_for(std::size_t n, unsigned jobs, Fn fn)
{
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto work = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
                next.store(n);
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < std::max(1u, jobs); ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

struct Slot {
    GraphRecord record;
    std::vector<CampaignFailure> failures;
    std::size_t facets_checked = 0;
    std::size_t odd_rhs = 0;
    std::size_t compositions = 0;
};

std::vector<Multigraph> campaign_graphs(const CampaignOptions& opts, int node_limit)
{
    if (opts.max_nodes > node_limit) {
        throw SizeGuardError("campaign limited to " + std::to_string(node_limit) + " nodes");
    }
    std::vector<Multigraph> graphs = opts.max_nodes >= 2 ? generate_catalogs(opts.max_nodes, opts.max_edges)
                                                         : std::vector<Multigraph>{};
    if (opts.include_patterns) {
        std::set<CanonicalForm> present;
        for (const auto& g : graphs) present.insert(canonical_form(g));
        for (const auto& p : standard_patterns())
            if (present.insert(canonical_form(p.graph)).second) graphs.push_back(p.graph);
    }
    return graphs;
}

GraphRecord base_record(const Multigraph& g)
{
    GraphRecord r;
    r.form = canonical_form(g);
    r.graph6 = to_graph6(g);
    r.nodes = g.node_count();
    r.edges = g.edge_count();
    return r;
}

Json graph_certificate(const Multigraph& g) { return {{"graph", to_json(g)}}; }

void analyze_main(const Multigraph& g, const DdOptions& dd, Slot& slot)
{
    auto& rec = slot.record;
    auto fail = [&](std::string kind, std::string message, Json cert) {
        slot.failures.push_back({rec.graph6, std::move(kind), std::move(message), std::move(cert)});
    };

    VRep vrep;
    try {
        vrep = subtour_vertices(g, dd);
    } catch (const BudgetExceededError& e) {
        rec.skipped = true;
        rec.skip_reason = e.what();
        return;
    }
    rec.peak_rays = vrep.peak_rays;

    const auto cuts = enumerate_proper_cuts(g);
    std::vector<FacetCertificate> facets;
    std::set<IntegerForm> forms;
    const FacetCertificate* witness = nullptr;
    for (const auto& c : vrep.vertices) {
        auto cert = certify_facet(g, cuts, c);
        Json certificate = graph_certificate(g);
        certificate["facet"] = to_json(cert);
        if (!cert.is_facet() || cert.lambda != 2) {
            fail("round_trip", "SUBTOUR vertex does not certify as a facet with lambda 2", certificate);
            continue;
        }
        const auto back = vertex_from_certificate(g, cert);
        if (!back || *back != c) {
            fail("round_trip", "facet certificate does not reproduce its SUBTOUR vertex", certificate);
        }
        if (!odd_rhs_property_holds(g, cert)) fail("odd_rhs", "odd right-hand side other than a spanning tree", certificate);
        if (mpz_odd_p(cert.min_int_rhs().get_mpz_t())) ++slot.odd_rhs;
        forms.insert(cert.min_int_form);
        facets.push_back(std::move(cert));
    }
    if (forms.size() != facets.size()) {
        fail("round_trip", "two SUBTOUR vertices share a minimum integer form", graph_certificate(g));
    }
    slot.facets_checked = facets.size();
    rec.facets = facets.size();
    for (const auto& f : facets)
        if (!witness || f.min_int_rhs() > witness->min_int_rhs()) witness = &f;
    rec.kstar = witness ? witness->min_int_rhs() : Integer(0);

    const auto prism = has_minor(g, pattern_by_name("prism"));
    const auto pyramid = has_minor(g, pattern_by_name("pyramid"));
    rec.has_prism = prism.has_value();
    rec.has_pyramid = pyramid.has_value();
    const bool forbidden = rec.has_prism || rec.has_pyramid;
    if (rec.kstar > 2 && !forbidden) {
        Json cert = graph_certificate(g);
        cert["facet"] = to_json(*witness);
        fail("facet_witness", "k* = " + rec.kstar.get_str() + " > 2 without a prism or pyramid minor", cert);
    } else if (rec.kstar <= 2 && forbidden) {
        Json cert = graph_certificate(g);
        cert["pattern"] = prism ? "prism" : "pyramid";
        cert["model"] = to_json(prism ? *prism : *pyramid);
        cert["kstar"] = rec.kstar.get_str();
        fail("minor_model", "k* = " + rec.kstar.get_str() + " <= 2 despite a forbidden minor", cert);
    }

    if (!blocks(g).cutnodes.empty()) {
        const auto comp = check_block_composition(g, dd, &facets);
        rec.block_composition = comp.holds;
        ++slot.compositions;
        if (!comp.holds) {
            fail("block_composition",
                 "block composition gives " + std::to_string(comp.composed) + " facets, direct enumeration " +
                     std::to_string(comp.direct),
                 graph_certificate(g));
        }
    }
}

void analyze_fn(const Multigraph& g, const DdOptions& dd, Slot& slot)
{
    auto& rec = slot.record;
    GtspComparison cmp;
    try {
        cmp = gtsp_equals_subtour(g, dd);
    } catch (const BudgetExceededError& e) {
        rec.skipped = true;
        rec.skip_reason = e.what();
        return;
    }
    rec.gtsp_equal = cmp.equal;
    rec.counterexample = cmp.counterexample;

    std::optional<MinorModel> model;
    std::string pattern;
    for (const auto& p : standard_patterns()) {
        auto m = has_minor(g, p);
        if (p.name == "prism") rec.has_prism = m.has_value();
        if (p.name == "pyramid") rec.has_pyramid = m.has_value();
        if (p.name == "m1") rec.has_m1 = m.has_value();
        if (m && !model) {
            model = std::move(m);
            pattern = p.name;
        }
    }
    if (!cmp.equal && !model) {
        Json cert = graph_certificate(g);
        cert["vertex"] = to_json(*cmp.counterexample);
        slot.failures.push_back({rec.graph6, "non_tour_vertex", "SUBTOUR has a non-tour vertex but no forbidden minor", cert});
    } else if (cmp.equal && model) {
        Json cert = graph_certificate(g);
        cert["pattern"] = pattern;
        cert["model"] = to_json(*model);
        slot.failures.push_back({rec.graph6, "minor_model", "GTSP equals SUBTOUR despite a forbidden minor", cert});
    }
}

template <typename Analyze>
CampaignReport run_campaign(std::string name, const CampaignOptions& opts, int node_limit, Analyze analyze)
{
    const auto start = Clock::now();
    CampaignReport report;
    report.name = std::move(name);
    report.options = opts;
    const auto graphs = campaign_graphs(opts, node_limit);
    std::vector<Slot> slots(graphs.size());
    parallel_for(graphs.size(), opts.jobs, [&](std::size_t i) {
        const auto t0 = Clock::now();
        slots[i].record = base_record(graphs[i]);
        analyze(graphs[i], opts.dd, slots[i]);
        slots[i].record.elapsed_ms = ms_since(t0);
    });
    std::vector<std::size_t> order(graphs.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return slots[a].record.form < slots[b].record.form; });
    for (std::size_t i : order) {
        auto& s = slots[i];
        report.facets_checked += s.facets_checked;
        report.odd_rhs_facets += s.odd_rhs;
        report.compositions_checked += s.compositions;
        report.skipped += s.record.skipped;
        for (auto& f : s.failures) report.failures.push_back(std::move(f));
        report.records.push_back(std::move(s.record));
    }
    report.elapsed_ms = ms_since(start);
    return report;
}

void finish_verdict(CampaignReport& report)
{
    report.verdict = !report.failures.empty() ? Verdict::fail : report.skipped ? Verdict::incomplete : Verdict::pass;
}

// Graph a record was computed on; catalog graphs are stored in canonical
// labelling, the appended patterns in their own.
Multigraph record_graph(const GraphRecord& rec) { return from_graph6(rec.graph6); }

}  // namespace

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::pass: return "PASS";
    case Verdict::fail: return "FAIL";
    case Verdict::incomplete: return "INCOMPLETE";
    }
    return "UNKNOWN";
}

const GraphRecord* CampaignReport::find(const Multigraph& g) const
{
    const auto form = canonical_form(simplify(g).graph);
    for (const auto& r : records)
        if (r.form == form) return &r;
    return nullptr;
}

CampaignReport verify_main(const CampaignOptions& opts)
{
    auto report = run_campaign("verify-main", opts, 7, analyze_main);
    const auto start = Clock::now();

    std::map<CanonicalForm, Integer> memo;
    for (const auto& r : report.records)
        if (!r.skipped) memo[r.form] = r.kstar;
    const KstarFunction cached = [&](const Multigraph& h) -> Integer {
        if (!is_connected(h)) return 0;
        const auto form = canonical_form(h);
        if (const auto it = memo.find(form); it != memo.end()) return it->second;
        const Integer value = kstar(h, opts.dd);
        memo.emplace(form, value);
        return value;
    };

    const auto prism_form = canonical_form(graphs::prism());
    const auto pyramid_form = canonical_form(graphs::pyramid());
    bool prism_minimal = false, pyramid_minimal = false;
    for (auto& rec : report.records) {
        if (rec.skipped || rec.kstar <= 2) continue;
        const auto g = record_graph(rec);
        MinimalityReport mr;
        try {
            mr = is_minor_minimal_non_k(g, 2, cached);
        } catch (const BudgetExceededError& e) {
            rec.skipped = true;
            rec.skip_reason = e.what();
            ++report.skipped;
            continue;
        }
        rec.minimal_non_2 = mr.minimal;
        if (!mr.minimal) continue;
        report.minimal_non_2.push_back(rec.graph6);
        if (rec.form == prism_form) prism_minimal = true;
        else if (rec.form == pyramid_form) pyramid_minimal = true;
        else {
            Json cert = graph_certificate(g);
            cert["kstar"] = rec.kstar.get_str();
            report.failures.push_back(
                {rec.graph6, "minimality", "minor-minimal non-2-graph other than the prism and the pyramid", cert});
        }
    }
    auto expect_minimal = [&](bool found, const Multigraph& g, const char* name) {
        if (found || opts.max_nodes < g.node_count() || opts.max_edges < g.edge_count()) return;
        report.failures.push_back({to_graph6(g), "missing_minimal",
                                   std::string(name) + " was not found as a minor-minimal non-2-graph",
                                   graph_certificate(g)});
    };
    expect_minimal(prism_minimal, graphs::prism(), "prism");
    expect_minimal(pyramid_minimal, graphs::pyramid(), "pyramid");

    report.elapsed_ms += ms_since(start);
    finish_verdict(report);
    return report;
}

CampaignReport verify_fn(const CampaignOptions& opts)
{
    auto report = run_campaign("verify-fn", opts, kMaxCatalogNodes, analyze_fn);
    finish_verdict(report);
    return report;
}

Json to_json(const CampaignReport& report, bool with_timing)
{
    Json records = Json::array();
    for (const auto& r : report.records) {
        Json j{
            {"graph6", r.graph6},
            {"nodes", r.nodes},
            {"edges", r.edges},
            {"canonical_code", r.form.code},
            {"skipped", r.skipped},
        };
        if (r.skipped) {
            j["skip_reason"] = r.skip_reason;
        } else if (report.name == "verify-main") {
            j["kstar"] = r.kstar.get_str();
            j["facets"] = r.facets;
            j["peak_rays"] = r.peak_rays;
        }
        j["has_prism"] = r.has_prism;
        j["has_pyramid"] = r.has_pyramid;
        if (report.name == "verify-fn") j["has_m1"] = r.has_m1;
        if (r.gtsp_equal) j["gtsp_equals_subtour"] = *r.gtsp_equal;
        if (r.counterexample) j["counterexample"] = to_json(*r.counterexample);
        if (r.minimal_non_2) j["minimal_non_2"] = *r.minimal_non_2;
        if (r.block_composition) j["block_composition"] = *r.block_composition;
        if (with_timing) j["elapsed_ms"] = r.elapsed_ms;
        records.push_back(std::move(j));
    }
    Json failures = Json::array();
    for (const auto& f : report.failures) {
        failures.push_back({{"graph6", f.graph6}, {"kind", f.kind}, {"message", f.message}, {"certificate", f.certificate}});
    }
    Json summary{
        {"graphs", report.records.size()},
        {"skipped", report.skipped},
        {"failures", report.failures.size()},
    };
    if (report.name == "verify-main") {
        std::size_t non2 = 0;
        for (const auto& r : report.records) non2 += !r.skipped && r.kstar > 2;
        summary["non_2_graphs"] = non2;
        summary["minimal_non_2"] = report.minimal_non_2;
        summary["facets_checked"] = report.facets_checked;
        summary["odd_rhs_facets"] = report.odd_rhs_facets;
        summary["compositions_checked"] = report.compositions_checked;
    } else {
        std::size_t unequal = 0;
        for (const auto& r : report.records) unequal += r.gtsp_equal && !*r.gtsp_equal;
        summary["gtsp_differs"] = unequal;
    }
    if (with_timing) summary["elapsed_ms"] = report.elapsed_ms;
    return {
        {"campaign", report.name},
        {"parameters",
         {{"max_nodes", report.options.max_nodes},
          {"max_edges", report.options.max_edges},
          {"dd_budget", report.options.dd.ray_budget},
          {"include_patterns", report.options.include_patterns}}},
        {"verdict", to_string(report.verdict)},
        {"summary", summary},
        {"records", records},
        {"failures", failures},
    };
}

std::vector<std::string> revalidate_failures(const Json& report)
{
    std::vector<std::string> problems;
    if (!report.contains("failures")) return problems;
    const auto kind_of = [](const Json& f) { return f.value("kind", std::string("?")); };
    for (const auto& f : report.at("failures")) {
        const std::string kind = kind_of(f);
        const std::string where = kind + " on " + f.value("graph6", std::string("?")) + ": ";
        try {
            const Json& cert = f.at("certificate");
            const Multigraph g = graph_from_json(cert.at("graph"));
            auto any_forbidden = [&](bool with_m1) {
                for (const auto& p : standard_patterns()) {
                    if (p.name == "m1" && !with_m1) continue;
                    if (has_minor(simplify(g).graph, p)) return true;
                }
                return false;
            };
            if (kind == "facet_witness") {
                const auto c = rat_vector_from_json(cert.at("facet").at("weights"));
                const auto fresh = certify_facet(g, c);
                if (!fresh.is_facet() || fresh.min_int_rhs() <= 2) problems.push_back(where + "weights are not a facet with RHS > 2");
                else if (any_forbidden(false)) problems.push_back(where + "graph does have a prism or pyramid minor");
            } else if (kind == "minor_model") {
                std::string why;
                const auto& p = pattern_by_name(cert.at("pattern").get<std::string>());
                if (!verify_minor_model(g, p.graph, minor_model_from_json(cert.at("model")), &why)) {
                    problems.push_back(where + "model rejected: " + why);
                } else if (cert.contains("kstar") && kstar(g) > 2) {
                    problems.push_back(where + "k* exceeds 2, no contradiction");
                } else if (!cert.contains("kstar") && !gtsp_equals_subtour(g).equal) {
                    problems.push_back(where + "GTSP differs from SUBTOUR, no contradiction");
                }
            } else if (kind == "non_tour_vertex") {
                const auto x = rat_vector_from_json(cert.at("vertex"));
                const auto vrep = subtour_vertices(g);
                if (std::find(vrep.vertices.begin(), vrep.vertices.end(), x) == vrep.vertices.end()) {
                    problems.push_back(where + "vector is not a vertex of SUBTOUR");
                } else if (is_tour_vector(g, x)) {
                    problems.push_back(where + "vector is a tour");
                } else if (any_forbidden(true)) {
                    problems.push_back(where + "graph does have a forbidden minor");
                }
            } else if (kind == "round_trip" || kind == "odd_rhs") {
                if (!cert.contains("facet")) {
                    problems.push_back(where + "no facet certificate attached");
                    continue;
                }
                const auto c = rat_vector_from_json(cert.at("facet").at("weights"));
                const auto fresh = certify_facet(g, c);
                const auto back = fresh.is_facet() ? vertex_from_certificate(g, fresh) : std::nullopt;
                const bool defect = kind == "round_trip" ? (!fresh.is_facet() || fresh.lambda != 2 || !back || *back != c)
                                                         : !odd_rhs_property_holds(g, fresh);
                if (!defect) problems.push_back(where + "certificate checks out, no defect");
            } else if (kind == "block_composition") {
                if (check_block_composition(g).holds) problems.push_back(where + "composition holds on recomputation");
            } else if (kind == "minimality") {
                const auto mr = is_minor_minimal_non_k(g, 2);
                const auto form = canonical_form(g);
                if (!mr.minimal) problems.push_back(where + "graph is not minor-minimal");
                else if (form == canonical_form(graphs::prism()) || form == canonical_form(graphs::pyramid())) {
                    problems.push_back(where + "graph is the prism or the pyramid");
                }
            } else if (kind == "missing_minimal") {
                if (is_minor_minimal_non_k(g, 2).minimal) problems.push_back(where + "graph is minor-minimal after all");
            } else {
                problems.push_back(where + "unknown failure kind");
            }
        } catch (const std::exception& e) {
            problems.push_back(where + "certificate unusable: " + e.what());
        }
    }
    return problems;
}

FamilyReport certify_family(const Json& fixture)
{
    FamilyReport report;
    try {
        for (const auto& m : fixture.at("members")) {
            FamilyMember member{
                m.value("name", std::string("member")),
                graph_from_json(m.at("graph")),
                {},
                parse_rational(m.value("expected_lambda", std::string("2"))),
                std::nullopt,
                {},
                {},
            };
            member.weights = weights_from_json(m.at("weights"), member.graph.edge_count());
            if (m.contains("expected_min_int_rhs")) {
                member.expected_rhs = Integer(m.at("expected_min_int_rhs").get<std::string>());
            }
            report.members.push_back(std::move(member));
        }
    } catch (const Json::exception& e) {
        throw IoError(std::string("malformed family fixture: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw IoError(std::string("malformed family fixture: ") + e.what());
    }

    for (auto& m : report.members) {
        m.certificate = certify_facet(m.graph, m.weights);
        const auto& cert = m.certificate;
        if (cert.status == FacetStatus::zero_lambda) {
            m.failure = "lambda is 0";
        } else if (cert.lambda != m.expected_lambda) {
            m.failure = "lambda is " + to_string(cert.lambda) + ", expected " + to_string(m.expected_lambda);
        } else if (!cert.is_facet()) {
            m.failure = "rank deficiency: minimum cuts have rank " + std::to_string(cert.rank) + " on a support of " +
                        std::to_string(cert.support.size()) + " edges";
        } else if (m.expected_rhs && cert.min_int_rhs() != *m.expected_rhs) {
            m.failure = "min_int_rhs is " + cert.min_int_rhs().get_str() + ", expected " + m.expected_rhs->get_str();
        }
    }
    for (std::size_t i = 1; i < report.members.size(); ++i) {
        const auto& prev = report.members[i - 1].certificate;
        const auto& cur = report.members[i].certificate;
        if (!prev.is_facet() || !cur.is_facet() || cur.min_int_rhs() < 2 * prev.min_int_rhs()) report.growth_ok = false;
    }
    const bool failed = std::any_of(report.members.begin(), report.members.end(),
                                    [](const FamilyMember& m) { return !m.failure.empty(); });
    report.verdict = failed || !report.growth_ok ? Verdict::fail : Verdict::pass;
    return report;
}

Json to_json(const FamilyReport& report)
{
    Json members = Json::array();
    for (const auto& m : report.members) {
        Json j{
            {"name", m.name},
            {"nodes", m.graph.node_count()},
            {"edges", m.graph.edge_count()},
            {"is_facet", m.certificate.is_facet()},
            {"lambda", to_string(m.certificate.lambda)},
            {"rank", m.certificate.rank},
            {"min_int_rhs", m.certificate.min_int_rhs().get_str()},
            {"certificate", to_json(m.certificate)},
        };
        if (!m.failure.empty()) j["failure"] = m.failure;
        members.push_back(std::move(j));
    }
    return {{"verdict", to_string(report.verdict)}, {"growth_ok", report.growth_ok}, {"members", members}};
}

}  // namespace cutdom
