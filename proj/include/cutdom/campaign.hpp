#pragma once

// Verification campaigns over graph catalogs and the H-family certification.
// Reports are JSON; every failure embeds a certificate that
// revalidate_failures() can check again from the report alone.

#include "cutdom/catalog.hpp"
#include "cutdom/io.hpp"
#include "cutdom/polyhedron.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cutdom {

enum class Verdict { pass, fail, incomplete };
std::string to_string(Verdict v);

struct CampaignOptions {
    int max_nodes = 6;
    int max_edges = 15;
    unsigned jobs = 1;
    DdOptions dd;
    /// Adds prism, pyramid and m1 to the catalog (deduplicated).
    bool include_patterns = false;
};

struct CampaignFailure {
    std::string graph6;
    /// facet_witness | minor_model | non_tour_vertex | round_trip | odd_rhs |
    /// block_composition | minimality | missing_minimal
    std::string kind;
    std::string message;
    Json certificate;
};

struct GraphRecord {
    CanonicalForm form;
    std::string graph6;
    int nodes = 0;
    int edges = 0;
    bool skipped = false;
    std::string skip_reason;
    Integer kstar;
    std::size_t facets = 0;
    std::size_t peak_rays = 0;
    bool has_prism = false;
    bool has_pyramid = false;
    bool has_m1 = false;
    std::optional<bool> gtsp_equal;
    std::optional<RatVector> counterexample;
    std::optional<bool> minimal_non_2;
    std::optional<bool> block_composition;
    double elapsed_ms = 0;
};

struct CampaignReport {
    std::string name;
    CampaignOptions options;
    std::vector<GraphRecord> records;
    std::vector<CampaignFailure> failures;
    std::vector<std::string> minimal_non_2;
    std::size_t facets_checked = 0;
    std::size_t odd_rhs_facets = 0;
    std::size_t compositions_checked = 0;
    std::size_t skipped = 0;
    Verdict verdict = Verdict::pass;
    double elapsed_ms = 0;

    const GraphRecord* find(const Multigraph& g) const;
};

/// Over all connected simple graphs with 2..max_nodes nodes and at most
/// max_edges edges: k* <= 2 iff no prism or pyramid minor; the minor-minimal
/// non-2-graphs are exactly the prism and pyramid within range; every SUBTOUR
/// vertex certifies as a facet and is recovered from its certificate; odd
/// right-hand sides are 1 with spanning-tree support; facets of graphs with
/// a cutnode compose from their blocks.
CampaignReport verify_main(const CampaignOptions& opts);

/// GTSP(g) = SUBTOUR(g) iff g has no prism, pyramid or m1 minor.
CampaignReport verify_fn(const CampaignOptions& opts);

/// Records sorted by canonical form; timing fields can be dropped to compare
/// runs byte for byte.
Json to_json(const CampaignReport& report, bool with_timing = true);

/// Re-checks the certificate of every failure in a report. Returns one line
/// per failure whose certificate does not support the claimed contradiction.
std::vector<std::string> revalidate_failures(const Json& report);

struct FamilyMember {
    std::string name;
    Multigraph graph;
    RatVector weights;
    Rational expected_lambda;
    std::optional<Integer> expected_rhs;
    FacetCertificate certificate;
    /// Empty when the member certifies as expected.
    std::string failure;
};

struct FamilyReport {
    std::vector<FamilyMember> members;
    bool growth_ok = true;
    Verdict verdict = Verdict::pass;
};

/// Certifies every member of a fixture {"members": [{"name", "graph",
/// "weights", "expected_lambda", "expected_min_int_rhs"}, ...]} and checks
/// that min_int_rhs at least doubles from one member to the next.
FamilyReport certify_family(const Json& fixture);
Json to_json(const FamilyReport& report);

}  // namespace cutdom
