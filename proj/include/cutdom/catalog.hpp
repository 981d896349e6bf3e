#pragma once

// Small-graph catalogs: canonical forms, exhaustive generation, graph6, and
// the named graphs used throughout the tests and campaigns.

#include "cutdom/graph.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cutdom {

inline constexpr int kMaxCatalogNodes = 8;
inline constexpr int kMaxCanonicalNodes = 11;

/// Isomorphism-class key of a simple graph. `code` packs the upper-triangle
/// adjacency bits column by column ((0,1), (0,2), (1,2), (0,3), ...), most
/// significant first, minimized over all relabelings that list nodes by
/// nondecreasing degree.
struct CanonicalForm {
    int nodes = 0;
    std::uint64_t code = 0;

    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

/// Requires a simple graph with at most kMaxCanonicalNodes nodes.
CanonicalForm canonical_form(const Multigraph& g);

/// Canonical form together with the labelling achieving it (perm[old] = new).
CanonicalForm canonical_form(const Multigraph& g, std::vector<NodeId>& perm);

/// The graph whose adjacency matrix is `form.code`, edges sorted by (v, u).
Multigraph graph_from_canonical(const CanonicalForm& form);

/// Every connected simple graph on n nodes with at most max_edges edges, one
/// representative per isomorphism class, sorted by (edge count, code). Throws
/// SizeGuardError for n > kMaxCatalogNodes and std::invalid_argument for n < 2.
std::vector<Multigraph> generate_catalog(int n, int max_edges);

/// Catalogs for 2..max_nodes concatenated.
std::vector<Multigraph> generate_catalogs(int max_nodes, int max_edges);

/// graph6 encoding (simple graphs, n <= 62).
std::string to_graph6(const Multigraph& g);
/// Throws std::invalid_argument on malformed input.
Multigraph from_graph6(std::string_view text);

namespace graphs {

Multigraph complete(int n);
Multigraph path(int n);
Multigraph cycle(int n);
Multigraph star(int leaves);

/// Triangular prism: triangles 0-1-2 and 3-4-5, matching 0-3, 1-4, 2-5.
/// Edge ids 0..5 are triangle edges, 6..8 the matching.
Multigraph prism();

/// K4 on {0,4,5,6} with the three edges at apex 0 subdivided by 1, 2, 3:
/// edges 0-1, 1-4, 0-2, 2-5, 0-3, 3-6 (ids 0..5), then triangle 4-5, 5-6, 4-6.
Multigraph pyramid();

/// Hubs 0 and 1 joined by paths 0-2-3-1, 0-4-5-1, 0-6-7-1.
Multigraph m1();

/// Two disjoint triangles on nodes 0-2 and 3-5.
Multigraph two_triangles();

}  // namespace graphs

}  // namespace cutdom
