#pragma once

// SUBTOUR(G) in H-representation, exact vertex enumeration by double
// description, the facet list of CUT(G) through blocking polarity, k*(G),
// tour-vector classification and the arborescence extended formulation.

#include "cutdom/cutspace.hpp"
#include "cutdom/graph.hpp"
#include "cutdom/ratmat.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace cutdom {

inline constexpr int kMaxSubtourNodes = 16;
inline constexpr std::size_t kDefaultRayBudget = 2'000'000;
inline constexpr int kMaxEfNodes = 5;
inline constexpr int kMaxEfEdges = 8;

/// <a, x> >= b
struct HalfSpace {
    RatVector a;
    Rational b;
};

struct HRep {
    std::size_t dimension = 0;
    std::vector<HalfSpace> rows;
};

struct VRep {
    std::vector<RatVector> vertices;
    std::vector<RatVector> rays;
    /// Largest number of rays held at once by the double description run.
    std::size_t peak_rays = 0;
};

struct DdOptions {
    std::size_t ray_budget = kDefaultRayBudget;
};

/// x(delta(S)) >= 2 for every proper cut (in enumerate_proper_cuts order),
/// then x(e) >= 0 for every edge. Throws std::invalid_argument on a
/// disconnected graph and SizeGuardError beyond kMaxSubtourNodes nodes.
HRep build_subtour_hrep(const Multigraph& g);

/// Vertices and extreme rays of a pointed polyhedron. Rows are inserted by
/// increasing number of nonzeros (homogenized), rays are kept as primitive
/// integer vectors and adjacency is decided combinatorially. Every vertex is
/// checked for feasibility and for a tight subsystem of full rank. Vertices
/// and rays are sorted lexicographically.
///
/// Throws BudgetExceededError when more than opts.ray_budget rays are alive,
/// std::invalid_argument if the polyhedron is not pointed.
VRep enumerate_vertices(const HRep& h, const DdOptions& opts = {});

VRep subtour_vertices(const Multigraph& g, const DdOptions& opts = {});

/// One certificate per vertex of SUBTOUR(g) (so every lambda is 2), in
/// vertex order. Throws InvariantViolation if a vertex fails to certify.
std::vector<FacetCertificate> facet_list(const Multigraph& g, const DdOptions& opts = {});

/// The point of SUBTOUR(g) determined by a facet certificate: the unique
/// solution of x(delta(S)) = 2 for S in the certificate's family, with x = 0
/// off the support. nullopt if that system is singular or the solution is
/// not in SUBTOUR(g).
std::optional<RatVector> vertex_from_certificate(const Multigraph& g, const FacetCertificate& cert);

/// 0 for a disconnected graph, otherwise the largest minimum-integer-form
/// right-hand side over the facets of CUT(g). Loops and parallel edges are
/// removed first since they do not change the value.
Integer kstar(const Multigraph& g, const DdOptions& opts = {});

/// x integral and nonnegative, x(delta(v)) even at every node, and the
/// support connected and touching every node.
bool is_tour_vector(const Multigraph& g, const RatVector& x);

struct GtspComparison {
    bool equal = true;
    std::vector<RatVector> non_tour_vertices;
    /// Integral non-tour vertex if there is one, else the first non-tour vertex.
    std::optional<RatVector> counterexample;
};

/// GTSP(g) = SUBTOUR(g) iff every vertex of SUBTOUR(g) is a tour vector.
GtspComparison gtsp_equals_subtour(const Multigraph& g, const DdOptions& opts = {});

struct BlockComposition {
    bool applicable = false;
    bool holds = true;
    std::size_t block_count = 0;
    std::size_t composed = 0;
    std::size_t direct = 0;
};

/// For a connected graph with a cutnode, composes the facets of the blocks
/// (one normalized facet per block, summed) and compares the resulting set
/// of minimum integer forms with the facet list of g itself (taken from
/// `known_facets` when given). Requires a simple graph.
BlockComposition check_block_composition(const Multigraph& g, const DdOptions& opts = {},
                                         const std::vector<FacetCertificate>* known_facets = nullptr);

/// Arborescence extended formulation rooted at `root`: arcs 2e = (u, v) and
/// 2e+1 = (v, u) for edge e = uv, one covering row per r-arborescence.
struct EfSystem {
    NodeId root = 0;
    std::vector<std::pair<NodeId, NodeId>> arcs;
    std::vector<std::vector<int>> arborescences;
};

EfSystem build_ef_system(const Multigraph& g, NodeId root);

/// Number of spanning trees by the matrix-tree theorem.
Integer spanning_tree_count(const Multigraph& g);

struct EfReport {
    bool holds = false;
    NodeId root = 0;
    std::size_t arborescences = 0;
    std::size_t lifted_vertices = 0;
    std::size_t projected_vertices = 0;
    std::vector<std::string> problems;
};

/// Projects the vertices of {y >= 0, y(B) >= 1 for every r-arborescence B}
/// through x(uv) = y(u,v) + y(v,u) and checks that the projection equals
/// CUT(g): every projected vertex satisfies the facet list of CUT(g), and
/// every bond of g is a projected vertex. Throws SizeGuardError beyond
/// kMaxEfNodes nodes or kMaxEfEdges edges.
EfReport ef_projection_check(const Multigraph& g, NodeId root, const DdOptions& opts = {});

}  // namespace cutdom
