#pragma once

// Minor containment for the fixed forbidden-minor patterns, with branch-set
// certificates, and minor-minimality of non-k-graphs.

#include "cutdom/graph.hpp"
#include "cutdom/polyhedron.hpp"

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cutdom {

inline constexpr int kMaxMinorHostNodes = 12;

struct Pattern {
    std::string name;
    Multigraph graph;
};

/// prism, pyramid and m1, with the node numbering of graphs::prism() etc.
std::span<const Pattern> standard_patterns();
/// Throws std::invalid_argument for an unknown name.
const Pattern& pattern_by_name(std::string_view name);

/// branch_sets[p] is the sorted host node set contracted onto pattern node p;
/// edge_witness[f] is a host edge joining the branch sets of the ends of
/// pattern edge f.
struct MinorModel {
    std::vector<std::vector<NodeId>> branch_sets;
    std::vector<EdgeId> edge_witness;
};

/// Checks disjointness, nonemptiness and connectivity of the branch sets and
/// that witnesses are distinct host edges joining the right sets. On failure
/// `why` (if given) receives a short reason.
bool verify_minor_model(const Multigraph& host, const Multigraph& pattern, const MinorModel& model,
                        std::string* why = nullptr);

/// Exhaustive search: in a connected host every model extends to a partition
/// of the nodes into connected branch sets, so partitions into exactly
/// |V(pattern)| connected parts are enumerated and the pattern is embedded
/// into each quotient graph. Disconnected hosts are searched per component.
/// The host must be simple; throws SizeGuardError beyond kMaxMinorHostNodes.
std::optional<MinorModel> has_minor(const Multigraph& host, const Pattern& pattern);

using KstarFunction = std::function<Integer(const Multigraph&)>;

struct MinimalityStep {
    MinorStep::Kind kind;
    EdgeId edge;
    Integer kstar;
};

struct MinimalityReport {
    bool minimal = false;
    Integer kstar;
    std::vector<MinimalityStep> steps;
};

/// kstar(g) > k and every single edge deletion or contraction (simplified)
/// has kstar <= k. One step suffices because k* is minor-monotone.
/// `kstar_fn` defaults to kstar() and lets callers plug in a cache.
MinimalityReport is_minor_minimal_non_k(const Multigraph& g, int k, const KstarFunction& kstar_fn = {});

}  // namespace cutdom
