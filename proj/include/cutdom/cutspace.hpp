#pragma once

// Cuts, minimum cuts, laminar bases of minimum cuts, and the facet
// certifier for inequalities <c, x> >= lambda over the cut dominant.

#include "cutdom/graph.hpp"
#include "cutdom/ratmat.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cutdom {

inline constexpr int kMaxCutNodes = 24;

/// A proper cut delta(S). `side` is the shore that avoids node 0, so S and
/// V \ S produce identical values.
struct Cut {
    NodeSet side = 0;
    std::vector<EdgeId> edges;

    RatVector char_vec(int edge_count) const;
    friend bool operator==(const Cut&, const Cut&) = default;
};

/// Throws std::invalid_argument unless 0 != S != V.
Cut make_cut(const Multigraph& g, NodeSet side);

/// One cut per shore pair, ordered by (|side|, side). Throws SizeGuardError
/// beyond kMaxCutNodes nodes.
std::vector<Cut> enumerate_proper_cuts(const Multigraph& g);

/// Minimum c-cost of a proper cut. Throws std::invalid_argument on negative
/// weights or a length mismatch.
Rational lambda(const Multigraph& g, const RatVector& c);
std::vector<Cut> minimum_cuts(const Multigraph& g, const RatVector& c);
/// Same, over a precomputed cut list.
std::vector<Cut> minimum_cuts(std::span<const Cut> cuts, const RatVector& c, Rational* lambda_out = nullptr);

struct LaminarFamily {
    std::vector<NodeSet> sets;

    bool is_laminar() const;
    std::size_t size() const { return sets.size(); }
};

/// Smaller shore of the cut (ties broken towards the shore avoiding node 0).
/// Applied to a cross-free family this yields a laminar family.
NodeSet small_shore(const Multigraph& g, NodeSet side);

/// Laminar family of minimum cuts whose restricted cut vectors are
/// independent and span the uncrossing closure of `cuts`.
///
/// `cuts` must be minimum with respect to c. The input is closed under
/// S∩T / S∪T for crossing shores (these are minimum by submodularity), a
/// maximal laminar subfamily is taken greedily in (|S|, S) order, and an
/// independent subset is extracted greedily in the same order. Vectors are
/// restricted to the support E^c. Sets are reported as small shores.
LaminarFamily laminar_basis(const Multigraph& g, const RatVector& c, std::span<const Cut> cuts);

enum class FacetStatus { facet, not_facet, zero_lambda };

struct FacetCertificate {
    RatVector weight;
    Rational lambda;
    LaminarFamily family;
    std::vector<EdgeId> support;
    std::size_t rank = 0;
    IntegerForm min_int_form;
    FacetStatus status = FacetStatus::not_facet;
    std::optional<int> witness_for_k;

    bool is_facet() const { return status == FacetStatus::facet; }
    /// Right-hand side of the minimum integer form; 0 when lambda = 0.
    const Integer& min_int_rhs() const { return min_int_form.rhs; }
};

/// Decides whether <c, x> >= lambda^c(g) defines a facet of CUT(g): true iff
/// the minimum cuts restricted to E^c have rank |E^c|. lambda = 0 yields a
/// zero_lambda certificate instead of an error.
FacetCertificate certify_facet(const Multigraph& g, const RatVector& c);
FacetCertificate certify_facet(const Multigraph& g, std::span<const Cut> cuts, const RatVector& c);

/// Facet whose minimum-integer-form right-hand side exceeds k.
bool is_witness(const Multigraph& g, const RatVector& c, int k);

/// An odd minimum-integer-form RHS must be 1 with a spanning-tree support.
/// Vacuously true for even right-hand sides and non-facets.
bool odd_rhs_property_holds(const Multigraph& g, const FacetCertificate& cert);

/// level(S) = 0 for inclusion-minimal members, else 1 + max level of the
/// members properly inside S. Parallel to family.sets.
std::vector<int> levels(const LaminarFamily& family);

struct StructuralCheck {
    std::string name;
    bool applicable = true;
    bool passed = true;
    std::string detail;
};

struct StructuralReport {
    std::vector<StructuralCheck> checks;

    bool all_passed() const;
    const StructuralCheck* find(const std::string& name) const;
};

/// Evaluates the structural properties of witnesses of minor-minimal
/// non-k-graphs on (g, c, family), with c rescaled so lambda = k:
///   every_edge_in_two_cuts  each support edge lies in >= 2 family cuts
///   cost_at_most_half_k     c(e) <= k/2
///   level0_singletons       minimal members are singletons
///   level1_adjacent_pairs   level-1 members are edges uv with {u},{v} in the
///                           family and c(uv) = c(d(u)-uv) = c(d(v)-uv) = k/2
///   has_level1_set          (k >= 2)
///   half_integral           (k = 2) c(e) in {1/2, 1} for every edge
///   two_connected
///   two_cutset_shape        (k = 2) every 2-cutset {u,v} splits off a single
///                           node w with c(uw) = c(vw) = 1, u and v are not
///                           adjacent, and not both d(u), d(v) are minimum
StructuralReport structural_report(const Multigraph& g, const RatVector& c, int k, const LaminarFamily& family);

}  // namespace cutdom
