#pragma once

#include "hyperricci/transport.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hyperricci {

/// Everything the engine derives for one hyperedge: kappa = 1 - W, the
/// distance decomposition of the optimal plan (kappa is also
/// mu0 - mu2 - 2*mu3), the plan itself, and optionally a dual
/// certificate. kappa always lies in [-2, 1].
struct CurvatureReport {
    std::string edge_id;
    Rational kappa;
    Rational wasserstein_value;
    MassDecomposition decomposition;
    TransportPlan plan;
    std::optional<DualCertificate> dual;
};

/// Ollivier-Ricci curvature of a hyperedge: one minus the transport cost
/// between the tail's in-measure and the head's out-measure under the
/// hyperdistance. Every mass-hole pair sits within distance 3; the engine
/// checks that and fails loudly rather than returning a bogus value.
CurvatureReport curvature(const DirectedHypergraph& h, const std::string& edge_id,
                          bool with_dual = false);

/// One report per hyperedge, in edge insertion order.
std::vector<CurvatureReport> curvature_all(const DirectedHypergraph& h,
                                           bool with_dual = false);

/// Minimum curvature over the |tail|*|head| unit edges this hyperedge
/// expands to in the corresponding digraph. kappa(e) never falls below
/// this value. The maximum over those unit edges is NOT an upper bound.
Rational digraph_lower_bound(const DirectedHypergraph& h, const std::string& edge_id);

/// Total overlap sum(min(mu, nu)) of the two neighbourhood measures; an
/// upper bound for kappa(e).
Rational overlap_upper_bound(const DirectedHypergraph& h, const std::string& edge_id);

struct PerturbationDelta {
    Rational before;
    Rational after;
};

/// Curvature of the edge before and after applying an edit to it.
PerturbationDelta perturbation_delta(const DirectedHypergraph& h,
                                     const std::string& edge_id, const EdgeEdit& edit);

} // namespace hyperricci
