#include "hyperricci/curvature.hpp"

#include <algorithm>
#include <map>

namespace hyperricci {

namespace {

// Cost oracle backed by a precomputed support-to-support distance matrix.
CostFn support_cost(const DirectedHypergraph& h, const std::vector<VertexId>& sources,
                    const std::vector<VertexId>& targets) {
    auto matrix = distance_matrix(h, sources, targets);
    std::map<VertexId, int> source_index, target_index;
    for (int i = 0; i < static_cast<int>(sources.size()); ++i) source_index[sources[i]] = i;
    for (int j = 0; j < static_cast<int>(targets.size()); ++j) target_index[targets[j]] = j;
    return [matrix = std::move(matrix), source_index = std::move(source_index),
            target_index = std::move(target_index)](const VertexId& u, const VertexId& v) {
        return matrix[static_cast<std::size_t>(source_index.at(u))]
                     [static_cast<std::size_t>(target_index.at(v))];
    };
}

} // namespace

CurvatureReport curvature(const DirectedHypergraph& h, const std::string& edge_id,
                          bool with_dual) {
    const DiscreteMeasure mu = tail_measure(h, edge_id);
    const DiscreteMeasure nu = head_measure(h, edge_id);
    const std::vector<VertexId> sources = mu.support();
    const std::vector<VertexId> targets = nu.support();
    const CostFn cost = support_cost(h, sources, targets);

    // Mass always reaches a hole within three hyperedges (in-neighbour ->
    // tail -> head -> out-neighbour). A violation here means the measures
    // were built wrongly, so stop rather than report a bogus kappa.
    for (const VertexId& u : sources) {
        for (const VertexId& v : targets) {
            const HyperDistance d = cost(u, v);
            if (!d.is_finite() || d.hops() > 3) {
                throw Error("measure supports of edge '" + edge_id +
                            "' violate the distance-3 guarantee at (" + u.value +
                            ", " + v.value + ")");
            }
        }
    }

    WassersteinResult transport = wasserstein(mu, nu, cost);

    CurvatureReport report;
    report.edge_id = edge_id;
    report.wasserstein_value = transport.value;
    report.kappa = 1 - transport.value;
    report.decomposition = decompose(transport.plan, cost);
    report.plan = std::move(transport.plan);

    const MassDecomposition& dec = report.decomposition;
    if (dec.total() != 1 || dec.transport_cost() != report.wasserstein_value ||
        report.kappa != dec.mu0 - dec.mu2 - 2 * dec.mu3) {
        throw Error("internal: decomposition identities failed for edge '" + edge_id + "'");
    }
    if (report.kappa < -2 || report.kappa > 1) {
        throw Error("internal: curvature outside [-2, 1] for edge '" + edge_id + "'");
    }

    if (with_dual) report.dual = solve_dual(mu, nu, cost);
    return report;
}

std::vector<CurvatureReport> curvature_all(const DirectedHypergraph& h, bool with_dual) {
    std::vector<CurvatureReport> reports;
    reports.reserve(h.edges().size());
    for (const Hyperedge& e : h.edges()) {
        reports.push_back(curvature(h, e.id, with_dual));
    }
    return reports;
}

Rational digraph_lower_bound(const DirectedHypergraph& h, const std::string& edge_id) {
    const Hyperedge& e = h.edge(edge_id);
    const DirectedHypergraph digraph = corresponding_digraph(h);
    Rational best;
    bool first = true;
    for (const VertexId& u : e.tail) {
        for (const VertexId& v : e.head) {
            const std::string unit_id = edge_id + "/" + u.value + ">" + v.value;
            const Rational k = curvature(digraph, unit_id).kappa;
            if (first || k < best) {
                best = k;
                first = false;
            }
        }
    }
    return best;
}

Rational overlap_upper_bound(const DirectedHypergraph& h, const std::string& edge_id) {
    const DiscreteMeasure mu = tail_measure(h, edge_id);
    const DiscreteMeasure nu = head_measure(h, edge_id);
    Rational overlap = 0;
    for (const auto& [v, m] : mu.masses) {
        overlap += std::min(m, nu.at(v));
    }
    return overlap;
}

PerturbationDelta perturbation_delta(const DirectedHypergraph& h,
                                     const std::string& edge_id, const EdgeEdit& edit) {
    PerturbationDelta delta;
    delta.before = curvature(h, edge_id).kappa;
    const DirectedHypergraph edited = edit_edge(h, edge_id, edit);
    delta.after = curvature(edited, edge_id).kappa;
    return delta;
}

} // namespace hyperricci
