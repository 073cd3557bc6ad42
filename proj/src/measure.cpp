#include "hyperricci/measure.hpp"

namespace hyperricci {

namespace {

// Shared skeleton for the four builders. tail_measure walks incoming
// hyperedges of tail vertices and spreads over their tails; head_measure
// walks outgoing hyperedges of head vertices and spreads over their heads.
struct Direction {
    const std::vector<VertexId>& (*side)(const Hyperedge&);
    const std::vector<int>& (DirectedHypergraph::*neighbour_edges)(const VertexId&) const;
};

const Direction kTailward{
    [](const Hyperedge& e) -> const std::vector<VertexId>& { return e.tail; },
    &DirectedHypergraph::incoming_edges,
};
const Direction kHeadward{
    [](const Hyperedge& e) -> const std::vector<VertexId>& { return e.head; },
    &DirectedHypergraph::outgoing_edges,
};

DiscreteMeasure build_weighted(const DirectedHypergraph& h, const std::string& edge_id,
                               const Direction& dir) {
    const Hyperedge& e = h.edge(edge_id);
    const std::vector<VertexId>& anchors = dir.side(e);

    Rational anchor_weight_sum = 0;
    for (const VertexId& x : anchors) anchor_weight_sum += h.vertex(x).weight;

    DiscreteMeasure mu;
    for (const VertexId& x : anchors) {
        const Rational anchor_share = h.vertex(x).weight / anchor_weight_sum;
        const std::vector<int>& neighbour = (h.*dir.neighbour_edges)(x);
        if (neighbour.empty()) {
            mu.add(x, anchor_share);
            continue;
        }
        Rational edge_weight_sum = 0;
        for (int ei : neighbour) edge_weight_sum += h.edges()[ei].weight;
        for (int ei : neighbour) {
            const Hyperedge& other = h.edges()[ei];
            const Rational edge_share = other.weight / edge_weight_sum;
            const std::vector<VertexId>& spread = dir.side(other);
            Rational spread_weight_sum = 0;
            for (const VertexId& z : spread) spread_weight_sum += h.vertex(z).weight;
            for (const VertexId& z : spread) {
                mu.add(z, anchor_share * edge_share *
                              (h.vertex(z).weight / spread_weight_sum));
            }
        }
    }
    return mu;
}

DiscreteMeasure build_unweighted(const DirectedHypergraph& h, const std::string& edge_id,
                                 const Direction& dir) {
    const Hyperedge& e = h.edge(edge_id);
    const std::vector<VertexId>& anchors = dir.side(e);
    const Rational n = static_cast<int>(anchors.size());

    DiscreteMeasure mu;
    for (const VertexId& x : anchors) {
        const std::vector<int>& neighbour = (h.*dir.neighbour_edges)(x);
        if (neighbour.empty()) {
            mu.add(x, 1 / n);
            continue;
        }
        const Rational degree = static_cast<int>(neighbour.size());
        for (int ei : neighbour) {
            const std::vector<VertexId>& spread = dir.side(h.edges()[ei]);
            const Rational share = 1 / (n * degree * static_cast<int>(spread.size()));
            for (const VertexId& z : spread) mu.add(z, share);
        }
    }
    return mu;
}

} // namespace

DiscreteMeasure tail_measure(const DirectedHypergraph& h, const std::string& edge_id) {
    return build_weighted(h, edge_id, kTailward);
}

DiscreteMeasure head_measure(const DirectedHypergraph& h, const std::string& edge_id) {
    return build_weighted(h, edge_id, kHeadward);
}

DiscreteMeasure tail_measure_unweighted(const DirectedHypergraph& h,
                                        const std::string& edge_id) {
    return build_unweighted(h, edge_id, kTailward);
}

DiscreteMeasure head_measure_unweighted(const DirectedHypergraph& h,
                                        const std::string& edge_id) {
    return build_unweighted(h, edge_id, kHeadward);
}

} // namespace hyperricci
