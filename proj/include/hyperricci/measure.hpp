#pragma once

#include "hyperricci/hypergraph.hpp"

#include <map>
#include <vector>

namespace hyperricci {

/// Sparse probability measure on the vertex set. Masses are exact
/// rationals and sum to 1.
struct DiscreteMeasure {
    std::map<VertexId, Rational> masses;

    Rational at(const VertexId& v) const {
        auto it = masses.find(v);
        return it == masses.end() ? Rational(0) : it->second;
    }
    void add(const VertexId& v, const Rational& mass) {
        if (mass == 0) return;
        masses[v] += mass;
    }
    Rational total() const {
        Rational t = 0;
        for (const auto& [v, m] : masses) t += m;
        return t;
    }
    std::vector<VertexId> support() const {
        std::vector<VertexId> s;
        s.reserve(masses.size());
        for (const auto& [v, m] : masses) s.push_back(v);
        return s;
    }

    friend bool operator==(const DiscreteMeasure&, const DiscreteMeasure&) = default;
};

/// In-neighbourhood measure of the tail of a hyperedge. Unit mass spreads
/// over the tail vertices; each tail vertex with incoming hyperedges
/// forwards its share onto the tails of those hyperedges, weighted by
/// vertex and edge weights. With every weight equal to 1 this agrees
/// exactly with tail_measure_unweighted.
///
/// A tail vertex that sits in the tail of one of its own incoming
/// hyperedges keeps that share at itself, so the total is always exactly 1.
DiscreteMeasure tail_measure(const DirectedHypergraph& h, const std::string& edge_id);

/// Out-neighbourhood measure of the head: mirror of tail_measure with
/// outgoing hyperedges and their heads.
DiscreteMeasure head_measure(const DirectedHypergraph& h, const std::string& edge_id);

/// Pure count form: shares are 1/n and 1/(n * in_degree * |tail(e')|),
/// ignoring all weights.
DiscreteMeasure tail_measure_unweighted(const DirectedHypergraph& h,
                                        const std::string& edge_id);
DiscreteMeasure head_measure_unweighted(const DirectedHypergraph& h,
                                        const std::string& edge_id);

} // namespace hyperricci
