#pragma once

#include "hyperricci/hypergraph.hpp"

#include <map>
#include <vector>

namespace hyperricci {

/// Directed hyperdistance value: a nonnegative hyperedge count, or
/// unreachable. Unreachable is a legitimate value, not an error.
class HyperDistance {
public:
    static HyperDistance infinite() { return HyperDistance(); }
    static HyperDistance of(int hops) { return HyperDistance(hops); }

    bool is_infinite() const { return hops_ < 0; }
    bool is_finite() const { return hops_ >= 0; }
    /// Hop count; only meaningful when finite.
    int hops() const { return hops_; }

    friend bool operator==(const HyperDistance&, const HyperDistance&) = default;

private:
    HyperDistance() = default;
    explicit HyperDistance(int hops) : hops_(hops) {}
    int hops_ = -1;
};

/// Minimum number of directed hyperedges traversed to go from u to v:
/// the shortest sequence e1..ek with u in tail(e1), v in head(ek) and
/// head(ei) meeting tail(e(i+1)). 0 when u == v.
HyperDistance distance(const DirectedHypergraph& h, const VertexId& u, const VertexId& v);

/// Hop counts from u to every reachable vertex (one BFS).
std::map<VertexId, int> distances_from(const DirectedHypergraph& h, const VertexId& u);

/// Entry (i, j) is distance(h, sources[i], targets[j]); one BFS per source.
std::vector<std::vector<HyperDistance>> distance_matrix(
    const DirectedHypergraph& h, const std::vector<VertexId>& sources,
    const std::vector<VertexId>& targets);

} // namespace hyperricci
