#include "hyperricci/distance.hpp"

#include <deque>
#include <set>

namespace hyperricci {

std::map<VertexId, int> distances_from(const DirectedHypergraph& h, const VertexId& u) {
    std::map<VertexId, int> dist;
    dist[u] = 0;
    std::deque<VertexId> frontier{u};
    std::set<int> used_edges;
    while (!frontier.empty()) {
        const VertexId w = frontier.front();
        frontier.pop_front();
        const int depth = dist.at(w);
        for (int ei : h.outgoing_edges(w)) {
            // An edge's whole head lands at the same depth; once traversed
            // it cannot improve anything later.
            if (!used_edges.insert(ei).second) continue;
            for (const VertexId& next : h.edges()[ei].head) {
                if (dist.emplace(next, depth + 1).second) {
                    frontier.push_back(next);
                }
            }
        }
    }
    return dist;
}

HyperDistance distance(const DirectedHypergraph& h, const VertexId& u, const VertexId& v) {
    if (!h.has_vertex(v)) throw Error("unknown vertex '" + v.value + "'");
    if (u == v) {
        h.vertex(u); // existence check
        return HyperDistance::of(0);
    }
    const auto dist = distances_from(h, u);
    auto it = dist.find(v);
    return it == dist.end() ? HyperDistance::infinite() : HyperDistance::of(it->second);
}

std::vector<std::vector<HyperDistance>> distance_matrix(
    const DirectedHypergraph& h, const std::vector<VertexId>& sources,
    const std::vector<VertexId>& targets) {
    for (const VertexId& t : targets) h.vertex(t);
    std::vector<std::vector<HyperDistance>> rows;
    rows.reserve(sources.size());
    for (const VertexId& s : sources) {
        const auto dist = distances_from(h, s);
        std::vector<HyperDistance> row;
        row.reserve(targets.size());
        for (const VertexId& t : targets) {
            auto it = dist.find(t);
            row.push_back(it == dist.end() ? HyperDistance::infinite()
                                           : HyperDistance::of(it->second));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace hyperricci
