#include "hyperricci/hypergraph.hpp"

#include <algorithm>
#include <set>

namespace hyperricci {

namespace {

bool contains(const std::vector<VertexId>& side, const VertexId& v) {
    return std::find(side.begin(), side.end(), v) != side.end();
}

const std::vector<int> kNoEdges;

} // namespace

bool Hyperedge::in_tail(const VertexId& v) const { return contains(tail, v); }
bool Hyperedge::in_head(const VertexId& v) const { return contains(head, v); }

DirectedHypergraph::DirectedHypergraph(std::vector<Vertex> vertices,
                                       std::vector<Hyperedge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    for (int i = 0; i < static_cast<int>(vertices_.size()); ++i) {
        vertex_index_.emplace(vertices_[i].id, i); // first occurrence wins
    }
    for (int i = 0; i < static_cast<int>(edges_.size()); ++i) {
        edge_index_.emplace(edges_[i].id, i);
        for (const VertexId& v : edges_[i].tail) outgoing_[v].push_back(i);
        for (const VertexId& v : edges_[i].head) incoming_[v].push_back(i);
    }
}

bool DirectedHypergraph::has_vertex(const VertexId& v) const {
    return vertex_index_.count(v) != 0;
}

void DirectedHypergraph::require_vertex(const VertexId& v) const {
    if (!has_vertex(v)) throw Error("unknown vertex '" + v.value + "'");
}

const Vertex& DirectedHypergraph::vertex(const VertexId& v) const {
    require_vertex(v);
    return vertices_[vertex_index_.at(v)];
}

bool DirectedHypergraph::has_edge(const std::string& edge_id) const {
    return edge_index_.count(edge_id) != 0;
}

const Hyperedge& DirectedHypergraph::edge(const std::string& edge_id) const {
    auto it = edge_index_.find(edge_id);
    if (it == edge_index_.end()) throw Error("unknown edge '" + edge_id + "'");
    return edges_[it->second];
}

const std::vector<int>& DirectedHypergraph::incoming_edges(const VertexId& v) const {
    require_vertex(v);
    auto it = incoming_.find(v);
    return it == incoming_.end() ? kNoEdges : it->second;
}

const std::vector<int>& DirectedHypergraph::outgoing_edges(const VertexId& v) const {
    require_vertex(v);
    auto it = outgoing_.find(v);
    return it == outgoing_.end() ? kNoEdges : it->second;
}

bool DirectedHypergraph::all_weights_unit() const {
    for (const Vertex& v : vertices_) {
        if (v.weight != 1) return false;
    }
    for (const Hyperedge& e : edges_) {
        if (e.weight != 1) return false;
    }
    return true;
}

std::vector<Violation> validate(const DirectedHypergraph& h) {
    std::vector<Violation> out;
    std::set<VertexId> seen_vertices;
    for (const Vertex& v : h.vertices()) {
        if (!seen_vertices.insert(v.id).second) {
            out.push_back({ViolationKind::duplicate_vertex_id, v.id.value,
                           "vertex id repeats"});
        }
        if (v.weight <= 0) {
            out.push_back({ViolationKind::nonpositive_vertex_weight, v.id.value,
                           "vertex weight must be positive"});
        }
    }
    std::set<std::string> seen_edges;
    for (const Hyperedge& e : h.edges()) {
        if (!seen_edges.insert(e.id).second) {
            out.push_back({ViolationKind::duplicate_edge_id, e.id, "edge id repeats"});
        }
        if (e.tail.empty()) {
            out.push_back({ViolationKind::empty_tail, e.id, "tail must be nonempty"});
        }
        if (e.head.empty()) {
            out.push_back({ViolationKind::empty_head, e.id, "head must be nonempty"});
        }
        if (e.weight <= 0) {
            out.push_back({ViolationKind::nonpositive_edge_weight, e.id,
                           "edge weight must be positive"});
        }
        std::set<VertexId> side;
        for (const VertexId& v : e.tail) {
            if (!side.insert(v).second) {
                out.push_back({ViolationKind::duplicate_in_tail, e.id,
                               "vertex '" + v.value + "' repeats in tail"});
            }
            if (!seen_vertices.count(v)) {
                out.push_back({ViolationKind::unknown_vertex, e.id,
                               "tail references unknown vertex '" + v.value + "'"});
            }
        }
        side.clear();
        for (const VertexId& v : e.head) {
            if (!side.insert(v).second) {
                out.push_back({ViolationKind::duplicate_in_head, e.id,
                               "vertex '" + v.value + "' repeats in head"});
            }
            if (!seen_vertices.count(v)) {
                out.push_back({ViolationKind::unknown_vertex, e.id,
                               "head references unknown vertex '" + v.value + "'"});
            }
        }
    }
    return out;
}

int in_degree(const DirectedHypergraph& h, const VertexId& v) {
    return static_cast<int>(h.incoming_edges(v).size());
}

int out_degree(const DirectedHypergraph& h, const VertexId& v) {
    return static_cast<int>(h.outgoing_edges(v).size());
}

DirectedHypergraph corresponding_digraph(const DirectedHypergraph& h) {
    std::vector<Hyperedge> unit_edges;
    for (const Hyperedge& e : h.edges()) {
        for (const VertexId& u : e.tail) {
            for (const VertexId& v : e.head) {
                Hyperedge unit;
                unit.id = e.id + "/" + u.value + ">" + v.value;
                unit.tail = {u};
                unit.head = {v};
                unit.weight = e.weight;
                unit_edges.push_back(std::move(unit));
            }
        }
    }
    return DirectedHypergraph(h.vertices(), std::move(unit_edges));
}

DirectedHypergraph edit_edge(const DirectedHypergraph& h, const std::string& edge_id,
                             const EdgeEdit& edit) {
    const Hyperedge& old = h.edge(edge_id);

    auto apply = [&](const std::vector<VertexId>& side,
                     const std::vector<VertexId>& removals,
                     const std::vector<VertexId>& additions,
                     const char* side_name) {
        std::vector<VertexId> result = side;
        for (const VertexId& v : removals) {
            auto it = std::find(result.begin(), result.end(), v);
            if (it == result.end()) {
                throw Error("cannot remove '" + v.value + "': not in " +
                            side_name + " of edge '" + edge_id + "'");
            }
            result.erase(it);
        }
        std::vector<VertexId> added = additions;
        std::sort(added.begin(), added.end());
        for (const VertexId& v : added) {
            if (!h.has_vertex(v)) {
                throw Error("cannot add unknown vertex '" + v.value + "'");
            }
            if (contains(result, v)) {
                throw Error("vertex '" + v.value + "' already in " + side_name +
                            " of edge '" + edge_id + "'");
            }
            result.push_back(v);
        }
        if (result.empty()) {
            throw Error(std::string("edit would empty the ") + side_name +
                        " of edge '" + edge_id + "'");
        }
        return result;
    };

    Hyperedge edited = old;
    edited.tail = apply(old.tail, edit.remove_tail, edit.add_tail, "tail");
    edited.head = apply(old.head, edit.remove_head, edit.add_head, "head");

    std::vector<Hyperedge> edges = h.edges();
    for (Hyperedge& e : edges) {
        if (e.id == edge_id) {
            e = edited;
            break;
        }
    }
    return DirectedHypergraph(h.vertices(), std::move(edges));
}

} // namespace hyperricci
