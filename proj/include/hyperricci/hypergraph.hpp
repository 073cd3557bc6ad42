#pragma once

#include "hyperricci/rational.hpp"

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace hyperricci {

/// Opaque vertex token. Ordering is lexicographic on the id string and is
/// the tie-breaking order used everywhere deterministic output is promised.
struct VertexId {
    std::string value;

    auto operator<=>(const VertexId&) const = default;
};

struct Vertex {
    VertexId id;
    std::string label;    // optional; collisions permitted
    Rational weight = 1;  // strictly positive

    friend bool operator==(const Vertex&, const Vertex&) = default;
};

/// Directed hyperedge tail -> head. Both sides are vertex sets: nonempty,
/// no duplicates. tail and head may intersect (hyperloops are legal).
struct Hyperedge {
    std::string id;
    std::vector<VertexId> tail;
    std::vector<VertexId> head;
    Rational weight = 1;

    bool in_tail(const VertexId& v) const;
    bool in_head(const VertexId& v) const;

    friend bool operator==(const Hyperedge&, const Hyperedge&) = default;
};

enum class ViolationKind {
    duplicate_vertex_id,
    duplicate_edge_id,
    unknown_vertex,
    empty_tail,
    empty_head,
    duplicate_in_tail,
    duplicate_in_head,
    nonpositive_vertex_weight,
    nonpositive_edge_weight,
};

struct Violation {
    ViolationKind kind;
    std::string subject;  // offending vertex or edge id
    std::string detail;
};

/// Vertex set plus a multiset of directed hyperedges. Parallel hyperedges
/// (same tail and head, distinct ids) are allowed and count with
/// multiplicity in degrees. Immutable after construction; edits return new
/// hypergraphs.
class DirectedHypergraph {
public:
    DirectedHypergraph() = default;
    DirectedHypergraph(std::vector<Vertex> vertices, std::vector<Hyperedge> edges);

    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<Hyperedge>& edges() const { return edges_; }

    bool has_vertex(const VertexId& v) const;
    const Vertex& vertex(const VertexId& v) const;
    const Hyperedge& edge(const std::string& edge_id) const;
    bool has_edge(const std::string& edge_id) const;

    /// Indices (into edges()) of hyperedges with v in their head.
    const std::vector<int>& incoming_edges(const VertexId& v) const;
    /// Indices of hyperedges with v in their tail.
    const std::vector<int>& outgoing_edges(const VertexId& v) const;

    bool all_weights_unit() const;

    friend bool operator==(const DirectedHypergraph& a, const DirectedHypergraph& b) {
        return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
    }

private:
    std::vector<Vertex> vertices_;
    std::vector<Hyperedge> edges_;
    std::map<VertexId, int> vertex_index_;
    std::map<std::string, int> edge_index_;
    std::map<VertexId, std::vector<int>> incoming_;
    std::map<VertexId, std::vector<int>> outgoing_;

    void require_vertex(const VertexId& v) const;
};

/// All invariant violations, empty iff the hypergraph is well formed.
std::vector<Violation> validate(const DirectedHypergraph& h);

/// Number of hyperedges whose head contains v (with multiplicity).
int in_degree(const DirectedHypergraph& h, const VertexId& v);
/// Number of hyperedges whose tail contains v (with multiplicity).
int out_degree(const DirectedHypergraph& h, const VertexId& v);

/// Expand every hyperedge A -> B into its |A|*|B| unit edges u -> v.
/// Vertex set and weights carry over; expansion edge ids derive from the
/// parent id so parallel expansions stay distinct.
DirectedHypergraph corresponding_digraph(const DirectedHypergraph& h);

struct EdgeEdit {
    std::vector<VertexId> remove_tail;
    std::vector<VertexId> remove_head;
    std::vector<VertexId> add_tail;
    std::vector<VertexId> add_head;
};

/// Replace edge `edge_id` by its edited form; all other edges and the
/// vertex set are unchanged. Throws if a removal is not a current member,
/// an addition is unknown or already present, or a side would end empty.
DirectedHypergraph edit_edge(const DirectedHypergraph& h, const std::string& edge_id,
                             const EdgeEdit& edit);

} // namespace hyperricci
