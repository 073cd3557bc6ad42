#include "hyperricci/families.hpp"

#include "hyperricci/curvature.hpp"

#include <random>

namespace hyperricci {

const char* family_name(Family f) {
    switch (f) {
        case Family::ricci1_tripartite: return "ricci1-tripartite";
        case Family::flat_bipartite: return "flat-bipartite";
        case Family::flat_tripartite: return "flat-tripartite";
        case Family::ricci_neg2_quadripartite: return "ricci-neg2-quadripartite";
        case Family::hypertree: return "hypertree";
    }
    return "unknown";
}

Family parse_family(const std::string& name) {
    for (Family f : {Family::ricci1_tripartite, Family::flat_bipartite,
                     Family::flat_tripartite, Family::ricci_neg2_quadripartite,
                     Family::hypertree}) {
        if (name == family_name(f)) return f;
    }
    throw Error("unknown family '" + name + "'");
}

Rational nominal_kappa(Family f) {
    switch (f) {
        case Family::ricci1_tripartite: return 1;
        case Family::flat_bipartite:
        case Family::flat_tripartite: return 0;
        case Family::ricci_neg2_quadripartite: return -2;
        case Family::hypertree:
            throw Error("hypertrees have per-edge curvature, not a nominal constant");
    }
    throw Error("unknown family");
}

namespace {

int family_arity(Family f) {
    switch (f) {
        case Family::ricci1_tripartite: return 3;
        case Family::flat_bipartite: return 2;
        case Family::flat_tripartite: return 3;
        case Family::ricci_neg2_quadripartite: return 4;
        case Family::hypertree: return 1; // hyperedge count
    }
    return 0;
}

struct PartitionBuilder {
    std::vector<Vertex> vertices;
    std::vector<Hyperedge> edges;
    std::vector<std::vector<VertexId>> sets;
    int next_edge = 1;

    void add_set(char letter, int size) {
        std::vector<VertexId> ids;
        for (int i = 1; i <= size; ++i) {
            VertexId id{std::string(1, letter) + std::to_string(i)};
            vertices.push_back({id, "", 1});
            ids.push_back(std::move(id));
        }
        sets.push_back(std::move(ids));
    }

    // Tile the complete connection pattern from set `from` to set `to`
    // with block hyperedges; (1, 1) blocks are plain unit edges.
    void connect(int from, int to, const Granularity& g) {
        const auto& src = sets[static_cast<std::size_t>(from)];
        const auto& dst = sets[static_cast<std::size_t>(to)];
        for (std::size_t i = 0; i < src.size(); i += static_cast<std::size_t>(g.tail)) {
            for (std::size_t j = 0; j < dst.size(); j += static_cast<std::size_t>(g.head)) {
                Hyperedge e;
                e.id = "e" + std::to_string(next_edge++);
                e.tail.assign(src.begin() + static_cast<long>(i),
                              src.begin() + static_cast<long>(i + static_cast<std::size_t>(g.tail)));
                e.head.assign(dst.begin() + static_cast<long>(j),
                              dst.begin() + static_cast<long>(j + static_cast<std::size_t>(g.head)));
                edges.push_back(std::move(e));
            }
        }
    }

    DirectedHypergraph build() {
        return DirectedHypergraph(std::move(vertices), std::move(edges));
    }
};

DirectedHypergraph generate_partition_family(const FamilySpec& spec) {
    const Granularity& g = spec.granularity;
    if (g.tail < 1 || g.head < 1) throw Error("block sizes must be positive");
    for (int size : spec.sizes) {
        if (!g.is_unit() && (size % g.tail != 0 || size % g.head != 0)) {
            throw Error("block sizes must divide every partition size");
        }
    }

    PartitionBuilder b;
    for (std::size_t i = 0; i < spec.sizes.size(); ++i) {
        b.add_set(static_cast<char>('a' + i), spec.sizes[i]);
    }
    switch (spec.family) {
        case Family::ricci1_tripartite:
            b.connect(0, 1, g);
            b.connect(1, 2, g);
            b.connect(2, 0, g);
            break;
        case Family::flat_bipartite:
            b.connect(0, 1, g);
            break;
        case Family::flat_tripartite:
            // Source, saddle, sink with every forward connection, so each
            // mass sits one hop from each hole.
            b.connect(0, 1, g);
            b.connect(1, 2, g);
            b.connect(0, 2, g);
            break;
        case Family::ricci_neg2_quadripartite:
            b.connect(0, 1, g);
            b.connect(1, 2, g);
            b.connect(2, 3, g);
            b.connect(3, 0, g);
            break;
        case Family::hypertree:
            throw Error("not a partition family");
    }
    return b.build();
}

DirectedHypergraph generate_hypertree(int edge_count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto side_size = [&]() { return static_cast<int>(rng() % 4) + 1; };

    std::vector<Vertex> vertices;
    std::vector<Hyperedge> edges;
    std::vector<VertexId> pool;
    int next_vertex = 1;
    auto fresh = [&]() {
        VertexId id{"v" + std::to_string(next_vertex++)};
        vertices.push_back({id, "", 1});
        pool.push_back(id);
        return id;
    };

    for (int k = 1; k <= edge_count; ++k) {
        Hyperedge e;
        e.id = "e" + std::to_string(k);
        const int tail_size = side_size();
        const int head_size = side_size();
        // Each edge touches at most one pre-existing vertex; everything
        // else is fresh, so no cycle and no second path can ever form.
        const bool attach = !pool.empty();
        const bool attach_at_tail = attach && (rng() % 2 == 0);
        VertexId anchor;
        if (attach) anchor = pool[rng() % pool.size()];

        if (attach && attach_at_tail) e.tail.push_back(anchor);
        while (static_cast<int>(e.tail.size()) < tail_size) e.tail.push_back(fresh());
        if (attach && !attach_at_tail) e.head.push_back(anchor);
        while (static_cast<int>(e.head.size()) < head_size) e.head.push_back(fresh());
        edges.push_back(std::move(e));
    }
    return DirectedHypergraph(std::move(vertices), std::move(edges));
}

} // namespace

DirectedHypergraph generate(const FamilySpec& spec) {
    if (static_cast<int>(spec.sizes.size()) != family_arity(spec.family)) {
        throw Error(std::string("family ") + family_name(spec.family) + " expects " +
                    std::to_string(family_arity(spec.family)) + " size(s)");
    }
    for (int size : spec.sizes) {
        if (size < 1) throw Error("partition sizes must be positive");
    }
    if (spec.family == Family::hypertree) {
        return generate_hypertree(spec.sizes[0], spec.seed);
    }
    return generate_partition_family(spec);
}

FamilyReport verify_family(const DirectedHypergraph& h, const Rational& expected_kappa) {
    FamilyReport report;
    report.expected = expected_kappa;
    report.all_pass = true;
    for (const CurvatureReport& r : curvature_all(h)) {
        const bool pass = r.kappa == expected_kappa;
        report.checks.push_back({r.edge_id, r.kappa, pass});
        report.all_pass = report.all_pass && pass;
    }
    return report;
}

Rational hypertree_kappa_formula(const DirectedHypergraph& h, const std::string& edge_id) {
    const Hyperedge& e = h.edge(edge_id);
    int k = 0, k_prime = 0;
    for (const VertexId& x : e.tail) {
        if (in_degree(h, x) == 0) ++k;
    }
    for (const VertexId& y : e.head) {
        if (out_degree(h, y) == 0) ++k_prime;
    }
    return Rational(-2) + Rational(k) / static_cast<int>(e.tail.size()) +
           Rational(k_prime) / static_cast<int>(e.head.size());
}

Rational weighted_hypertree_kappa_formula(const DirectedHypergraph& h,
                                          const std::string& edge_id) {
    const Hyperedge& e = h.edge(edge_id);
    Rational tail_total = 0, tail_free = 0;
    for (const VertexId& x : e.tail) {
        tail_total += h.vertex(x).weight;
        if (in_degree(h, x) == 0) tail_free += h.vertex(x).weight;
    }
    Rational head_total = 0, head_free = 0;
    for (const VertexId& y : e.head) {
        head_total += h.vertex(y).weight;
        if (out_degree(h, y) == 0) head_free += h.vertex(y).weight;
    }
    return Rational(-2) + tail_free / tail_total + head_free / head_total;
}

} // namespace hyperricci
