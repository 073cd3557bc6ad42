#pragma once

#include "hyperricci/hypergraph.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hyperricci {

/// Constant-curvature construction families plus randomized hypertrees.
enum class Family {
    ricci1_tripartite,        // cyclic A->B->C->A, complete; kappa = 1
    flat_bipartite,           // source A -> sink B, complete; kappa = 0
    flat_tripartite,          // source/saddle/sink with A->B, B->C, A->C; kappa = 0
    ricci_neg2_quadripartite, // cyclic A->B->C->D->A, complete; kappa = -2
    hypertree,                // random hypertree; kappa = -2 + k/n + k'/m per edge
};

const char* family_name(Family f);
Family parse_family(const std::string& name);

/// Hyperedge shape for the partition families: (1, 1) expands every
/// cross-partition connection into unit edges; larger sizes tile the
/// connections with block hyperedges. Block sizes must divide the
/// partition sizes they carve so each set is partitioned evenly.
struct Granularity {
    int tail = 1;
    int head = 1;

    bool is_unit() const { return tail == 1 && head == 1; }
};

struct FamilySpec {
    Family family = Family::flat_bipartite;
    std::vector<int> sizes; // partition sizes; hypertree: single entry = edge count
    Granularity granularity;
    std::uint64_t seed = 0; // hypertree randomness only
};

/// Build the hypergraph a spec describes. Partition families produce all
/// cross-partition connections and never any edge inside a partition.
/// Hypertrees grow by attaching each new hyperedge to at most one
/// existing vertex, which forces acyclicity and path uniqueness.
DirectedHypergraph generate(const FamilySpec& spec);

/// Nominal constant curvature of a partition family.
Rational nominal_kappa(Family f);

struct FamilyCheck {
    std::string edge_id;
    Rational kappa;
    bool pass;
};

struct FamilyReport {
    Rational expected;
    std::vector<FamilyCheck> checks;
    bool all_pass;
};

/// Compare every hyperedge's curvature against an expected constant,
/// with exact equality.
FamilyReport verify_family(const DirectedHypergraph& h, const Rational& expected_kappa);

/// Hypertree curvature formula -2 + k/n + k'/m, where k counts tail
/// vertices without incoming hyperedges and k' head vertices without
/// outgoing ones. Meaningful only when h is a hypertree.
Rational hypertree_kappa_formula(const DirectedHypergraph& h, const std::string& edge_id);

/// Weighted form: -2 + (weight of the k tail vertices / tail weight)
///                   + (weight of the k' head vertices / head weight).
Rational weighted_hypertree_kappa_formula(const DirectedHypergraph& h,
                                          const std::string& edge_id);

} // namespace hyperricci
