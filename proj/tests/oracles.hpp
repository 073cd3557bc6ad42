#pragma once

// Independent brute-force implementations used only by the test suites.
// Nothing here calls the production solver, BFS or measure builders; the
// point is exact cross-checking through a different algorithm.

#include "hyperricci/distance.hpp"
#include "hyperricci/measure.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace oracles {

using hyperricci::DirectedHypergraph;
using hyperricci::DiscreteMeasure;
using hyperricci::HyperDistance;
using hyperricci::Rational;
using hyperricci::VertexId;

// Dense exact two-phase simplex with Bland's rule:
//   minimize c.x  subject to  A x = b, x >= 0.
struct LpResult {
    enum class Status { optimal, infeasible, unbounded };
    Status status = Status::optimal;
    Rational value = 0;
    std::vector<Rational> solution;
};

LpResult simplex_min(std::vector<std::vector<Rational>> A, std::vector<Rational> b,
                     std::vector<Rational> c);

struct OracleResult {
    bool feasible = true;
    Rational value = 0;
    std::string witness;
};

// Exact transport optimum via the generic simplex on the transportation
// LP. Supports are capped at 8 points each.
OracleResult oracle_wasserstein(
    const DiscreteMeasure& mu, const DiscreteMeasure& nu,
    const std::map<std::pair<VertexId, VertexId>, HyperDistance>& cost);

// Best restricted Kantorovich potential via the generic simplex on the
// dual LP with free variables split into differences.
OracleResult oracle_dual(
    const DiscreteMeasure& mu, const DiscreteMeasure& nu,
    const std::map<std::pair<VertexId, VertexId>, HyperDistance>& cost);

// Hyperdistance by exhaustive enumeration of duplicate-free hyperedge
// sequences. Caps the edge count at 10.
HyperDistance oracle_distance(const DirectedHypergraph& h, const VertexId& u,
                              const VertexId& v);

// Measures evaluated clause by clause over every vertex of H, enumerating
// all (anchor, edge, vertex) triples.
DiscreteMeasure oracle_tail_measure(const DirectedHypergraph& h,
                                    const std::string& edge_id);
DiscreteMeasure oracle_head_measure(const DirectedHypergraph& h,
                                    const std::string& edge_id);
DiscreteMeasure oracle_weighted_tail_measure(const DirectedHypergraph& h,
                                             const std::string& edge_id);
DiscreteMeasure oracle_weighted_head_measure(const DirectedHypergraph& h,
                                             const std::string& edge_id);

} // namespace oracles
