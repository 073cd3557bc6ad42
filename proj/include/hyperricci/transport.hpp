#pragma once

#include "hyperricci/distance.hpp"
#include "hyperricci/measure.hpp"

#include <functional>
#include <map>
#include <utility>

namespace hyperricci {

/// Transport cost oracle. Infinite distances are excluded arcs: no plan
/// may route mass across them.
using CostFn = std::function<HyperDistance(const VertexId&, const VertexId&)>;

/// Sparse coupling between two measures; only strictly positive entries
/// are stored. Row marginals reproduce the source measure, column
/// marginals the target measure, exactly.
struct TransportPlan {
    std::map<std::pair<VertexId, VertexId>, Rational> entries;

    Rational mass(const VertexId& u, const VertexId& v) const {
        auto it = entries.find({u, v});
        return it == entries.end() ? Rational(0) : it->second;
    }
};

struct WassersteinResult {
    Rational value;
    TransportPlan plan;
};

/// Amount of mass moved with each distance 0..3 in a transport plan.
/// total() is 1 and transport_cost() equals the Wasserstein value when
/// the plan is optimal for measures built by this library.
struct MassDecomposition {
    Rational mu0, mu1, mu2, mu3;

    Rational total() const { return mu0 + mu1 + mu2 + mu3; }
    Rational transport_cost() const { return mu1 + 2 * mu2 + 3 * mu3; }
};

/// Feasible Kantorovich potential and the lower bound it certifies.
/// The potential satisfies f(u) - f(v) <= d(u, v) on support pairs and
/// bound <= W always; equality is not guaranteed because the
/// hyperdistance is asymmetric.
struct DualCertificate {
    std::map<VertexId, Rational> potential;
    Rational bound;
};

struct InfeasibleTransport : Error {
    VertexId stranded;
    explicit InfeasibleTransport(VertexId v)
        : Error("no finite-cost destination for mass at '" + v.value + "'"),
          stranded(std::move(v)) {}
};

struct LipschitzViolation : Error {
    VertexId from, to;
    LipschitzViolation(VertexId u, VertexId v)
        : Error("potential violates f(" + u.value + ") - f(" + v.value +
                ") <= d(" + u.value + ", " + v.value + ")"),
          from(std::move(u)), to(std::move(v)) {}
};

/// Exact minimum-cost coupling between two probability measures. The
/// returned plan is basic: at most |supp mu| + |supp nu| - 1 entries.
/// Throws InfeasibleTransport when some mass has no finite-cost
/// destination, and Error when either measure does not total 1.
WassersteinResult wasserstein(const DiscreteMeasure& mu, const DiscreteMeasure& nu,
                              const CostFn& cost);

/// Split a plan's mass by transport distance. Every entry must sit at
/// distance 0..3; anything else throws.
MassDecomposition decompose(const TransportPlan& plan, const CostFn& cost);

/// Value sum(f * mu) - sum(f * nu) of a caller-supplied potential.
/// The potential must be defined on both supports and Lipschitz on
/// support pairs; a violation throws naming the offending pair.
Rational dual_bound(const DiscreteMeasure& mu, const DiscreteMeasure& nu,
                    const std::map<VertexId, Rational>& potential, const CostFn& cost);

/// Best potential on supp mu and supp nu: maximizes the dual objective
/// subject to the pairwise Lipschitz constraints. The bound never exceeds
/// the Wasserstein value; the gap may be positive.
DualCertificate solve_dual(const DiscreteMeasure& mu, const DiscreteMeasure& nu,
                           const CostFn& cost);

} // namespace hyperricci
