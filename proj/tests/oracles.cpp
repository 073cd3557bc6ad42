#include "oracles.hpp"

#include <algorithm>
#include <functional>

namespace oracles {

namespace {

// One Bland pivot sweep over the tableau. `reduced` is the objective row
// (reduced costs), `objective` the current negated objective value.
LpResult::Status pivot_to_optimum(std::vector<std::vector<Rational>>& tableau,
                                  std::vector<Rational>& rhs, std::vector<int>& basis,
                                  std::vector<Rational>& reduced, Rational& objective) {
    const int rows = static_cast<int>(tableau.size());
    const int cols = static_cast<int>(reduced.size());
    while (true) {
        int entering = -1;
        for (int j = 0; j < cols; ++j) {
            if (reduced[j] < 0) {
                entering = j;
                break;
            }
        }
        if (entering < 0) return LpResult::Status::optimal;

        int leaving = -1;
        Rational best_ratio = 0;
        for (int i = 0; i < rows; ++i) {
            if (tableau[i][entering] <= 0) continue;
            const Rational ratio = rhs[i] / tableau[i][entering];
            if (leaving < 0 || ratio < best_ratio ||
                (ratio == best_ratio && basis[i] < basis[leaving])) {
                leaving = i;
                best_ratio = ratio;
            }
        }
        if (leaving < 0) return LpResult::Status::unbounded;

        const Rational pivot = tableau[leaving][entering];
        for (int j = 0; j < cols; ++j) tableau[leaving][j] /= pivot;
        rhs[leaving] /= pivot;
        for (int i = 0; i < rows; ++i) {
            if (i == leaving || tableau[i][entering] == 0) continue;
            const Rational factor = tableau[i][entering];
            for (int j = 0; j < cols; ++j) {
                tableau[i][j] -= factor * tableau[leaving][j];
            }
            rhs[i] -= factor * rhs[leaving];
        }
        const Rational rfactor = reduced[entering];
        for (int j = 0; j < cols; ++j) reduced[j] -= rfactor * tableau[leaving][j];
        objective -= rfactor * rhs[leaving];
        basis[leaving] = entering;
    }
}

} // namespace

LpResult simplex_min(std::vector<std::vector<Rational>> A, std::vector<Rational> b,
                     std::vector<Rational> c) {
    const int m = static_cast<int>(A.size());
    const int n = static_cast<int>(c.size());
    for (int i = 0; i < m; ++i) {
        if (b[i] < 0) {
            b[i] = -b[i];
            for (auto& a : A[i]) a = -a;
        }
    }

    // Phase 1: artificial variables n..n+m-1 form the starting basis.
    std::vector<std::vector<Rational>> tableau(
        static_cast<std::size_t>(m),
        std::vector<Rational>(static_cast<std::size_t>(n + m), Rational(0)));
    std::vector<int> basis(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) tableau[i][j] = A[i][j];
        tableau[i][n + i] = 1;
        basis[i] = n + i;
    }
    std::vector<Rational> reduced(static_cast<std::size_t>(n + m), Rational(0));
    Rational objective = 0;
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < m; ++i) reduced[j] -= tableau[i][j];
    }
    for (int i = 0; i < m; ++i) objective -= b[i];

    std::vector<Rational> rhs = b;
    pivot_to_optimum(tableau, rhs, basis, reduced, objective);
    if (objective != 0) {
        LpResult r;
        r.status = LpResult::Status::infeasible;
        return r;
    }

    // Drive leftover artificials out of the basis; rows that cannot pivot
    // on an original column are redundant constraints.
    std::vector<int> keep;
    for (int i = 0; i < m; ++i) {
        if (basis[i] < n) {
            keep.push_back(i);
            continue;
        }
        int col = -1;
        for (int j = 0; j < n; ++j) {
            if (tableau[i][j] != 0) {
                col = j;
                break;
            }
        }
        if (col < 0) continue; // redundant row
        const Rational pivot = tableau[i][col];
        for (auto& t : tableau[i]) t /= pivot;
        rhs[i] /= pivot;
        for (int k = 0; k < m; ++k) {
            if (k == i || tableau[k][col] == 0) continue;
            const Rational factor = tableau[k][col];
            for (int j = 0; j < n + m; ++j) tableau[k][j] -= factor * tableau[i][j];
            rhs[k] -= factor * rhs[i];
        }
        basis[i] = col;
        keep.push_back(i);
    }
    std::vector<std::vector<Rational>> tableau2;
    std::vector<Rational> rhs2;
    std::vector<int> basis2;
    for (int i : keep) {
        tableau2.push_back(std::vector<Rational>(A[0].empty() && n == 0
                                                     ? std::vector<Rational>::size_type(0)
                                                     : static_cast<std::size_t>(n)));
        for (int j = 0; j < n; ++j) tableau2.back()[static_cast<std::size_t>(j)] = tableau[i][j];
        rhs2.push_back(rhs[i]);
        basis2.push_back(basis[i]);
    }

    // Phase 2: real costs.
    std::vector<Rational> reduced2(static_cast<std::size_t>(n), Rational(0));
    Rational objective2 = 0;
    for (int j = 0; j < n; ++j) {
        reduced2[j] = c[j];
        for (std::size_t i = 0; i < basis2.size(); ++i) {
            reduced2[j] -= c[static_cast<std::size_t>(basis2[i])] * tableau2[i][static_cast<std::size_t>(j)];
        }
    }
    for (std::size_t i = 0; i < basis2.size(); ++i) {
        objective2 += c[static_cast<std::size_t>(basis2[i])] * rhs2[i];
    }
    // pivot_to_optimum tracks the negated objective: keep the sign
    // convention by negating before and after.
    objective2 = -objective2;
    const auto status = pivot_to_optimum(tableau2, rhs2, basis2, reduced2, objective2);

    LpResult result;
    result.status = status;
    if (status == LpResult::Status::optimal) {
        result.value = -objective2;
        result.solution.assign(static_cast<std::size_t>(n), Rational(0));
        for (std::size_t i = 0; i < basis2.size(); ++i) {
            result.solution[static_cast<std::size_t>(basis2[i])] = rhs2[i];
        }
    }
    return result;
}

OracleResult oracle_wasserstein(
    const DiscreteMeasure& mu, const DiscreteMeasure& nu,
    const std::map<std::pair<VertexId, VertexId>, HyperDistance>& cost) {
    const auto sources = mu.support();
    const auto sinks = nu.support();
    if (sources.size() > 8 || sinks.size() > 8) {
        throw hyperricci::Error("oracle support cap (8) exceeded");
    }

    struct Arc {
        int i, j;
        Rational c;
    };
    std::vector<Arc> arcs;
    for (int i = 0; i < static_cast<int>(sources.size()); ++i) {
        for (int j = 0; j < static_cast<int>(sinks.size()); ++j) {
            const auto it = cost.find({sources[static_cast<std::size_t>(i)],
                                       sinks[static_cast<std::size_t>(j)]});
            if (it == cost.end() || it->second.is_infinite()) continue;
            arcs.push_back({i, j, Rational(it->second.hops())});
        }
    }

    const int m = static_cast<int>(sources.size() + sinks.size());
    const int n = static_cast<int>(arcs.size());
    std::vector<std::vector<Rational>> A(
        static_cast<std::size_t>(m),
        std::vector<Rational>(static_cast<std::size_t>(n), Rational(0)));
    std::vector<Rational> b(static_cast<std::size_t>(m), Rational(0));
    std::vector<Rational> c(static_cast<std::size_t>(n), Rational(0));
    for (int k = 0; k < n; ++k) {
        A[static_cast<std::size_t>(arcs[static_cast<std::size_t>(k)].i)]
         [static_cast<std::size_t>(k)] = 1;
        A[sources.size() + static_cast<std::size_t>(arcs[static_cast<std::size_t>(k)].j)]
         [static_cast<std::size_t>(k)] = 1;
        c[static_cast<std::size_t>(k)] = arcs[static_cast<std::size_t>(k)].c;
    }
    for (std::size_t i = 0; i < sources.size(); ++i) b[i] = mu.at(sources[i]);
    for (std::size_t j = 0; j < sinks.size(); ++j) b[sources.size() + j] = nu.at(sinks[j]);

    const LpResult lp = simplex_min(std::move(A), std::move(b), std::move(c));
    OracleResult out;
    if (lp.status != LpResult::Status::optimal) {
        out.feasible = false;
        return out;
    }
    out.value = lp.value;
    for (int k = 0; k < n; ++k) {
        if (lp.solution[static_cast<std::size_t>(k)] != 0) {
            const Arc& a = arcs[static_cast<std::size_t>(k)];
            out.witness += sources[static_cast<std::size_t>(a.i)].value + "->" +
                           sinks[static_cast<std::size_t>(a.j)].value + ":" +
                           format_rational(lp.solution[static_cast<std::size_t>(k)]) + " ";
        }
    }
    return out;
}

OracleResult oracle_dual(
    const DiscreteMeasure& mu, const DiscreteMeasure& nu,
    const std::map<std::pair<VertexId, VertexId>, HyperDistance>& cost) {
    std::vector<VertexId> support;
    for (const auto& [v, m] : mu.masses) support.push_back(v);
    for (const auto& [v, m] : nu.masses) {
        if (mu.masses.find(v) == mu.masses.end()) support.push_back(v);
    }
    std::sort(support.begin(), support.end());
    std::map<VertexId, int> index;
    for (int i = 0; i < static_cast<int>(support.size()); ++i) index[support[i]] = i;

    struct Constraint {
        int u, v;
        Rational d;
    };
    std::vector<Constraint> constraints;
    for (const auto& [u, mu_mass] : mu.masses) {
        for (const auto& [v, nu_mass] : nu.masses) {
            const auto it = cost.find({u, v});
            if (it == cost.end() || it->second.is_infinite()) continue;
            constraints.push_back({index.at(u), index.at(v), Rational(it->second.hops())});
        }
    }

    // max sum(coef_x f_x) with f free: substitute f = g - h, g, h >= 0,
    // add one slack per constraint, minimize the negated objective.
    const int s = static_cast<int>(support.size());
    const int m = static_cast<int>(constraints.size());
    const int n = 2 * s + m;
    std::vector<std::vector<Rational>> A(
        static_cast<std::size_t>(m),
        std::vector<Rational>(static_cast<std::size_t>(n), Rational(0)));
    std::vector<Rational> b(static_cast<std::size_t>(m), Rational(0));
    std::vector<Rational> c(static_cast<std::size_t>(n), Rational(0));
    for (int k = 0; k < m; ++k) {
        const Constraint& con = constraints[static_cast<std::size_t>(k)];
        auto& row = A[static_cast<std::size_t>(k)];
        row[static_cast<std::size_t>(con.u)] += 1;
        row[static_cast<std::size_t>(s + con.u)] -= 1;
        row[static_cast<std::size_t>(con.v)] -= 1;
        row[static_cast<std::size_t>(s + con.v)] += 1;
        row[static_cast<std::size_t>(2 * s + k)] = 1;
        b[static_cast<std::size_t>(k)] = con.d;
    }
    for (const auto& [v, mass] : mu.masses) {
        c[static_cast<std::size_t>(index.at(v))] -= mass;
        c[static_cast<std::size_t>(s + index.at(v))] += mass;
    }
    for (const auto& [v, mass] : nu.masses) {
        c[static_cast<std::size_t>(index.at(v))] += mass;
        c[static_cast<std::size_t>(s + index.at(v))] -= mass;
    }

    const LpResult lp = simplex_min(std::move(A), std::move(b), std::move(c));
    OracleResult out;
    if (lp.status != LpResult::Status::optimal) {
        out.feasible = false;
        return out;
    }
    out.value = -lp.value;
    return out;
}

HyperDistance oracle_distance(const DirectedHypergraph& h, const VertexId& u,
                              const VertexId& v) {
    if (h.edges().size() > 10) {
        throw hyperricci::Error("oracle edge cap (10) exceeded");
    }
    h.vertex(u);
    h.vertex(v);
    if (u == v) return HyperDistance::of(0);

    const auto& edges = h.edges();
    const int m = static_cast<int>(edges.size());
    int best = -1;
    std::vector<bool> used(static_cast<std::size_t>(m), false);

    auto intersects = [](const std::vector<VertexId>& a, const std::vector<VertexId>& b) {
        for (const auto& x : a) {
            for (const auto& y : b) {
                if (x == y) return true;
            }
        }
        return false;
    };

    // A shortest chain never repeats a hyperedge, so plain DFS over
    // duplicate-free sequences is exhaustive.
    std::function<void(int, int)> extend = [&](int last, int length) {
        if (best >= 0 && length >= best) return;
        if (edges[static_cast<std::size_t>(last)].in_head(v)) {
            best = length;
            return;
        }
        for (int f = 0; f < m; ++f) {
            if (used[static_cast<std::size_t>(f)]) continue;
            if (!intersects(edges[static_cast<std::size_t>(last)].head,
                            edges[static_cast<std::size_t>(f)].tail)) {
                continue;
            }
            used[static_cast<std::size_t>(f)] = true;
            extend(f, length + 1);
            used[static_cast<std::size_t>(f)] = false;
        }
    };
    for (int e = 0; e < m; ++e) {
        if (edges[static_cast<std::size_t>(e)].in_tail(u)) {
            used[static_cast<std::size_t>(e)] = true;
            extend(e, 1);
            used[static_cast<std::size_t>(e)] = false;
        }
    }
    return best < 0 ? HyperDistance::infinite() : HyperDistance::of(best);
}

namespace {

// Literal (anchor, edge, vertex) triple enumeration of the measure
// definition. `incoming` selects the tail-side (incoming edges, spread
// over tails) versus head-side direction.
DiscreteMeasure clause_measure(const DirectedHypergraph& h, const std::string& edge_id,
                               bool incoming, bool weighted) {
    const auto& e = h.edge(edge_id);
    const auto& anchors = incoming ? e.tail : e.head;

    Rational anchor_denominator = 0;
    for (const auto& x : anchors) {
        anchor_denominator += weighted ? h.vertex(x).weight : Rational(1);
    }

    DiscreteMeasure mu;
    for (const auto& x : anchors) {
        const Rational anchor_share =
            (weighted ? h.vertex(x).weight : Rational(1)) / anchor_denominator;

        std::vector<int> neighbour;
        for (int ei = 0; ei < static_cast<int>(h.edges().size()); ++ei) {
            const auto& other = h.edges()[static_cast<std::size_t>(ei)];
            if (incoming ? other.in_head(x) : other.in_tail(x)) neighbour.push_back(ei);
        }
        if (neighbour.empty()) {
            mu.add(x, anchor_share);
            continue;
        }

        Rational edge_denominator = 0;
        for (int ei : neighbour) {
            edge_denominator +=
                weighted ? h.edges()[static_cast<std::size_t>(ei)].weight : Rational(1);
        }
        for (int ei : neighbour) {
            const auto& other = h.edges()[static_cast<std::size_t>(ei)];
            const Rational edge_share =
                (weighted ? other.weight : Rational(1)) / edge_denominator;
            Rational spread_denominator = 0;
            for (const auto& vertex : h.vertices()) {
                const bool member =
                    incoming ? other.in_tail(vertex.id) : other.in_head(vertex.id);
                if (member) {
                    spread_denominator += weighted ? vertex.weight : Rational(1);
                }
            }
            for (const auto& vertex : h.vertices()) {
                const bool member =
                    incoming ? other.in_tail(vertex.id) : other.in_head(vertex.id);
                if (!member) continue;
                const Rational z_share =
                    (weighted ? vertex.weight : Rational(1)) / spread_denominator;
                mu.add(vertex.id, anchor_share * edge_share * z_share);
            }
        }
    }
    return mu;
}

} // namespace

DiscreteMeasure oracle_tail_measure(const DirectedHypergraph& h,
                                    const std::string& edge_id) {
    return clause_measure(h, edge_id, true, false);
}

DiscreteMeasure oracle_head_measure(const DirectedHypergraph& h,
                                    const std::string& edge_id) {
    return clause_measure(h, edge_id, false, false);
}

DiscreteMeasure oracle_weighted_tail_measure(const DirectedHypergraph& h,
                                             const std::string& edge_id) {
    return clause_measure(h, edge_id, true, true);
}

DiscreteMeasure oracle_weighted_head_measure(const DirectedHypergraph& h,
                                             const std::string& edge_id) {
    return clause_measure(h, edge_id, false, true);
}

} // namespace oracles
