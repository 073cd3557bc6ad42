#include "hyperricci/transport.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace hyperricci {

namespace {

// Exact successive-shortest-path min-cost flow on a small node set.
// Arcs are uncapacitated; supplies must sum to zero. Node potentials keep
// every residual reduced cost nonnegative, so Dijkstra stays valid.
struct FlowArc {
    int from;
    int to;
    Rational cost;
};

struct FlowSolution {
    bool feasible = true;
    int stranded = -1; // node whose supply could not be routed
    std::vector<Rational> flow;
    std::vector<Rational> potential;
};

FlowSolution solve_flow(int node_count, const std::vector<FlowArc>& arcs,
                        std::vector<Rational> excess) {
    const int m = static_cast<int>(arcs.size());
    std::vector<std::vector<int>> arcs_out(node_count), arcs_in(node_count);
    for (int i = 0; i < m; ++i) {
        arcs_out[arcs[i].from].push_back(i);
        arcs_in[arcs[i].to].push_back(i);
    }

    FlowSolution sol;
    sol.flow.assign(m, Rational(0));
    sol.potential.assign(node_count, Rational(0));
    auto& flow = sol.flow;
    auto& pi = sol.potential;

    long iterations = 0;
    const long iteration_cap = 10000L * (node_count + 1);
    while (true) {
        int source = -1;
        for (int i = 0; i < node_count; ++i) {
            if (excess[i] > 0) {
                source = i;
                break;
            }
        }
        if (source < 0) break;
        if (++iterations > iteration_cap) {
            throw Error("transport solver exceeded iteration cap");
        }

        // Dijkstra over residual arcs with reduced costs. Deterministic:
        // smallest distance first, smallest node index on ties.
        std::vector<std::optional<Rational>> dist(node_count);
        std::vector<bool> done(node_count, false);
        std::vector<int> parent_arc(node_count, -1);
        std::vector<bool> parent_forward(node_count, false);
        dist[source] = Rational(0);
        while (true) {
            int u = -1;
            for (int i = 0; i < node_count; ++i) {
                if (!done[i] && dist[i] && (u < 0 || *dist[i] < *dist[u])) u = i;
            }
            if (u < 0) break;
            done[u] = true;
            for (int ai : arcs_out[u]) {
                const FlowArc& a = arcs[ai];
                const Rational cand = *dist[u] + a.cost + pi[u] - pi[a.to];
                if (!dist[a.to] || cand < *dist[a.to]) {
                    dist[a.to] = cand;
                    parent_arc[a.to] = ai;
                    parent_forward[a.to] = true;
                }
            }
            for (int ai : arcs_in[u]) {
                if (flow[ai] <= 0) continue;
                const FlowArc& a = arcs[ai];
                const Rational cand = *dist[u] - a.cost + pi[u] - pi[a.from];
                if (!dist[a.from] || cand < *dist[a.from]) {
                    dist[a.from] = cand;
                    parent_arc[a.from] = ai;
                    parent_forward[a.from] = false;
                }
            }
        }

        int target = -1;
        for (int i = 0; i < node_count; ++i) {
            if (dist[i] && excess[i] < 0 && (target < 0 || *dist[i] < *dist[target])) {
                target = i;
            }
        }
        if (target < 0) {
            sol.feasible = false;
            sol.stranded = source;
            return sol;
        }

        // Capping the update at dist(target) keeps reduced costs of arcs
        // into unreached nodes nonnegative.
        const Rational dt = *dist[target];
        for (int i = 0; i < node_count; ++i) {
            pi[i] += dist[i] ? std::min(*dist[i], dt) : dt;
        }

        Rational delta = std::min(excess[source], -excess[target]);
        for (int v = target; v != source;) {
            const int ai = parent_arc[v];
            if (parent_forward[v]) {
                v = arcs[ai].from;
            } else {
                delta = std::min(delta, flow[ai]);
                v = arcs[ai].to;
            }
        }
        for (int v = target; v != source;) {
            const int ai = parent_arc[v];
            if (parent_forward[v]) {
                flow[ai] += delta;
                v = arcs[ai].from;
            } else {
                flow[ai] -= delta;
                v = arcs[ai].to;
            }
        }
        excess[source] -= delta;
        excess[target] += delta;
    }
    return sol;
}

struct BipartiteProblem {
    std::vector<VertexId> sources;
    std::vector<VertexId> sinks;
    std::vector<FlowArc> arcs; // from indexes sources, to indexes sinks (offset)
};

BipartiteProblem build_bipartite(const DiscreteMeasure& mu, const DiscreteMeasure& nu,
                                 const CostFn& cost) {
    BipartiteProblem p;
    p.sources = mu.support();
    p.sinks = nu.support();
    const int ns = static_cast<int>(p.sources.size());
    for (int i = 0; i < ns; ++i) {
        for (int j = 0; j < static_cast<int>(p.sinks.size()); ++j) {
            const HyperDistance d = cost(p.sources[i], p.sinks[j]);
            if (d.is_finite()) {
                p.arcs.push_back({i, ns + j, Rational(d.hops())});
            }
        }
    }
    return p;
}

// Drop support cycles from an optimal plan so it becomes a forest (a
// basic solution). Any cycle of positive entries in an optimal plan has
// zero net cost, so cancelling changes nothing but the entry count.
void make_basic(std::map<std::pair<int, int>, Rational>& cells,
                const std::vector<Rational>& costs_by_cell_index,
                const std::map<std::pair<int, int>, int>& cell_to_arc, int node_count) {
    auto find_cycle = [&]() -> std::vector<std::pair<int, int>> {
        // Undirected DFS over the bipartite support graph; nodes are
        // sources and sinks, edges are plan cells.
        std::vector<std::vector<std::pair<int, std::pair<int, int>>>> adj(node_count);
        for (const auto& [cell, mass] : cells) {
            adj[cell.first].push_back({cell.second, cell});
            adj[cell.second].push_back({cell.first, cell});
        }
        std::vector<int> state(node_count, 0);
        std::vector<std::pair<int, std::pair<int, int>>> stack; // (node, via-cell)
        std::vector<std::pair<int, int>> path_cells;
        std::vector<int> path_nodes;

        std::function<std::vector<std::pair<int, int>>(int)> dfs =
            [&](int u) -> std::vector<std::pair<int, int>> {
            state[u] = 1;
            path_nodes.push_back(u);
            for (const auto& [w, cell] : adj[u]) {
                if (!path_cells.empty() && path_cells.back() == cell) continue;
                if (state[w] == 1) {
                    // Found a cycle: unwind path_cells back to w.
                    std::vector<std::pair<int, int>> cycle{cell};
                    for (int k = static_cast<int>(path_nodes.size()) - 1;
                         path_nodes[k] != w; --k) {
                        cycle.push_back(path_cells[k - 1]);
                    }
                    return cycle;
                }
                if (state[w] == 0) {
                    path_cells.push_back(cell);
                    auto found = dfs(w);
                    if (!found.empty()) return found;
                    path_cells.pop_back();
                }
            }
            state[u] = 2;
            path_nodes.pop_back();
            return {};
        };

        for (int i = 0; i < node_count; ++i) {
            if (state[i] == 0) {
                auto found = dfs(i);
                if (!found.empty()) return found;
            }
        }
        return {};
    };

    while (true) {
        auto cycle = find_cycle();
        if (cycle.empty()) break;
        // Orient alternately. Cells at even positions move one way around
        // the cycle, odd positions the other way.
        Rational net_cost = 0;
        Rational shrink = -1;
        for (std::size_t k = 0; k < cycle.size(); ++k) {
            const Rational c = costs_by_cell_index[static_cast<std::size_t>(
                cell_to_arc.at(cycle[k]))];
            const Rational mass = cells.at(cycle[k]);
            if (k % 2 == 0) {
                net_cost -= c;
                if (shrink < 0 || mass < shrink) shrink = mass;
            } else {
                net_cost += c;
            }
        }
        if (net_cost != 0) {
            throw Error("internal: support cycle with nonzero cost in optimal plan");
        }
        for (std::size_t k = 0; k < cycle.size(); ++k) {
            auto it = cells.find(cycle[k]);
            it->second += (k % 2 == 0) ? -shrink : shrink;
            if (it->second == 0) cells.erase(it);
        }
    }
}

} // namespace

WassersteinResult wasserstein(const DiscreteMeasure& mu, const DiscreteMeasure& nu,
                              const CostFn& cost) {
    if (mu.total() != 1 || nu.total() != 1) {
        throw Error("transport inputs must be probability measures totalling 1");
    }
    for (const auto& [v, m] : mu.masses) {
        if (m < 0) throw Error("negative mass at '" + v.value + "'");
    }
    for (const auto& [v, m] : nu.masses) {
        if (m < 0) throw Error("negative mass at '" + v.value + "'");
    }

    const BipartiteProblem p = build_bipartite(mu, nu, cost);
    const int ns = static_cast<int>(p.sources.size());
    const int nt = static_cast<int>(p.sinks.size());

    std::vector<Rational> excess(static_cast<std::size_t>(ns + nt), Rational(0));
    for (int i = 0; i < ns; ++i) excess[i] = mu.at(p.sources[i]);
    for (int j = 0; j < nt; ++j) excess[ns + j] = -nu.at(p.sinks[j]);

    FlowSolution sol = solve_flow(ns + nt, p.arcs, std::move(excess));
    if (!sol.feasible) {
        const int s = sol.stranded;
        throw InfeasibleTransport(s < ns ? p.sources[s] : p.sinks[s - ns]);
    }

    std::map<std::pair<int, int>, Rational> cells;
    std::map<std::pair<int, int>, int> cell_to_arc;
    std::vector<Rational> arc_costs;
    arc_costs.reserve(p.arcs.size());
    for (std::size_t ai = 0; ai < p.arcs.size(); ++ai) {
        arc_costs.push_back(p.arcs[ai].cost);
        cell_to_arc[{p.arcs[ai].from, p.arcs[ai].to}] = static_cast<int>(ai);
        if (sol.flow[ai] > 0) cells[{p.arcs[ai].from, p.arcs[ai].to}] = sol.flow[ai];
    }
    make_basic(cells, arc_costs, cell_to_arc, ns + nt);

    WassersteinResult result;
    result.value = 0;
    for (const auto& [cell, mass] : cells) {
        result.value += arc_costs[static_cast<std::size_t>(cell_to_arc.at(cell))] * mass;
        result.plan.entries[{p.sources[cell.first], p.sinks[cell.second - ns]}] = mass;
    }

    // Marginal audit; catches any flow or cancellation defect loudly.
    std::map<VertexId, Rational> row, col;
    for (const auto& [pair, mass] : result.plan.entries) {
        row[pair.first] += mass;
        col[pair.second] += mass;
    }
    for (const auto& [v, m] : mu.masses) {
        if (m != 0 && row[v] != m) throw Error("internal: row marginal mismatch");
    }
    for (const auto& [v, m] : nu.masses) {
        if (m != 0 && col[v] != m) throw Error("internal: column marginal mismatch");
    }
    return result;
}

MassDecomposition decompose(const TransportPlan& plan, const CostFn& cost) {
    MassDecomposition d{0, 0, 0, 0};
    for (const auto& [pair, mass] : plan.entries) {
        if (mass == 0) continue;
        const HyperDistance hd = cost(pair.first, pair.second);
        if (!hd.is_finite() || hd.hops() > 3) {
            throw Error("plan entry (" + pair.first.value + ", " + pair.second.value +
                        ") sits at distance outside 0..3");
        }
        switch (hd.hops()) {
            case 0: d.mu0 += mass; break;
            case 1: d.mu1 += mass; break;
            case 2: d.mu2 += mass; break;
            default: d.mu3 += mass; break;
        }
    }
    return d;
}

Rational dual_bound(const DiscreteMeasure& mu, const DiscreteMeasure& nu,
                    const std::map<VertexId, Rational>& potential, const CostFn& cost) {
    auto value_at = [&](const VertexId& v) {
        auto it = potential.find(v);
        if (it == potential.end()) {
            throw Error("potential undefined at '" + v.value + "'");
        }
        return it->second;
    };
    for (const auto& [u, mu_mass] : mu.masses) {
        for (const auto& [v, nu_mass] : nu.masses) {
            const HyperDistance d = cost(u, v);
            if (!d.is_finite()) continue;
            if (value_at(u) - value_at(v) > d.hops()) {
                throw LipschitzViolation(u, v);
            }
        }
    }
    Rational bound = 0;
    for (const auto& [u, m] : mu.masses) bound += value_at(u) * m;
    for (const auto& [v, m] : nu.masses) bound -= value_at(v) * m;
    return bound;
}

DualCertificate solve_dual(const DiscreteMeasure& mu, const DiscreteMeasure& nu,
                           const CostFn& cost) {
    if (mu.total() != 1 || nu.total() != 1) {
        throw Error("transport inputs must be probability measures totalling 1");
    }

    // The best restricted potential is the LP dual of a transshipment of
    // the net supplies mu - nu over arcs supp(mu) x supp(nu). Solving that
    // flow problem yields optimal node potentials, and f = -pi is feasible
    // because every arc keeps a nonnegative reduced cost.
    std::set<VertexId> support_set;
    for (const auto& [v, m] : mu.masses) support_set.insert(v);
    for (const auto& [v, m] : nu.masses) support_set.insert(v);
    const std::vector<VertexId> support(support_set.begin(), support_set.end());
    std::map<VertexId, int> index;
    for (int i = 0; i < static_cast<int>(support.size()); ++i) index[support[i]] = i;

    std::vector<FlowArc> arcs;
    for (const auto& [u, mu_mass] : mu.masses) {
        for (const auto& [v, nu_mass] : nu.masses) {
            if (u == v) continue;
            const HyperDistance d = cost(u, v);
            if (d.is_finite()) {
                arcs.push_back({index.at(u), index.at(v), Rational(d.hops())});
            }
        }
    }

    std::vector<Rational> excess(support.size(), Rational(0));
    for (const auto& [v, m] : mu.masses) excess[static_cast<std::size_t>(index.at(v))] += m;
    for (const auto& [v, m] : nu.masses) excess[static_cast<std::size_t>(index.at(v))] -= m;

    FlowSolution sol = solve_flow(static_cast<int>(support.size()), arcs, std::move(excess));
    if (!sol.feasible) {
        throw InfeasibleTransport(support[static_cast<std::size_t>(sol.stranded)]);
    }

    DualCertificate cert;
    Rational lowest;
    bool first = true;
    for (std::size_t i = 0; i < support.size(); ++i) {
        const Rational f = -sol.potential[i];
        if (first || f < lowest) {
            lowest = f;
            first = false;
        }
        cert.potential[support[i]] = f;
    }
    for (auto& [v, f] : cert.potential) f -= lowest; // normalize: min f = 0

    cert.bound = dual_bound(mu, nu, cert.potential, cost); // also re-checks feasibility
    return cert;
}

} // namespace hyperricci
