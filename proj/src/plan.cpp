#include "graphtensor/plan.hpp"

#include "graphtensor/errors.hpp"

#include <cstdint>
#include <string>

namespace graphtensor {

namespace {

void check_r(int r) {
    if (r < 1) throw ArgumentError("color count must be >= 1");
}

}  // namespace

void validate_order(const Graph& g, std::span<const Vertex> order) {
    const int n = g.vertex_count();
    if (static_cast<int>(order.size()) != n)
        throw ArgumentError("order has " + std::to_string(order.size()) + " entries, graph has " + std::to_string(n) +
                            " vertices");
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (Vertex v : order) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
            throw ArgumentError("order is not a permutation of the vertices");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

std::vector<int> frontier_sizes(const Graph& g, std::span<const Vertex> order) {
    validate_order(g, order);
    std::vector<bool> done(static_cast<std::size_t>(g.vertex_count()), false);
    std::vector<int> sizes;
    sizes.reserve(order.size());
    int frontier = 0;
    for (Vertex v : order) {
        for (const HalfEdge& h : g.half_edges(v)) {
            const Edge& e = g.edge(h.edge);
            if (e.is_loop()) continue;
            frontier += done[static_cast<std::size_t>(e.other(v))] ? -1 : 1;
        }
        done[static_cast<std::size_t>(v)] = true;
        sizes.push_back(frontier);
    }
    return sizes;
}

BigInt plan_cost(const Graph& g, std::span<const Vertex> order, int r) {
    check_r(r);
    BigInt cost = 0;
    const BigInt base = r;
    for (int f : frontier_sizes(g, order)) cost += pow(base, static_cast<unsigned long>(f));
    return cost;
}

ContractionPlan plan_given(const Graph& g, std::vector<Vertex> order, int r) {
    BigInt cost = plan_cost(g, order, r);
    return {std::move(order), std::move(cost)};
}

ContractionPlan plan_greedy(const Graph& g, int r) {
    check_r(r);
    const int n = g.vertex_count();
    std::vector<bool> done(static_cast<std::size_t>(n), false);
    std::vector<Vertex> order;
    order.reserve(static_cast<std::size_t>(n));
    for (int step = 0; step < n; ++step) {
        Vertex best = -1;
        int best_delta = 0;
        for (Vertex v = 0; v < n; ++v) {
            if (done[static_cast<std::size_t>(v)]) continue;
            int delta = 0;
            for (const HalfEdge& h : g.half_edges(v)) {
                const Edge& e = g.edge(h.edge);
                if (e.is_loop()) continue;
                delta += done[static_cast<std::size_t>(e.other(v))] ? -1 : 1;
            }
            if (best < 0 || delta < best_delta) {
                best = v;
                best_delta = delta;
            }
        }
        done[static_cast<std::size_t>(best)] = true;
        order.push_back(best);
    }
    return plan_given(g, std::move(order), r);
}

ContractionPlan plan_exhaustive(const Graph& g, int r, int limit) {
    check_r(r);
    const int n = g.vertex_count();
    if (n > limit)
        throw PreconditionError("exhaustive planning limited to " + std::to_string(limit) + " vertices, graph has " +
                                std::to_string(n));
    if (n > 26) throw PreconditionError("exhaustive planning needs n <= 26");
    const std::size_t subsets = std::size_t{1} << n;

    std::vector<std::pair<int, int>> ends;
    for (const Edge& e : g.edges()) {
        if (!e.is_loop()) ends.emplace_back(e.u, e.v);
    }
    std::vector<BigInt> step_cost(subsets);
    const BigInt base = r;
    for (std::size_t s = 0; s < subsets; ++s) {
        int f = 0;
        for (auto [u, v] : ends) f += (((s >> u) ^ (s >> v)) & 1u) ? 1 : 0;
        step_cost[s] = pow(base, static_cast<unsigned long>(f));
    }

    // remaining[s]: cheapest cost of processing the rest once s is done.
    std::vector<BigInt> remaining(subsets);
    for (std::size_t s = subsets - 1; s-- > 0;) {
        bool first = true;
        for (int v = 0; v < n; ++v) {
            if ((s >> v) & 1u) continue;
            const std::size_t next = s | (std::size_t{1} << v);
            BigInt c = step_cost[next] + remaining[next];
            if (first || c < remaining[s]) {
                remaining[s] = std::move(c);
                first = false;
            }
        }
    }

    std::vector<Vertex> order;
    std::size_t s = 0;
    for (int step = 0; step < n; ++step) {
        for (int v = 0; v < n; ++v) {
            if ((s >> v) & 1u) continue;
            const std::size_t next = s | (std::size_t{1} << v);
            if (step_cost[next] + remaining[next] == remaining[s]) {
                order.push_back(v);
                s = next;
                break;
            }
        }
    }
    ContractionPlan plan{std::move(order), remaining[0]};
    if (n == 0) plan.predicted_cost = 0;
    return plan;
}

}  // namespace graphtensor
