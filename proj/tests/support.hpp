#pragma once

// Test-only graph generators and a dense reference contraction.

#include "graphtensor/graph.hpp"
#include "graphtensor/tensor_family.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

namespace graphtensor::testing {

/// G(n, p) on up to max_n vertices (at least min_n).
inline Graph random_simple_graph(std::mt19937_64& rng, int min_n, int max_n, double p = 0.5) {
    std::uniform_int_distribution<int> size(min_n, max_n);
    std::bernoulli_distribution coin(p);
    const int n = size(rng);
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) edges.push_back({i, j});
    std::shuffle(edges.begin(), edges.end(), rng);
    return Graph(n, std::move(edges));
}

/// Random multigraph with loops and parallel edges.
inline Graph random_multigraph(std::mt19937_64& rng, int min_n, int max_n, int max_edges) {
    std::uniform_int_distribution<int> size(min_n, max_n);
    const int n = size(rng);
    std::uniform_int_distribution<int> count(0, max_edges);
    std::uniform_int_distribution<int> vertex(0, n - 1);
    std::vector<Edge> edges;
    const int m = n == 0 ? 0 : count(rng);
    for (int k = 0; k < m; ++k) edges.push_back({vertex(rng), vertex(rng)});
    return Graph(n, std::move(edges));
}

/// Random simple 3-regular graph on n vertices (n even) by the pairing model with rejection.
inline Graph random_cubic_graph(std::mt19937_64& rng, int n) {
    for (;;) {
        std::vector<int> points;
        for (int v = 0; v < n; ++v)
            for (int k = 0; k < 3; ++k) points.push_back(v);
        std::shuffle(points.begin(), points.end(), rng);
        std::vector<Edge> edges;
        bool ok = true;
        for (std::size_t i = 0; i < points.size() && ok; i += 2) {
            const int u = std::min(points[i], points[i + 1]);
            const int v = std::max(points[i], points[i + 1]);
            if (u == v) ok = false;
            for (const Edge& e : edges)
                if (e.u == u && e.v == v) ok = false;
            edges.push_back({u, v});
        }
        if (ok) return Graph(n, std::move(edges));
    }
}

inline std::vector<int> random_permutation(std::mt19937_64& rng, int n) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

/// Sum over all r^{2|E|} half-edge colorings of prod_v A(colors at v) * prod_e B(c_e0, c_e1).
/// Tensor entries come from TensorFamily::entry on the full index tuple, i.e. the
/// tensor is read densely; nothing of the frontier engine is involved.
template <Ring R>
typename R::value_type dense_contract(const Graph& g, const TensorFamily<R>& family, const BilinearForm<R>& b) {
    using V = typename R::value_type;
    const R& ring = family.ring();
    const int r = family.colors();
    const std::size_t halves = 2 * g.edge_count();
    std::vector<Color> color(halves, 1);
    V total = ring.zero();
    for (;;) {
        V term = ring.one();
        for (std::size_t e = 0; e < g.edge_count() && !ring.is_zero(term); ++e)
            term = term * b.weight(color[2 * e], color[2 * e + 1]);
        for (int v = 0; v < g.vertex_count() && !ring.is_zero(term); ++v) {
            std::vector<Color> idx;
            for (const HalfEdge& h : g.half_edges(v)) idx.push_back(color[static_cast<std::size_t>(h.id())]);
            term = term * (idx.empty() ? family.isolated_value() : family.entry(idx));
        }
        total += term;
        std::size_t k = 0;
        while (k < halves && color[k] == r) color[k++] = 1;
        if (k == halves) break;
        ++color[k];
    }
    return total;
}

/// Same sum restricted to edge colorings (both half-edges equal): valid for B = I.
template <Ring R>
typename R::value_type dense_contract_identity(const Graph& g, const TensorFamily<R>& family) {
    using V = typename R::value_type;
    const R& ring = family.ring();
    const int r = family.colors();
    std::vector<Color> color(g.edge_count(), 1);
    V total = ring.zero();
    for (;;) {
        V term = ring.one();
        for (int v = 0; v < g.vertex_count() && !ring.is_zero(term); ++v) {
            std::vector<Color> idx;
            for (const HalfEdge& h : g.half_edges(v)) idx.push_back(color[static_cast<std::size_t>(h.edge)]);
            term = term * (idx.empty() ? family.isolated_value() : family.entry(idx));
        }
        total += term;
        std::size_t k = 0;
        while (k < color.size() && color[k] == r) color[k++] = 1;
        if (k == color.size()) break;
        ++color[k];
    }
    return total;
}

}  // namespace graphtensor::testing
