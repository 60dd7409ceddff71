#include "graphtensor/oracle.hpp"

#include "graphtensor/errors.hpp"

#include <numeric>
#include <vector>

namespace graphtensor::oracle {

namespace {

struct ColoringSearch {
    const Graph& g;
    int r;
    std::vector<int> color;  // per edge, 0 = unset
    BigInt count = 0;

    bool clashes(int e, int c) const {
        const Edge& ed = g.edge(e);
        for (Vertex v : {ed.u, ed.v}) {
            for (const HalfEdge& h : g.half_edges(v)) {
                if (h.edge != e && color[static_cast<std::size_t>(h.edge)] == c) return true;
            }
        }
        return false;
    }

    void run(int e) {
        if (e == static_cast<int>(g.edge_count())) {
            ++count;
            return;
        }
        for (int c = 1; c <= r; ++c) {
            if (clashes(e, c)) continue;
            color[static_cast<std::size_t>(e)] = c;
            run(e + 1);
            color[static_cast<std::size_t>(e)] = 0;
        }
    }
};

struct SubsetSearch {
    const Graph& g;
    std::vector<int> degree;
    std::vector<int> last_edge;  // last edge index touching each vertex, -1 if none
    std::vector<int> chosen;
    CycleSpectrum spectrum;

    void record() {
        const int n = g.vertex_count();
        std::vector<int> parent(static_cast<std::size_t>(n));
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int v) {
            while (parent[static_cast<std::size_t>(v)] != v) {
                parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
                v = parent[static_cast<std::size_t>(v)];
            }
            return v;
        };
        for (int e : chosen) {
            const Edge& ed = g.edge(e);
            parent[static_cast<std::size_t>(find(ed.u))] = find(ed.v);
        }
        std::vector<int> edges_in(static_cast<std::size_t>(n), 0);
        for (int e : chosen) ++edges_in[static_cast<std::size_t>(find(g.edge(e).u))];
        std::vector<int> parts;
        for (int c : edges_in) {
            if (c > 0) parts.push_back(c);
        }
        ++spectrum[Partition(std::move(parts))];
    }

    bool dead_end(int e) const {
        // a vertex with odd partial degree whose last incident edge is already decided
        const Edge& ed = g.edge(e);
        for (Vertex v : {ed.u, ed.v}) {
            if (degree[static_cast<std::size_t>(v)] == 1 && last_edge[static_cast<std::size_t>(v)] <= e) return true;
        }
        return false;
    }

    void run(int e) {
        if (e == static_cast<int>(g.edge_count())) {
            for (int d : degree) {
                if (d != 0 && d != 2) return;
            }
            record();
            return;
        }
        const Edge& ed = g.edge(e);
        // exclude
        if (!dead_end(e)) run(e + 1);
        // include
        ++degree[static_cast<std::size_t>(ed.u)];
        ++degree[static_cast<std::size_t>(ed.v)];
        if (degree[static_cast<std::size_t>(ed.u)] <= 2 && degree[static_cast<std::size_t>(ed.v)] <= 2 && !dead_end(e)) {
            chosen.push_back(e);
            run(e + 1);
            chosen.pop_back();
        }
        --degree[static_cast<std::size_t>(ed.u)];
        --degree[static_cast<std::size_t>(ed.v)];
    }
};

struct HamiltonSearch {
    const Graph& g;
    std::vector<bool> visited;
    std::vector<Vertex> path;
    BigInt count = 0;

    void run(Vertex v) {
        const int n = g.vertex_count();
        if (static_cast<int>(path.size()) == n) {
            if (path[1] >= path.back()) return;
            for (const HalfEdge& h : g.half_edges(v)) {
                const Edge& e = g.edge(h.edge);
                if (!e.is_loop() && e.other(v) == 0) ++count;
            }
            return;
        }
        for (const HalfEdge& h : g.half_edges(v)) {
            const Edge& e = g.edge(h.edge);
            if (e.is_loop()) continue;
            const Vertex w = e.other(v);
            if (visited[static_cast<std::size_t>(w)]) continue;
            visited[static_cast<std::size_t>(w)] = true;
            path.push_back(w);
            run(w);
            path.pop_back();
            visited[static_cast<std::size_t>(w)] = false;
        }
    }
};

}  // namespace

BigInt brute_edge_colorings(const Graph& g, int r) {
    if (r < 1) throw ArgumentError("color count must be >= 1");
    if (g.has_loops()) return 0;
    ColoringSearch search{g, r, std::vector<int>(g.edge_count(), 0)};
    search.run(0);
    return search.count;
}

CycleSpectrum brute_cycle_spectrum(const Graph& g) {
    const auto n = static_cast<std::size_t>(g.vertex_count());
    SubsetSearch search{g, std::vector<int>(n, 0), std::vector<int>(n, -1), {}, {}};
    for (int e = 0; e < static_cast<int>(g.edge_count()); ++e) {
        search.last_edge[static_cast<std::size_t>(g.edge(e).u)] = e;
        search.last_edge[static_cast<std::size_t>(g.edge(e).v)] = e;
    }
    search.run(0);
    return search.spectrum;
}

BigInt brute_hamiltonian(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 3) throw PreconditionError("Hamiltonian counting needs n >= 3");
    HamiltonSearch search{g, std::vector<bool>(static_cast<std::size_t>(n), false), {0}};
    search.visited[0] = true;
    search.run(0);
    return search.count;
}

}  // namespace graphtensor::oracle
