#include "graphtensor/graph.hpp"

#include "graphtensor/errors.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace graphtensor {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ < 0) throw ArgumentError("vertex count must be nonnegative");
    incidence_.resize(static_cast<std::size_t>(n_));
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        const Edge& ed = edges_[e];
        if (ed.u < 0 || ed.u >= n_ || ed.v < 0 || ed.v >= n_)
            throw ArgumentError("edge " + std::to_string(e) + " has an endpoint outside 0.." + std::to_string(n_ - 1));
        const int id = static_cast<int>(e);
        incidence_[static_cast<std::size_t>(ed.u)].push_back({id, 0});
        incidence_[static_cast<std::size_t>(ed.v)].push_back({id, 1});
    }
}

bool Graph::has_loops() const noexcept {
    return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.is_loop(); });
}

bool Graph::has_multi_edges() const noexcept {
    std::set<std::pair<Vertex, Vertex>> seen;
    for (const Edge& e : edges_) {
        if (!seen.emplace(std::min(e.u, e.v), std::max(e.u, e.v)).second) return true;
    }
    return false;
}

int Graph::max_degree() const noexcept {
    int best = 0;
    for (const auto& inc : incidence_) best = std::max(best, static_cast<int>(inc.size()));
    return best;
}

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

long long parse_int(std::string_view tok, std::size_t line_no) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError(line_no, "expected an integer, got '" + std::string(tok) + "'");
    return value;
}

}  // namespace

Graph parse_graph(std::istream& in) {
    std::optional<int> n;
    std::vector<Edge> edges;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line(raw);
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        const auto tokens = split_tokens(line);
        if (tokens.empty()) continue;
        if (!n) {
            if (tokens.size() != 2 || tokens[0] != "n") throw ParseError(line_no, "expected header 'n <count>'");
            const long long count = parse_int(tokens[1], line_no);
            if (count < 0 || count > 1'000'000) throw ParseError(line_no, "vertex count out of range");
            n = static_cast<int>(count);
            continue;
        }
        if (tokens.size() != 2) throw ParseError(line_no, "expected '<u> <v>'");
        const long long u = parse_int(tokens[0], line_no);
        const long long v = parse_int(tokens[1], line_no);
        if (u < 0 || v < 0) throw ParseError(line_no, "negative endpoint");
        if (u >= *n || v >= *n) throw ParseError(line_no, "endpoint out of range for n = " + std::to_string(*n));
        edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    }
    if (!n) throw ParseError(line_no == 0 ? 1 : line_no, "missing header 'n <count>'");
    return Graph(*n, std::move(edges));
}

Graph parse_graph(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
    out << "n " << g.vertex_count() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

std::string to_text(const Graph& g) {
    std::ostringstream out;
    write_graph(out, g);
    return out.str();
}

std::vector<int> degree_sequence(const Graph& g) {
    std::vector<int> deg(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) deg[static_cast<std::size_t>(v)] = g.degree(v);
    return deg;
}

Graph relabel(const Graph& g, std::span<const int> perm) {
    const int n = g.vertex_count();
    if (static_cast<int>(perm.size()) != n) throw ArgumentError("permutation has wrong size");
    std::vector<bool> hit(static_cast<std::size_t>(n), false);
    for (int p : perm) {
        if (p < 0 || p >= n || hit[static_cast<std::size_t>(p)]) throw ArgumentError("not a permutation of 0..n-1");
        hit[static_cast<std::size_t>(p)] = true;
    }
    std::vector<Edge> edges;
    edges.reserve(g.edge_count());
    for (const Edge& e : g.edges())
        edges.push_back({perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]});
    return Graph(n, std::move(edges));
}

Graph make_complete(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
    return Graph(n, std::move(edges));
}

// cycle(1) is a single loop and cycle(2) a doubled edge, so every vertex has degree 2.
Graph make_cycle(int n) {
    std::vector<Edge> edges;
    if (n == 1) {
        edges.push_back({0, 0});
    } else {
        for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
    }
    return Graph(n, std::move(edges));
}

Graph make_path(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    return Graph(n, std::move(edges));
}

Graph make_star(int n) {
    std::vector<Edge> edges;
    for (int i = 1; i < n; ++i) edges.push_back({0, i});
    return Graph(n, std::move(edges));
}

// Kneser graph K(5,2): vertices are 2-subsets of {1..5}, adjacent when disjoint.
Graph make_petersen() {
    std::vector<std::pair<int, int>> subsets;
    for (int a = 1; a <= 5; ++a)
        for (int b = a + 1; b <= 5; ++b) subsets.emplace_back(a, b);
    std::vector<Edge> edges;
    for (int i = 0; i < static_cast<int>(subsets.size()); ++i) {
        for (int j = i + 1; j < static_cast<int>(subsets.size()); ++j) {
            const auto [a, b] = subsets[static_cast<std::size_t>(i)];
            const auto [c, d] = subsets[static_cast<std::size_t>(j)];
            if (a != c && a != d && b != c && b != d) edges.push_back({i, j});
        }
    }
    return Graph(static_cast<int>(subsets.size()), std::move(edges));
}

Graph make_complete_bipartite(int a, int b) {
    std::vector<Edge> edges;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) edges.push_back({i, a + j});
    return Graph(a + b, std::move(edges));
}

Graph make_named(std::string_view name, std::optional<int> size) {
    if (name == "petersen") return make_petersen();
    if (name != "complete" && name != "cycle" && name != "path" && name != "star")
        throw ArgumentError("unknown graph name '" + std::string(name) + "'");
    if (!size) throw ArgumentError("graph '" + std::string(name) + "' needs a size");
    if (*size < 1) throw ArgumentError("graph size must be at least 1");
    if (name == "complete") return make_complete(*size);
    if (name == "cycle") return make_cycle(*size);
    if (name == "path") return make_path(*size);
    return make_star(*size);
}

}  // namespace graphtensor
