#pragma once

#include "graphtensor/errors.hpp"
#include "graphtensor/graph.hpp"
#include "graphtensor/plan.hpp"
#include "graphtensor/rings.hpp"
#include "graphtensor/tensor_family.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

namespace graphtensor {

/// Observed work of one contraction, next to the plan's predicted cost.
struct ContractStats {
    std::size_t steps = 0;
    std::size_t peak_states = 0;   // largest frontier map
    std::size_t total_states = 0;  // sum of map sizes after each step
    std::size_t completions = 0;   // tensor entries visited
    std::size_t cancelled = 0;     // states whose partial sum cancelled to zero and were dropped
};

/// Colors of the open frontier edges, ordered by edge id.
using FrontierKey = std::vector<Color>;

struct FrontierKeyHash {
    std::size_t operator()(const FrontierKey& key) const noexcept {
        std::uint64_t h = 1469598103934665603ull;
        for (Color c : key) {
            h ^= c;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

namespace detail {

// How vertex v's half-edges relate to the current frontier.
struct Absorption {
    int degree = 0;
    // slot -> index into the old frontier key, for edges to processed vertices
    std::vector<std::pair<std::size_t, std::size_t>> closed;
    // pairs of slots joined by a loop at v
    std::vector<std::pair<std::size_t, std::size_t>> loops;
    // new frontier: per position, either an old key position or a slot at v
    struct Source {
        bool from_slot;
        std::size_t index;
    };
    std::vector<Source> next_key;
    std::vector<int> next_edges;
};

inline Absorption plan_absorption(const Graph& g, Vertex v, const std::vector<int>& frontier,
                                  const std::vector<bool>& done) {
    Absorption a;
    const auto slots = g.half_edges(v);
    a.degree = static_cast<int>(slots.size());

    std::vector<std::pair<int, Absorption::Source>> merged;
    std::vector<bool> consumed(frontier.size(), false);
    for (std::size_t s = 0; s < slots.size(); ++s) {
        const int e = slots[s].edge;
        const Edge& ed = g.edge(e);
        if (ed.is_loop()) {
            if (slots[s].side == 0) {
                // side 1 of a loop immediately follows side 0 in id order
                a.loops.emplace_back(s, s + 1);
            }
            continue;
        }
        if (done[static_cast<std::size_t>(ed.other(v))]) {
            const auto it = std::lower_bound(frontier.begin(), frontier.end(), e);
            const auto pos = static_cast<std::size_t>(it - frontier.begin());
            a.closed.emplace_back(s, pos);
            consumed[pos] = true;
        } else {
            merged.push_back({e, {true, s}});
        }
    }
    for (std::size_t p = 0; p < frontier.size(); ++p) {
        if (!consumed[p]) merged.push_back({frontier[p], {false, p}});
    }
    std::sort(merged.begin(), merged.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    for (const auto& [e, src] : merged) {
        a.next_edges.push_back(e);
        a.next_key.push_back(src);
    }
    return a;
}

}  // namespace detail

/// Evaluates the graph function of (family, b) on g: a copy of the family's
/// degree-d tensor at every vertex, every edge contracting its two
/// half-edge indices through b.
///
/// Vertices are absorbed in plan order. The state maps colorings of the open
/// frontier edges to partial sums; absorbing v sums over the nonzero tensor
/// completions at v, multiplying by b for each edge closed against an
/// already processed vertex and for each loop at v. Zero states are dropped.
/// The value does not depend on the plan; the work does.
template <Ring R>
typename R::value_type contract(const Graph& g, const TensorFamily<R>& family, const BilinearForm<R>& b,
                                const ContractionPlan& plan, ContractStats* stats = nullptr) {
    using V = typename R::value_type;
    const R& ring = family.ring();
    if (b.size() != family.colors())
        throw ArgumentError("bilinear form is " + std::to_string(b.size()) + "x" + std::to_string(b.size()) +
                            " but the family has " + std::to_string(family.colors()) + " colors");
    validate_order(g, plan.order);

    using StateMap = std::unordered_map<FrontierKey, V, FrontierKeyHash>;
    StateMap states;
    states.emplace(FrontierKey{}, ring.one());
    std::vector<int> frontier;
    std::vector<bool> done(static_cast<std::size_t>(g.vertex_count()), false);
    ContractStats local;

    for (Vertex v : plan.order) {
        const detail::Absorption a = detail::plan_absorption(g, v, frontier, done);
        StateMap next;
        next.reserve(states.size());
        std::vector<Color> partial(static_cast<std::size_t>(a.degree), kUnassigned);
        FrontierKey key_out(a.next_key.size());

        for (const auto& [key, value] : states) {
            auto absorb = [&](std::span<const Color> full, const V& entry) {
                ++local.completions;
                V term = value * entry;
                if (!b.is_identity()) {
                    for (const auto& [slot, pos] : a.closed) term = term * b.weight(key[pos], full[slot]);
                    for (const auto& [s1, s2] : a.loops) term = term * b.weight(full[s1], full[s2]);
                    if (ring.is_zero(term)) return;
                } else {
                    for (const auto& [s1, s2] : a.loops) {
                        if (full[s1] != full[s2]) return;
                    }
                }
                for (std::size_t p = 0; p < a.next_key.size(); ++p) {
                    const auto& src = a.next_key[p];
                    key_out[p] = src.from_slot ? full[src.index] : key[src.index];
                }
                auto [it, inserted] = next.try_emplace(key_out, std::move(term));
                if (!inserted) it->second += term;
            };
            std::fill(partial.begin(), partial.end(), kUnassigned);
            if (b.is_identity()) {
                for (const auto& [slot, pos] : a.closed) partial[slot] = key[pos];
            }
            family.for_each_completion(partial, absorb);
        }

        local.cancelled += std::erase_if(next, [&](const auto& kv) { return ring.is_zero(kv.second); });
        states = std::move(next);
        frontier = a.next_edges;
        done[static_cast<std::size_t>(v)] = true;

        ++local.steps;
        local.peak_states = std::max(local.peak_states, states.size());
        local.total_states += states.size();
        if (states.empty()) break;
    }
    if (stats) *stats = local;

    if (states.empty()) return ring.zero();
    return states.begin()->second;
}

}  // namespace graphtensor
