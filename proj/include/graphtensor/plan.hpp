#pragma once

#include "graphtensor/bigint.hpp"
#include "graphtensor/graph.hpp"

#include <span>
#include <vector>

namespace graphtensor {

/// Vertex elimination order for the contraction engine together with its
/// predicted cost sum_i r^{f_i}, f_i being the frontier size after step i.
/// The cost is a dense worst case; sparse families usually touch far fewer states.
struct ContractionPlan {
    std::vector<Vertex> order;
    BigInt predicted_cost;
};

/// Throws ArgumentError unless order is a permutation of 0..n-1.
void validate_order(const Graph& g, std::span<const Vertex> order);

/// Number of non-loop edges with exactly one endpoint among the first i
/// vertices of order, for i = 1..n.
std::vector<int> frontier_sizes(const Graph& g, std::span<const Vertex> order);

BigInt plan_cost(const Graph& g, std::span<const Vertex> order, int r);

/// Plan from a caller-supplied order.
ContractionPlan plan_given(const Graph& g, std::vector<Vertex> order, int r);

/// Repeatedly takes the unprocessed vertex that leaves the smallest frontier,
/// lowest id on ties.
ContractionPlan plan_greedy(const Graph& g, int r);

inline constexpr int kDefaultExhaustiveLimit = 12;

/// Minimum-cost order by dynamic programming over vertex subsets; the
/// lexicographically smallest optimal order wins. Throws PreconditionError
/// when n exceeds limit.
ContractionPlan plan_exhaustive(const Graph& g, int r, int limit = kDefaultExhaustiveLimit);

}  // namespace graphtensor
