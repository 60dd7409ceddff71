#pragma once

#include "graphtensor/bigint.hpp"
#include "graphtensor/contract.hpp"
#include "graphtensor/graph.hpp"
#include "graphtensor/partition.hpp"
#include "graphtensor/plan.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace graphtensor {

// Counting operations built on the contraction engine, all with the identity
// bilinear form. Each takes an optional plan (greedy by default) and an
// optional stats sink; neither changes the returned value.

/// Number of proper edge colorings with r colors. Zero for graphs with loops.
BigInt count_edge_colorings(const Graph& g, int r, const ContractionPlan* plan = nullptr,
                            ContractStats* stats = nullptr);

/// Proper 3-edge colorings of a cubic graph. Throws PreconditionError if some degree is not 3.
BigInt count_tait(const Graph& g, const ContractionPlan* plan = nullptr, ContractStats* stats = nullptr);

/// sum over partitions lambda, |lambda| <= n, of t^{n-|lambda|} p_lambda(x) N_lambda(g),
/// evaluated by contracting the cycle family with r = |x| + 1 colors.
BigInt eval_cycle_function(const Graph& g, std::span<const BigInt> x, const BigInt& t,
                           const ContractionPlan* plan = nullptr, ContractStats* stats = nullptr);

/// Number of 2-regular spanning subgraphs (r = 2, x = (1), t = 0).
BigInt count_spanning_cycles(const Graph& g, const ContractionPlan* plan = nullptr, ContractStats* stats = nullptr);

/// Number of Hamiltonian cycles, via the cycle family over Z[zeta_n] with
/// r = n + 1, x_j = zeta^j and t = 0. Throws PreconditionError for n < 3 and
/// ConsistencyError if the contraction is not a constant multiple of n.
BigInt count_hamiltonian(const Graph& g, const ContractionPlan* plan = nullptr, ContractStats* stats = nullptr);

/// Cycle types that can occur in g with weight <= max_weight: parts >= 3 for
/// simple graphs, >= 2 with parallel edges, >= 1 with loops.
std::vector<Partition> feasible_partitions(const Graph& g, int max_weight);

struct SpectrumOptions {
    std::optional<int> max_weight;  // defaults to n
    std::uint64_t seed = 0x5eed5eedULL;
    int max_attempts = 5;
    int threads = 1;
    std::int64_t coordinate_bound = std::int64_t{1} << 20;
};

/// Recovers every N_lambda with |lambda| <= max_weight by evaluating the cycle
/// function (r = n + 1) at random integer points and solving the resulting
/// square system exactly. Zero counts are omitted.
CycleSpectrum cycle_spectrum(const Graph& g, const SpectrumOptions& options = {});

}  // namespace graphtensor
