#pragma once

#include "graphtensor/bigint.hpp"
#include "graphtensor/graph.hpp"
#include "graphtensor/partition.hpp"

namespace graphtensor::oracle {

// Brute-force reference counts enumerated straight from the definitions.
// Nothing here touches tensors or the contraction engine. Desk scale only.

/// Backtracking over edges: colors 1..r, edges sharing a vertex differ; a loop is never proper.
BigInt brute_edge_colorings(const Graph& g, int r);

/// Enumerates edge subsets in which every touched vertex has degree exactly 2
/// and tallies them by component sizes. Includes the empty subset.
CycleSpectrum brute_cycle_spectrum(const Graph& g);

/// Rooted backtracking from vertex 0; each undirected cycle is counted once by
/// requiring the second vertex id to be smaller than the last. Parallel edges
/// give distinct cycles.
BigInt brute_hamiltonian(const Graph& g);

}  // namespace graphtensor::oracle
