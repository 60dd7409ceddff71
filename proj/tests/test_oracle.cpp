#include "graphtensor/errors.hpp"
#include "graphtensor/oracle.hpp"
#include "support.hpp"

#include <doctest.h>

#include <random>

using namespace graphtensor;
using namespace graphtensor::oracle;

TEST_CASE("brute_edge_colorings") {
    CHECK(brute_edge_colorings(make_complete(3), 3) == 6);
    for (int r = 1; r <= 5; ++r) CHECK(brute_edge_colorings(Graph(2, {{0, 1}}), r) == r);
    CHECK(brute_edge_colorings(make_cycle(1), 3) == 0);
    CHECK(brute_edge_colorings(make_complete_bipartite(3, 3), 3) == 12);
    CHECK(brute_edge_colorings(Graph(3, {}), 2) == 1);
}

TEST_CASE("brute_cycle_spectrum") {
    CHECK(brute_cycle_spectrum(make_complete(4)) == CycleSpectrum{{{}, 1}, {{3}, 4}, {{4}, 3}});
    CHECK(brute_cycle_spectrum(make_cycle(5)) == CycleSpectrum{{{}, 1}, {{5}, 1}});
    CHECK(brute_cycle_spectrum(Graph(2, {{0, 1}, {0, 1}})) == CycleSpectrum{{{}, 1}, {{2}, 1}});
    CHECK(brute_cycle_spectrum(Graph(1, {{0, 0}, {0, 0}})) == CycleSpectrum{{{}, 1}, {{1}, 2}});
    CHECK(brute_cycle_spectrum(make_path(5)) == CycleSpectrum{{{}, 1}});
}

TEST_CASE("brute_hamiltonian") {
    CHECK(brute_hamiltonian(make_complete(4)) == 3);
    CHECK(brute_hamiltonian(make_cycle(5)) == 1);
    CHECK(brute_hamiltonian(make_petersen()) == 0);
    CHECK_THROWS_AS(brute_hamiltonian(make_complete(2)), PreconditionError);
}

TEST_CASE("complete graphs have (n-1)!/2 Hamiltonian cycles") {
    long factorial = 1;
    for (int n = 3; n <= 7; ++n) {
        factorial *= n - 1;
        const CycleSpectrum s = brute_cycle_spectrum(make_complete(n));
        CHECK(s.at(Partition{n}) == factorial / 2);
        CHECK(brute_hamiltonian(make_complete(n)) == factorial / 2);
    }
}

TEST_CASE("the two Hamiltonian oracles agree") {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 80; ++trial) {
        const Graph g = trial % 3 ? testing::random_simple_graph(rng, 3, 8, 0.6) : testing::random_multigraph(rng, 3, 6, 10);
        const CycleSpectrum s = brute_cycle_spectrum(g);
        const auto it = s.find(Partition{g.vertex_count()});
        const BigInt from_spectrum = it == s.end() ? BigInt(0) : it->second;
        CHECK(brute_hamiltonian(g) == from_spectrum);
    }
}

TEST_CASE("edge colorings are monotone in r") {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 30; ++trial) {
        const Graph g = testing::random_simple_graph(rng, 1, 6);
        BigInt prev = 0;
        for (int r = 1; r <= 4; ++r) {
            const BigInt cur = brute_edge_colorings(g, r);
            CHECK(cur >= prev);
            prev = cur;
        }
    }
}
