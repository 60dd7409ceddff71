#include "graphtensor/counters.hpp"

#include "graphtensor/errors.hpp"
#include "graphtensor/linear_solve.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <random>
#include <string>
#include <thread>

namespace graphtensor {

namespace {

ContractionPlan resolve_plan(const Graph& g, int r, const ContractionPlan* plan) {
    return plan ? *plan : plan_greedy(g, r);
}

}  // namespace

BigInt count_edge_colorings(const Graph& g, int r, const ContractionPlan* plan, ContractStats* stats) {
    if (r < 1) throw ArgumentError("color count must be >= 1");
    const IntegerRing ring;
    const auto family = TensorFamily<IntegerRing>::coloring(ring, r);
    const auto b = BilinearForm<IntegerRing>::identity(ring, r);
    return contract(g, family, b, resolve_plan(g, r, plan), stats);
}

BigInt count_tait(const Graph& g, const ContractionPlan* plan, ContractStats* stats) {
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) != 3)
            throw PreconditionError("Tait colorings need a cubic graph; vertex " + std::to_string(v) + " has degree " +
                                    std::to_string(g.degree(v)));
    }
    return count_edge_colorings(g, 3, plan, stats);
}

BigInt eval_cycle_function(const Graph& g, std::span<const BigInt> x, const BigInt& t, const ContractionPlan* plan,
                           ContractStats* stats) {
    if (x.empty()) throw ArgumentError("eval_cycle_function needs at least one weight x_1");
    const IntegerRing ring;
    const int r = static_cast<int>(x.size()) + 1;
    const auto family = TensorFamily<IntegerRing>::cycle(ring, std::vector<BigInt>(x.begin(), x.end()), t);
    const auto b = BilinearForm<IntegerRing>::identity(ring, r);
    return contract(g, family, b, resolve_plan(g, r, plan), stats);
}

BigInt count_spanning_cycles(const Graph& g, const ContractionPlan* plan, ContractStats* stats) {
    const BigInt one = 1;
    return eval_cycle_function(g, std::span<const BigInt>(&one, 1), BigInt(0), plan, stats);
}

BigInt count_hamiltonian(const Graph& g, const ContractionPlan* plan, ContractStats* stats) {
    const int n = g.vertex_count();
    if (n < 3) throw PreconditionError("Hamiltonian counting needs n >= 3, got n = " + std::to_string(n));
    const CyclotomicRing ring(n);
    const int r = n + 1;
    std::vector<Cyclotomic> x;
    x.reserve(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) x.push_back(ring.zeta_power(j));
    const auto family = TensorFamily<CyclotomicRing>::cycle(ring, std::move(x), ring.zero());
    const auto b = BilinearForm<CyclotomicRing>::identity(ring, r);
    const Cyclotomic value = contract(g, family, b, resolve_plan(g, r, plan), stats);

    if (!value.is_constant())
        throw ConsistencyError("Hamiltonian contraction is not an integer: " + value.to_string());
    const BigInt& total = value.constant_term();
    if (total < 0 || total % n != 0)
        throw ConsistencyError("Hamiltonian contraction " + total.get_str() + " is not a nonnegative multiple of n = " +
                               std::to_string(n));
    return total / n;
}

std::vector<Partition> feasible_partitions(const Graph& g, int max_weight) {
    const int min_part = g.has_loops() ? 1 : (g.has_multi_edges() ? 2 : 3);
    return partitions_up_to(std::min(max_weight, g.vertex_count()), min_part);
}

namespace {

struct SamplePoint {
    std::vector<BigInt> x;
    BigInt t;
};

// Runs fn(i) for i in [0, count) on up to `threads` workers; rethrows the first failure.
template <class Fn>
void parallel_for(std::size_t count, int threads, Fn fn) {
    const auto workers = static_cast<std::size_t>(std::max(1, threads));
    if (workers == 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mu;
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < std::min(workers, count); ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) {
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard lock(failure_mu);
                    if (!failure) failure = std::current_exception();
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
}

}  // namespace

CycleSpectrum cycle_spectrum(const Graph& g, const SpectrumOptions& options) {
    const int n = g.vertex_count();
    const int cap = std::min(options.max_weight.value_or(n), n);
    if (cap < 0) throw ArgumentError("max_weight must be nonnegative");
    if (options.coordinate_bound < 1) throw ArgumentError("coordinate_bound must be positive");

    // Every type of weight <= n stays in the system even when capped; the cap
    // only filters the output.
    const std::vector<Partition> unknowns = feasible_partitions(g, n);
    const std::size_t k = unknowns.size();
    const int r = n + 1;
    const ContractionPlan plan = plan_greedy(g, r);

    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<std::int64_t> coord(-options.coordinate_bound, options.coordinate_bound);

    for (int attempt = 0; attempt < std::max(1, options.max_attempts); ++attempt) {
        std::vector<SamplePoint> points(k);
        for (auto& p : points) {
            p.x.resize(static_cast<std::size_t>(std::max(n, 1)));
            for (auto& xi : p.x) xi = static_cast<long>(coord(rng));
            p.t = static_cast<long>(coord(rng));
        }

        RationalMatrix m(k, std::vector<Rational>(k));
        for (std::size_t row = 0; row < k; ++row) {
            for (std::size_t col = 0; col < k; ++col) {
                const Partition& lambda = unknowns[col];
                // 0^0 = 1
                const BigInt monomial = pow(points[row].t, static_cast<unsigned long>(n - lambda.weight())) *
                                        eval_power_sum(lambda, points[row].x);
                m[row][col] = Rational(monomial);
            }
        }

        std::vector<Rational> rhs(k);
        parallel_for(k, options.threads, [&](std::size_t i) {
            rhs[i] = Rational(eval_cycle_function(g, points[i].x, points[i].t, &plan));
        });

        const auto solution = solve_linear_exact(std::move(m), std::move(rhs));
        if (!solution) continue;

        CycleSpectrum spectrum;
        for (std::size_t i = 0; i < k; ++i) {
            const Rational& v = (*solution)[i];
            if (v.get_den() != 1 || v < 0)
                throw ConsistencyError("recovered N" + unknowns[i].to_string() + " = " + v.get_str() +
                                       " is not a nonnegative integer");
            if (v != 0 && unknowns[i].weight() <= cap) spectrum.emplace(unknowns[i], v.get_num());
        }
        const auto empty = spectrum.find(Partition{});
        if (empty == spectrum.end() || empty->second != 1)
            throw ConsistencyError("recovered N[] differs from 1");
        return spectrum;
    }
    throw ConsistencyError("interpolation matrix singular after " + std::to_string(options.max_attempts) +
                           " attempts");
}

}  // namespace graphtensor
