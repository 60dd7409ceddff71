#pragma once

#include "graphtensor/bigint.hpp"

#include <compare>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace graphtensor {

/// Integer partition: positive parts in non-increasing order. The empty
/// partition (weight 0) is allowed.
class Partition {
public:
    Partition() = default;
    /// Parts may come in any order; they are sorted. Throws ArgumentError on a non-positive part.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    std::span<const int> parts() const noexcept { return parts_; }
    int weight() const noexcept { return weight_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }

    /// "[3,3]", "[]" for the empty partition.
    std::string to_string() const;

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    /// Orders by weight, then lexicographically by parts.
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

/// Number of multicycles N_lambda per cycle type lambda. Types with no
/// multicycle are absent; the empty type is always present with count 1.
using CycleSpectrum = std::map<Partition, BigInt>;

/// All partitions with weight <= max_weight whose parts are all >= min_part,
/// in Partition order (weight first).
std::vector<Partition> partitions_up_to(int max_weight, int min_part = 1);

/// p_lambda(x) = prod over parts k of sum_i x_i^k. Empty partition gives 1.
BigInt eval_power_sum(const Partition& lambda, std::span<const BigInt> x);

}  // namespace graphtensor
