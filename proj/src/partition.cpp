#include "graphtensor/partition.hpp"

#include "graphtensor/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace graphtensor {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_) {
        if (p <= 0) throw ArgumentError("partition parts must be positive");
    }
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
    weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string Partition::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out + "]";
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    if (auto c = a.weight_ <=> b.weight_; c != 0) return c;
    return std::lexicographical_compare_three_way(a.parts_.begin(), a.parts_.end(), b.parts_.begin(), b.parts_.end());
}

namespace {

void extend(int remaining, int max_part, int min_part, std::vector<int>& current, std::vector<Partition>& out) {
    out.emplace_back(current);
    for (int p = std::min(max_part, remaining); p >= min_part; --p) {
        current.push_back(p);
        extend(remaining - p, p, min_part, current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_up_to(int max_weight, int min_part) {
    if (min_part < 1) throw ArgumentError("partitions_up_to: min_part must be >= 1");
    std::vector<Partition> out;
    if (max_weight < 0) return out;
    std::vector<int> current;
    extend(max_weight, max_weight, min_part, current, out);
    std::sort(out.begin(), out.end());
    return out;
}

BigInt eval_power_sum(const Partition& lambda, std::span<const BigInt> x) {
    BigInt result = 1;
    for (int k : lambda.parts()) {
        BigInt pk = 0;
        for (const BigInt& xi : x) pk += pow(xi, static_cast<unsigned long>(k));
        result *= pk;
    }
    return result;
}

}  // namespace graphtensor
