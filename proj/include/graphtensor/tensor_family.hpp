#pragma once

#include "graphtensor/errors.hpp"
#include "graphtensor/rings.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace graphtensor {

/// Tensor index ("color") in 1..r. Zero marks an unassigned slot in partial assignments.
using Color = std::uint16_t;
inline constexpr Color kUnassigned = 0;
inline constexpr int kMaxColors = 0xFFFF;

enum class FamilyKind { coloring, cycle };

namespace detail {

inline void check_colors(std::span<const Color> idx, int r, bool allow_unassigned) {
    for (Color c : idx) {
        if ((c == kUnassigned && allow_unassigned)) continue;
        if (c < 1 || c > r)
            throw ArgumentError("tensor index " + std::to_string(c) + " outside 1.." + std::to_string(r));
    }
}

inline void check_color_count(int r) {
    if (r < 1 || r > kMaxColors) throw ArgumentError("color count must lie in 1.." + std::to_string(kMaxColors));
}

}  // namespace detail

/// 1 iff the indices are pairwise distinct. Degree 0 gives 1 (empty product).
inline int coloring_entry(std::span<const Color> idx, int r) {
    detail::check_color_count(r);
    detail::check_colors(idx, r, false);
    std::vector<Color> sorted(idx.begin(), idx.end());
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end() ? 1 : 0;
}

/// A symmetric tensor per degree, defined by an entry rule and never stored.
///
/// Coloring family (r colors): entry 1 on pairwise-distinct index tuples, else 0.
/// Cycle family (r colors, weights x_1..x_{r-1}, t): x_i on any arrangement of
/// {i, i, r, ..., r}, t on the all-r tuple (including degree 1), 0 otherwise.
/// A degree-0 vertex contributes 1 (coloring) or t (cycle).
template <Ring R>
class TensorFamily {
public:
    using value_type = typename R::value_type;

    static TensorFamily coloring(R ring, int r) {
        detail::check_color_count(r);
        return TensorFamily(FamilyKind::coloring, std::move(ring), r, {}, value_type{});
    }

    static TensorFamily cycle(R ring, std::vector<value_type> x, value_type t) {
        const int r = static_cast<int>(x.size()) + 1;
        if (r < 2) throw ArgumentError("cycle family needs at least one weight x_1");
        detail::check_color_count(r);
        return TensorFamily(FamilyKind::cycle, std::move(ring), r, std::move(x), std::move(t));
    }

    FamilyKind kind() const noexcept { return kind_; }
    int colors() const noexcept { return r_; }
    const R& ring() const noexcept { return ring_; }
    /// Cycle weights x_1..x_{r-1}; empty for the coloring family.
    std::span<const value_type> x() const noexcept { return x_; }
    const value_type& t() const noexcept { return t_; }

    /// Value on a fully specified index tuple (any order).
    value_type entry(std::span<const Color> idx) const {
        detail::check_colors(idx, r_, false);
        if (kind_ == FamilyKind::coloring) return coloring_entry(idx, r_) ? ring_.one() : ring_.zero();
        return cycle_value(idx);
    }

    /// Value of the scalar placed on an isolated vertex.
    value_type isolated_value() const { return kind_ == FamilyKind::coloring ? ring_.one() : t_; }

    /// Calls visit(full_assignment, value) for every completion of `partial`
    /// (length d, kUnassigned marks a free slot) with a nonzero entry.
    /// Work is proportional to the number of completions emitted times d.
    template <class Visitor>
    void for_each_completion(std::span<const Color> partial, Visitor&& visit) const {
        detail::check_colors(partial, r_, true);
        std::vector<Color> full(partial.begin(), partial.end());
        if (kind_ == FamilyKind::coloring) {
            coloring_completions(full, visit);
        } else {
            cycle_completions(full, visit);
        }
    }

    /// Completions of a partial assignment given as slot -> color, collected.
    std::vector<std::pair<std::vector<Color>, value_type>> enumerate_completions(
        int d, const std::map<int, Color>& partial) const {
        if (d < 0) throw ArgumentError("degree must be nonnegative");
        std::vector<Color> slots(static_cast<std::size_t>(d), kUnassigned);
        for (const auto& [slot, color] : partial) {
            if (slot < 0 || slot >= d) throw ArgumentError("slot " + std::to_string(slot) + " outside 0..d-1");
            if (color == kUnassigned) throw ArgumentError("partial assignment uses color 0");
            slots[static_cast<std::size_t>(slot)] = color;
        }
        std::vector<std::pair<std::vector<Color>, value_type>> out;
        for_each_completion(slots, [&](std::span<const Color> full, const value_type& v) {
            out.emplace_back(std::vector<Color>(full.begin(), full.end()), v);
        });
        return out;
    }

private:
    TensorFamily(FamilyKind kind, R ring, int r, std::vector<value_type> x, value_type t)
        : kind_(kind), ring_(std::move(ring)), r_(r), x_(std::move(x)), t_(std::move(t)) {
        if (kind_ == FamilyKind::coloring) t_ = ring_.zero();
    }

    value_type cycle_value(std::span<const Color> idx) const {
        const auto r = static_cast<Color>(r_);
        if (idx.empty()) return t_;
        Color other = kUnassigned;
        int others = 0;
        for (Color c : idx) {
            if (c == r) continue;
            if (others > 0 && c != other) return ring_.zero();
            other = c;
            ++others;
        }
        if (others == 0) return t_;
        if (others == 2) return x_[other - 1];
        return ring_.zero();
    }

    template <class Visitor>
    void coloring_completions(std::vector<Color>& full, Visitor& visit) const {
        std::vector<char> used(static_cast<std::size_t>(r_) + 1, 0);
        std::vector<std::size_t> free_slots;
        for (std::size_t s = 0; s < full.size(); ++s) {
            if (full[s] == kUnassigned) {
                free_slots.push_back(s);
            } else if (used[full[s]]++) {
                return;
            }
        }
        if (full.size() > static_cast<std::size_t>(r_)) return;
        const value_type one = ring_.one();
        fill_distinct(full, free_slots, 0, used, one, visit);
    }

    template <class Visitor>
    void fill_distinct(std::vector<Color>& full, const std::vector<std::size_t>& free_slots, std::size_t k,
                       std::vector<char>& used, const value_type& one, Visitor& visit) const {
        if (k == free_slots.size()) {
            visit(std::span<const Color>(full), one);
            return;
        }
        const std::size_t s = free_slots[k];
        for (int c = 1; c <= r_; ++c) {
            if (used[static_cast<std::size_t>(c)]) continue;
            used[static_cast<std::size_t>(c)] = 1;
            full[s] = static_cast<Color>(c);
            fill_distinct(full, free_slots, k + 1, used, one, visit);
            used[static_cast<std::size_t>(c)] = 0;
        }
        full[s] = kUnassigned;
    }

    template <class Visitor>
    void cycle_completions(std::vector<Color>& full, Visitor& visit) const {
        const auto r = static_cast<Color>(r_);
        std::vector<std::size_t> free_slots;
        Color other = kUnassigned;
        int others = 0;
        for (std::size_t s = 0; s < full.size(); ++s) {
            const Color c = full[s];
            if (c == kUnassigned) {
                free_slots.push_back(s);
            } else if (c != r) {
                if (others > 0 && c != other) return;
                other = c;
                ++others;
            }
        }
        if (others > 2) return;
        auto emit = [&](const value_type& v) {
            if (!ring_.is_zero(v)) visit(std::span<const Color>(full), v);
        };
        for (std::size_t s : free_slots) full[s] = r;

        if (full.empty()) {
            emit(t_);
        } else if (full.size() == 1) {
            if (others == 0) emit(t_);
        } else if (others == 2) {
            emit(x_[other - 1]);
        } else if (others == 1) {
            for (std::size_t s : free_slots) {
                full[s] = other;
                emit(x_[other - 1]);
                full[s] = r;
            }
        } else {
            emit(t_);
            for (std::size_t a = 0; a < free_slots.size(); ++a) {
                for (std::size_t b = a + 1; b < free_slots.size(); ++b) {
                    for (int i = 1; i < r_; ++i) {
                        const value_type& xi = x_[static_cast<std::size_t>(i - 1)];
                        if (ring_.is_zero(xi)) continue;
                        full[free_slots[a]] = full[free_slots[b]] = static_cast<Color>(i);
                        visit(std::span<const Color>(full), xi);
                    }
                    full[free_slots[a]] = full[free_slots[b]] = r;
                }
            }
        }
    }

    FamilyKind kind_;
    R ring_;
    int r_;
    std::vector<value_type> x_;
    value_type t_;
};

/// Cycle-family entry for an explicit index tuple.
template <Ring R>
typename R::value_type cycle_entry(std::span<const Color> idx, const TensorFamily<R>& family) {
    if (family.kind() != FamilyKind::cycle) throw ArgumentError("cycle_entry needs a cycle family");
    return family.entry(idx);
}

/// Symmetric r x r matrix used to contract the two half-edges of every edge.
template <Ring R>
class BilinearForm {
public:
    using value_type = typename R::value_type;

    static BilinearForm identity(const R& ring, int r) {
        detail::check_color_count(r);
        std::vector<std::vector<value_type>> m(static_cast<std::size_t>(r),
                                               std::vector<value_type>(static_cast<std::size_t>(r), ring.zero()));
        for (int i = 0; i < r; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = ring.one();
        return BilinearForm(std::move(m), true);
    }

    /// Throws ArgumentError unless m is square and symmetric.
    static BilinearForm from_matrix(const R& ring, std::vector<std::vector<value_type>> m) {
        const std::size_t r = m.size();
        detail::check_color_count(static_cast<int>(r));
        bool is_identity = true;
        for (std::size_t i = 0; i < r; ++i) {
            if (m[i].size() != r) throw ArgumentError("bilinear form matrix is not square");
        }
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t j = 0; j < r; ++j) {
                if (!(m[i][j] == m[j][i])) throw ArgumentError("bilinear form matrix is not symmetric");
                const bool expect_one = i == j;
                if (!(m[i][j] == (expect_one ? ring.one() : ring.zero()))) is_identity = false;
            }
        }
        return BilinearForm(std::move(m), is_identity);
    }

    int size() const noexcept { return static_cast<int>(m_.size()); }
    bool is_identity() const noexcept { return identity_; }
    /// B(a, b) for colors a, b in 1..r.
    const value_type& weight(Color a, Color b) const { return m_[a - 1u][b - 1u]; }

private:
    BilinearForm(std::vector<std::vector<value_type>> m, bool identity) : m_(std::move(m)), identity_(identity) {}

    std::vector<std::vector<value_type>> m_;
    bool identity_;
};

}  // namespace graphtensor
