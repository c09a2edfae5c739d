#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "listnet/types.hpp"

namespace listnet {

inline constexpr std::uint64_t kDefaultClassCap = 10'000'000;

/// Ordered prefix of k distinct document indices: the documents occupying
/// ranks 1..k, identifying one Top-k permutation class.
struct PermutationClass {
    std::vector<int> prefix;
};

/// Set of equal-length prefixes, stored flat (size() * k indices).
/// A full enumeration contains every class exactly once; a sampled set may
/// repeat classes. `weights` optionally carries per-class values (parallel
/// to the classes) and may be left empty.
struct ClassSet {
    int k = 1;
    std::vector<int> indices;
    std::vector<double> weights;

    std::size_t size() const noexcept {
        return k > 0 ? indices.size() / static_cast<std::size_t>(k) : 0;
    }
    std::span<const int> prefix(std::size_t i) const noexcept {
        return {indices.data() + i * static_cast<std::size_t>(k), static_cast<std::size_t>(k)};
    }
    void append(std::span<const int> prefix) {
        indices.insert(indices.end(), prefix.begin(), prefix.end());
    }
};

/// n! / (n-k)!: the number of Top-k classes over n documents.
/// Throws resource_error when the count exceeds `cap` (or does not fit in
/// 64 bits), std::invalid_argument unless 1 <= k <= n.
std::uint64_t count_classes(int n, int k, std::uint64_t cap = kDefaultClassCap);

/// Every Top-k prefix of {0..n-1}, in lexicographic order.
ClassSet enumerate_classes(int n, int k, std::uint64_t cap = kDefaultClassCap);

/// log of the sequential-choice probability of `prefix` under scores `s`:
/// each next document is drawn proportionally to exp(score) among the
/// documents not yet placed. Computed in log space with max-subtraction.
double log_class_probability(std::span<const double> s, std::span<const int> prefix);

double class_probability(std::span<const double> s, std::span<const int> prefix);

inline double class_probability(std::span<const double> s, const PermutationClass& c) {
    return class_probability(s, c.prefix);
}

/// Per-class probability of every member of `set` under `s`. Over a full
/// enumeration the values form a distribution (sum 1); sampled sets keep the
/// raw per-class values with no renormalization.
std::vector<double> class_distribution(std::span<const double> s, const ClassSet& set);

/// L = -sum_{g in set} P_y(g) * log P_z(g).
/// Non-negative over a full enumeration; a sampled set yields the same sum
/// restricted to its members.
double cross_entropy(std::span<const double> y, std::span<const double> z, const ClassSet& set);

}  // namespace listnet
