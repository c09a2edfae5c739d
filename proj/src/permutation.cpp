#include "listnet/permutation.hpp"

#include <cfloat>
#include <cmath>
#include <stdexcept>
#include <string>

#include "listnet/errors.hpp"
#include "listnet/kernels.hpp"

namespace listnet {

std::uint64_t count_classes(int n, int k, std::uint64_t cap) {
    if (n < 1 || k < 1 || k > n)
        throw std::invalid_argument("count_classes: need 1 <= k <= n, got n=" +
                                    std::to_string(n) + " k=" + std::to_string(k));
    std::uint64_t count = 1;
    bool overflow = false;
    for (int i = 0; i < k; ++i) {
        if (__builtin_mul_overflow(count, static_cast<std::uint64_t>(n - i), &count)) {
            overflow = true;
            break;
        }
    }
    if (overflow || count > cap) {
        const std::string required =
            overflow ? "more than 2^64" : std::to_string(count);
        throw resource_error("Top-" + std::to_string(k) + " enumeration over " +
                                 std::to_string(n) + " documents needs " + required +
                                 " classes, above the cap of " + std::to_string(cap),
                             overflow ? UINT64_MAX : count, cap);
    }
    return count;
}

ClassSet enumerate_classes(int n, int k, std::uint64_t cap) {
    const std::uint64_t count = count_classes(n, k, cap);
    ClassSet set;
    set.k = k;
    set.indices.reserve(static_cast<std::size_t>(count) * static_cast<std::size_t>(k));

    // Depth-first with ascending candidate index yields lexicographic order.
    std::vector<int> prefix(static_cast<std::size_t>(k));
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    auto expand = [&](auto&& self, int depth) -> void {
        if (depth == k) {
            set.append(prefix);
            return;
        }
        for (int j = 0; j < n; ++j) {
            if (used[static_cast<std::size_t>(j)]) continue;
            used[static_cast<std::size_t>(j)] = 1;
            prefix[static_cast<std::size_t>(depth)] = j;
            self(self, depth + 1);
            used[static_cast<std::size_t>(j)] = 0;
        }
    };
    expand(expand, 0);
    return set;
}

namespace {

// exp(s - max) plus its sum; shared by every probability walk over one
// score vector so per-class work stays O(k).
struct ExpTable {
    std::vector<double> e;
    std::vector<double> shifted;  // s - max
    double total = 0.0;
};

ExpTable make_exp_table(std::span<const double> s) {
    ExpTable table;
    const double shift = kernels::max_value(s);
    table.e.resize(s.size());
    table.shifted.resize(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        table.shifted[i] = s[i] - shift;
        table.e[i] = std::exp(table.shifted[i]);
    }
    table.total = kernels::sum(table.e);
    return table;
}

void check_prefix(std::span<const int> prefix, std::size_t n) {
    if (prefix.empty() || prefix.size() > n)
        throw std::domain_error("permutation class: need 1 <= k <= n");
    std::vector<char> seen(n, 0);
    for (int j : prefix) {
        if (j < 0 || static_cast<std::size_t>(j) >= n || seen[static_cast<std::size_t>(j)])
            throw std::domain_error("permutation class: indices must be distinct and < n");
        seen[static_cast<std::size_t>(j)] = 1;
    }
}

// log prod_t e[j_t] / (mass still unplaced before rank t). The unplaced
// mass at rank t is the full total minus the prefix entries before t, so the
// suffix ordering never matters.
double log_prob_walk(const ExpTable& table, std::span<const int> prefix) {
    double remaining = table.total;
    double log_prob = 0.0;
    for (int j : prefix) {
        const auto idx = static_cast<std::size_t>(j);
        const double floor = remaining < DBL_MIN ? DBL_MIN : remaining;
        log_prob += table.shifted[idx] - std::log(floor);
        remaining -= table.e[idx];
    }
    return log_prob;
}

}  // namespace

double log_class_probability(std::span<const double> s, std::span<const int> prefix) {
    check_prefix(prefix, s.size());
    return log_prob_walk(make_exp_table(s), prefix);
}

double class_probability(std::span<const double> s, std::span<const int> prefix) {
    return std::exp(log_class_probability(s, prefix));
}

std::vector<double> class_distribution(std::span<const double> s, const ClassSet& set) {
    const ExpTable table = make_exp_table(s);
    std::vector<double> probs;
    probs.reserve(set.size());
    for (std::size_t i = 0; i < set.size(); ++i) {
        check_prefix(set.prefix(i), s.size());
        probs.push_back(std::exp(log_prob_walk(table, set.prefix(i))));
    }
    return probs;
}

double cross_entropy(std::span<const double> y, std::span<const double> z, const ClassSet& set) {
    if (y.size() != z.size())
        throw std::invalid_argument("cross_entropy: score vectors differ in length");
    const ExpTable ty = make_exp_table(y);
    const ExpTable tz = make_exp_table(z);
    double loss = 0.0;
    for (std::size_t i = 0; i < set.size(); ++i) {
        const std::span<const int> prefix = set.prefix(i);
        check_prefix(prefix, y.size());
        loss -= std::exp(log_prob_walk(ty, prefix)) * log_prob_walk(tz, prefix);
    }
    return loss;
}

}  // namespace listnet
