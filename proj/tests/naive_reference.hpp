#pragma once

// Test-only reference implementations, kept deliberately literal: every
// class is expanded to a full ordering and every tail sum is recomputed from
// scratch. Slow, transparent, and independent of the library's
// total-minus-placed evaluation path.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "listnet/core.hpp"
#include "listnet/permutation.hpp"
#include "listnet/types.hpp"

namespace listnet::testing {

/// prefix extended with the remaining documents, arranged by `suffix_seed`
/// (0 keeps ascending order; other seeds shuffle deterministically).
inline std::vector<int> full_ordering(std::span<const int> prefix, std::size_t n,
                                      std::uint64_t suffix_seed = 0) {
    std::vector<char> used(n, 0);
    for (int j : prefix) used[static_cast<std::size_t>(j)] = 1;
    std::vector<int> suffix;
    for (std::size_t j = 0; j < n; ++j)
        if (!used[j]) suffix.push_back(static_cast<int>(j));
    if (suffix_seed != 0) {
        std::mt19937_64 gen(suffix_seed);
        std::shuffle(suffix.begin(), suffix.end(), gen);
    }
    std::vector<int> ordering(prefix.begin(), prefix.end());
    ordering.insert(ordering.end(), suffix.begin(), suffix.end());
    return ordering;
}

inline double naive_log_class_probability(std::span<const double> s,
                                          std::span<const int> prefix) {
    double lp = 0.0;
    const std::vector<int> ordering = full_ordering(prefix, s.size());
    for (std::size_t t = 0; t < prefix.size(); ++t) {
        double tail = 0.0;
        for (std::size_t v = t; v < ordering.size(); ++v)
            tail += std::exp(s[static_cast<std::size_t>(ordering[v])]);
        lp += s[static_cast<std::size_t>(ordering[t])] - std::log(tail);
    }
    return lp;
}

/// Literal per-ordering form of the Top-k descent gradient. The tail mean
///   E_t = sum_{v=t..n} e^{z_v} x_v / sum_{v=t..n} e^{z_v}
/// is evaluated over an explicit ordering so suffix arrangements can be
/// compared against each other.
inline GradientVector naive_topk_gradient(const QueryInstance& query, const LinearModel& model,
                                          const ClassSet& set, std::uint64_t suffix_seed = 0) {
    const std::size_t n = query.size();
    const std::size_t d = model.dim();
    const ScoreVector z = score_query(model, query);
    const std::vector<double> y = labels_as_scores(query);

    GradientVector grad(d, 0.0);
    for (std::size_t i = 0; i < set.size(); ++i) {
        const auto prefix = set.prefix(i);
        const std::vector<int> ordering = full_ordering(prefix, n, suffix_seed);
        const double py = std::exp(naive_log_class_probability(y, prefix));

        std::vector<double> term(d, 0.0);
        for (std::size_t f = 0; f < prefix.size(); ++f) {
            double tail_mass = 0.0;
            std::vector<double> tail_mean(d, 0.0);
            for (std::size_t v = f; v < n; ++v) {
                const auto idx = static_cast<std::size_t>(ordering[v]);
                const double e = std::exp(z[idx]);
                tail_mass += e;
                for (std::size_t c = 0; c < d; ++c)
                    tail_mean[c] += e * query.documents[idx].features[c];
            }
            const auto placed = static_cast<std::size_t>(ordering[f]);
            for (std::size_t c = 0; c < d; ++c)
                term[c] += tail_mean[c] / tail_mass - query.documents[placed].features[c];
        }
        for (std::size_t c = 0; c < d; ++c) grad[c] += py * term[c];
    }
    return grad;
}

inline QueryInstance random_query(std::mt19937_64& gen, std::size_t n, std::size_t d) {
    QueryInstance query;
    query.query_id = "synthetic";
    for (std::size_t j = 0; j < n; ++j) {
        Document doc;
        doc.label = static_cast<int>(gen() % 3);
        doc.features.resize(d);
        for (double& x : doc.features)
            x = -1.0 + 2.0 * static_cast<double>(gen() >> 11) * 0x1.0p-53;
        query.documents.push_back(std::move(doc));
    }
    return query;
}

inline LinearModel random_model(std::mt19937_64& gen, std::size_t d) {
    LinearModel model;
    model.weights.resize(d);
    for (double& w : model.weights)
        w = -1.0 + 2.0 * static_cast<double>(gen() >> 11) * 0x1.0p-53;
    return model;
}

}  // namespace listnet::testing
