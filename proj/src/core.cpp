#include "listnet/core.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "listnet/kernels.hpp"

namespace listnet {

ScoreVector score_query(const LinearModel& model, const QueryInstance& query) {
    ScoreVector scores;
    scores.reserve(query.size());
    for (const Document& doc : query.documents) {
        if (doc.features.size() != model.weights.size()) {
            throw std::invalid_argument(
                "score_query: feature dimension " + std::to_string(doc.features.size()) +
                " does not match model dimension " + std::to_string(model.weights.size()));
        }
        scores.push_back(kernels::dot(model.weights, doc.features));
    }
    return scores;
}

std::vector<double> softmax(std::span<const double> scores) {
    if (scores.empty()) throw std::domain_error("softmax: empty input");
    const double shift = kernels::max_value(scores);
    std::vector<double> out(scores.size());
    for (std::size_t i = 0; i < scores.size(); ++i) out[i] = std::exp(scores[i] - shift);
    const double total = kernels::sum(out);
    kernels::scale(1.0 / total, out);
    return out;
}

namespace {

void check_permutation(std::span<const int> ordering, std::size_t n) {
    if (ordering.size() != n)
        throw std::domain_error("ordering length does not match score length");
    std::vector<char> seen(n, 0);
    for (int j : ordering) {
        if (j < 0 || static_cast<std::size_t>(j) >= n || seen[static_cast<std::size_t>(j)])
            throw std::domain_error("ordering is not a permutation of 0..n-1");
        seen[static_cast<std::size_t>(j)] = 1;
    }
}

}  // namespace

double partial_softmax(std::span<const double> scores, std::span<const int> ordering,
                       int position) {
    const std::size_t n = scores.size();
    check_permutation(ordering, n);
    if (position < 1 || static_cast<std::size_t>(position) > n)
        throw std::domain_error("partial_softmax: position out of range");

    // Stabilize over the tail only; the head never enters the value.
    const std::size_t f = static_cast<std::size_t>(position) - 1;
    double shift = scores[static_cast<std::size_t>(ordering[f])];
    for (std::size_t t = f; t < n; ++t)
        shift = std::max(shift, scores[static_cast<std::size_t>(ordering[t])]);
    double denom = 0.0;
    for (std::size_t t = f; t < n; ++t)
        denom += std::exp(scores[static_cast<std::size_t>(ordering[t])] - shift);
    return std::exp(scores[static_cast<std::size_t>(ordering[f])] - shift) / denom;
}

std::vector<double> labels_as_scores(const QueryInstance& query) {
    std::vector<double> out;
    out.reserve(query.size());
    for (const Document& doc : query.documents) out.push_back(static_cast<double>(doc.label));
    return out;
}

}  // namespace listnet
