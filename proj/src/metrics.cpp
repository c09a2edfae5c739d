#include "listnet/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "listnet/core.hpp"

namespace listnet {

double precision_at(const QueryInstance& query, std::span<const double> scores, int cutoff,
                    int min_relevant_label) {
    if (cutoff < 1) throw std::invalid_argument("precision_at: cutoff must be >= 1");
    if (scores.size() != query.size())
        throw std::invalid_argument("precision_at: score length does not match query");

    std::vector<std::size_t> order(query.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return scores[a] != scores[b] ? scores[a] > scores[b] : a < b;
    });

    const std::size_t top = std::min<std::size_t>(static_cast<std::size_t>(cutoff), order.size());
    int relevant = 0;
    for (std::size_t r = 0; r < top; ++r)
        if (query.documents[order[r]].label >= min_relevant_label) ++relevant;
    return static_cast<double>(relevant) / static_cast<double>(cutoff);
}

EvalResult evaluate(const Dataset& dataset, const LinearModel& model,
                    std::span<const int> cutoffs, int min_relevant_label) {
    EvalResult result;
    for (int cutoff : cutoffs) result.per_query[cutoff] = {};

    for (const QueryInstance& query : dataset.queries) {
        if (query.size() == 0) continue;
        const ScoreVector scores = score_query(model, query);
        for (int cutoff : cutoffs)
            result.per_query[cutoff].push_back(
                precision_at(query, scores, cutoff, min_relevant_label));
    }
    for (int cutoff : cutoffs) {
        const std::vector<double>& values = result.per_query[cutoff];
        const double total = std::accumulate(values.begin(), values.end(), 0.0);
        result.p_at[cutoff] = values.empty() ? 0.0 : total / static_cast<double>(values.size());
    }
    return result;
}

RunSummary aggregate_runs(const std::vector<EvalResult>& results) {
    if (results.empty()) throw std::domain_error("aggregate_runs: no results");
    RunSummary summary;
    summary.runs = results.size();
    for (const auto& [cutoff, _] : results.front().p_at) {
        double mean = 0.0;
        for (const EvalResult& r : results) mean += r.p_at.at(cutoff);
        mean /= static_cast<double>(results.size());

        double variance = 0.0;
        if (results.size() > 1) {
            for (const EvalResult& r : results) {
                const double delta = r.p_at.at(cutoff) - mean;
                variance += delta * delta;
            }
            variance /= static_cast<double>(results.size() - 1);
        }
        summary.mean[cutoff] = mean;
        summary.stddev[cutoff] = std::sqrt(variance);
    }
    return summary;
}

}  // namespace listnet
