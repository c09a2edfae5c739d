#pragma once

#include <map>
#include <span>
#include <vector>

#include "listnet/types.hpp"

namespace listnet {

struct EvalResult {
    std::map<int, double> p_at;                    // cutoff -> mean precision
    std::map<int, std::vector<double>> per_query;  // cutoff -> per-query values
};

/// Fraction of documents with label >= min_relevant_label among the `cutoff`
/// highest-scored documents of the query. Ties order by ascending document
/// index; the divisor is always `cutoff`, even when the query is shorter.
double precision_at(const QueryInstance& query, std::span<const double> scores, int cutoff,
                    int min_relevant_label = 1);

/// Unweighted mean of per-query precision over all non-empty queries.
EvalResult evaluate(const Dataset& dataset, const LinearModel& model,
                    std::span<const int> cutoffs, int min_relevant_label = 1);

struct RunSummary {
    std::map<int, double> mean;
    std::map<int, double> stddev;  // sample standard deviation; 0 for a single run
    std::size_t runs = 0;
};

/// Mean and sample standard deviation per cutoff across repeated runs.
RunSummary aggregate_runs(const std::vector<EvalResult>& results);

}  // namespace listnet
