#pragma once

#include <span>
#include <vector>

#include "listnet/types.hpp"

namespace listnet {

/// scores[j] = weights . features_j for every document of the query.
/// Throws std::invalid_argument on a dimension mismatch.
ScoreVector score_query(const LinearModel& model, const QueryInstance& query);

/// Max-subtraction stabilized softmax; entries in (0,1], sum 1.
std::vector<double> softmax(std::span<const double> scores);

/// Tail-normalized softmax value at `position` (1-based) of `ordering`:
///
///     exp(s[j_f]) / sum_{t=f..n} exp(s[j_t])      with j = ordering
///
/// `ordering` must be a permutation of 0..n-1. For position == n the value
/// is exactly 1.
double partial_softmax(std::span<const double> scores, std::span<const int> ordering,
                       int position);

/// Integer labels reinterpreted as a score vector (used raw, no scaling).
std::vector<double> labels_as_scores(const QueryInstance& query);

}  // namespace listnet
