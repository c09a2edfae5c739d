#pragma once

#include <span>

#include "listnet/permutation.hpp"
#include "listnet/types.hpp"

namespace listnet {

/// Closed-form descent gradient of the full Top-1 cross entropy:
///
///     sum_j [softmax(z)_j - softmax(y)_j] * x_j
///
/// with z the model scores and y the labels.
GradientVector top1_gradient(const QueryInstance& query, const LinearModel& model);

/// Descent gradient of the Top-k cross entropy restricted to `set`:
///
///     sum_{g in set} P_y(g) * sum_{t=1..k} [ E_t(z) - x_{g_t} ]
///
/// where E_t(z) is the exp(z)-weighted mean feature vector over the
/// documents still unplaced at rank t. Over the full enumeration this is the
/// exact gradient; over a sampled set it is the same sum restricted to the
/// sampled classes. The suffix beyond the prefix never enters the value.
GradientVector topk_gradient(const QueryInstance& query, const LinearModel& model,
                             const ClassSet& set);

/// Central finite differences of set_cross_entropy; verification oracle.
/// Component c is [L(w + h e_c) - L(w - h e_c)] / (2h).
GradientVector finite_difference_gradient(const QueryInstance& query, const LinearModel& model,
                                          const ClassSet& set, double h);

/// The objective both gradients descend: cross entropy between the
/// label-induced and score-induced distributions over `set`.
double set_cross_entropy(const QueryInstance& query, const LinearModel& model,
                         const ClassSet& set);

}  // namespace listnet
