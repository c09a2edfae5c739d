#include "listnet/gradients.hpp"

#include <cfloat>
#include <cmath>
#include <stdexcept>

#include "listnet/core.hpp"
#include "listnet/kernels.hpp"

namespace listnet {

GradientVector top1_gradient(const QueryInstance& query, const LinearModel& model) {
    const ScoreVector z = score_query(model, query);
    const std::vector<double> pz = softmax(z);
    const std::vector<double> py = softmax(labels_as_scores(query));
    GradientVector grad(model.dim(), 0.0);
    for (std::size_t j = 0; j < query.size(); ++j)
        kernels::axpy(pz[j] - py[j], query.documents[j].features, grad);
    return grad;
}

GradientVector topk_gradient(const QueryInstance& query, const LinearModel& model,
                             const ClassSet& set) {
    if (set.size() == 0) throw std::domain_error("topk_gradient: empty class set");
    const std::size_t n = query.size();
    const std::size_t d = model.dim();

    const ScoreVector z = score_query(model, query);
    const std::vector<double> y = labels_as_scores(query);

    // exp tables for the model scores and the labels, both max-shifted.
    const double z_shift = kernels::max_value(z);
    const double y_shift = kernels::max_value(y);
    std::vector<double> ez(n), ey(n);
    for (std::size_t j = 0; j < n; ++j) {
        ez[j] = std::exp(z[j] - z_shift);
        ey[j] = std::exp(y[j] - y_shift);
    }
    const double ez_total = kernels::sum(ez);
    const double ey_total = kernels::sum(ey);

    // weighted_all = sum_j ez[j] * x_j, shared by every class.
    std::vector<double> weighted_all(d, 0.0);
    for (std::size_t j = 0; j < n; ++j)
        kernels::axpy(ez[j], query.documents[j].features, weighted_all);

    GradientVector grad(d, 0.0);
    std::vector<double> weighted(d);  // running unplaced-mass feature sum
    std::vector<double> acc(d);       // per-class gradient before the P_y weight
    std::vector<char> seen(n);

    for (std::size_t i = 0; i < set.size(); ++i) {
        const std::span<const int> prefix = set.prefix(i);
        if (prefix.empty() || prefix.size() > n)
            throw std::domain_error("topk_gradient: class order must be in 1..n");
        std::fill(seen.begin(), seen.end(), 0);

        // Walk the prefix once, accumulating both log P_y(g) and the
        // per-rank term E_t(z) - x_{j_t}. The unplaced mass at rank t is the
        // total minus the prefix mass already placed, so no suffix ordering
        // is ever materialized.
        std::copy(weighted_all.begin(), weighted_all.end(), weighted.begin());
        std::fill(acc.begin(), acc.end(), 0.0);
        double z_remaining = ez_total;
        double y_remaining = ey_total;
        double log_py = 0.0;

        for (int j : prefix) {
            if (j < 0 || static_cast<std::size_t>(j) >= n || seen[static_cast<std::size_t>(j)])
                throw std::domain_error("topk_gradient: invalid permutation class");
            const auto idx = static_cast<std::size_t>(j);
            seen[idx] = 1;
            const std::span<const double> x = query.documents[idx].features;

            log_py += (y[idx] - y_shift) -
                      std::log(y_remaining < DBL_MIN ? DBL_MIN : y_remaining);
            y_remaining -= ey[idx];

            kernels::axpy(1.0 / z_remaining, weighted, acc);
            kernels::axpy(-1.0, x, acc);
            kernels::axpy(-ez[idx], x, weighted);
            z_remaining -= ez[idx];
        }
        kernels::axpy(std::exp(log_py), acc, grad);
    }
    return grad;
}

GradientVector finite_difference_gradient(const QueryInstance& query, const LinearModel& model,
                                          const ClassSet& set, double h) {
    if (!(h > 0.0)) throw std::invalid_argument("finite_difference_gradient: h must be > 0");
    GradientVector grad(model.dim(), 0.0);
    LinearModel probe = model;
    for (std::size_t c = 0; c < model.dim(); ++c) {
        const double saved = probe.weights[c];
        probe.weights[c] = saved + h;
        const double up = set_cross_entropy(query, probe, set);
        probe.weights[c] = saved - h;
        const double down = set_cross_entropy(query, probe, set);
        probe.weights[c] = saved;
        grad[c] = (up - down) / (2.0 * h);
    }
    return grad;
}

double set_cross_entropy(const QueryInstance& query, const LinearModel& model,
                         const ClassSet& set) {
    return cross_entropy(labels_as_scores(query), score_query(model, query), set);
}

}  // namespace listnet
