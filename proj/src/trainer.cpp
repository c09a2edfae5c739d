#include "listnet/trainer.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

#include "listnet/core.hpp"
#include "listnet/errors.hpp"
#include "listnet/gradients.hpp"
#include "listnet/kernels.hpp"
#include "listnet/rng.hpp"

namespace listnet {

const char* to_string(TrainMode mode) noexcept {
    return mode == TrainMode::conventional ? "conventional" : "stochastic";
}

const char* to_string(LossMonitor monitor) noexcept {
    return monitor == LossMonitor::top1_full ? "top1_full" : "sampled";
}

TrainMode train_mode_from_string(const std::string& name) {
    if (name == "conventional") return TrainMode::conventional;
    if (name == "stochastic") return TrainMode::stochastic;
    throw std::invalid_argument("unknown train mode '" + name + "'");
}

LossMonitor loss_monitor_from_string(const std::string& name) {
    if (name == "top1_full") return LossMonitor::top1_full;
    if (name == "sampled") return LossMonitor::sampled;
    throw std::invalid_argument("unknown loss monitor '" + name + "'");
}

namespace {

ClassSet top1_set(std::size_t n) {
    ClassSet set;
    set.k = 1;
    set.indices.resize(n);
    for (std::size_t j = 0; j < n; ++j) set.indices[j] = static_cast<int>(j);
    return set;
}

void check_config(const Dataset& dataset, const TrainConfig& config) {
    if (dataset.queries.empty()) throw std::invalid_argument("train: empty dataset");
    if (config.k < 1) throw std::invalid_argument("train: k must be >= 1");
    if (!(config.eta > 0.0)) throw std::invalid_argument("train: eta must be > 0");
    if (config.iterations < 1) throw std::invalid_argument("train: iterations must be >= 1");
    if (config.init_range < 0.0) throw std::invalid_argument("train: init range must be >= 0");
    for (const QueryInstance& query : dataset.queries) {
        for (const Document& doc : query.documents) {
            if (doc.features.size() != dataset.dim)
                throw std::invalid_argument("train: inconsistent feature dimension in query '" +
                                            query.query_id + "'");
        }
    }
}

}  // namespace

double monitor_loss(const Dataset& dataset, const LinearModel& model) {
    double loss = 0.0;
    for (const QueryInstance& query : dataset.queries) {
        if (query.size() == 0) continue;
        loss += cross_entropy(labels_as_scores(query), score_query(model, query),
                              top1_set(query.size()));
    }
    return loss;
}

TrainReport train(const Dataset& dataset, const TrainConfig& config) {
    check_config(dataset, config);
    const bool conventional = config.mode == TrainMode::conventional;

    // Full enumerations depend only on (n, k'); share them across queries
    // and iterations. Oversized queries are rejected up front so the cap
    // fires before any work is done.
    std::unordered_map<std::size_t, ClassSet> enumerated;
    if (conventional) {
        for (const QueryInstance& query : dataset.queries) {
            const std::size_t n = query.size();
            if (n == 0 || enumerated.contains(n)) continue;
            const int order = std::min<int>(config.k, static_cast<int>(n));
            try {
                enumerated.emplace(n, enumerate_classes(static_cast<int>(n), order,
                                                        config.enumeration_cap));
            } catch (const resource_error& e) {
                throw resource_error(std::string(e.what()) +
                                         "; use stochastic mode to bound the cost",
                                     e.required(), e.cap());
            }
        }
    }

    TrainReport report;
    report.model.weights.resize(dataset.dim);
    {
        std::mt19937_64 init_gen(mix_seed(config.seed, 0));
        for (double& w : report.model.weights)
            w = uniform_range(init_gen, -config.init_range, config.init_range);
    }
    std::mt19937_64 sampler_gen(mix_seed(config.seed, 1));

    const bool monitor_full = config.monitor == LossMonitor::top1_full;
    double previous = 0.0;
    bool have_previous = false;
    if (monitor_full) {
        report.initial_loss = monitor_loss(dataset, report.model);
        previous = report.initial_loss;
        have_previous = true;
    }

    double eta = config.eta;
    for (int t = 1; t <= config.iterations; ++t) {
        const auto started = std::chrono::steady_clock::now();
        double sampled_loss = 0.0;

        for (const QueryInstance& query : dataset.queries) {
            if (query.size() == 0) continue;
            const ClassSet* set = nullptr;
            ClassSet drawn;
            if (conventional) {
                set = &enumerated.at(query.size());
            } else if (config.sampler_override) {
                drawn = config.sampler_override(query, report.model, sampler_gen);
                set = &drawn;
            } else {
                drawn = sample_class_set(config.sampler, config.k, query, report.model,
                                         sampler_gen);
                set = &drawn;
            }
            if (!monitor_full)
                sampled_loss += set_cross_entropy(query, report.model, *set);
            const GradientVector grad = topk_gradient(query, report.model, *set);
            kernels::axpy(-eta, grad, report.model.weights);
        }

        const double current =
            monitor_full ? monitor_loss(dataset, report.model) : sampled_loss;
        const auto finished = std::chrono::steady_clock::now();

        report.loss.push_back(current);
        report.eta_trace.push_back(eta);
        report.iteration_seconds.push_back(
            std::chrono::duration<double>(finished - started).count());

        if (have_previous && current > previous) {
            eta *= 0.1;
            ++report.decay_events;
        }
        const bool converged = config.early_stop_tol && have_previous &&
                               std::abs(current - previous) < *config.early_stop_tol;
        previous = current;
        have_previous = true;
        if (converged) {
            report.early_stopped = true;
            break;
        }
    }

    report.final_eta = eta;
    const int cutoffs[] = {1, 10};
    report.train_metrics = evaluate(dataset, report.model, cutoffs);
    return report;
}

}  // namespace listnet
