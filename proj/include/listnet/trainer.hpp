#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>

#include "listnet/metrics.hpp"
#include "listnet/permutation.hpp"
#include "listnet/samplers.hpp"
#include "listnet/types.hpp"

namespace listnet {

enum class TrainMode {
    conventional,  // full class enumeration per query
    stochastic,    // sampled class subsets per query
};

enum class LossMonitor {
    top1_full,  // deterministic full Top-1 cross entropy over the dataset
    sampled,    // sum of the iteration's own sampled-set cross entropies
};

const char* to_string(TrainMode mode) noexcept;
const char* to_string(LossMonitor monitor) noexcept;
TrainMode train_mode_from_string(const std::string& name);
LossMonitor loss_monitor_from_string(const std::string& name);

struct TrainConfig {
    int k = 1;
    TrainMode mode = TrainMode::stochastic;
    SamplerConfig sampler;  // read in stochastic mode only
    double eta = 1e-3;
    int iterations = 50;
    double init_range = 0.01;  // weights start uniform in [-init_range, init_range]
    LossMonitor monitor = LossMonitor::top1_full;
    std::uint64_t seed = 0;
    std::optional<double> early_stop_tol;  // stop when |L(t) - L(t-1)| < tol
    std::uint64_t enumeration_cap = kDefaultClassCap;

    /// Test hook: replaces sample_class_set in stochastic mode when set.
    std::function<ClassSet(const QueryInstance&, const LinearModel&, std::mt19937_64&)>
        sampler_override;
};

struct TrainReport {
    std::vector<double> loss;       // monitored loss after iteration t (t = 1..)
    std::vector<double> eta_trace;  // learning rate in effect during iteration t
    std::vector<double> iteration_seconds;
    double initial_loss = 0.0;  // monitored loss before the first iteration (top1_full only)
    double final_eta = 0.0;
    int decay_events = 0;
    bool early_stopped = false;
    LinearModel model;
    EvalResult train_metrics;  // P@1 / P@10 on the training data
};

/// Per-query gradient descent: every iteration walks the queries in dataset
/// order, builds a ClassSet (enumerated or sampled), and applies
/// w -= eta * grad immediately. The learning rate is multiplied by 0.1 after
/// any iteration whose monitored loss is worse than the previous one.
TrainReport train(const Dataset& dataset, const TrainConfig& config);

/// Deterministic monitored loss: sum over queries of the full Top-1 cross
/// entropy between labels and model scores.
double monitor_loss(const Dataset& dataset, const LinearModel& model);

}  // namespace listnet
