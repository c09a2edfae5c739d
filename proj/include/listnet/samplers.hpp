#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>

#include "listnet/permutation.hpp"
#include "listnet/types.hpp"

namespace listnet {

enum class SamplingKind {
    uniform,   // equal probability per document
    fixed,     // softmax of the human labels
    adaptive,  // softmax of the current model scores, refreshed per call
};

const char* to_string(SamplingKind kind) noexcept;
SamplingKind sampling_kind_from_string(const std::string& name);

struct SamplerConfig {
    SamplingKind kind = SamplingKind::uniform;
    int list_count = 50;  // l: lists drawn per query
    bool resample = false;
    int max_retention_attempts = 20;
    int max_label = 2;  // S in the retention rule
    std::uint64_t seed = 0;
};

/// Per-document selection distribution for `kind`. `model` is only read for
/// the adaptive kind (and must be non-null there).
std::vector<double> document_distribution(SamplingKind kind, const QueryInstance& query,
                                          const LinearModel* model);

/// k distinct indices by sequential without-replacement draws: position t is
/// drawn proportionally to `probs` restricted to the unchosen documents.
PermutationClass sample_class(std::span<const double> probs, int k, std::mt19937_64& gen);

/// (sum of the chosen documents' labels) / (k * max_label), clamped to [0,1].
double retention_probability(std::span<const int> prefix, const QueryInstance& query,
                             int max_label);

/// Exactly `config.list_count` classes of order min(k, n); duplicates across
/// draws are allowed. With resample on, each pre-selected list is kept with
/// retention_probability and redrawn otherwise, up to max_retention_attempts,
/// after which the last draw is kept unconditionally.
ClassSet sample_class_set(const SamplerConfig& config, int k, const QueryInstance& query,
                          const LinearModel& model, std::mt19937_64& gen);

/// Convenience overload seeding a fresh generator from config.seed.
ClassSet sample_class_set(const SamplerConfig& config, int k, const QueryInstance& query,
                          const LinearModel& model);

}  // namespace listnet
