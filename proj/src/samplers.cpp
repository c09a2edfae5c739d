#include "listnet/samplers.hpp"

#include <algorithm>
#include <stdexcept>

#include "listnet/core.hpp"
#include "listnet/rng.hpp"

namespace listnet {

const char* to_string(SamplingKind kind) noexcept {
    switch (kind) {
        case SamplingKind::uniform: return "uniform";
        case SamplingKind::fixed: return "fixed";
        case SamplingKind::adaptive: return "adaptive";
    }
    return "unknown";
}

SamplingKind sampling_kind_from_string(const std::string& name) {
    if (name == "uniform") return SamplingKind::uniform;
    if (name == "fixed") return SamplingKind::fixed;
    if (name == "adaptive") return SamplingKind::adaptive;
    throw std::invalid_argument("unknown sampling kind '" + name + "'");
}

std::vector<double> document_distribution(SamplingKind kind, const QueryInstance& query,
                                          const LinearModel* model) {
    switch (kind) {
        case SamplingKind::uniform:
            return std::vector<double>(query.size(), 1.0 / static_cast<double>(query.size()));
        case SamplingKind::fixed:
            return softmax(labels_as_scores(query));
        case SamplingKind::adaptive:
            if (model == nullptr)
                throw std::invalid_argument("adaptive sampling needs the current model");
            return softmax(score_query(*model, query));
    }
    throw std::invalid_argument("unknown sampling kind");
}

PermutationClass sample_class(std::span<const double> probs, int k, std::mt19937_64& gen) {
    const std::size_t n = probs.size();
    if (k < 1 || static_cast<std::size_t>(k) > n)
        throw std::domain_error("sample_class: need 1 <= k <= n");

    PermutationClass out;
    out.prefix.reserve(static_cast<std::size_t>(k));
    std::vector<char> chosen(n, 0);
    double remaining = 0.0;
    for (double p : probs) remaining += p;

    for (int t = 0; t < k; ++t) {
        const double u = uniform_unit(gen) * remaining;
        double cumulative = 0.0;
        std::size_t pick = n;
        for (std::size_t j = 0; j < n; ++j) {
            if (chosen[j]) continue;
            pick = j;  // falls through to the last unchosen on rounding spill
            cumulative += probs[j];
            if (cumulative > u && remaining > 0.0) break;
        }
        chosen[pick] = 1;
        remaining -= probs[pick];
        out.prefix.push_back(static_cast<int>(pick));
    }
    return out;
}

double retention_probability(std::span<const int> prefix, const QueryInstance& query,
                             int max_label) {
    if (max_label <= 0) throw std::invalid_argument("retention_probability: max label must be > 0");
    double label_sum = 0.0;
    for (int j : prefix) label_sum += query.documents[static_cast<std::size_t>(j)].label;
    const double p = label_sum / (static_cast<double>(prefix.size()) * max_label);
    return std::clamp(p, 0.0, 1.0);
}

ClassSet sample_class_set(const SamplerConfig& config, int k, const QueryInstance& query,
                          const LinearModel& model, std::mt19937_64& gen) {
    if (config.list_count < 1)
        throw std::invalid_argument("sample_class_set: list count must be >= 1");
    const int order = std::min<int>(k, static_cast<int>(query.size()));

    ClassSet set;
    set.k = order;
    if (query.size() == 0) return set;

    const std::vector<double> probs =
        document_distribution(config.kind, query, config.kind == SamplingKind::adaptive
                                                       ? &model
                                                       : nullptr);
    set.indices.reserve(static_cast<std::size_t>(config.list_count) *
                        static_cast<std::size_t>(order));
    for (int i = 0; i < config.list_count; ++i) {
        PermutationClass drawn = sample_class(probs, order, gen);
        if (config.resample) {
            for (int attempt = 1; attempt < config.max_retention_attempts; ++attempt) {
                const double keep = retention_probability(drawn.prefix, query, config.max_label);
                if (uniform_unit(gen) < keep) break;
                drawn = sample_class(probs, order, gen);
            }
        }
        set.append(drawn.prefix);
    }
    return set;
}

ClassSet sample_class_set(const SamplerConfig& config, int k, const QueryInstance& query,
                          const LinearModel& model) {
    std::mt19937_64 gen(mix_seed(config.seed, 0));
    return sample_class_set(config, k, query, model, gen);
}

}  // namespace listnet
