#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace listnet {

/// One candidate document: a dense feature vector and a graded relevance
/// label (0, 1 or 2 in MQ2008-style data).
struct Document {
    std::vector<double> features;
    int label = 0;
    std::string doc_id;
};

/// All candidate documents of one query, in input order. The position of a
/// document inside `documents` is its canonical index everywhere else in the
/// toolkit.
struct QueryInstance {
    std::string query_id;
    std::vector<Document> documents;

    std::size_t size() const noexcept { return documents.size(); }
};

struct Dataset {
    std::vector<QueryInstance> queries;
    std::size_t dim = 0;
};

/// Linear scoring model: score(x) = weights . x
struct LinearModel {
    std::vector<double> weights;

    std::size_t dim() const noexcept { return weights.size(); }
};

using ScoreVector = std::vector<double>;
using GradientVector = std::vector<double>;

}  // namespace listnet
