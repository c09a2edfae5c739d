#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "listnet/types.hpp"

namespace listnet {

/// One parsed data line: `label qid:<id> 1:v1 2:v2 ... # comment`.
struct LetorLine {
    int label = 0;
    std::string qid;
    std::vector<std::pair<int, double>> features;  // 1-based indices, strictly increasing
    std::string comment;                           // text after '#', trimmed
};

/// Throws parse_error (carrying `line_number`) on malformed input.
LetorLine parse_letor_line(const std::string& line, std::size_t line_number);

/// Parse a whole stream. Documents are grouped by qid in first-appearance
/// order, the dense dimension is the maximum feature index seen anywhere,
/// and missing indices are filled with 0. Labels must be 0, 1 or 2.
/// Throws std::domain_error when the stream holds no data lines.
Dataset parse_letor(std::istream& in);
Dataset load_letor_file(const std::string& path);

/// Canonical form: every feature index 1..dim written explicitly, the
/// doc_id emitted as the trailing comment. parse(write(D)) reconstructs D.
void write_letor(const Dataset& dataset, std::ostream& out);
void save_letor_file(const Dataset& dataset, const std::string& path);

/// Per-query min-max rescaling of each feature to [0,1]; a feature that is
/// constant within a query maps to 0. Off by default everywhere since
/// MQ2008-style inputs ship pre-normalized.
void minmax_normalize(Dataset& dataset);

struct SyntheticSpec {
    std::size_t num_queries = 100;
    std::size_t docs_per_query = 12;
    std::size_t dim = 5;
    std::vector<double> weights;  // latent scorer; drawn from `seed` when empty
    double noise = 0.0;           // probability a label is replaced by a uniform draw
    std::uint64_t seed = 0;
};

/// Features uniform in [0,1]^dim; labels graded by latent-score tercile
/// within each query (top third 2, middle 1, rest 0); optional uniform label
/// noise. Pure function of the spec: one seed, one dataset.
Dataset generate_synthetic(const SyntheticSpec& spec);

}  // namespace listnet
