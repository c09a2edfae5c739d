#include "listnet/letor.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "listnet/errors.hpp"
#include "listnet/report_io.hpp"
#include "listnet/rng.hpp"

namespace listnet {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

std::vector<std::string_view> split_fields(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        std::size_t start = i;
        while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
        if (i > start) out.push_back(s.substr(start, i - start));
    }
    return out;
}

int parse_int(std::string_view token, std::size_t line_number, const char* what) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        throw parse_error(std::string("expected integer ") + what + ", got '" +
                              std::string(token) + "'",
                          line_number);
    return value;
}

double parse_real(std::string_view token, std::size_t line_number, const char* what) {
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        throw parse_error(std::string("expected real ") + what + ", got '" +
                              std::string(token) + "'",
                          line_number);
    return value;
}

}  // namespace

LetorLine parse_letor_line(const std::string& line, std::size_t line_number) {
    std::string_view body{line};
    LetorLine out;

    if (const std::size_t hash = body.find('#'); hash != std::string_view::npos) {
        out.comment = std::string(trim(body.substr(hash + 1)));
        body = body.substr(0, hash);
    }
    body = trim(body);

    const std::vector<std::string_view> fields = split_fields(body);
    if (fields.size() < 2) throw parse_error("expected 'label qid:<id> ...'", line_number);

    out.label = parse_int(fields[0], line_number, "label");
    if (out.label < 0 || out.label > 2)
        throw parse_error("label must be 0, 1 or 2, got " + std::to_string(out.label),
                          line_number);

    if (!fields[1].starts_with("qid:") || fields[1].size() == 4)
        throw parse_error("second field must be qid:<id>, got '" + std::string(fields[1]) + "'",
                          line_number);
    out.qid = std::string(fields[1].substr(4));

    int prev_index = 0;
    for (std::size_t i = 2; i < fields.size(); ++i) {
        const std::string_view pair = fields[i];
        const std::size_t colon = pair.find(':');
        if (colon == std::string_view::npos || colon == 0 || colon + 1 == pair.size())
            throw parse_error("malformed feature pair '" + std::string(pair) + "'", line_number);
        const int index = parse_int(pair.substr(0, colon), line_number, "feature index");
        if (index < 1)
            throw parse_error("feature index must be positive, got " + std::to_string(index),
                              line_number);
        if (index <= prev_index)
            throw parse_error("feature indices must be strictly increasing (" +
                                  std::to_string(index) + " after " + std::to_string(prev_index) +
                                  ")",
                              line_number);
        const double value = parse_real(pair.substr(colon + 1), line_number, "feature value");
        out.features.emplace_back(index, value);
        prev_index = index;
    }
    return out;
}

Dataset parse_letor(std::istream& in) {
    std::vector<std::pair<std::size_t, LetorLine>> lines;  // (query slot, parsed line)
    std::vector<std::string> qid_order;
    std::unordered_map<std::string, std::size_t> qid_slot;
    int max_index = 0;

    std::string raw;
    std::size_t line_number = 0;
    while (std::getline(in, raw)) {
        ++line_number;
        if (trim(raw).empty()) continue;
        LetorLine parsed = parse_letor_line(raw, line_number);
        auto [it, inserted] = qid_slot.try_emplace(parsed.qid, qid_order.size());
        if (inserted) qid_order.push_back(parsed.qid);
        if (!parsed.features.empty()) max_index = std::max(max_index, parsed.features.back().first);
        lines.emplace_back(it->second, std::move(parsed));
    }
    if (lines.empty()) throw std::domain_error("parse_letor: no data lines in input");

    Dataset dataset;
    dataset.dim = static_cast<std::size_t>(max_index);
    dataset.queries.resize(qid_order.size());
    for (std::size_t q = 0; q < qid_order.size(); ++q)
        dataset.queries[q].query_id = qid_order[q];

    for (auto& [slot, parsed] : lines) {
        Document doc;
        doc.label = parsed.label;
        doc.doc_id = std::move(parsed.comment);
        doc.features.assign(dataset.dim, 0.0);
        for (const auto& [index, value] : parsed.features)
            doc.features[static_cast<std::size_t>(index - 1)] = value;
        dataset.queries[slot].documents.push_back(std::move(doc));
    }

    // A qid only exists because at least one line carried it, so empty
    // queries can only appear through future filters; drop them defensively.
    std::erase_if(dataset.queries, [](const QueryInstance& q) {
        if (q.documents.empty())
            std::cerr << "warning: dropping empty query '" << q.query_id << "'\n";
        return q.documents.empty();
    });
    return dataset;
}

Dataset load_letor_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
    return parse_letor(in);
}

void write_letor(const Dataset& dataset, std::ostream& out) {
    for (const QueryInstance& query : dataset.queries) {
        for (const Document& doc : query.documents) {
            out << doc.label << " qid:" << query.query_id;
            for (std::size_t i = 0; i < dataset.dim; ++i) {
                const double value = i < doc.features.size() ? doc.features[i] : 0.0;
                out << ' ' << (i + 1) << ':' << format_double(value);
            }
            if (!doc.doc_id.empty()) out << " # " << doc.doc_id;
            out << '\n';
        }
    }
}

void save_letor_file(const Dataset& dataset, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    write_letor(dataset, out);
}

void minmax_normalize(Dataset& dataset) {
    for (QueryInstance& query : dataset.queries) {
        for (std::size_t f = 0; f < dataset.dim; ++f) {
            double lo = query.documents.front().features[f];
            double hi = lo;
            for (const Document& doc : query.documents) {
                lo = std::min(lo, doc.features[f]);
                hi = std::max(hi, doc.features[f]);
            }
            const double range = hi - lo;
            for (Document& doc : query.documents)
                doc.features[f] = range > 0.0 ? (doc.features[f] - lo) / range : 0.0;
        }
    }
}

Dataset generate_synthetic(const SyntheticSpec& spec) {
    if (spec.num_queries < 1 || spec.docs_per_query < 1 || spec.dim < 1)
        throw std::invalid_argument("generate_synthetic: all counts must be >= 1");
    if (spec.noise < 0.0 || spec.noise >= 1.0)
        throw std::invalid_argument("generate_synthetic: noise must be in [0,1)");
    if (!spec.weights.empty() && spec.weights.size() != spec.dim)
        throw std::invalid_argument("generate_synthetic: weight vector does not match dim");

    std::mt19937_64 gen(mix_seed(spec.seed, 0));

    std::vector<double> latent_weights = spec.weights;
    if (latent_weights.empty()) {
        latent_weights.resize(spec.dim);
        for (double& w : latent_weights) w = uniform_range(gen, -1.0, 1.0);
    }

    Dataset dataset;
    dataset.dim = spec.dim;
    dataset.queries.resize(spec.num_queries);
    const std::size_t n = spec.docs_per_query;

    for (std::size_t q = 0; q < spec.num_queries; ++q) {
        QueryInstance& query = dataset.queries[q];
        query.query_id = std::to_string(q + 1);
        query.documents.resize(n);

        std::vector<double> latent(n, 0.0);
        for (std::size_t j = 0; j < n; ++j) {
            Document& doc = query.documents[j];
            doc.doc_id = "q" + query.query_id + "d" + std::to_string(j + 1);
            doc.features.resize(spec.dim);
            for (double& x : doc.features) x = uniform_unit(gen);
            for (std::size_t f = 0; f < spec.dim; ++f)
                latent[j] += latent_weights[f] * doc.features[f];
        }

        // Rank by latent score (ties by index) and grade by tercile.
        std::vector<std::size_t> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return latent[a] != latent[b] ? latent[a] > latent[b] : a < b;
        });
        for (std::size_t rank = 0; rank < n; ++rank) {
            int label = 0;
            if (3 * rank < n) {
                label = 2;
            } else if (3 * rank < 2 * n) {
                label = 1;
            }
            query.documents[order[rank]].label = label;
        }

        if (spec.noise > 0.0) {
            for (Document& doc : query.documents) {
                if (uniform_unit(gen) < spec.noise)
                    doc.label = static_cast<int>(uniform_index(gen, 3));
            }
        }
    }
    return dataset;
}

}  // namespace listnet
