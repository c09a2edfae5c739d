#include "listnet/report_io.hpp"

#include <charconv>
#include <cstdint>
#include <ctime>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace listnet {

std::string format_double(double value) {
    char buffer[32];
    const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
    if (ec != std::errc{}) throw std::runtime_error("format_double: conversion failed");
    return std::string(buffer, ptr);
}

std::string fnv1a_file_digest(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "' for digesting");
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    char chunk[4096];
    while (in.read(chunk, sizeof(chunk)) || in.gcount() > 0) {
        for (std::streamsize i = 0; i < in.gcount(); ++i) {
            hash ^= static_cast<unsigned char>(chunk[i]);
            hash *= 0x100000001b3ULL;
        }
    }
    char buffer[17];
    std::snprintf(buffer, sizeof(buffer), "%016llx", static_cast<unsigned long long>(hash));
    return buffer;
}

std::string iso8601_utc_now() {
    const std::time_t now = std::time(nullptr);
    std::tm utc{};
    gmtime_r(&now, &utc);
    char buffer[32];
    std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ", &utc);
    return buffer;
}

void write_model(const LinearModel& model, std::ostream& out) {
    for (double w : model.weights) out << format_double(w) << '\n';
}

void save_model_file(const LinearModel& model, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    write_model(model, out);
}

LinearModel read_model(std::istream& in) {
    LinearModel model;
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (line.empty()) continue;
        double w = 0.0;
        const auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), w);
        if (ec != std::errc{})
            throw std::runtime_error("model file: bad weight on line " +
                                     std::to_string(line_number));
        model.weights.push_back(w);
    }
    if (model.weights.empty()) throw std::runtime_error("model file: no weights");
    return model;
}

LinearModel load_model_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
    return read_model(in);
}

void write_train_report_csv(const TrainReport& report, std::ostream& out) {
    out << "iteration,loss,eta,seconds\n";
    for (std::size_t t = 0; t < report.loss.size(); ++t) {
        out << (t + 1) << ',' << format_double(report.loss[t]) << ','
            << format_double(report.eta_trace[t]) << ','
            << format_double(report.iteration_seconds[t]) << '\n';
    }
}

namespace {

std::string join(const std::vector<double>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out += ',';
        out += format_double(values[i]);
    }
    return out;
}

}  // namespace

void write_train_report_kv(const TrainReport& report, std::ostream& out) {
    out << "iterations = " << report.loss.size() << '\n';
    out << "initial_loss = " << format_double(report.initial_loss) << '\n';
    out << "final_loss = "
        << format_double(report.loss.empty() ? 0.0 : report.loss.back()) << '\n';
    out << "final_eta = " << format_double(report.final_eta) << '\n';
    out << "decay_events = " << report.decay_events << '\n';
    out << "early_stopped = " << (report.early_stopped ? "true" : "false") << '\n';
    for (const auto& [cutoff, value] : report.train_metrics.p_at)
        out << "train_p_at_" << cutoff << " = " << format_double(value) << '\n';
    out << "loss_trace = " << join(report.loss) << '\n';
    out << "eta_trace = " << join(report.eta_trace) << '\n';
    out << "iteration_seconds = " << join(report.iteration_seconds) << '\n';
}

}  // namespace listnet
