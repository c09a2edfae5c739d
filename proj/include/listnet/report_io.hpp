#pragma once

#include <iosfwd>
#include <string>

#include "listnet/trainer.hpp"
#include "listnet/types.hpp"

namespace listnet {

/// Shortest round-trip decimal form, locale-independent (period separator).
std::string format_double(double value);

/// FNV-1a 64-bit digest of a file's bytes, as 16 lowercase hex characters.
std::string fnv1a_file_digest(const std::string& path);

/// Current time as ISO-8601 UTC, e.g. 2025-03-14T09:26:53Z.
std::string iso8601_utc_now();

/// Model weights, one per line.
void write_model(const LinearModel& model, std::ostream& out);
void save_model_file(const LinearModel& model, const std::string& path);
LinearModel read_model(std::istream& in);
LinearModel load_model_file(const std::string& path);

/// Flat per-iteration CSV: iteration,loss,eta,seconds.
void write_train_report_csv(const TrainReport& report, std::ostream& out);

/// Key-value summary with comma-separated arrays.
void write_train_report_kv(const TrainReport& report, std::ostream& out);

}  // namespace listnet
