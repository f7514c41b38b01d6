#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace socle {

inline constexpr const char* kReportSchema = "socle-report/1";
inline constexpr const char* kToolVersion = "0.1.0";

struct OracleRecord {
  bool agrees = true;
  std::size_t dim = 0;
  std::uint32_t level = 0;
};

/// One decided instance.
struct Check {
  std::string operation;
  std::string ring;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::optional<bool> verdict;
  /// What the theory predicts; nullopt when it predicts nothing here.
  std::optional<bool> expected;
  bool pass = true;
  std::vector<std::pair<std::string, std::int64_t>> values;
  std::uint32_t level = 0;
  std::optional<OracleRecord> oracle;
  std::optional<std::string> witness;
  std::vector<std::string> notes;
  double timing_ms = 0;

  void put(std::string key, std::int64_t v) { values.emplace_back(std::move(key), v); }
  std::optional<std::int64_t> get(const std::string& key) const;
};

struct ExperimentResult {
  std::string name;
  std::string prediction;
  std::vector<Check> checks;
  bool pass = true;
  double timing_ms = 0;

  std::size_t violations() const;
};

struct ReportError {
  std::string kind;
  std::string message;
};

struct Report {
  std::uint64_t seed = 0;
  std::string field;
  std::vector<ExperimentResult> experiments;
  std::optional<ReportError> error;
  double timing_ms = 0;

  bool pass() const;
  const ExperimentResult* find(const std::string& name) const;
};

/// Pretty-printed JSON, keys in a fixed order.
std::string to_json(const Report& r);
/// The same JSON with every timing field removed.
std::string to_json_without_timings(const Report& r);
/// Plain-text summary, one line per check.
std::string to_text(const Report& r);

}  // namespace socle
