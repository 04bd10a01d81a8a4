#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pentablock/complex_core.hpp"

namespace pentablock {

/// One sampled or classified point. Serialized as a single JSON line with a
/// fixed field order and 17 significant digits, so parse(emit(r)) == r.
struct SampleRecord {
  std::optional<std::string> region;
  std::variant<Point2, Point3> point;
  std::string verdict;
  std::vector<double> defects;

  bool operator==(const SampleRecord& other) const;
};

std::string to_json_line(const SampleRecord& record);
SampleRecord parse_sample_record(std::string_view line);

struct SuiteReport {
  std::string suite;
  std::size_t cases_run = 0;
  std::size_t cases_passed = 0;
  double max_deviation = 0.0;
  double threshold = 0.0;
  std::uint64_t seed = 0;
  std::string generator;
  bool passed = true;
  /// Excluded from the determinism contract.
  double wall_time = 0.0;
};

/// Fields in order: suite, passed, cases_run, cases_passed, max_deviation,
/// threshold, seed, generator, wall_time.
std::string to_json_line(const SuiteReport& report);

/// Minimal ordered JSON object writer; non-finite numbers become null.
class JsonLine {
public:
  JsonLine& field(std::string_view key, double value);
  JsonLine& field(std::string_view key, std::string_view value);
  JsonLine& field(std::string_view key, const char* value) { return field(key, std::string_view(value)); }
  JsonLine& field(std::string_view key, bool value);
  JsonLine& field(std::string_view key, std::uint64_t value);
  JsonLine& field(std::string_view key, Complex value);
  JsonLine& field(std::string_view key, const std::variant<Point2, Point3>& point);
  JsonLine& field(std::string_view key, const std::vector<double>& values);
  JsonLine& raw(std::string_view key, std::string_view json);

  std::string str() const { return body_ + "}"; }

private:
  void key(std::string_view k);
  std::string body_ = "{";
};

std::string json_number(double x);

}  // namespace pentablock
