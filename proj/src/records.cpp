#include "pentablock/records.hpp"

#include <cmath>
#include <limits>

#include "json.hpp"
#include "pentablock/error.hpp"
#include "pentablock/text.hpp"

namespace pentablock {

namespace {

std::string quoted(std::string_view s) { return nlohmann::json(std::string(s)).dump(); }

std::string complex_pair(Complex z) {
  return "[" + json_number(z.real()) + "," + json_number(z.imag()) + "]";
}

double number_or_nan(const nlohmann::json& j) {
  return j.is_null() ? std::numeric_limits<double>::quiet_NaN() : j.get<double>();
}

Complex complex_from(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2) {
    throw Error(ErrorKind::Parse, "complex values are [re, im] pairs");
  }
  return {number_or_nan(j[0]), number_or_nan(j[1])};
}

bool same(double x, double y) { return x == y || (std::isnan(x) && std::isnan(y)); }
bool same(Complex x, Complex y) { return same(x.real(), y.real()) && same(x.imag(), y.imag()); }

}  // namespace

std::string json_number(double x) { return std::isfinite(x) ? format_double(x) : "null"; }

void JsonLine::key(std::string_view k) {
  if (body_.size() > 1) body_ += ',';
  body_ += quoted(k);
  body_ += ':';
}

JsonLine& JsonLine::field(std::string_view k, double value) {
  key(k);
  body_ += json_number(value);
  return *this;
}

JsonLine& JsonLine::field(std::string_view k, std::string_view value) {
  key(k);
  body_ += quoted(value);
  return *this;
}

JsonLine& JsonLine::field(std::string_view k, bool value) {
  key(k);
  body_ += value ? "true" : "false";
  return *this;
}

JsonLine& JsonLine::field(std::string_view k, std::uint64_t value) {
  key(k);
  body_ += std::to_string(value);
  return *this;
}

JsonLine& JsonLine::field(std::string_view k, Complex value) {
  key(k);
  body_ += complex_pair(value);
  return *this;
}

JsonLine& JsonLine::field(std::string_view k, const std::variant<Point2, Point3>& point) {
  key(k);
  if (const auto* p2 = std::get_if<Point2>(&point)) {
    body_ += "[" + complex_pair(p2->s) + "," + complex_pair(p2->p) + "]";
  } else {
    const auto& p3 = std::get<Point3>(point);
    body_ += "[" + complex_pair(p3.a) + "," + complex_pair(p3.s) + "," + complex_pair(p3.p) + "]";
  }
  return *this;
}

JsonLine& JsonLine::field(std::string_view k, const std::vector<double>& values) {
  key(k);
  body_ += '[';
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) body_ += ',';
    body_ += json_number(values[i]);
  }
  body_ += ']';
  return *this;
}

JsonLine& JsonLine::raw(std::string_view k, std::string_view json) {
  key(k);
  body_ += json;
  return *this;
}

bool SampleRecord::operator==(const SampleRecord& other) const {
  if (region != other.region || verdict != other.verdict) return false;
  if (point.index() != other.point.index() || defects.size() != other.defects.size()) return false;
  for (std::size_t i = 0; i < defects.size(); ++i) {
    if (!same(defects[i], other.defects[i])) return false;
  }
  if (const auto* p2 = std::get_if<Point2>(&point)) {
    const auto& q2 = std::get<Point2>(other.point);
    return same(p2->s, q2.s) && same(p2->p, q2.p);
  }
  const auto& p3 = std::get<Point3>(point);
  const auto& q3 = std::get<Point3>(other.point);
  return same(p3.a, q3.a) && same(p3.s, q3.s) && same(p3.p, q3.p);
}

std::string to_json_line(const SampleRecord& record) {
  JsonLine line;
  if (record.region) line.field("region", std::string_view(*record.region));
  return line.field("point", record.point)
      .field("verdict", std::string_view(record.verdict))
      .field("defects", record.defects)
      .str();
}

SampleRecord parse_sample_record(std::string_view line) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
  try {
    SampleRecord r;
    if (j.contains("region")) r.region = j.at("region").get<std::string>();
    const auto& pt = j.at("point");
    if (pt.size() == 2) {
      r.point = Point2{complex_from(pt[0]), complex_from(pt[1])};
    } else if (pt.size() == 3) {
      r.point = Point3{complex_from(pt[0]), complex_from(pt[1]), complex_from(pt[2])};
    } else {
      throw Error(ErrorKind::Parse, "point must have 2 or 3 coordinates");
    }
    r.verdict = j.at("verdict").get<std::string>();
    for (const auto& d : j.at("defects")) r.defects.push_back(number_or_nan(d));
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
}

std::string to_json_line(const SuiteReport& report) {
  return JsonLine{}
      .field("suite", std::string_view(report.suite))
      .field("passed", report.passed)
      .field("cases_run", static_cast<std::uint64_t>(report.cases_run))
      .field("cases_passed", static_cast<std::uint64_t>(report.cases_passed))
      .field("max_deviation", report.max_deviation)
      .field("threshold", report.threshold)
      .field("seed", report.seed)
      .field("generator", std::string_view(report.generator))
      .field("wall_time", report.wall_time)
      .str();
}

}  // namespace pentablock
