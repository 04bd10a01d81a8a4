#include "pentablock/text.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <optional>
#include <vector>

namespace pentablock {

namespace {

constexpr double kParamUnimodularTol = 1e-6;

class Scanner {
public:
  Scanner(std::string_view text, std::size_t offset) : text_(text), offset_(offset) {}

  bool done() const { return pos_ == text_.size(); }
  char peek() const { return done() ? '\0' : text_[pos_]; }
  std::size_t where() const { return offset_ + pos_; }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  double sign() {
    if (accept('+')) return 1.0;
    if (accept('-')) return -1.0;
    return 1.0;
  }

  bool at_number() const {
    const char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == '.';
  }

  double number() {
    const std::size_t start = pos_;
    std::size_t digits = skip_digits();
    if (accept('.')) digits += skip_digits();
    if (digits == 0) fail("expected a number");
    if (peek() == 'e' || peek() == 'E') {
      ++pos_;
      if (peek() == '+' || peek() == '-') ++pos_;
      if (skip_digits() == 0) fail("expected exponent digits");
    }
    double value = 0.0;
    const char* first = text_.data() + start;
    const char* last = text_.data() + pos_;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) {
      pos_ = start;
      fail("malformed number");
    }
    return value;
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(where(), what); }

private:
  std::size_t skip_digits() {
    std::size_t n = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      ++pos_;
      ++n;
    }
    return n;
  }

  std::string_view text_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

Complex parse_complex_at(std::string_view text, std::size_t offset) {
  Scanner sc(text, offset);
  if (sc.done()) sc.fail("empty complex literal");

  const double s1 = sc.sign();
  if (sc.accept('i')) {
    if (!sc.done()) sc.fail("unexpected trailing characters");
    return {0.0, s1};
  }
  const double first = s1 * sc.number();
  if (sc.done()) return {first, 0.0};
  if (sc.accept('i')) {
    if (!sc.done()) sc.fail("unexpected trailing characters");
    return {0.0, first};
  }
  if (sc.peek() != '+' && sc.peek() != '-') sc.fail("expected '+', '-' or 'i'");
  const double s2 = sc.sign();
  const double second = sc.at_number() ? sc.number() : 1.0;
  if (!sc.accept('i')) sc.fail("expected 'i' after the imaginary part");
  if (!sc.done()) sc.fail("unexpected trailing characters");
  return {first, s2 * second};
}

struct Item {
  std::string_view text;
  std::size_t offset;
};

Item trim(std::string_view text, std::size_t offset) {
  std::size_t b = 0;
  std::size_t e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  return {text.substr(b, e - b), offset + b};
}

std::vector<Item> split(std::string_view text, char sep, std::size_t offset = 0) {
  std::vector<Item> items;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == sep) {
      items.push_back(trim(text.substr(start, i - start), offset + start));
      start = i + 1;
    }
  }
  return items;
}

std::vector<Complex> parse_list(std::string_view text, std::size_t expected_min,
                                std::size_t expected_max) {
  const auto items = split(text, ',');
  if (items.size() < expected_min || items.size() > expected_max) {
    throw ParseError(0, "expected " + std::to_string(expected_min) +
                            (expected_min == expected_max
                                 ? std::string()
                                 : " or " + std::to_string(expected_max)) +
                            " comma-separated coordinates, got " + std::to_string(items.size()));
  }
  std::vector<Complex> out;
  for (const Item& item : items) out.push_back(parse_complex_at(item.text, item.offset));
  return out;
}

struct KeyValue {
  std::string_view key;
  Item value;
};

std::vector<KeyValue> parse_assignments(std::string_view text) {
  std::vector<KeyValue> out;
  for (const Item& part : split(text, ';')) {
    if (part.text.empty()) continue;
    const auto eq = part.text.find('=');
    if (eq == std::string_view::npos) throw ParseError(part.offset, "expected key=value");
    const Item key = trim(part.text.substr(0, eq), part.offset);
    const Item value = trim(part.text.substr(eq + 1), part.offset + eq + 1);
    out.push_back({key.text, value});
  }
  return out;
}

Complex unit_parameter(const Item& value, const char* name) {
  const Complex z = parse_complex_at(value.text, value.offset);
  if (std::abs(std::abs(z) - 1.0) > kParamUnimodularTol) {
    throw ParseError(value.offset, std::string(name) + " must have modulus 1");
  }
  return z / std::abs(z);
}

}  // namespace

Complex parse_complex(std::string_view text) { return parse_complex_at(text, 0); }

Point3 parse_point3(std::string_view text) {
  const auto c = parse_list(text, 3, 3);
  return {c[0], c[1], c[2]};
}

Point2 parse_point2(std::string_view text) {
  const auto c = parse_list(text, 2, 2);
  return {c[0], c[1]};
}

std::variant<Point2, Point3> parse_point(std::string_view text) {
  const auto c = parse_list(text, 2, 3);
  if (c.size() == 2) return Point2{c[0], c[1]};
  return Point3{c[0], c[1], c[2]};
}

BlaschkeProduct parse_blaschke(std::string_view text) {
  Complex eta{1.0, 0.0};
  std::vector<Complex> zeros;
  for (const auto& [key, value] : parse_assignments(text)) {
    if (key == "eta") {
      eta = unit_parameter(value, "eta");
    } else if (key == "zeros") {
      std::string_view v = value.text;
      if (v.size() < 2 || v.front() != '[' || v.back() != ']') {
        throw ParseError(value.offset, "zeros must be a bracketed list");
      }
      const Item inner = trim(v.substr(1, v.size() - 2), value.offset + 1);
      if (inner.text.empty()) continue;
      for (const Item& z : split(inner.text, ',', inner.offset)) {
        const Complex zero = parse_complex_at(z.text, z.offset);
        if (!(std::abs(zero) < 1.0)) throw ParseError(z.offset, "zero must lie in the open disc");
        zeros.push_back(zero);
      }
    } else {
      throw ParseError(value.offset, "unknown key '" + std::string(key) + "'");
    }
  }
  if (zeros.empty()) return BlaschkeProduct::rotation(eta);
  return {eta, std::move(zeros)};
}

PentaAutomorphism parse_automorphism(std::string_view text) {
  Complex omega{1.0, 0.0};
  Complex eta{1.0, 0.0};
  Complex alpha{};
  for (const auto& [key, value] : parse_assignments(text)) {
    if (key == "omega") {
      omega = unit_parameter(value, "omega");
    } else if (key == "eta") {
      eta = unit_parameter(value, "eta");
    } else if (key == "alpha") {
      alpha = parse_complex_at(value.text, value.offset);
      if (!(std::abs(alpha) < 1.0)) throw ParseError(value.offset, "alpha must lie in the open disc");
    } else {
      throw ParseError(value.offset, "unknown key '" + std::string(key) + "'");
    }
  }
  return {omega, eta, alpha};
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string format_complex(Complex z) {
  std::string out = format_double(z.real());
  const std::string im = format_double(z.imag());
  if (im.front() != '-') out += '+';
  return out + im + 'i';
}

}  // namespace pentablock
