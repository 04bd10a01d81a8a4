#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>

#include "pentablock/automorphisms.hpp"
#include "pentablock/blaschke.hpp"
#include "pentablock/complex_core.hpp"
#include "pentablock/error.hpp"

namespace pentablock {

class ParseError : public Error {
public:
  ParseError(std::size_t position, const std::string& what)
      : Error(ErrorKind::Parse, "at position " + std::to_string(position) + ": " + what),
        position_(position) {}
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

/// Complex literals without whitespace: `x`, `yi`, `x+yi`, `x-yi`, each
/// number optionally signed, decimal with optional exponent; `i` alone
/// means 1i. Examples: `0.5`, `-0.5+0.25i`, `-i`, `1e-3-2i`.
Complex parse_complex(std::string_view text);

/// Comma-separated literals; whitespace around items is ignored.
Point3 parse_point3(std::string_view text);
Point2 parse_point2(std::string_view text);
std::variant<Point2, Point3> parse_point(std::string_view text);

/// `eta=a+bi; zeros=[z1, z2, ...]`. Missing eta means 1; an empty or
/// missing zero list gives the constant rotation.
BlaschkeProduct parse_blaschke(std::string_view text);

/// `omega=a+bi; eta=c+di; alpha=e+fi`. Missing keys default to the
/// identity. omega and eta are normalized to unit modulus; a modulus off
/// by more than 1e-6 is rejected.
PentaAutomorphism parse_automorphism(std::string_view text);

/// 17 significant digits, `re+imi` form accepted by parse_complex.
std::string format_complex(Complex z);
std::string format_double(double x);

}  // namespace pentablock
