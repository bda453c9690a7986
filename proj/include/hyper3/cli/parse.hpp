#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

#include "hyper3/ode/ode.hpp"

namespace hyper3 {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed input; position is a 0-based byte offset.
struct SyntaxError : ParseError {
  SyntaxError(const std::string& what, std::size_t pos)
      : ParseError(what + " at position " + std::to_string(pos)), position(pos) {}
  std::size_t position;
};

/// Well-formed input whose coefficients are not rational functions of x:
/// transcendental functions, fractional exponents, symbolic parameters.
struct NonRationalCoefficient : ParseError {
  using ParseError::ParseError;
};

/// Not a homogeneous linear third-order equation.
struct InvalidEquation : ParseError {
  using ParseError::ParseError;
};

/// A rational expression in x.
RatFn parse_rational(const std::string& text);

/// An equation in y(x) (or an expression understood as "= 0").
Ode3 parse_equation(const std::string& text);

/// Either coefficient strings or an equation string.
struct OdeInputDoc {
  std::optional<std::string> equation;
  std::string c2 = "0", c1 = "0", c0 = "0";
};

Ode3 parse_ode(const OdeInputDoc& doc);

/// Plain text is an equation; text starting with '{' is a JSON document with
/// either "equation" or the keys "c2", "c1", "c0".
OdeInputDoc read_input_doc(const std::string& text);

}  // namespace hyper3
