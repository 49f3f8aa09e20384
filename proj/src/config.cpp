#include "mayerkit/config.hpp"

#include <charconv>
#include <cmath>
#include <map>
#include <regex>

#include "mayerkit/errors.hpp"

namespace mayer {

namespace {

double parse_decimal(const std::string& text, std::size_t position, const std::string& token) {
  static const std::regex decimal(R"([+-]?([0-9]+\.?[0-9]*|\.[0-9]+)([eE][+-]?[0-9]+)?)");
  if (!std::regex_match(text, decimal)) throw ParseError("malformed number in '" + token + "'", position);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError("malformed number in '" + token + "'", position);
  }
  return value;
}

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

}  // namespace

Shape parse_shape(const std::string& spec) {
  const std::size_t colon = spec.find(':');
  if (colon == std::string::npos) throw ParseError("expected '<kind>:<params>' in '" + spec + "'", 0);
  const std::string kind_text = spec.substr(0, colon);
  ShapeKind kind;
  if (kind_text == "ball") {
    kind = ShapeKind::ball;
  } else if (kind_text == "disk") {
    kind = ShapeKind::disk;
  } else if (kind_text == "spherocylinder") {
    kind = ShapeKind::spherocylinder;
  } else {
    throw ParseError("unsupported shape kind '" + kind_text + "'", 0);
  }

  std::map<std::string, double> params;
  std::size_t pos = colon + 1;
  if (pos >= spec.size()) throw ParseError("missing parameters", pos);
  while (pos <= spec.size()) {
    std::size_t end = spec.find(',', pos);
    if (end == std::string::npos) end = spec.size();
    const std::string token = spec.substr(pos, end - pos);
    const std::size_t eq = token.find('=');
    if (eq == std::string::npos || eq == 0) throw ParseError("expected 'key=value' but got '" + token + "'", pos);
    const std::string key = token.substr(0, eq);
    const bool allowed = key == "r" || (key == "l" && kind == ShapeKind::spherocylinder);
    if (!allowed) throw ParseError("unknown key '" + key + "' for " + kind_text, pos);
    if (params.count(key)) throw ParseError("repeated key '" + key + "'", pos);
    const std::size_t at = pos + eq + 1;
    const double value = parse_decimal(token.substr(eq + 1), at, token);
    if (key == "r" && !(value > 0.0)) throw ParseError("radius must be positive in '" + token + "'", at);
    if (key == "l" && !(value >= 0.0)) throw ParseError("length must be non-negative in '" + token + "'", at);
    if (!std::isfinite(value)) throw ParseError("non-finite value in '" + token + "'", at);
    params[key] = value;
    if (end == spec.size()) break;
    pos = end + 1;
    if (pos == spec.size()) throw ParseError("trailing comma", end);
  }

  if (!params.count("r")) throw ParseError("missing radius 'r'", colon + 1);
  switch (kind) {
    case ShapeKind::ball:
      return Shape::ball(params["r"]);
    case ShapeKind::disk:
      return Shape::disk(params["r"]);
    case ShapeKind::spherocylinder:
      if (!params.count("l")) throw ParseError("missing cylinder length 'l'", spec.size());
      return Shape::spherocylinder(params["r"], params["l"]);
  }
  throw ParseError("unsupported shape", 0);
}

std::string format_shape(const Shape& shape) {
  std::string out = to_string(shape.kind) + ":r=" + format_double(shape.radius);
  if (shape.kind == ShapeKind::spherocylinder) out += ",l=" + format_double(shape.length);
  return out;
}

}  // namespace mayer
