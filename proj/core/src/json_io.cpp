#include "qcopy/json_io.hpp"

#include <cstdio>

#include <json.hpp>

#include "qcopy/errors.hpp"

namespace qcopy {

namespace {

using nlohmann::json;

json parse_or_throw(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string(what) + ": malformed JSON at byte " +
                     std::to_string(e.byte) + ": " + e.what());
  }
}

std::vector<Complex> read_pairs(const json& array, std::size_t expected,
                                const char* what) {
  if (!array.is_array() || array.size() != expected)
    throw ParseError(std::string(what) + ": expected an array of " +
                     std::to_string(expected) + " [re, im] pairs");
  std::vector<Complex> out;
  out.reserve(expected);
  for (const json& pair : array) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() ||
        !pair[1].is_number())
      throw ParseError(std::string(what) + ": each entry must be [re, im]");
    out.emplace_back(pair[0].get<double>(), pair[1].get<double>());
  }
  return out;
}

std::size_t read_dim(const json& j, const char* what) {
  if (!j.is_object() || !j.contains("dim") || !j["dim"].is_number_integer())
    throw ParseError(std::string(what) + ": missing integer field \"dim\"");
  const auto dim = j["dim"].get<long long>();
  if (dim < 1) throw ParseError(std::string(what) + ": \"dim\" must be >= 1");
  if (dim > (1LL << 12))
    throw ParseError(std::string(what) + ": \"dim\" beyond the supported size");
  return static_cast<std::size_t>(dim);
}

}  // namespace

std::string format_real(double x) {
  if (x == 0.0) x = 0.0;  // collapse −0
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string json_quote(const std::string& text) {
  std::string out = "\"";
  for (char c : text) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out.push_back(c);
        }
    }
  }
  out += "\"";
  return out;
}

std::string to_json(const Operator& op) {
  std::string out = "{\"dim\":" + std::to_string(op.dim()) + ",\"entries\":[";
  bool first = true;
  for (const Complex& z : op.entries()) {
    if (!first) out += ",";
    first = false;
    out += "[" + format_real(z.real()) + "," + format_real(z.imag()) + "]";
  }
  out += "]}";
  return out;
}

Operator operator_from_json(const std::string& text) {
  const json j = parse_or_throw(text, "operator");
  const std::size_t dim = read_dim(j, "operator");
  if (!j.contains("entries"))
    throw ParseError("operator: missing field \"entries\"");
  return Operator(dim, read_pairs(j["entries"], dim * dim, "operator"));
}

std::string to_json(const Ket& ket) {
  std::string out = "{\"dim\":" + std::to_string(ket.dim()) + ",\"amplitudes\":[";
  bool first = true;
  for (const Complex& z : ket.amplitudes()) {
    if (!first) out += ",";
    first = false;
    out += "[" + format_real(z.real()) + "," + format_real(z.imag()) + "]";
  }
  out += "]}";
  return out;
}

Ket ket_from_json(const std::string& text) {
  const json j = parse_or_throw(text, "ket");
  const std::size_t dim = read_dim(j, "ket");
  if (!j.contains("amplitudes"))
    throw ParseError("ket: missing field \"amplitudes\"");
  return Ket(dim, read_pairs(j["amplitudes"], dim, "ket"));
}

}  // namespace qcopy
