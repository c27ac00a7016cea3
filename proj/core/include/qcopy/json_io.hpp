#pragma once

#include <string>

#include "qcopy/operator.hpp"

namespace qcopy {

/// Shortest "%.17g" rendering; 17 significant digits round-trip doubles
/// exactly. Negative zero is normalized to "0".
std::string format_real(double x);

/// JSON string literal with the required escapes.
std::string json_quote(const std::string& text);

/// {"dim":N,"entries":[[re,im],…]} — dim² row-major entries.
std::string to_json(const Operator& op);
/// Parse and validate; malformed JSON reports the byte offset.
Operator operator_from_json(const std::string& text);

/// {"dim":N,"amplitudes":[[re,im],…]}
std::string to_json(const Ket& ket);
Ket ket_from_json(const std::string& text);

}  // namespace qcopy
