#pragma once

#include <string>

namespace bcft {

/// Render a double with 17 significant digits ("%.17g"). Non-finite values
/// become "nan", "inf" or "-inf".
std::string format_number(double x);

/// Same as format_number but emits JSON `null` for non-finite values.
std::string json_number(double x);

/// JSON string literal with escaping.
std::string json_string(const std::string& s);

}  // namespace bcft
