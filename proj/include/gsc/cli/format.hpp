#pragma once

#include <string>

#include "json.hpp"

#include "gsc/numeric.hpp"

namespace gsc::cli {

using Json = nlohmann::ordered_json;

enum class OutputFormat { json, csv };

/// Decimal string with `decimals` places.
Json decimal(const Real& x, unsigned decimals);
/// {"re": ..., "im": ...}
Json complex_value(const Complex& z, unsigned decimals);
/// Scientific string for residuals and error bounds.
Json magnitude(const Real& x);

/// ISO 8601 UTC, second resolution.
std::string utc_timestamp();

/// JSON is pretty-printed with two-space indent. CSV writes one row per array
/// element (or per entry of a "reports"/"records" member, or the object
/// itself), flattening nested objects to dotted column names.
std::string render(const Json& doc, OutputFormat format);

}  // namespace gsc::cli
