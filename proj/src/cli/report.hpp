#pragma once

#include "cobord/int_matrix.hpp"

#include <json.hpp>

#include <string>

namespace cobord::cli {

using nlohmann::json;

inline constexpr const char* kSchema = "cobord-report/1";

enum class Format { Json, Text };

// Integers that fit in 64 bits become JSON numbers, everything else a string.
json integer_json(const Integer& v);
json vector_json(const IntVector& v);
json matrix_json(const IntMatrix& m);
json scalar_json(const Scalar& v);

// Wraps a payload with the command echo, schema tag and warnings.
json make_report(const json& command, const json& result, const json& warnings);

// Canonical rendering: sorted keys, two-space indent, trailing newline.
std::string render(const json& report, Format format);

} // namespace cobord::cli
