#pragma once

#include <string>

#include <json.hpp>

#include "fairdiv/instance.hpp"

namespace fairdiv {

using Json = nlohmann::ordered_json;

/**
 * Parse an instance document:
 *   {"n": int, "m": int, "values": [[num]], "sizes": [[num]], "budgets": [num]}
 * where num is a JSON integer, a decimal string ("0.625"), or a "p/q" string.
 * Decimal strings convert exactly. JSON floating-point literals are rejected
 * so that no value ever passes through binary floating point.
 *
 * @throws std::invalid_argument with the offending field path.
 */
Instance parse_instance(const std::string& text);

/// Inverse of parse_instance; rationals render as "p/q".
std::string serialize_instance(const Instance& inst);

/// Parse {"bundles": [[num]]}; shape is validated against the instance.
Allocation parse_allocation(const std::string& text, const Instance& inst);

std::string serialize_allocation(const Allocation& alloc);

/// Rational <-> JSON helpers shared by the report writers.
Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j, const std::string& path);

Json vec_to_json(const Vec& v);
Json mat_to_json(const Mat& m);

}  // namespace fairdiv
