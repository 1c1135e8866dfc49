#ifndef TORICQ_IO_HPP
#define TORICQ_IO_HPP

#include <json.hpp>
#include <string>

#include "core/polytope.hpp"

namespace toricq {

using Json = nlohmann::ordered_json;

/// Scalar text form: "p/q" (or "p"), or {"a": "p/q", "b": "r/s"} meaning
/// a + b*sqrt(k) with k taken from the enclosing file's field.
Scalar parse_scalar(const Json& j, const FieldSpec& field);
Json render_scalar(const Scalar& x);

Rational parse_rational(const std::string& s);
std::string render_rational(const Rational& r);

/// Input schema:
/// { "m": int, "field": {"radicand": k},
///   "halfspaces": [ {"normal": [Scalar,...], "offset": Scalar}, ... ] }
HRep parse_polytope(const Json& j);
HRep parse_polytope_string(const std::string& text);
HRep load_polytope_file(const std::string& path);

/// Comma-separated scalars ("1,2" or "1/2,3"), or a JSON array of scalars
/// in the file text form.
Vec parse_direction(const std::string& text, const FieldSpec& field);

}  // namespace toricq

#endif
