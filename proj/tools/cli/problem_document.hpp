#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "gpco/analysis.hpp"
#include "gpco/rational.hpp"

namespace gpco::cli {

/// Parses a problem document:
///
///   {
///     "space_dim": 2,
///     "objective": {
///       "pieces": [ {"v": ["1","-1"], "beta": "1"}, ... ],
///       "domain": { "eq":   {"B": [[...]], "z": [...]},
///                   "ineq": {"U": [[...]], "gamma": [...]} }
///     },
///     "constraint_set": { "eq":   {"A": [[...]], "y": [...]},
///                         "ineq": {"G": [[...]], "alpha": [...]} }
///   }
///
/// Numbers are rational strings ("3", "-1/2", "0.25"); JSON integers are
/// also accepted, JSON floats are not. "domain", "constraint_set" and each
/// "eq"/"ineq" block may be omitted.
///
/// Throws ParseError (syntax or structure, with line or field context),
/// DimensionError (a row of the wrong width, naming the row) or
/// ImproperFunction (empty dom f).
Problem parse_problem(std::string_view text);

/// Canonical document for `p`; parse_problem(emit_problem(p)) == p.
nlohmann::ordered_json problem_to_json(const Problem& p);
std::string emit_problem(const Problem& p);

nlohmann::ordered_json to_json(const Rational& r);
nlohmann::ordered_json to_json(const Vector& v);
nlohmann::ordered_json to_json(const Extended& e);

/// Parses "a,b,c" into a vector of rationals; throws ParseError.
Vector parse_point(std::string_view text);

}  // namespace gpco::cli
