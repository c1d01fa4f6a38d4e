#include "cli/problem_document.hpp"

#include <algorithm>

#include "gpco/errors.hpp"

namespace gpco::cli {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string line_column(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n');
  const auto last_nl = text.rfind('\n', byte == 0 ? 0 : byte - 1);
  const auto column = last_nl == std::string_view::npos || byte == 0 ? byte : byte - last_nl - 1;
  return "line " + std::to_string(line) + ", column " + std::to_string(column + 1);
}

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw ParseError(path + ": " + message);
}

Rational read_rational(const json& node, const std::string& path) {
  if (node.is_string()) {
    try {
      return parse_rational(node.get<std::string>());
    } catch (const ParseError& e) {
      fail(path, e.what());
    }
  }
  if (node.is_number_integer()) return Rational(mpz_class(node.dump(), 10));
  if (node.is_number_float()) fail(path, "floating-point literal " + node.dump() + " is not exact; quote it as a rational string");
  fail(path, "expected a rational string");
}

Vector read_vector(const json& node, const std::string& path) {
  if (!node.is_array()) fail(path, "expected an array");
  Vector out;
  for (std::size_t i = 0; i < node.size(); ++i) out.push_back(read_rational(node[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

Vector read_row(const json& node, const std::string& path, std::size_t dim) {
  Vector row = read_vector(node, path);
  if (row.size() != dim)
    throw DimensionError(path + ": row has " + std::to_string(row.size()) + " entries, space_dim is " +
                         std::to_string(dim));
  return row;
}

const json* member(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) fail(path, "expected an object");
  auto it = obj.find(key);
  return it == obj.end() ? nullptr : &*it;
}

// Reads {"<mat>": [[...]], "<rhs>": [...]} into (matrix, rhs).
std::pair<Matrix, Vector> read_block(const json* node, const std::string& path, const char* mat_key,
                                     const char* rhs_key, std::size_t dim) {
  if (node == nullptr) return {Matrix(0, dim), {}};
  const json* mat = member(*node, mat_key, path);
  const json* rhs = member(*node, rhs_key, path);
  std::vector<Vector> rows;
  if (mat != nullptr) {
    if (!mat->is_array()) fail(path + "." + mat_key, "expected an array of rows");
    for (std::size_t r = 0; r < mat->size(); ++r)
      rows.push_back(read_row((*mat)[r], path + "." + mat_key + "[" + std::to_string(r) + "]", dim));
  }
  Vector b = rhs == nullptr ? Vector{} : read_vector(*rhs, path + "." + rhs_key);
  if (b.size() != rows.size())
    throw DimensionError(path + ": " + std::to_string(rows.size()) + " rows in " + mat_key + " but " +
                         std::to_string(b.size()) + " entries in " + rhs_key);
  return {Matrix::from_rows(rows, dim), std::move(b)};
}

GPolySet read_set(const json* node, const std::string& path, const char* a, const char* y, const char* g,
                  const char* alpha, std::size_t dim) {
  if (node == nullptr) return GPolySet(dim);
  auto [eq, eq_rhs] = read_block(member(*node, "eq", path), path + ".eq", a, y, dim);
  auto [ineq, ineq_rhs] = read_block(member(*node, "ineq", path), path + ".ineq", g, alpha, dim);
  return GPolySet(std::move(eq), std::move(eq_rhs), std::move(ineq), std::move(ineq_rhs));
}

ordered_json matrix_json(const Matrix& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(to_json(m.row_vector(r)));
  return rows;
}

}  // namespace

ordered_json to_json(const Rational& r) { return to_string(r); }

ordered_json to_json(const Vector& v) {
  ordered_json arr = ordered_json::array();
  for (const auto& x : v) arr.push_back(to_string(x));
  return arr;
}

ordered_json to_json(const Extended& e) { return e.str(); }

Problem parse_problem(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError("malformed JSON at " + line_column(text, e.byte == 0 ? 0 : e.byte - 1) + ": " + e.what());
  }
  if (!doc.is_object()) fail("<document>", "expected a JSON object");

  const json* dim_node = member(doc, "space_dim", "<document>");
  if (dim_node == nullptr || !dim_node->is_number_unsigned() || dim_node->get<std::size_t>() == 0)
    fail("space_dim", "expected a positive integer");
  const auto dim = dim_node->get<std::size_t>();

  const json* objective = member(doc, "objective", "<document>");
  if (objective == nullptr) fail("objective", "missing");
  const json* pieces_node = member(*objective, "pieces", "objective");
  if (pieces_node == nullptr || !pieces_node->is_array() || pieces_node->empty())
    fail("objective.pieces", "expected a nonempty array of {\"v\", \"beta\"}");

  std::vector<AffinePiece> pieces;
  for (std::size_t k = 0; k < pieces_node->size(); ++k) {
    const std::string path = "objective.pieces[" + std::to_string(k) + "]";
    const json& piece = (*pieces_node)[k];
    const json* v = member(piece, "v", path);
    const json* beta = member(piece, "beta", path);
    if (v == nullptr) fail(path + ".v", "missing");
    pieces.push_back({read_row(*v, path + ".v", dim), beta == nullptr ? Rational(0) : read_rational(*beta, path + ".beta")});
  }

  GPolySet domain = read_set(member(*objective, "domain", "objective"), "objective.domain", "B", "z", "U", "gamma", dim);
  GPolySet constraints =
      read_set(member(doc, "constraint_set", "<document>"), "constraint_set", "A", "y", "G", "alpha", dim);

  GPolyFunc f(std::move(pieces), std::move(domain));
  return Problem(std::move(f), std::move(constraints));
}

ordered_json problem_to_json(const Problem& p) {
  const auto& f = p.objective();
  ordered_json pieces = ordered_json::array();
  for (const auto& piece : f.pieces()) pieces.push_back({{"v", to_json(piece.slope)}, {"beta", to_json(piece.offset)}});

  const auto& dom = f.domain();
  const auto& d = p.constraints();
  ordered_json doc;
  doc["space_dim"] = p.dim();
  doc["objective"] = {
      {"pieces", pieces},
      {"domain",
       {{"eq", {{"B", matrix_json(dom.eq_matrix())}, {"z", to_json(dom.eq_rhs())}}},
        {"ineq", {{"U", matrix_json(dom.ineq_matrix())}, {"gamma", to_json(dom.ineq_rhs())}}}}}};
  doc["constraint_set"] = {{"eq", {{"A", matrix_json(d.eq_matrix())}, {"y", to_json(d.eq_rhs())}}},
                           {"ineq", {{"G", matrix_json(d.ineq_matrix())}, {"alpha", to_json(d.ineq_rhs())}}}};
  return doc;
}

std::string emit_problem(const Problem& p) { return problem_to_json(p).dump(2) + "\n"; }

Vector parse_point(std::string_view text) {
  Vector out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto end = comma == std::string_view::npos ? text.size() : comma;
    std::string_view token = text.substr(start, end - start);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    out.push_back(parse_rational(token));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace gpco::cli
