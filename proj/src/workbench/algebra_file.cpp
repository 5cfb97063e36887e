#include "opalg/workbench/algebra_file.hpp"

#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "opalg/core/errors.hpp"

namespace opalg::workbench {

using nlohmann::json;

const Operator& AlgebraFile::op(std::string_view name) const
{
  const auto it = operators.find(std::string(name));
  if (it == operators.end())
    throw Error("algebra has no operator named '" + std::string(name) + "'");
  return it->second;
}

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& what)
{
  throw ParseError("algebra file: " + field + ": " + what);
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset)
{
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

// Parses and rejects repeated keys within one object, which the JSON
// library would otherwise resolve silently by keeping the last value.
json parse_strict(std::string_view text)
{
  std::vector<std::set<std::string>> open;
  std::string duplicate;
  const json::parser_callback_t cb = [&](int, json::parse_event_t event, json& parsed) {
    switch (event) {
    case json::parse_event_t::object_start:
      open.emplace_back();
      break;
    case json::parse_event_t::object_end:
      open.pop_back();
      break;
    case json::parse_event_t::key:
      if (!open.back().insert(parsed.get<std::string>()).second && duplicate.empty())
        duplicate = parsed.get<std::string>();
      break;
    default:
      break;
    }
    return true;
  };
  json doc;
  try {
    doc = json::parse(text.begin(), text.end(), cb);
  } catch (const json::parse_error& e) {
    const auto [line, col] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    std::ostringstream os;
    os << "algebra file: syntax error at line " << line << ", column " << col << ": " << e.what();
    throw ParseError(os.str());
  }
  if (!duplicate.empty())
    fail("\"" + duplicate + "\"", "duplicate key");
  return doc;
}

Scalar scalar_at(const json& v, const std::string& field)
{
  if (!v.is_string())
    fail(field, "expected a scalar string \"p\" or \"p/q\"");
  try {
    return Scalar::parse(v.get<std::string>());
  } catch (const Error& e) {
    fail(field, e.what());
  }
}

std::size_t index_at(const json& v, std::size_t dim, const std::string& field)
{
  if (!v.is_number_unsigned())
    fail(field, "expected a non-negative integer index");
  const auto i = v.get<std::uint64_t>();
  if (i >= dim)
    fail(field, "index " + std::to_string(i) + " out of range for dimension " + std::to_string(dim));
  return static_cast<std::size_t>(i);
}

template <std::size_t Arity>
MultilinearStructure<Arity> parse_entries(const json& list, std::size_t dim, const std::string& name)
{
  if (!list.is_array())
    fail(name, "expected a list of entries");
  using Index = typename MultilinearStructure<Arity>::Index;
  std::map<Index, Vector> products;
  std::map<std::array<std::size_t, Arity + 1>, std::size_t> seen;
  for (std::size_t e = 0; e < list.size(); ++e) {
    const std::string field = name + "[" + std::to_string(e) + "]";
    const json& entry = list[e];
    if (!entry.is_array() || entry.size() != Arity + 2)
      fail(field, "expected " + std::to_string(Arity + 1) + " indices followed by a scalar string");
    std::array<std::size_t, Arity + 1> key{};
    for (std::size_t s = 0; s <= Arity; ++s)
      key[s] = index_at(entry[s], dim, field + "[" + std::to_string(s) + "]");
    const Scalar value = scalar_at(entry[Arity + 1], field + "[" + std::to_string(Arity + 1) + "]");
    if (const auto [it, fresh] = seen.emplace(key, e); !fresh)
      fail(field, "duplicate entry, first given at " + name + "[" + std::to_string(it->second) + "]");
    Index idx{};
    std::copy_n(key.begin(), Arity, idx.begin());
    auto [pos, inserted] = products.try_emplace(idx, dim);
    pos->second[key[Arity]] = value;
  }
  return MultilinearStructure<Arity>(dim, products);
}

Operator parse_operator(const json& rows, std::size_t dim, const std::string& field)
{
  if (!rows.is_array() || rows.size() != dim)
    fail(field, "expected " + std::to_string(dim) + " rows");
  std::vector<Scalar> entries;
  entries.reserve(dim * dim);
  for (std::size_t r = 0; r < dim; ++r) {
    const std::string row_field = field + "[" + std::to_string(r) + "]";
    if (!rows[r].is_array() || rows[r].size() != dim)
      fail(row_field, "expected " + std::to_string(dim) + " entries");
    for (std::size_t c = 0; c < dim; ++c)
      entries.push_back(scalar_at(rows[r][c], row_field + "[" + std::to_string(c) + "]"));
  }
  return Operator(dim, std::move(entries));
}

std::string quoted(const std::string& s)
{
  return json(s).dump();
}

template <std::size_t Arity>
void render_entries(std::ostream& os, const MultilinearStructure<Arity>& t)
{
  os << "[";
  bool first = true;
  for (const auto& [idx, v] : t.products()) {
    for (std::size_t k = 0; k < v.dim(); ++k) {
      if (v[k].is_zero())
        continue;
      os << (first ? "\n    [" : ",\n    [");
      for (std::size_t i : idx)
        os << i << ", ";
      os << k << ", " << quoted(v[k].str()) << "]";
      first = false;
    }
  }
  os << (first ? "]" : "\n  ]");
}

} // namespace

AlgebraFile parse_algebra_file(std::string_view text)
{
  const json doc = parse_strict(text);
  if (!doc.is_object())
    fail("(top level)", "expected an object");
  static const std::set<std::string> known{"dimension", "basis_names", "bracket", "triple", "operators"};
  for (const auto& [key, value] : doc.items())
    if (!known.contains(key))
      fail("\"" + key + "\"", "unknown field");

  AlgebraFile f;
  if (!doc.contains("dimension"))
    fail("dimension", "missing");
  const json& dim = doc["dimension"];
  if (!dim.is_number_unsigned() || dim.get<std::uint64_t>() == 0)
    fail("dimension", "expected a positive integer");
  f.dimension = dim.get<std::size_t>();

  if (doc.contains("basis_names")) {
    const json& names = doc["basis_names"];
    if (!names.is_array() || names.size() != f.dimension)
      fail("basis_names", "expected " + std::to_string(f.dimension) + " names");
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (!names[i].is_string())
        fail("basis_names[" + std::to_string(i) + "]", "expected a string");
      f.basis_names.push_back(names[i].get<std::string>());
    }
  }
  if (doc.contains("bracket"))
    f.bracket = parse_entries<2>(doc["bracket"], f.dimension, "bracket");
  if (doc.contains("triple"))
    f.triple = parse_entries<3>(doc["triple"], f.dimension, "triple");
  if (doc.contains("operators")) {
    const json& ops = doc["operators"];
    if (!ops.is_object())
      fail("operators", "expected an object of named matrices");
    for (const auto& [name, rows] : ops.items())
      f.operators.emplace(name, parse_operator(rows, f.dimension, "operators." + name));
  }
  return f;
}

std::string render_algebra_file(const AlgebraFile& f)
{
  std::ostringstream os;
  os << "{\n  \"dimension\": " << f.dimension;
  if (!f.basis_names.empty()) {
    os << ",\n  \"basis_names\": [";
    for (std::size_t i = 0; i < f.basis_names.size(); ++i)
      os << (i ? ", " : "") << quoted(f.basis_names[i]);
    os << "]";
  }
  if (f.bracket) {
    os << ",\n  \"bracket\": ";
    render_entries(os, *f.bracket);
  }
  if (f.triple) {
    os << ",\n  \"triple\": ";
    render_entries(os, *f.triple);
  }
  os << ",\n  \"operators\": {";
  bool first = true;
  for (const auto& [name, op] : f.operators) {
    os << (first ? "\n    " : ",\n    ") << quoted(name) << ": [";
    for (std::size_t r = 0; r < op.dim(); ++r) {
      os << (r ? ",\n      [" : "\n      [");
      for (std::size_t c = 0; c < op.dim(); ++c)
        os << (c ? ", " : "") << quoted(op(r, c).str());
      os << "]";
    }
    os << "\n    ]";
    first = false;
  }
  os << (first ? "}" : "\n  }") << "\n}\n";
  return os.str();
}

AlgebraFile from_catalog(const catalog::CatalogEntry& entry, std::string_view triple_key)
{
  AlgebraFile f;
  f.dimension = entry.dim;
  f.basis_names = entry.basis_names;
  f.bracket = entry.bracket;
  if (!entry.triples.empty())
    f.triple = entry.triple(triple_key);
  f.operators = entry.operators;
  return f;
}

} // namespace opalg::workbench
