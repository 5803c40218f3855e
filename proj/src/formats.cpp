#include "hyperbfs/formats.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "hyperbfs/errors.hpp"

namespace hyperbfs {

namespace {

using json = nlohmann::ordered_json;

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto pos = text.find(sep, start);
    out.emplace_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

// Lines of `text`; a final newline does not start an extra line.
std::vector<std::string> lines_of(std::string_view text) {
  if (text.empty()) return {};
  if (text.back() == '\n') text.remove_suffix(1);
  return split(text, '\n');
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::vector<std::string> list_field(const std::string& field) {
  if (field.empty()) return {};
  return split(field, ',');
}

std::string header_value(const std::string& line, std::string_view tag, std::size_t lineno) {
  if (!line.starts_with(tag))
    throw ParseError("line " + std::to_string(lineno) + ": expected '" + std::string(tag) + "'");
  std::string_view rest(line);
  rest.remove_prefix(tag.size());
  if (rest.starts_with(' ')) rest.remove_prefix(1);
  return std::string(rest);
}

std::string trim(std::string_view s) {
  const auto ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

// ---- hypergraphs ----------------------------------------------------------------

std::string format_hypergraph(const DirectedHypergraph& g) {
  std::string out = "#vertices: " + join(g.vertices().keys(), ",") + "\n";
  for (const auto& e : g.edges()) out += e.key + "\t" + join(e.out, ",") + "\t" + join(e.in, ",") + "\n";
  return out;
}

DirectedHypergraph parse_hypergraph(std::string_view text) {
  const auto lines = lines_of(text);
  if (lines.empty()) throw ParseError("hypergraph: missing '#vertices:' line");
  try {
    KeySpace vertices(list_field(header_value(lines[0], "#vertices:", 1)));
    std::vector<Hyperedge> edges;
    for (std::size_t i = 1; i < lines.size(); ++i) {
      if (lines[i].empty()) continue;
      auto fields = split(lines[i], '\t');
      if (fields.size() != 3)
        throw ParseError("line " + std::to_string(i + 1) + ": expected key<TAB>out<TAB>in");
      edges.push_back({fields[0], list_field(fields[1]), list_field(fields[2])});
    }
    return DirectedHypergraph(std::move(vertices), std::move(edges));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(std::string("hypergraph: ") + e.what());
  }
}

// ---- value sets ----------------------------------------------------------------

std::string format_value_set(const ValueSet& vs) {
  if (!vs.is_finite())
    throw NotCheckableError("value set '" + vs.id() + "' has no finite tables");
  const auto& names = vs.names();
  const auto n = names.size();
  std::string out = "#carrier: " + join(names, ",") + "\n";
  out += "#zero: " + vs.name(vs.zero()) + "\n";
  out += "#one: " + vs.name(vs.one()) + "\n";
  auto table = [&](const char* title, const std::vector<Value>& t) {
    out += title;
    out += "\n";
    for (std::size_t r = 0; r < n; ++r) {
      std::vector<std::string> row;
      for (std::size_t c = 0; c < n; ++c) row.push_back(vs.name(t[r * n + c]));
      out += join(row, " ") + "\n";
    }
  };
  table("plus:", vs.plus_table());
  table("times:", vs.times_table());
  return out;
}

ValueSet parse_value_set(std::string_view text, std::string id) {
  const auto lines = lines_of(text);
  if (lines.size() < 4) throw ParseError("value set: truncated header");
  const auto names = list_field(header_value(lines[0], "#carrier:", 1));
  const auto zero_name = header_value(lines[1], "#zero:", 2);
  const auto one_name = header_value(lines[2], "#one:", 3);
  const std::size_t n = names.size();
  if (n == 0) throw ParseError("value set: empty carrier");

  auto index_of = [&](const std::string& name, std::size_t lineno) -> Value {
    for (std::size_t i = 0; i < n; ++i)
      if (names[i] == name) return static_cast<Value>(i);
    throw ParseError("line " + std::to_string(lineno) + ": unknown element '" + name + "'");
  };
  auto table = [&](std::size_t first, const char* title) {
    if (first >= lines.size() || trim(lines[first]) != title)
      throw ParseError("line " + std::to_string(first + 1) + ": expected '" + title + "'");
    std::vector<Value> t;
    for (std::size_t r = 0; r < n; ++r) {
      const std::size_t lineno = first + 2 + r;
      if (first + 1 + r >= lines.size()) throw ParseError("value set: truncated " + std::string(title));
      std::istringstream row(lines[first + 1 + r]);
      std::vector<std::string> cells;
      for (std::string cell; row >> cell;) cells.push_back(cell);
      if (cells.size() != n)
        throw ParseError("line " + std::to_string(lineno) + ": expected " + std::to_string(n) +
                         " entries");
      for (const auto& cell : cells) t.push_back(index_of(cell, lineno));
    }
    return t;
  };
  auto plus = table(3, "plus:");
  auto times = table(4 + n, "times:");
  for (std::size_t i = 5 + 2 * n; i < lines.size(); ++i)
    if (!trim(lines[i]).empty()) throw ParseError("line " + std::to_string(i + 1) + ": trailing content");
  try {
    return ValueSet::from_tables(std::move(id), names, std::move(plus), std::move(times),
                                 index_of(zero_name, 2), index_of(one_name, 3));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(std::string("value set: ") + e.what());
  }
}

// ---- vectors and arrays ------------------------------------------------------------

std::string format_vector(const ValueSet& vs, const AssociativeArray& v) {
  std::vector<std::string> pairs;
  for (std::size_t c = 0; c < v.cols().size(); ++c)
    if (!vs.is_zero(v.at(0, c))) pairs.push_back(v.cols()[c] + "=" + vs.name(v.at(0, c)));
  return join(pairs, ",");
}

AssociativeArray parse_vector(const ValueSet& vs, const KeySpace& keys, std::string_view text) {
  AssociativeArray v(KeySpace{kVectorRow}, keys, vs.zero());
  const auto body = trim(text);
  if (body.empty()) return v;
  std::set<std::string> seen;
  for (const auto& pair : split(body, ',')) {
    auto eq = pair.find('=');
    if (eq == std::string::npos) throw ParseError("vector: expected key=value, got '" + pair + "'");
    const auto key = pair.substr(0, eq);
    const auto idx = keys.find(key);
    if (!idx) throw ParseError("vector: unknown key '" + key + "'");
    if (!seen.insert(key).second) throw ParseError("vector: duplicate key '" + key + "'");
    const Value value = vs.element(pair.substr(eq + 1));
    if (!vs.is_zero(value)) v.set(0, *idx, value);
  }
  return v;
}

std::string format_array(const ValueSet& vs, const AssociativeArray& a) {
  std::string out;
  for (const auto& c : a.cols()) out += "\t" + c;
  out += "\n";
  for (std::size_t r = 0; r < a.rows().size(); ++r) {
    out += a.rows()[r];
    for (std::size_t c = 0; c < a.cols().size(); ++c)
      out += "\t" + (a.is_stored(r, c) ? vs.name(a.at(r, c)) : std::string("."));
    out += "\n";
  }
  return out;
}

AssociativeArray parse_array(const ValueSet& vs, std::string_view text) {
  const auto lines = lines_of(text);
  if (lines.empty()) throw ParseError("array: missing header line");
  auto header = split(lines[0], '\t');
  if (!header[0].empty()) throw ParseError("array: header must start with an empty cell");
  header.erase(header.begin());
  std::vector<std::string> row_keys;
  std::vector<std::vector<std::string>> cells;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto fields = split(lines[i], '\t');
    if (fields.size() != header.size() + 1)
      throw ParseError("array line " + std::to_string(i + 1) + ": expected " +
                       std::to_string(header.size() + 1) + " cells");
    row_keys.push_back(fields[0]);
    cells.emplace_back(fields.begin() + 1, fields.end());
  }
  try {
    AssociativeArray a(KeySpace(std::move(row_keys)), KeySpace(header), vs.zero());
    for (std::size_t r = 0; r < cells.size(); ++r)
      for (std::size_t c = 0; c < header.size(); ++c)
        if (cells[r][c] != ".") a.set(r, c, vs.element(cells[r][c]));
    return a;
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(std::string("array: ") + e.what());
  }
}

// ---- files ----------------------------------------------------------------------

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw Error("write failed for '" + path.string() + "'");
}

ValueSet load_value_set_file(const std::filesystem::path& path) {
  return parse_value_set(read_text_file(path), path.stem().string());
}

// ---- reports --------------------------------------------------------------------

namespace {

json names_of(const ValueSet& vs, const std::vector<Value>& values) {
  json out = json::array();
  for (Value v : values) out.push_back(vs.name(v));
  return out;
}

json counterexample_json(const ValueSet& vs, const Counterexample& cx) {
  json j;
  j["check"] = to_string(cx.kind);
  j["origin"] = cx.origin;
  j["graph"] = format_hypergraph(cx.graph);
  j["vector"] = format_vector(vs, cx.vector);
  j["e_out"] = format_array(vs, cx.incidence.e_out);
  j["e_in"] = format_array(vs, cx.incidence.e_in);
  if (cx.vertex_order) j["vertex_order"] = join(cx.vertex_order->keys(), ",");
  if (cx.edge_order) j["edge_order"] = join(cx.edge_order->keys(), ",");
  return j;
}

}  // namespace

std::string format_report(const VerificationReport& report, std::string_view theorem) {
  const auto& vs = report.value_set;
  std::string out;
  for (const auto& rec : report.records) {
    json witness;
    witness["seed"] = report.seed;
    witness["condition"] = nullptr;
    if (rec.profile_witness)
      witness["condition"] = json{{"name", rec.profile_witness->condition},
                                  {"values", names_of(vs, rec.profile_witness->values)}};
    witness["counterexample"] = nullptr;
    if (rec.counterexample) witness["counterexample"] = counterexample_json(vs, *rec.counterexample);

    json j;
    j["value_set_id"] = report.value_set_id();
    j["theorem"] = std::string(theorem) + ":" + rec.check;
    j["profile"] = rec.profile;
    j["empirical"] = rec.empirical;
    j["agreement"] = rec.asserted ? json(rec.agreement()) : json(nullptr);
    j["witness"] = std::move(witness);
    out += j.dump() + "\n";
  }
  return out;
}

std::optional<Counterexample> parse_counterexample_record(const ValueSet& vs,
                                                          std::string_view line) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::exception& e) {
    throw ParseError(std::string("report line: ") + e.what());
  }
  if (!j.contains("witness") || !j["witness"].is_object())
    throw ParseError("report line: missing witness");
  const auto& cj = j["witness"]["counterexample"];
  if (cj.is_null()) return std::nullopt;
  try {
    auto kind = check_kind_from_string(cj.at("check").get<std::string>());
    if (!kind) throw ParseError("report line: unknown check");
    auto graph = parse_hypergraph(cj.at("graph").get<std::string>());
    const auto& keys = *kind == CheckKind::Dagger ? graph.edge_keys() : graph.vertices();
    Counterexample cx{*kind,
                      cj.at("origin").get<std::string>(),
                      graph,
                      parse_vector(vs, keys, cj.at("vector").get<std::string>()),
                      {parse_array(vs, cj.at("e_out").get<std::string>()),
                       parse_array(vs, cj.at("e_in").get<std::string>())},
                      std::nullopt,
                      std::nullopt};
    if (cj.contains("vertex_order"))
      cx.vertex_order = KeySpace(list_field(cj["vertex_order"].get<std::string>()));
    if (cj.contains("edge_order"))
      cx.edge_order = KeySpace(list_field(cj["edge_order"].get<std::string>()));
    return cx;
  } catch (const json::exception& e) {
    throw ParseError(std::string("report line: ") + e.what());
  }
}

}  // namespace hyperbfs
