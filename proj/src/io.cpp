#include "hypersimp/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace hypersimp {

namespace {

using nlohmann::json;

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

Hypergraph parse_json(std::string_view text) {
  json doc;
  // nlohmann keeps the last of two equal keys; catch duplicate hyperedge ids
  // while parsing instead.
  std::string top_key;
  std::set<std::string> seen_edges;
  auto on_event = [&](int depth, json::parse_event_t event, json& parsed) {
    if (event != json::parse_event_t::key) return true;
    if (depth == 1) top_key = parsed.get<std::string>();
    if (depth == 2 && top_key == "hyperedges" && !seen_edges.insert(parsed.get<std::string>()).second) {
      throw ParseError("duplicate hyperedge id '" + parsed.get<std::string>() + "'", 0, parsed.get<std::string>());
    }
    return true;
  };
  try {
    doc = json::parse(text, on_event);
  } catch (const json::parse_error& e) {
    // nlohmann reports a byte offset; convert to a line number.
    std::size_t offset = std::min<std::size_t>(e.byte, text.size());
    std::size_t line = 1 + static_cast<std::size_t>(
                               std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
    throw ParseError(std::string("invalid JSON: ") + e.what(), line);
  }
  if (!doc.is_object()) throw ParseError("top-level JSON value must be an object", 1);

  Hypergraph h;
  if (doc.contains("vertices")) {
    const auto& vs = doc["vertices"];
    if (!vs.is_array()) throw ParseError("'vertices' must be an array", 0, "vertices");
    for (const auto& v : vs) {
      if (!v.is_string()) throw ParseError("vertex ids must be strings", 0, "vertices");
      if (h.has_vertex(v.get<std::string>())) {
        throw ParseError("duplicate vertex id '" + v.get<std::string>() + "'", 0, "vertices");
      }
      h.add_vertex(v.get<std::string>());
    }
  }
  if (!doc.contains("hyperedges") || !doc["hyperedges"].is_object()) {
    throw ParseError("'hyperedges' must be an object", 0, "hyperedges");
  }
  for (const auto& [e, members] : doc["hyperedges"].items()) {
    if (!members.is_array()) throw ParseError("hyperedge '" + e + "' must be an array", 0, e);
    Hypergraph::Members m;
    for (const auto& v : members) {
      if (!v.is_string()) throw ParseError("members of '" + e + "' must be strings", 0, e);
      m.insert(v.get<std::string>());
    }
    h.add_hyperedge(e, std::move(m));
  }
  if (doc.contains("labels")) {
    const auto& ls = doc["labels"];
    if (!ls.is_object()) throw ParseError("'labels' must be an object", 0, "labels");
    for (const auto& [id, label] : ls.items()) {
      if (!label.is_string()) throw ParseError("label of '" + id + "' must be a string", 0, id);
      h.set_label(id, label.get<std::string>());
    }
  }
  for (const auto& key : doc.items()) {
    if (key.key() != "vertices" && key.key() != "hyperedges" && key.key() != "labels") {
      throw ParseError("unknown key '" + key.key() + "'", 0, key.key());
    }
  }
  return h;
}

Hypergraph parse_edgelist(std::string_view text) {
  Hypergraph h;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto colon = line.find(':');
    if (colon == std::string_view::npos) {
      throw ParseError("line " + std::to_string(line_no) + ": expected 'edgeId: v1 v2 ...'", line_no);
    }
    std::string id(trim(line.substr(0, colon)));
    Hypergraph::Members members;
    std::istringstream tokens{std::string(line.substr(colon + 1))};
    for (std::string tok; tokens >> tok;) {
      if (tok.find(':') != std::string::npos) {
        throw ParseError("line " + std::to_string(line_no) + ": unexpected ':' in '" + tok + "'", line_no, tok);
      }
      members.insert(tok);
    }
    if (id.find_first_of(" \t") != std::string::npos) {
      throw ParseError("line " + std::to_string(line_no) + ": hyperedge id contains whitespace", line_no, id);
    }
    for (const auto& v : members) h.add_vertex(v);
    if (id.empty()) continue;
    if (members.empty()) {
      throw ParseError("line " + std::to_string(line_no) + ": hyperedge '" + id + "' has no vertices", line_no, id);
    }
    if (h.has_hyperedge(id)) {
      throw ParseError("line " + std::to_string(line_no) + ": duplicate hyperedge id '" + id + "'", line_no, id);
    }
    h.add_hyperedge(id, std::move(members));
  }
  return h;
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "json") return Format::Json;
  if (name == "edgelist") return Format::Edgelist;
  throw std::invalid_argument("unknown hypergraph format '" + std::string(name) + "'");
}

Hypergraph parse_hypergraph(std::string_view text, Format format) {
  Hypergraph h = format == Format::Json ? parse_json(text) : parse_edgelist(text);
  h.validate();
  return h;
}

std::string serialize_hypergraph(const Hypergraph& h, Format format) {
  if (format == Format::Json) {
    json doc;
    doc["vertices"] = json::array();
    for (const auto& v : h.vertices()) doc["vertices"].push_back(v);
    doc["hyperedges"] = json::object();
    for (const auto& [e, vs] : h.hyperedges()) doc["hyperedges"][e] = std::vector<std::string>(vs.begin(), vs.end());
    if (!h.labels().empty()) doc["labels"] = h.labels();
    return doc.dump(2) + "\n";
  }
  std::string out;
  std::set<std::string> covered;
  for (const auto& [e, vs] : h.hyperedges()) {
    out += e + ":";
    for (const auto& v : vs) {
      out += " " + v;
      covered.insert(v);
    }
    out += "\n";
  }
  std::string isolated;
  for (const auto& v : h.vertices()) {
    if (covered.count(v) == 0) isolated += " " + v;
  }
  if (!isolated.empty()) out += ":" + isolated + "\n";
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::runtime_error("failed writing '" + path.string() + "'");
}

}  // namespace hypersimp
