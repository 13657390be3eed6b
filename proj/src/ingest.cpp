#include "hypersimp/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>

#include "hypersimp/io.hpp"

namespace hypersimp {

namespace {

std::vector<std::string> split_row(std::string_view line) {
  std::vector<std::string> out;
  std::string cur;
  bool have = false;
  for (char c : line) {
    if (c == ',' || c == '\t' || c == ' ' || c == ';') {
      if (have || c == ',' || c == ';') out.push_back(cur);
      cur.clear();
      have = false;
    } else if (c != '\r') {
      cur += c;
      have = true;
    }
  }
  if (have) out.push_back(cur);
  // Whitespace runs produce no empty fields; trailing commas would.
  while (!out.empty() && out.back().empty()) out.pop_back();
  return out;
}

std::optional<std::int64_t> to_int(const std::string& s) {
  std::int64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size()) return std::nullopt;
  return v;
}

// Calls f(row_number, fields) for every data row. The first non-comment row
// is dropped when is_header says so.
template <typename H, typename F>
void each_row(std::string_view text, H&& is_header, F&& f) {
  std::size_t row = 0, pos = 0;
  bool seen_data = false;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++row;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || line[first] == '#') {
      if (end == text.size()) break;
      continue;
    }
    auto fields = split_row(line);
    const bool header = !seen_data && is_header(fields);
    seen_data = true;
    if (!header) f(row, fields);
    if (end == text.size()) break;
  }
}

bool contact_header(const std::vector<std::string>& f) { return !f.empty() && !to_int(f[0]); }

bool friendship_header(const std::vector<std::string>& f) {
  static const std::set<std::string> names{"source", "target", "from", "to", "src", "dst", "ego", "alter",
                                           "i", "j", "id1", "id2", "student", "friend"};
  return std::all_of(f.begin(), f.end(), [](std::string x) {
    std::transform(x.begin(), x.end(), x.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return names.count(x) != 0;
  });
}

using Adjacency = std::map<std::string, std::set<std::string>>;

void bron_kerbosch(const Adjacency& adj, std::vector<std::string>& r, std::set<std::string> p, std::set<std::string> x,
                   std::vector<std::vector<std::string>>& out) {
  if (p.empty() && x.empty()) {
    auto c = r;
    std::sort(c.begin(), c.end());
    out.push_back(std::move(c));
    return;
  }
  // Pivot: the candidate with most neighbours in p.
  std::string pivot;
  std::size_t best = 0;
  bool have = false;
  for (const auto* s : {&p, &x}) {
    for (const auto& u : *s) {
      const auto& nu = adj.at(u);
      std::size_t k = 0;
      for (const auto& w : p) k += nu.count(w);
      if (!have || k > best) {
        pivot = u;
        best = k;
        have = true;
      }
    }
  }
  const auto& np = adj.at(pivot);
  std::vector<std::string> todo;
  for (const auto& v : p) {
    if (np.count(v) == 0) todo.push_back(v);
  }
  for (const auto& v : todo) {
    const auto& nv = adj.at(v);
    std::set<std::string> p2, x2;
    for (const auto& w : p) {
      if (nv.count(w) != 0) p2.insert(w);
    }
    for (const auto& w : x) {
      if (nv.count(w) != 0) x2.insert(w);
    }
    r.push_back(v);
    bron_kerbosch(adj, r, std::move(p2), std::move(x2), out);
    r.pop_back();
    p.erase(v);
    x.insert(v);
  }
}

Hypergraph from_cliques(const std::vector<std::pair<std::string, std::string>>& edges) {
  std::set<std::string> nodes;
  for (const auto& [a, b] : edges) {
    nodes.insert(a);
    nodes.insert(b);
  }
  auto cliques = maximal_cliques({nodes.begin(), nodes.end()}, edges);
  Hypergraph h;
  for (const auto& v : nodes) h.add_vertex(v);
  std::size_t k = 0;
  for (const auto& c : cliques) {
    if (c.size() < 2) continue;
    std::string id = "c" + std::to_string(k++);
    while (h.contains(id)) id = "clique-" + id;
    h.add_hyperedge(id, {c.begin(), c.end()});
  }
  h.validate();
  return h;
}

}  // namespace

std::vector<ContactRecord> parse_contacts(std::string_view text) {
  std::vector<ContactRecord> out;
  each_row(text, contact_header, [&](std::size_t row, const std::vector<std::string>& f) {
    if (f.size() < 3 || f.size() > 4) {
      throw ParseError("row " + std::to_string(row) + ": expected t,a,b[,duration]", row);
    }
    auto t = to_int(f[0]);
    if (!t || *t < 0) throw ParseError("row " + std::to_string(row) + ": bad timestamp '" + f[0] + "'", row, "timestamp");
    if (f[1].empty() || f[2].empty()) throw ParseError("row " + std::to_string(row) + ": empty participant id", row);
    if (f[1] == f[2]) throw ParseError("row " + std::to_string(row) + ": contact of '" + f[1] + "' with itself", row);
    ContactRecord r{*t, f[1], f[2], std::nullopt};
    if (f.size() == 4) {
      auto d = to_int(f[3]);
      if (!d || *d < 0) throw ParseError("row " + std::to_string(row) + ": bad duration '" + f[3] + "'", row, "duration");
      r.duration = *d;
    }
    out.push_back(std::move(r));
  });
  return out;
}

std::vector<std::pair<std::string, std::string>> parse_friendships(std::string_view text) {
  std::vector<std::pair<std::string, std::string>> out;
  each_row(text, friendship_header, [&](std::size_t row, const std::vector<std::string>& f) {
    if (f.size() != 2 || f[0].empty() || f[1].empty()) {
      throw ParseError("row " + std::to_string(row) + ": expected source,target", row);
    }
    if (f[0] == f[1]) throw ParseError("row " + std::to_string(row) + ": self-nomination of '" + f[0] + "'", row);
    out.emplace_back(f[0], f[1]);
  });
  return out;
}

std::vector<std::vector<std::string>> maximal_cliques(const std::vector<std::string>& nodes,
                                                      const std::vector<std::pair<std::string, std::string>>& edges) {
  Adjacency adj;
  for (const auto& v : nodes) adj[v];
  for (const auto& [a, b] : edges) {
    if (a == b) continue;
    adj[a].insert(b);
    adj[b].insert(a);
  }
  std::vector<std::vector<std::string>> out;
  std::vector<std::string> r;
  std::set<std::string> p;
  for (const auto& [v, n] : adj) p.insert(v);
  bron_kerbosch(adj, r, std::move(p), {}, out);
  std::sort(out.begin(), out.end());
  return out;
}

Hypergraph ingest_contacts(const std::vector<ContactRecord>& records, std::int64_t min_total_seconds) {
  std::map<std::pair<std::string, std::string>, std::int64_t> total;
  for (const auto& r : records) {
    total[std::minmax(r.a, r.b)] += r.duration.value_or(kDefaultContactSeconds);
  }
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& [pair, secs] : total) {
    if (secs > min_total_seconds) edges.push_back(pair);
  }
  return from_cliques(edges);
}

Hypergraph ingest_friendship(const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::set<std::pair<std::string, std::string>> directed(pairs.begin(), pairs.end());
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& [a, b] : directed) {
    if (a < b && directed.count({b, a}) != 0) edges.emplace_back(a, b);
  }
  return from_cliques(edges);
}

}  // namespace hypersimp
