#include "hypersimp/hypergraph.hpp"

#include <numeric>

namespace hypersimp {

Hypergraph Hypergraph::from_incidence(
    const std::map<std::string, std::vector<std::string>>& hyperedges) {
  Hypergraph h;
  for (const auto& [e, vs] : hyperedges) {
    for (const auto& v : vs) h.add_vertex(v);
    h.add_hyperedge(e, Members(vs.begin(), vs.end()));
  }
  return h;
}

Hypergraph& Hypergraph::add_vertex(const std::string& v) {
  vertices_.insert(v);
  return *this;
}

Hypergraph& Hypergraph::add_hyperedge(const std::string& e, Members members) {
  if (hyperedges_.count(e) != 0) {
    throw ValidationError(e, "duplicate hyperedge id '" + e + "'");
  }
  hyperedges_.emplace(e, std::move(members));
  return *this;
}

Hypergraph& Hypergraph::set_label(const std::string& id, std::string label) {
  labels_[id] = std::move(label);
  return *this;
}

const Hypergraph::Members& Hypergraph::members(const std::string& e) const {
  auto it = hyperedges_.find(e);
  if (it == hyperedges_.end()) throw ValidationError(e, "unknown hyperedge id '" + e + "'");
  return it->second;
}

std::size_t Hypergraph::incidence_count() const {
  return std::accumulate(hyperedges_.begin(), hyperedges_.end(), std::size_t{0},
                         [](std::size_t acc, const auto& kv) { return acc + kv.second.size(); });
}

std::size_t Hypergraph::degree(const std::string& v) const {
  std::size_t d = 0;
  for (const auto& [e, vs] : hyperedges_) d += vs.count(v);
  return d;
}

std::vector<std::string> Hypergraph::incident_hyperedges(const std::string& v) const {
  std::vector<std::string> out;
  for (const auto& [e, vs] : hyperedges_) {
    if (vs.count(v) != 0) out.push_back(e);
  }
  return out;
}

void Hypergraph::validate() const {
  for (const auto& [e, vs] : hyperedges_) {
    if (vertices_.count(e) != 0) {
      throw ValidationError(e, "id '" + e + "' is used both as a vertex and as a hyperedge");
    }
    if (vs.empty()) throw ValidationError(e, "hyperedge '" + e + "' is empty");
    for (const auto& v : vs) {
      if (vertices_.count(v) == 0) {
        throw ValidationError(v, "hyperedge '" + e + "' references unknown vertex '" + v + "'");
      }
    }
  }
  for (const auto& [id, label] : labels_) {
    if (!contains(id)) throw ValidationError(id, "label for unknown id '" + id + "'");
  }
}

void Hypergraph::remove_incidence(const std::string& v, const std::string& e) {
  auto it = hyperedges_.find(e);
  if (it == hyperedges_.end() || it->second.erase(v) == 0) {
    throw ValidationError(v, "no incidence between '" + v + "' and '" + e + "'");
  }
}

void Hypergraph::erase_vertex(const std::string& v) {
  for (auto& [e, vs] : hyperedges_) vs.erase(v);
  vertices_.erase(v);
  labels_.erase(v);
}

void Hypergraph::erase_hyperedge(const std::string& e) {
  hyperedges_.erase(e);
  labels_.erase(e);
}

void Hypergraph::merge_vertices(const std::string& a, const std::string& b, const std::string& merged) {
  if (!has_vertex(a) || !has_vertex(b)) throw ValidationError(has_vertex(a) ? b : a, "no such vertex");
  if (contains(merged)) throw ValidationError(merged, "merged id '" + merged + "' is taken");
  for (auto& [e, vs] : hyperedges_) {
    if (vs.erase(a) + vs.erase(b) > 0) vs.insert(merged);
  }
  vertices_.erase(a);
  vertices_.erase(b);
  vertices_.insert(merged);
  labels_.erase(a);
  labels_.erase(b);
}

void Hypergraph::merge_hyperedges(const std::string& e, const std::string& f, const std::string& merged) {
  if (!has_hyperedge(e) || !has_hyperedge(f)) throw ValidationError(has_hyperedge(e) ? f : e, "no such hyperedge");
  if (contains(merged)) throw ValidationError(merged, "merged id '" + merged + "' is taken");
  Members both = hyperedges_.at(e);
  both.insert(hyperedges_.at(f).begin(), hyperedges_.at(f).end());
  erase_hyperedge(e);
  erase_hyperedge(f);
  hyperedges_.emplace(merged, std::move(both));
}

Hypergraph dualize(const Hypergraph& h) {
  Hypergraph d;
  for (const auto& [e, vs] : h.hyperedges()) d.add_vertex(e);
  std::map<std::string, Hypergraph::Members> inc;
  for (const auto& v : h.vertices()) inc[v];
  for (const auto& [e, vs] : h.hyperedges()) {
    for (const auto& v : vs) inc[v].insert(e);
  }
  for (auto& [v, es] : inc) {
    if (es.empty()) {
      throw ValidationError(v, "vertex '" + v + "' is in no hyperedge; its dual hyperedge would be empty");
    }
    d.add_hyperedge(v, std::move(es));
  }
  for (const auto& [id, label] : h.labels()) d.set_label(id, label);
  return d;
}

}  // namespace hypersimp
