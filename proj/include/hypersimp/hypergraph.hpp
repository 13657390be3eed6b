#ifndef HYPERSIMP_HYPERGRAPH_HPP_
#define HYPERSIMP_HYPERGRAPH_HPP_

#include <cstddef>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace hypersimp {

/// Raised when a hypergraph violates the data-model invariants. The message
/// always names the offending id.
class ValidationError : public std::runtime_error {
 public:
  ValidationError(std::string id, const std::string& what)
      : std::runtime_error(what), id_(std::move(id)) {}
  const std::string& id() const noexcept { return id_; }

 private:
  std::string id_;
};

enum class NodeRole : unsigned char { Primal, Dual };

inline NodeRole opposite(NodeRole r) {
  return r == NodeRole::Primal ? NodeRole::Dual : NodeRole::Primal;
}

/// Vertices plus a family of named hyperedges. Ids are opaque strings; the
/// vertex and hyperedge namespaces must not overlap. Parallel hyperedges
/// (equal member sets under different ids) are kept.
class Hypergraph {
 public:
  using Members = std::set<std::string>;

  Hypergraph() = default;

  /// Builds from an incidence map, adding every referenced vertex.
  static Hypergraph from_incidence(
      const std::map<std::string, std::vector<std::string>>& hyperedges);

  Hypergraph& add_vertex(const std::string& v);
  /// Members must already exist as vertices once validate() runs; this call
  /// does not check, so parsers can report errors with their own context.
  Hypergraph& add_hyperedge(const std::string& e, Members members);
  Hypergraph& set_label(const std::string& id, std::string label);

  const std::set<std::string>& vertices() const { return vertices_; }
  const std::map<std::string, Members>& hyperedges() const { return hyperedges_; }
  const std::map<std::string, std::string>& labels() const { return labels_; }

  bool has_vertex(const std::string& v) const { return vertices_.count(v) != 0; }
  bool has_hyperedge(const std::string& e) const { return hyperedges_.count(e) != 0; }
  bool contains(const std::string& id) const { return has_vertex(id) || has_hyperedge(id); }
  const Members& members(const std::string& e) const;

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t hyperedge_count() const { return hyperedges_.size(); }
  std::size_t incidence_count() const;

  /// deg(v) = number of hyperedges containing v.
  std::size_t degree(const std::string& v) const;
  /// Hyperedges containing v, sorted.
  std::vector<std::string> incident_hyperedges(const std::string& v) const;

  /// Throws ValidationError on the first violated invariant.
  void validate() const;

  // Mutation primitives used by the simplifier's working copy.
  void remove_incidence(const std::string& v, const std::string& e);
  void erase_vertex(const std::string& v);
  void erase_hyperedge(const std::string& e);
  void erase_label(const std::string& id) { labels_.erase(id); }
  /// Replaces vertices a and b by `merged` in every hyperedge.
  void merge_vertices(const std::string& a, const std::string& b, const std::string& merged);
  /// Replaces hyperedges e and f by `merged` = e | f.
  void merge_hyperedges(const std::string& e, const std::string& f, const std::string& merged);

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  std::set<std::string> vertices_;
  std::map<std::string, Members> hyperedges_;
  std::map<std::string, std::string> labels_;
};

/// Swaps the roles of vertices and hyperedges. Ids are kept unchanged, so
/// dualize(dualize(h)) == h. Throws ValidationError if h has a vertex that is
/// in no hyperedge (its dual hyperedge would be empty).
Hypergraph dualize(const Hypergraph& h);

}  // namespace hypersimp

#endif  // HYPERSIMP_HYPERGRAPH_HPP_
