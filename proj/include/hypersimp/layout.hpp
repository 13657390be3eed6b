#ifndef HYPERSIMP_LAYOUT_HPP_
#define HYPERSIMP_LAYOUT_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>

#include "hypersimp/bipartite.hpp"
#include "hypersimp/hypergraph.hpp"
#include "hypersimp/simplify.hpp"

namespace hypersimp {

struct Point {
  double x = 0;
  double y = 0;
  friend bool operator==(const Point&, const Point&) = default;
};

struct Layout {
  std::map<std::string, Point> positions;
  Point min;
  Point max;
  std::uint64_t seed = 42;
};

/// Fruchterman-Reingold spring-electrical layout of the bipartite graph:
/// repulsion k^2/d between all pairs, attraction d^2/k along edges, linear
/// cooling. Deterministic for a given graph, seed and iteration count.
Layout force_layout(const BipartiteGraph& g, std::uint64_t seed = 42, std::size_t iterations = 300);
Layout force_layout(const Hypergraph& h, std::uint64_t seed = 42, std::size_t iterations = 300);

/// {"id": [x, y], ...}
std::string layout_to_json(const Layout& l);
Layout layout_from_json(const std::string& text);

class RenderError : public std::runtime_error {
 public:
  RenderError(std::string id, const std::string& what) : std::runtime_error(what), id_(std::move(id)) {}
  const std::string& id() const noexcept { return id_; }

 private:
  std::string id_;
};

struct RenderSpec {
  double width = 800;
  double height = 800;
  double margin = 40;
  double vertex_radius = 5;
  double stroke_width = 1.5;
  double fill_opacity = 0.35;
  std::string stroke = "#333333";
  std::string vertex_fill = "#222222";
  std::string annotation_stroke = "#c0392b";
  /// Per-id fill; anything missing falls back to the cardinality ramp.
  std::map<std::string, std::string> fill;
};

/// Polygon rendering: card >= 3 hyperedges as polygons through their
/// vertices in angular order about the centroid, card 2 as lenses, card 1 as
/// teardrops, vertices as dots, and one dashed segment per annotation from
/// the vertex to the hyperedge centroid. Throws RenderError naming the first
/// element without a position.
std::string render_svg(const Hypergraph& h, const Layout& layout, const RenderSpec& spec = {},
                       std::span<const CutAnnotation> annotations = {});

/// Cut annotations rewritten to the ids that hold them in `out` (following
/// merges); annotations whose ends no longer exist are dropped.
std::vector<CutAnnotation> live_annotations(const Hypergraph& out, const OpLog& log);

}  // namespace hypersimp

#endif  // HYPERSIMP_LAYOUT_HPP_
