#include "hypersimp/layout.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include <fmt/format.h>
#include <json.hpp>

namespace hypersimp {

namespace {

// Uniform double in [0, 1) without going through a distribution object,
// whose output is not fixed across standard libraries.
double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::string num(double v) {
  if (std::abs(v) < 0.005) v = 0;  // no "-0.00"
  return fmt::format("{:.2f}", v);
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

constexpr std::array<const char*, 6> kRamp{"#8e44ad", "#3498db", "#2ecc71", "#f1c40f", "#e67e22", "#e74c3c"};

}  // namespace

Layout force_layout(const BipartiteGraph& g, std::uint64_t seed, std::size_t iterations) {
  Layout out;
  out.seed = seed;
  const std::size_t n = g.node_count();
  if (n == 0) return out;
  const double side = 100.0 * std::sqrt(static_cast<double>(n));
  const double k = side / std::sqrt(static_cast<double>(n));
  std::mt19937_64 rng(seed);
  std::vector<Point> pos(n), disp(n);
  if (n > 1) {
    for (auto& p : pos) {
      p.x = (unit(rng) - 0.5) * side;
      p.y = (unit(rng) - 0.5) * side;
    }
  }
  const auto& edges = g.graph().edges();
  double temp = side / 10;
  const double cool = iterations > 0 ? temp / static_cast<double>(iterations) : 0;
  for (std::size_t it = 0; it < iterations && n > 1; ++it) {
    std::fill(disp.begin(), disp.end(), Point{});
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        double dx = pos[i].x - pos[j].x, dy = pos[i].y - pos[j].y;
        double d = std::hypot(dx, dy);
        if (d < 1e-9) {
          // Coincident: push apart along a seeded direction.
          const double a = unit(rng) * 2 * std::numbers::pi;
          dx = std::cos(a) * 1e-3;
          dy = std::sin(a) * 1e-3;
          d = 1e-3;
        }
        const double f = k * k / d;
        disp[i].x += dx / d * f;
        disp[i].y += dy / d * f;
        disp[j].x -= dx / d * f;
        disp[j].y -= dy / d * f;
      }
    }
    for (const auto& e : edges) {
      const double dx = pos[e.a].x - pos[e.b].x, dy = pos[e.a].y - pos[e.b].y;
      const double d = std::hypot(dx, dy);
      if (d < 1e-9) continue;
      const double f = d * d / k;
      disp[e.a].x -= dx / d * f;
      disp[e.a].y -= dy / d * f;
      disp[e.b].x += dx / d * f;
      disp[e.b].y += dy / d * f;
    }
    for (std::size_t i = 0; i < n; ++i) {
      const double d = std::hypot(disp[i].x, disp[i].y);
      if (d > 0) {
        const double step = std::min(d, temp);
        pos[i].x += disp[i].x / d * step;
        pos[i].y += disp[i].y / d * step;
      }
      pos[i].x = std::clamp(pos[i].x, -side / 2, side / 2);
      pos[i].y = std::clamp(pos[i].y, -side / 2, side / 2);
    }
    temp = std::max(temp - cool, 0.0);
  }
  out.min = out.max = pos[0];
  for (std::size_t i = 0; i < n; ++i) {
    out.positions[g.id(static_cast<NodeId>(i))] = pos[i];
    out.min.x = std::min(out.min.x, pos[i].x);
    out.min.y = std::min(out.min.y, pos[i].y);
    out.max.x = std::max(out.max.x, pos[i].x);
    out.max.y = std::max(out.max.y, pos[i].y);
  }
  return out;
}

Layout force_layout(const Hypergraph& h, std::uint64_t seed, std::size_t iterations) {
  return force_layout(build_bipartite(h), seed, iterations);
}

std::string layout_to_json(const Layout& l) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [id, p] : l.positions) j[id] = {p.x, p.y};
  return j.dump(2) + "\n";
}

Layout layout_from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  if (!j.is_object()) throw std::runtime_error("layout JSON must be an object of id -> [x, y]");
  Layout l;
  bool first = true;
  for (const auto& [id, v] : j.items()) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
      throw RenderError(id, "position of '" + id + "' must be [x, y]");
    }
    Point p{v[0].get<double>(), v[1].get<double>()};
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) throw RenderError(id, "position of '" + id + "' is not finite");
    l.positions[id] = p;
    if (first) {
      l.min = l.max = p;
      first = false;
    }
    l.min = {std::min(l.min.x, p.x), std::min(l.min.y, p.y)};
    l.max = {std::max(l.max.x, p.x), std::max(l.max.y, p.y)};
  }
  return l;
}

std::string render_svg(const Hypergraph& h, const Layout& layout, const RenderSpec& spec,
                       std::span<const CutAnnotation> annotations) {
  auto at = [&](const std::string& id) -> const Point& {
    auto it = layout.positions.find(id);
    if (it == layout.positions.end()) throw RenderError(id, "no position for '" + id + "'");
    return it->second;
  };
  for (const auto& v : h.vertices()) at(v);

  // Map the vertex bounding box onto the canvas, keeping the aspect ratio.
  Point lo{0, 0}, hi{0, 0};
  bool first = true;
  for (const auto& v : h.vertices()) {
    const Point& p = at(v);
    if (first) {
      lo = hi = p;
      first = false;
    }
    lo = {std::min(lo.x, p.x), std::min(lo.y, p.y)};
    hi = {std::max(hi.x, p.x), std::max(hi.y, p.y)};
  }
  const double span_x = std::max(hi.x - lo.x, 1e-9), span_y = std::max(hi.y - lo.y, 1e-9);
  const double inner_w = spec.width - 2 * spec.margin, inner_h = spec.height - 2 * spec.margin;
  const double scale = std::min(inner_w / span_x, inner_h / span_y);
  const double off_x = spec.margin + (inner_w - span_x * scale) / 2;
  const double off_y = spec.margin + (inner_h - span_y * scale) / 2;
  auto screen = [&](const std::string& id) {
    const Point& p = at(id);
    if (hi.x - lo.x < 1e-9 && hi.y - lo.y < 1e-9) return Point{spec.width / 2, spec.height / 2};
    return Point{off_x + (p.x - lo.x) * scale, off_y + (p.y - lo.y) * scale};
  };
  auto centroid = [&](const Hypergraph::Members& m) {
    Point c;
    for (const auto& v : m) {
      Point p = screen(v);
      c.x += p.x;
      c.y += p.y;
    }
    c.x /= static_cast<double>(m.size());
    c.y /= static_cast<double>(m.size());
    return c;
  };
  auto fill_of = [&](const std::string& id, std::size_t card) {
    auto it = spec.fill.find(id);
    if (it != spec.fill.end()) return it->second;
    return std::string(kRamp[std::min<std::size_t>(card, kRamp.size()) - 1]);
  };
  const double unit_len = std::max(spec.vertex_radius * 3, 12.0);

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{}\" height=\"{}\" viewBox=\"0 0 {} {}\">\n",
      num(spec.width), num(spec.height), num(spec.width), num(spec.height));
  out += fmt::format("<rect class=\"background\" x=\"0\" y=\"0\" width=\"{}\" height=\"{}\" fill=\"#ffffff\"/>\n",
                     num(spec.width), num(spec.height));

  out += "<g class=\"hyperedges\">\n";
  for (const auto& [e, members] : h.hyperedges()) {
    const std::string style =
        fmt::format("fill=\"{}\" fill-opacity=\"{}\" stroke=\"{}\" stroke-width=\"{}\"", fill_of(e, members.size()),
                    num(spec.fill_opacity), spec.stroke, num(spec.stroke_width));
    if (members.size() >= 3) {
      const Point c = centroid(members);
      std::vector<std::pair<double, std::string>> around;
      for (const auto& v : members) {
        Point p = screen(v);
        around.emplace_back(std::atan2(p.y - c.y, p.x - c.x), v);
      }
      std::sort(around.begin(), around.end());
      std::string pts;
      for (const auto& [angle, v] : around) {
        Point p = screen(v);
        pts += (pts.empty() ? "" : " ") + num(p.x) + "," + num(p.y);
      }
      out += fmt::format("<polygon data-id=\"{}\" points=\"{}\" {}/>\n", escape(e), pts, style);
    } else if (members.size() == 2) {
      const Point a = screen(*members.begin()), b = screen(*members.rbegin());
      const double d = std::hypot(b.x - a.x, b.y - a.y);
      if (d < 1e-6) {
        out += fmt::format("<circle data-id=\"{}\" cx=\"{}\" cy=\"{}\" r=\"{}\" {}/>\n", escape(e), num(a.x), num(a.y),
                           num(unit_len / 2), style);
      } else {
        const double r = d * 0.75;
        out += fmt::format("<path data-id=\"{}\" d=\"M {} {} A {} {} 0 0 1 {} {} A {} {} 0 0 1 {} {} Z\" {}/>\n",
                           escape(e), num(a.x), num(a.y), num(r), num(r), num(b.x), num(b.y), num(r), num(r),
                           num(a.x), num(a.y), style);
      }
    } else {
      const Point p = screen(*members.begin());
      const double s = unit_len;
      out += fmt::format("<path data-id=\"{}\" class=\"monogon\" d=\"M {} {} Q {} {} {} {} Q {} {} {} {} Z\" {}/>\n",
                         escape(e), num(p.x), num(p.y), num(p.x - s), num(p.y - 1.6 * s), num(p.x), num(p.y - 1.6 * s),
                         num(p.x + s), num(p.y - 1.6 * s), num(p.x), num(p.y), style);
    }
  }
  out += "</g>\n";

  out += "<g class=\"annotations\">\n";
  for (const auto& a : annotations) {
    if (!h.has_hyperedge(a.hyperedge)) throw RenderError(a.hyperedge, "annotation names unknown hyperedge '" + a.hyperedge + "'");
    const Point p = screen(a.vertex);
    const Point c = centroid(h.members(a.hyperedge));
    out += fmt::format(
        "<line data-vertex=\"{}\" data-hyperedge=\"{}\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{}\" "
        "stroke-width=\"{}\" stroke-dasharray=\"6 4\"/>\n",
        escape(a.vertex), escape(a.hyperedge), num(p.x), num(p.y), num(c.x), num(c.y), spec.annotation_stroke,
        num(spec.stroke_width));
  }
  out += "</g>\n";

  out += "<g class=\"vertices\">\n";
  for (const auto& v : h.vertices()) {
    const Point p = screen(v);
    auto it = spec.fill.find(v);
    out += fmt::format("<circle data-id=\"{}\" cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"{}\"/>\n", escape(v), num(p.x),
                       num(p.y), num(spec.vertex_radius), it != spec.fill.end() ? it->second : spec.vertex_fill);
  }
  out += "</g>\n</svg>\n";
  return out;
}

std::vector<CutAnnotation> live_annotations(const Hypergraph& out, const OpLog& log) {
  // Original id -> id that holds it in the output.
  std::map<std::string, std::string> holder;
  for (const auto& [merged, members] : log.genealogy) {
    if (!out.contains(merged)) continue;
    for (const auto& m : members) holder[m] = merged;
  }
  auto live = [&](const std::string& id) -> std::optional<std::string> {
    if (out.contains(id)) return id;
    auto it = holder.find(id);
    if (it != holder.end()) return it->second;
    // An intermediate merge: any of its members leads to the final holder.
    auto g = log.genealogy.find(id);
    if (g != log.genealogy.end() && !g->second.empty()) {
      it = holder.find(g->second.front());
      if (it != holder.end()) return it->second;
    }
    return std::nullopt;
  };
  std::vector<CutAnnotation> kept;
  for (const auto& a : log.annotations) {
    auto v = live(a.vertex);
    auto e = live(a.hyperedge);
    if (!v || !e || !out.has_vertex(*v) || !out.has_hyperedge(*e)) continue;
    if (out.members(*e).count(*v) != 0) continue;
    CutAnnotation c{*v, *e};
    if (std::find(kept.begin(), kept.end(), c) == kept.end()) kept.push_back(c);
  }
  return kept;
}

}  // namespace hypersimp
