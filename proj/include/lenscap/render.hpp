#pragma once

// Poincare disk pictures of the slope tree. The boundary circle carries
// R ∪ {∞} through t -> (2t/(1+t²), (1-t²)/(1+t²)), the boundary trace of
// the Cayley map z -> (z+i)/(iz+1), so 0 sits at the top of the disk, 1 on
// the right, ∞ at the bottom and negatives on the left. Edges are drawn as
// hyperbolic geodesics: circular arcs meeting the boundary at right angles,
// with center c = (u+v)/(1+u·v) and radius |c-u| for endpoints u, v (then
// |c|² = 1+r²), or a straight diameter when u, v are antipodal.

#include <charconv>
#include <cmath>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lenscap/rational.hpp"
#include "lenscap/tree.hpp"

namespace lenscap {

struct DiskPoint {
  double x = 0.0;
  double y = 0.0;
};

inline DiskPoint cayley(const ExtRational& v) {
  if (v.is_infinity()) return {0.0, -1.0};
  const Int& p = v.num();
  const Int& q = v.den();
  Int pp = p * p;
  Int qq = q * q;
  Int norm = pp + qq;
  ExtRational x = ExtRational::reduce(2 * p * q, norm);
  ExtRational y = ExtRational::reduce(qq - pp, norm);
  return {x.to_double(), y.to_double()};
}

struct Geodesic {
  DiskPoint a;
  DiskPoint b;
  bool is_diameter = false;
  double cx = 0.0;
  double cy = 0.0;
  double r = 0.0;
};

inline Geodesic geodesic_between(const DiskPoint& u, const DiskPoint& v) {
  Geodesic g;
  g.a = u;
  g.b = v;
  double denom = 1.0 + (u.x * v.x + u.y * v.y);
  if (std::abs(denom) < 1e-9) {
    g.is_diameter = true;
    return g;
  }
  g.cx = (u.x + v.x) / denom;
  g.cy = (u.y + v.y) / denom;
  g.r = std::hypot(g.cx - u.x, g.cy - u.y);
  return g;
}

struct RenderOptions {
  int children_per_vertex = 6;
  int label_depth = 3;       // hide labels past this generation
  bool farey = false;        // underlay the distance-1 edges
  std::optional<std::pair<Int, Int>> highlight;  // slope path target p, q
  int width_px = 800;
};

struct SceneVertex {
  ExtRational value;
  int gen = 0;
};

struct Scene {
  std::vector<SceneVertex> vertices;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // mother first
  std::vector<std::pair<ExtRational, ExtRational>> farey_edges;
  std::vector<std::size_t> path;  // highlight slopes, root first
};

namespace detail {

inline void farey_subdivide(std::vector<std::pair<ExtRational, ExtRational>>& out, const ExtRational& a,
                            const ExtRational& b, int depth) {
  ExtRational m = ExtRational::from_coprime(a.num() + b.num(), a.den() + b.den());
  out.emplace_back(a, m);
  out.emplace_back(m, b);
  if (depth > 1) {
    farey_subdivide(out, a, m, depth - 1);
    farey_subdivide(out, m, b, depth - 1);
  }
}

}  // namespace detail

inline Scene build_scene(int generations, const RenderOptions& opt) {
  if (generations < 0) throw DomainError("generations must be nonnegative");
  if (opt.children_per_vertex < 0) throw DomainError("children cap must be nonnegative");

  Scene s;
  std::map<ExtRational, std::size_t> index;
  auto add_vertex = [&](ExtRational v, int gen) {
    std::size_t i = s.vertices.size();
    index.emplace(v, i);
    s.vertices.push_back(SceneVertex{std::move(v), gen});
    return i;
  };

  add_vertex(ExtRational{}, 0);
  std::vector<std::size_t> frontier{0};
  for (int gen = 1; gen <= generations; ++gen) {
    std::vector<std::size_t> next;
    for (std::size_t vi : frontier) {
      ExtRational v = s.vertices[vi].value;
      std::vector<Int> ts =
          default_t_values(static_cast<std::size_t>(opt.children_per_vertex), v.is_zero());
      for (ExtRational& c : children(v, ts)) {
        std::size_t ci = add_vertex(std::move(c), gen);
        s.edges.emplace_back(vi, ci);
        next.push_back(ci);
      }
    }
    frontier = std::move(next);
  }

  // Mirror everything but the root through x -> -x.
  const std::size_t n_pos = s.vertices.size();
  const std::size_t e_pos = s.edges.size();
  for (std::size_t i = 1; i < n_pos; ++i) {
    add_vertex(-s.vertices[i].value, s.vertices[i].gen);
  }
  for (std::size_t e = 0; e < e_pos; ++e) {
    auto [a, b] = s.edges[e];
    s.edges.emplace_back(index.at(-s.vertices[a].value), index.at(-s.vertices[b].value));
  }

  if (opt.farey) {
    int depth = std::min(std::max(2 * generations + 3, 3), 10);
    ExtRational zero{};
    ExtRational inf = ExtRational::infinity();
    s.farey_edges.emplace_back(zero, inf);
    detail::farey_subdivide(s.farey_edges, zero, inf, depth);
    const std::size_t f_pos = s.farey_edges.size();
    for (std::size_t e = 1; e < f_pos; ++e) {
      s.farey_edges.emplace_back(-s.farey_edges[e].first, -s.farey_edges[e].second);
    }
  }

  if (opt.highlight) {
    PathResult pr;
    try {
      pr = slope_path(opt.highlight->first, opt.highlight->second);
    } catch (const DomainError& e) {
      throw BadHighlight(std::string("highlight target is not an even slope: ") + e.what());
    }
    for (const ExtRational& slope : pr.slopes) {
      auto it = index.find(slope);
      if (it == index.end()) {
        throw BadHighlight("highlight slope " + slope.str() +
                           " is not among the rendered vertices; raise the generation count or the "
                           "children cap");
      }
      s.path.push_back(it->second);
    }
  }
  return s;
}

namespace detail {

inline std::string fmt(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::fixed, 9);
  return std::string(buf, res.ptr);
}

// Path data for the geodesic between two boundary points, in SVG
// coordinates (y axis flipped).
inline std::string edge_path(const DiskPoint& u, const DiskPoint& v) {
  Geodesic g = geodesic_between(u, v);
  std::string d = "M " + fmt(u.x) + " " + fmt(-u.y);
  if (g.is_diameter) {
    d += " L " + fmt(v.x) + " " + fmt(-v.y);
    return d;
  }
  double a1 = std::atan2(-u.y + g.cy, u.x - g.cx);
  double a2 = std::atan2(-v.y + g.cy, v.x - g.cx);
  double delta = a2 - a1;
  const double pi = 3.14159265358979323846;
  while (delta > pi) delta -= 2 * pi;
  while (delta < -pi) delta += 2 * pi;
  d += " A " + fmt(g.r) + " " + fmt(g.r) + " 0 0 " + (delta > 0 ? "1" : "0") + " " + fmt(v.x) + " " +
       fmt(-v.y);
  return d;
}

}  // namespace detail

inline std::string render_svg(int generations, const RenderOptions& opt) {
  Scene s = build_scene(generations, opt);
  std::vector<DiskPoint> pts;
  pts.reserve(s.vertices.size());
  for (const SceneVertex& v : s.vertices) pts.push_back(cayley(v.value));

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(opt.width_px) +
         "\" height=\"" + std::to_string(opt.width_px) + "\" viewBox=\"-1.05 -1.05 2.1 2.1\">\n";
  svg += "<circle cx=\"0\" cy=\"0\" r=\"1\" fill=\"none\" stroke=\"#000000\" stroke-width=\"0.006\"/>\n";

  if (!s.farey_edges.empty()) {
    svg += "<g fill=\"none\" stroke=\"#c4c4c4\" stroke-width=\"0.0022\">\n";
    for (const auto& [a, b] : s.farey_edges) {
      svg += "<path d=\"" + detail::edge_path(cayley(a), cayley(b)) + "\"/>\n";
    }
    svg += "</g>\n";
  }

  svg += "<g fill=\"none\" stroke=\"#1a1a1a\" stroke-width=\"0.0045\">\n";
  for (const auto& [a, b] : s.edges) {
    svg += "<path d=\"" + detail::edge_path(pts[a], pts[b]) + "\"/>\n";
  }
  svg += "</g>\n";

  if (s.path.size() > 1) {
    svg += "<g fill=\"none\" stroke=\"#c62828\" stroke-width=\"0.009\">\n";
    for (std::size_t i = 0; i + 1 < s.path.size(); ++i) {
      svg += "<path d=\"" + detail::edge_path(pts[s.path[i]], pts[s.path[i + 1]]) + "\"/>\n";
    }
    svg += "</g>\n";
  }

  svg += "<g fill=\"#1a1a1a\">\n";
  for (const DiskPoint& p : pts) {
    svg += "<circle cx=\"" + detail::fmt(p.x) + "\" cy=\"" + detail::fmt(-p.y) + "\" r=\"0.011\"/>\n";
  }
  svg += "</g>\n";
  if (!s.path.empty()) {
    svg += "<g fill=\"#c62828\">\n";
    for (std::size_t i : s.path) {
      svg += "<circle cx=\"" + detail::fmt(pts[i].x) + "\" cy=\"" + detail::fmt(-pts[i].y) +
             "\" r=\"0.013\"/>\n";
    }
    svg += "</g>\n";
  }

  svg += "<g font-family=\"monospace\" text-anchor=\"middle\" fill=\"#1a1a1a\">\n";
  for (std::size_t i = 0; i < s.vertices.size(); ++i) {
    int gen = s.vertices[i].gen;
    if (gen > opt.label_depth) continue;
    double shrink = std::pow(0.7, gen);
    double rad = 0.90 - 0.01 * gen;
    svg += "<text x=\"" + detail::fmt(pts[i].x * rad) + "\" y=\"" + detail::fmt(-pts[i].y * rad) +
           "\" font-size=\"" + detail::fmt(0.062 * shrink) + "\" opacity=\"" +
           detail::fmt(std::max(0.35, 1.0 - 0.22 * gen)) + "\">" + s.vertices[i].value.str() +
           "</text>\n";
  }
  svg += "</g>\n";
  svg += "</svg>\n";
  return svg;
}

}  // namespace lenscap
