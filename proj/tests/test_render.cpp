#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <set>
#include <string>

#include "lenscap/render.hpp"

using lenscap::DiskPoint;
using lenscap::ExtRational;
using lenscap::Int;
using lenscap::RenderOptions;
using lenscap::Scene;

namespace {

ExtRational r(long long n, long long d) { return ExtRational::reduce(n, d); }

double dist(const DiskPoint& a, const DiskPoint& b) { return std::hypot(a.x - b.x, a.y - b.y); }

}  // namespace

TEST_CASE("boundary placement of the pinned points") {
  const double eps = 1e-12;
  DiskPoint p0 = lenscap::cayley(r(0, 1));
  CHECK(std::abs(p0.x - 0.0) < eps);
  CHECK(std::abs(p0.y - 1.0) < eps);

  DiskPoint p1 = lenscap::cayley(r(1, 1));
  CHECK(std::abs(p1.x - 1.0) < eps);
  CHECK(std::abs(p1.y - 0.0) < eps);

  DiskPoint pi = lenscap::cayley(ExtRational::infinity());
  CHECK(std::abs(pi.x - 0.0) < eps);
  CHECK(std::abs(pi.y + 1.0) < eps);

  DiskPoint pm = lenscap::cayley(r(-1, 1));
  CHECK(std::abs(pm.x + 1.0) < eps);
  CHECK(std::abs(pm.y - 0.0) < eps);

  DiskPoint p2 = lenscap::cayley(r(2, 1));
  CHECK(std::abs(p2.x - 0.8) < eps);
  CHECK(std::abs(p2.y + 0.6) < eps);

  DiskPoint ph = lenscap::cayley(r(1, 2));
  CHECK(std::abs(ph.x - 0.8) < eps);
  CHECK(std::abs(ph.y - 0.6) < eps);
}

TEST_CASE("boundary points sit on the unit circle, clockwise in t, mirrored in sign") {
  std::mt19937_64 rng(99991);
  std::uniform_int_distribution<long long> num(0, 5000);
  std::uniform_int_distribution<long long> den(1, 5000);
  for (int it = 0; it < 500; ++it) {
    ExtRational a = r(num(rng), den(rng));
    ExtRational b = r(num(rng), den(rng));
    DiskPoint pa = lenscap::cayley(a);
    CHECK(std::abs(pa.x * pa.x + pa.y * pa.y - 1.0) < 1e-12);

    DiskPoint pn = lenscap::cayley(-a);
    CHECK(std::abs(pn.x + pa.x) < 1e-12);
    CHECK(std::abs(pn.y - pa.y) < 1e-12);

    if (a == b) continue;
    if (b < a) std::swap(a, b);
    pa = lenscap::cayley(a);
    DiskPoint pb = lenscap::cayley(b);
    // larger values sit further clockwise on the right half circle
    CHECK(pa.x * pb.y - pa.y * pb.x < 0.0);
  }
}

TEST_CASE("geodesics meet the boundary at right angles") {
  SECTION("0/1 to 1/0 is a diameter") {
    lenscap::Geodesic g =
        lenscap::geodesic_between(lenscap::cayley(r(0, 1)), lenscap::cayley(ExtRational::infinity()));
    CHECK(g.is_diameter);
  }
  SECTION("0/1 to 2/1 is the arc about (2,1)") {
    lenscap::Geodesic g = lenscap::geodesic_between(lenscap::cayley(r(0, 1)), lenscap::cayley(r(2, 1)));
    REQUIRE_FALSE(g.is_diameter);
    CHECK(std::abs(g.cx - 2.0) < 1e-12);
    CHECK(std::abs(g.cy - 1.0) < 1e-12);
    CHECK(std::abs(g.r - 2.0) < 1e-12);
  }
  SECTION("orthogonality across random pairs") {
    std::mt19937_64 rng(55441);
    std::uniform_int_distribution<long long> num(-300, 300);
    std::uniform_int_distribution<long long> den(1, 300);
    for (int it = 0; it < 500; ++it) {
      ExtRational a = r(num(rng), den(rng));
      ExtRational b = r(num(rng), den(rng));
      if (a == b) continue;
      DiskPoint u = lenscap::cayley(a);
      DiskPoint v = lenscap::cayley(b);
      lenscap::Geodesic g = lenscap::geodesic_between(u, v);
      if (g.is_diameter) continue;
      INFO(a.str() << " to " << b.str());
      CHECK(std::abs(g.cx * g.cx + g.cy * g.cy - (1.0 + g.r * g.r)) < 1e-9);
      CHECK(std::abs(dist({g.cx, g.cy}, u) - g.r) < 1e-9);
      CHECK(std::abs(dist({g.cx, g.cy}, v) - g.r) < 1e-9);
    }
  }
}

TEST_CASE("scene for one generation with three children per vertex") {
  RenderOptions opt;
  opt.children_per_vertex = 3;
  Scene s = lenscap::build_scene(1, opt);
  REQUIRE(s.vertices.size() == 7);
  REQUIRE(s.edges.size() == 6);

  std::set<std::string> values;
  for (const auto& v : s.vertices) values.insert(v.value.str());
  std::set<std::string> expect{"0/1", "2/1", "2/3", "2/5", "-2/1", "-2/3", "-2/5"};
  CHECK(values == expect);
  CHECK(s.vertices[0].value == r(0, 1));
  CHECK(s.vertices[0].gen == 0);
}

TEST_CASE("scene edges are tree edges and the mirror is complete") {
  RenderOptions opt;
  Scene s = lenscap::build_scene(2, opt);
  std::set<std::string> values;
  for (const auto& v : s.vertices) values.insert(v.value.str());
  for (const auto& v : s.vertices) {
    CHECK(lenscap::is_vertex(v.value));
    CHECK(values.count((-v.value).str()) == 1);
  }
  for (auto [a, b] : s.edges) {
    INFO(s.vertices[a].value.str() << " -- " << s.vertices[b].value.str());
    CHECK(lenscap::is_edge(s.vertices[a].value, s.vertices[b].value));
    CHECK(s.vertices[b].gen == s.vertices[a].gen + 1);
  }
  // full generations: 1 + 6 + 36, then everything but the root mirrored
  CHECK(s.vertices.size() == 2 * (1 + 6 + 36) - 1);
  CHECK(s.edges.size() == s.vertices.size() - 1);
}

TEST_CASE("farey underlay holds distance-1 pairs only") {
  RenderOptions opt;
  opt.farey = true;
  Scene s = lenscap::build_scene(1, opt);
  REQUIRE(!s.farey_edges.empty());
  for (const auto& [a, b] : s.farey_edges) {
    INFO(a.str() << " -- " << b.str());
    CHECK(lenscap::distance(a, b) == 1);
  }
}

TEST_CASE("highlight paths") {
  RenderOptions opt;
  opt.highlight = std::make_pair(Int(8), Int(3));
  Scene s = lenscap::build_scene(2, opt);
  REQUIRE(s.path.size() == 3);
  CHECK(s.vertices[s.path[0]].value == r(0, 1));
  CHECK(s.vertices[s.path[1]].value == r(2, 1));
  CHECK(s.vertices[s.path[2]].value == r(8, 3));

  SECTION("negative targets use the mirrored half") {
    RenderOptions o2;
    o2.highlight = std::make_pair(Int(8), Int(-3));
    Scene s2 = lenscap::build_scene(2, o2);
    REQUIRE(s2.path.size() == 3);
    CHECK(s2.vertices[s2.path[2]].value == r(-8, 3));
  }
  SECTION("odd targets are rejected") {
    RenderOptions o3;
    o3.highlight = std::make_pair(Int(7), Int(2));
    CHECK_THROWS_AS(lenscap::build_scene(2, o3), lenscap::BadHighlight);
  }
  SECTION("targets beyond the drawn generations are rejected") {
    RenderOptions o4;
    o4.highlight = std::make_pair(Int(10), Int(3));
    CHECK_THROWS_AS(lenscap::build_scene(2, o4), lenscap::BadHighlight);
    Scene s3 = lenscap::build_scene(3, o4);  // 10/3 sits at generation 3
    CHECK(s3.path.size() == 4);
  }
}

TEST_CASE("svg output shape and determinism") {
  RenderOptions opt;
  opt.farey = true;
  opt.highlight = std::make_pair(Int(8), Int(3));
  std::string svg = lenscap::render_svg(2, opt);
  CHECK(svg.rfind("<?xml version=\"1.0\" encoding=\"UTF-8\"?>", 0) == 0);
  CHECK(svg.find("viewBox=\"-1.05 -1.05 2.1 2.1\"") != std::string::npos);
  CHECK(svg.find("<circle cx=\"0\" cy=\"0\" r=\"1\"") != std::string::npos);
  CHECK(svg.find(">8/3<") != std::string::npos);
  CHECK(svg.find(">-8/3<") != std::string::npos);
  CHECK(svg.substr(svg.size() - 7) == "</svg>\n");

  CHECK(lenscap::render_svg(2, opt) == svg);

  RenderOptions bare;
  std::string plain = lenscap::render_svg(0, bare);
  CHECK(plain.find("0/1") != std::string::npos);
}

TEST_CASE("scene rejects bad settings") {
  RenderOptions opt;
  CHECK_THROWS_AS(lenscap::build_scene(-1, opt), lenscap::DomainError);
  RenderOptions few;
  few.children_per_vertex = 0;
  few.highlight = std::make_pair(Int(2), Int(1));
  CHECK_THROWS_AS(lenscap::build_scene(2, few), lenscap::BadHighlight);
}
