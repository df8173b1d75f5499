#pragma once

// Brute-force ground truth for the tree code. The ball graph enumerates
// every vertex of size at most N and finds the edges by testing all vertex
// pairs with a plain 2x2 determinant, so none of the continued fraction
// machinery is involved in building it. verify_tree then replays the
// library's answers (mother, generation, both crosscap formulas) against
// BFS on that graph and reports the first disagreement, if any.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "lenscap/formulas.hpp"
#include "lenscap/tree.hpp"

namespace lenscap {

struct BallGraph {
  std::int64_t size_bound = 0;
  std::vector<ExtRational> vertices;  // ordered by (numerator, denominator)
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;  // index pairs, first < second
};

inline BallGraph build_ball(std::int64_t size_bound) {
  if (size_bound < 1) throw DomainError("size bound must be at least 1");
  if (size_bound > 2000000) throw DomainError("size bound too large for the pairwise scan");

  std::vector<std::pair<std::int32_t, std::int32_t>> vs;
  for (std::int64_t p = 0; p <= size_bound; p += 2) {
    for (std::int64_t q = 1; p + q <= size_bound; ++q) {
      if (std::gcd(p, q) == 1) vs.emplace_back(static_cast<std::int32_t>(p), static_cast<std::int32_t>(q));
    }
  }

  const std::size_t n = vs.size();
  unsigned hw = std::thread::hardware_concurrency();
  std::size_t nthreads = std::min<std::size_t>(std::max(1u, hw), 8);
  if (n < 2048) nthreads = 1;

  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> found(nthreads);
  auto scan_rows = [&](std::size_t tid) {
    auto& local = found[tid];
    for (std::size_t i = tid; i < n; i += nthreads) {
      const std::int64_t pi = vs[i].first;
      const std::int64_t qi = vs[i].second;
      for (std::size_t j = i + 1; j < n; ++j) {
        std::int64_t d = pi * vs[j].second - static_cast<std::int64_t>(vs[j].first) * qi;
        if (d == 2 || d == -2) {
          local.emplace_back(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j));
        }
      }
    }
  };
  if (nthreads == 1) {
    scan_rows(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (std::size_t t = 0; t < nthreads; ++t) pool.emplace_back(scan_rows, t);
    for (auto& th : pool) th.join();
  }

  BallGraph g;
  g.size_bound = size_bound;
  g.vertices.reserve(n);
  for (const auto& [p, q] : vs) g.vertices.push_back(ExtRational::reduce(p, q));
  std::size_t total = 0;
  for (const auto& f : found) total += f.size();
  g.edges.reserve(total);
  for (const auto& f : found) g.edges.insert(g.edges.end(), f.begin(), f.end());
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

struct Counterexample {
  std::string check;
  std::string detail;
};

// Shared by verify_tree and verify_formulas. For verify_formulas the graph
// shaped fields read: vertex_count = number of (p,q) cases, edge_count = 0,
// the three structural booleans are vacuously true and agreement lands in
// depth_matches_formulas.
struct VerifyReport {
  std::int64_t vertex_count = 0;
  std::int64_t edge_count = 0;
  bool connected = false;
  bool acyclic = false;
  bool parent_matches_mother = false;
  bool depth_matches_formulas = false;
  std::optional<Counterexample> first_counterexample;

  bool all_passed() const {
    return connected && acyclic && parent_matches_mother && depth_matches_formulas;
  }
};

inline VerifyReport verify_tree(std::int64_t size_bound) {
  BallGraph g = build_ball(size_bound);
  const std::size_t n = g.vertices.size();

  VerifyReport r;
  r.vertex_count = static_cast<std::int64_t>(n);
  r.edge_count = static_cast<std::int64_t>(g.edges.size());

  auto note = [&](const std::string& check, const std::string& detail) {
    if (!r.first_counterexample) r.first_counterexample = Counterexample{check, detail};
  };

  std::vector<std::vector<std::uint32_t>> adj(n);
  for (const auto& [i, j] : g.edges) {
    adj[i].push_back(j);
    adj[j].push_back(i);
  }

  // BFS from 0/1, which is vertex 0 by enumeration order.
  std::vector<std::int64_t> depth(n, -1);
  std::vector<std::uint32_t> parent(n, 0);
  std::vector<std::uint32_t> queue;
  queue.reserve(n);
  bool back_edge = false;
  depth[0] = 0;
  queue.push_back(0);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    std::uint32_t v = queue[head];
    for (std::uint32_t w : adj[v]) {
      if (depth[w] == -1) {
        depth[w] = depth[v] + 1;
        parent[w] = v;
        queue.push_back(w);
      } else if (w != parent[v]) {
        back_edge = true;
      }
    }
  }

  r.connected = queue.size() == n;
  if (!r.connected) {
    for (std::size_t v = 0; v < n; ++v) {
      if (depth[v] == -1) {
        note("connected", "vertex " + g.vertices[v].str() + " is not reachable from 0/1");
        break;
      }
    }
  }

  r.acyclic = !back_edge && g.edges.size() + 1 == n;
  if (back_edge) {
    note("acyclic", "the distance-2 graph contains a cycle");
  } else if (g.edges.size() + 1 != n) {
    note("acyclic", "edge count " + std::to_string(g.edges.size()) + " differs from vertex count minus one");
  }

  r.parent_matches_mother = true;
  for (std::size_t v = 1; v < n && r.parent_matches_mother; ++v) {
    Int sv = size(g.vertices[v]);
    std::size_t smaller = 0;
    std::size_t who = 0;
    for (std::uint32_t w : adj[v]) {
      if (size(g.vertices[w]) < sv) {
        ++smaller;
        who = w;
      }
    }
    if (smaller != 1) {
      r.parent_matches_mother = false;
      note("parent_matches_mother",
           "vertex " + g.vertices[v].str() + " has " + std::to_string(smaller) + " smaller neighbors");
      break;
    }
    ExtRational m = mother(g.vertices[v]);
    if (!(m == g.vertices[who])) {
      r.parent_matches_mother = false;
      note("parent_matches_mother", "vertex " + g.vertices[v].str() + ": smaller neighbor " +
                                        g.vertices[who].str() + " but mother() gives " + m.str());
      break;
    }
  }

  r.depth_matches_formulas = r.connected;
  for (std::size_t v = 1; v < n && r.depth_matches_formulas; ++v) {
    const ExtRational& x = g.vertices[v];
    Int d = depth[v];
    Int gen = generation(x);
    if (gen != d) {
      r.depth_matches_formulas = false;
      note("depth_matches_formulas",
           "vertex " + x.str() + ": BFS depth " + d.str() + " but generation " + gen.str());
      break;
    }
    LensParams lens = normalize_lens(x.num(), x.den());
    Int bw = crosscap_bw(lens).total;
    Int nw = crosscap_new(lens).total;
    if (bw != d || nw != d) {
      r.depth_matches_formulas = false;
      note("depth_matches_formulas", "vertex " + x.str() + ": BFS depth " + d.str() +
                                         " but formulas give " + bw.str() + " and " + nw.str());
      break;
    }
  }
  return r;
}

// Agreement of both formulas and the slope path length on every lens space
// L(p,q) with even p <= p_max, including the mirrored parameter p - q.
inline VerifyReport verify_formulas(std::int64_t p_max) {
  if (p_max < 2) throw DomainError("p_max must be at least 2");
  VerifyReport r;
  r.connected = r.acyclic = r.parent_matches_mother = true;
  r.depth_matches_formulas = true;
  for (std::int64_t p = 2; p <= p_max; p += 2) {
    for (std::int64_t q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      ++r.vertex_count;
      LensParams lens = normalize_lens(p, q);
      Int bw = crosscap_bw(lens).total;
      Int nw = crosscap_new(lens).total;
      Int path = slope_path(p, q).crosscap;
      Int mirrored = slope_path(p, p - q).crosscap;
      if (bw != nw || bw != path || path != mirrored) {
        r.depth_matches_formulas = false;
        if (!r.first_counterexample) {
          r.first_counterexample = Counterexample{
              "formulas_agree", "L(" + std::to_string(p) + "," + std::to_string(q) + "): bw " + bw.str() +
                                    ", tail rule " + nw.str() + ", path " + path.str() + ", mirrored path " +
                                    mirrored.str()};
        }
        return r;
      }
    }
  }
  return r;
}

}  // namespace lenscap
