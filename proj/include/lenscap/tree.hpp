#pragma once

// Navigation of the tree whose vertices are the irreducible fractions with
// even numerator (infinity excluded) and whose edges join fractions at
// determinant distance 2. The tree is rooted at 0/1; every other vertex has
// a unique neighbor of smaller size, its mother, obtained by lowering the
// last expansion term by 2. Negative vertices are handled through the
// order-reversing reflection x -> -x, which preserves distances.

#include <cassert>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "lenscap/contfrac.hpp"
#include "lenscap/formulas.hpp"
#include "lenscap/rational.hpp"

namespace lenscap {

inline bool is_vertex(const ExtRational& x) {
  return !x.is_infinity() && x.num() % 2 == 0;
}

namespace detail {

// Terms of cf with the last entry replaced by an arbitrary extended rational.
inline std::vector<ExtRational> with_tail(const ContFrac& cf, ExtRational tail) {
  std::vector<ExtRational> terms = to_terms(cf);
  terms.back() = std::move(tail);
  return terms;
}

}  // namespace detail

inline ExtRational mother(const ExtRational& x) {
  if (!is_vertex(x)) throw NotAVertex{};
  if (x.is_zero()) throw RootHasNoMother{};
  if (x.is_negative()) return -mother(-x);
  ContFrac cf = std_expand(x);
  std::vector<ExtRational> terms = detail::with_tail(cf, ExtRational::reduce(cf.terms.back() - 2, 1));
  ExtRational m = eval(std::span<const ExtRational>(terms));
  assert(distance(x, m) == 2);
  assert(m.num() % 2 == 0);
  assert(size(m) < size(x));
  return m;
}

// Valid child parameters are odd integers other than -1; from the root only
// positive ones keep the child on the nonnegative side.
inline std::vector<Int> default_t_values(std::size_t count, bool positive_only = false) {
  std::vector<Int> ts;
  ts.reserve(count);
  Int mag = 1;
  while (ts.size() < count) {
    if (positive_only) {
      ts.push_back(mag);
    } else {
      if (mag == 1) {
        ts.push_back(1);
      } else {
        ts.push_back(-mag);
        if (ts.size() < count) ts.push_back(mag);
      }
    }
    mag += 2;
  }
  return ts;
}

inline std::vector<ExtRational> children(const ExtRational& x, std::span<const Int> ts) {
  if (!is_vertex(x)) throw NotAVertex{};
  if (x.is_negative()) throw NegativeInput("children are enumerated on the nonnegative side only");
  for (const Int& t : ts) {
    if (t % 2 == 0) throw BadT("child parameter t must be odd, got " + t.str());
    if (t == -1) throw BadT("child parameter t = -1 does not give a child");
    if (x.is_zero() && t < 0) throw BadT("children of 0/1 need t >= 1, got " + t.str());
  }
  std::vector<ExtRational> out;
  out.reserve(ts.size());
  if (x.is_zero()) {
    for (const Int& t : ts) out.push_back(ExtRational::reduce(2, t));
    return out;
  }
  ContFrac cf = std_expand(x);
  for (const Int& t : ts) {
    // last term an becomes an + 2/t = (an t + 2) / t
    ExtRational tail = ExtRational::reduce(cf.terms.back() * t + 2, t);
    std::vector<ExtRational> terms = detail::with_tail(cf, std::move(tail));
    ExtRational c = eval(std::span<const ExtRational>(terms));
    assert(distance(x, c) == 2);
    assert(c.num() % 2 == 0);
    out.push_back(std::move(c));
  }
  return out;
}

inline std::vector<ExtRational> children(const ExtRational& x, const std::vector<Int>& ts) {
  return children(x, std::span<const Int>(ts));
}

// Steps from x down to the root 0/1.
// Walks toward the root one mother at a time; results beyond this many steps
// would be too large to materialize as paths, so the walk refuses instead of
// exhausting memory. The closed formulas stay exact at any magnitude.
constexpr std::int64_t kMaxWalkSteps = 100000;

inline Int generation(ExtRational x) {
  if (!is_vertex(x)) throw NotAVertex{};
  if (x.is_negative()) throw NegativeInput("generation is defined on the nonnegative side");
  Int g = 0;
  while (!x.is_zero()) {
    if (g == kMaxWalkSteps) {
      throw PathTooLong("more than 100000 steps from the root; use the crosscap formulas instead");
    }
    x = mother(x);
    ++g;
  }
  return g;
}

// Open interval containing x and all of its descendants and nothing else
// from the subtree picture: one endpoint lowers the last expansion term by
// one, the other sends it to infinity. Which endpoint is the smaller one
// alternates with the expansion length, so they are stored sorted.
struct Territory {
  ExtRational lo;
  ExtRational hi;

  bool contains(const ExtRational& y) const { return lo < y && y < hi; }
};

inline Territory territory(const ExtRational& x) {
  if (!is_vertex(x)) throw NotAVertex{};
  if (x.is_zero() || x.is_negative()) throw NonPositive("territory is defined for positive vertices only");
  ContFrac cf = std_expand(x);
  std::vector<ExtRational> low_terms = detail::with_tail(cf, ExtRational::reduce(cf.terms.back() - 1, 1));
  std::vector<ExtRational> inf_terms = detail::with_tail(cf, ExtRational::infinity());
  ExtRational a = eval(std::span<const ExtRational>(low_terms));
  ExtRational b = eval(std::span<const ExtRational>(inf_terms));
  Territory t = a < b ? Territory{std::move(a), std::move(b)} : Territory{std::move(b), std::move(a)};
  assert(t.contains(x));
  return t;
}

struct PathResult {
  std::vector<ExtRational> slopes;     // 0/1 = r0, r1, ..., rk = p/q
  std::vector<ContFrac> expansions;    // expansion of |ri| for each slope
  Int crosscap;                        // k
  Int euler_char;                      // 2 - k
};

// Chain of band-sum slopes realizing Cr(p,q): one-sided curves are pushed
// together one crosscap at a time, so the chain from 0/1 to the target
// slope p/q steps through the mothers of p/q in order. q may be negative
// or exceed p; the path targets the literal fraction p/q.
inline PathResult slope_path(const Int& p, const Int& q) {
  if (p % 2 != 0) throw OddP{};
  if (p < 2) throw DomainError("p must be at least 2");
  Int aq = abs(q);
  if (gcd(p, aq) != 1) throw NotCoprime{};
  ExtRational x = ExtRational::reduce(p, q);
  std::vector<ExtRational> rev;
  rev.push_back(std::move(x));
  while (!rev.back().is_zero()) {
    if (static_cast<std::int64_t>(rev.size()) > kMaxWalkSteps) {
      throw PathTooLong(
          "the slope path has more than 100000 edges; the crosscap itself is still exact via the "
          "bw or new formula");
    }
    rev.push_back(mother(rev.back()));
  }
  PathResult out;
  out.slopes.assign(rev.rbegin(), rev.rend());
  out.expansions.reserve(out.slopes.size());
  for (const ExtRational& s : out.slopes) {
    out.expansions.push_back(std_expand(s.is_negative() ? -s : s));
  }
  out.crosscap = Int(out.slopes.size() - 1);
  out.euler_char = 2 - out.crosscap;
  return out;
}

inline bool is_edge(const ExtRational& a, const ExtRational& b) {
  if (!is_vertex(a) || !is_vertex(b)) throw NotAVertex{};
  return distance(a, b) == 2;
}

}  // namespace lenscap
