#pragma once

// Standard continued fractions and the Moebius maps they induce.
//
// The standard expansion of a nonnegative rational is [a0, a1, ..., an] with
// a0 >= 0, middle terms >= 1 and the last term >= 2, except for the one-term
// forms [0] and [1]. Division-based expansion produces exactly this shape.
//
// eval() folds an arbitrary term sequence right to left with the extended
// conventions r/0 = inf, 1/inf treated as 0, inf + r = inf. That makes it
// total on nonstandard sequences too (trailing 0 or inf terms simply
// collapse), which is what the tree operations rely on.

#include <cassert>
#include <span>
#include <string>
#include <vector>

#include "lenscap/rational.hpp"

namespace lenscap {

struct ContFrac {
  std::vector<Int> terms;

  friend bool operator==(const ContFrac&, const ContFrac&) = default;

  std::string str() const {
    std::string out = "[";
    for (std::size_t i = 0; i < terms.size(); ++i) {
      if (i) out += ",";
      out += terms[i].str();
    }
    out += "]";
    return out;
  }
};

inline ContFrac std_expand(const ExtRational& x) {
  if (x.is_infinity()) throw InfinityInput("1/0 has no standard expansion");
  if (x.is_negative()) throw NegativeInput("negative fractions have no standard expansion");
  Int n = x.num();
  Int d = x.den();
  ContFrac out;
  for (;;) {
    out.terms.push_back(Int(n / d));
    Int r = n % d;
    if (r == 0) break;
    n = d;
    d = r;
  }
  assert(out.terms.size() == 1 || out.terms.back() >= 2);
  return out;
}

inline ExtRational ext_reciprocal(const ExtRational& x) {
  if (x.is_zero()) return ExtRational::infinity();
  if (x.is_infinity()) return ExtRational{};
  return ExtRational::reduce(x.den(), x.num());
}

inline ExtRational ext_add(const ExtRational& a, const ExtRational& b) {
  if (a.is_infinity() || b.is_infinity()) return ExtRational::infinity();
  return ExtRational::reduce(a.num() * b.den() + b.num() * a.den(), a.den() * b.den());
}

// Value of [t0, t1, ..., tk] = t0 + 1/(t1 + 1/(... + 1/tk)). Terms may be
// any extended rationals, not just integers.
inline ExtRational eval(std::span<const ExtRational> terms) {
  if (terms.empty()) throw DomainError("eval needs at least one term");
  ExtRational x = terms.back();
  for (std::size_t i = terms.size() - 1; i-- > 0;) {
    x = ext_add(terms[i], ext_reciprocal(x));
  }
  return x;
}

inline std::vector<ExtRational> to_terms(const ContFrac& cf) {
  std::vector<ExtRational> out;
  out.reserve(cf.terms.size());
  for (const Int& a : cf.terms) out.push_back(ExtRational::reduce(a, 1));
  return out;
}

inline ExtRational eval(const ContFrac& cf) {
  std::vector<ExtRational> t = to_terms(cf);
  return eval(std::span<const ExtRational>(t));
}

struct UniModMatrix {
  Int a11{1}, a12{0};
  Int a21{0}, a22{1};

  Int det() const { return a11 * a22 - a12 * a21; }

  static UniModMatrix identity() { return {}; }

  friend UniModMatrix operator*(const UniModMatrix& l, const UniModMatrix& r) {
    return UniModMatrix{Int(l.a11 * r.a11 + l.a12 * r.a21), Int(l.a11 * r.a12 + l.a12 * r.a22),
                        Int(l.a21 * r.a11 + l.a22 * r.a21), Int(l.a21 * r.a12 + l.a22 * r.a22)};
  }

  friend bool operator==(const UniModMatrix&, const UniModMatrix&) = default;
};

// Matrix of the map x -> value of [a_k, ..., a_1, x], built as the product
// of the one-term layers [[a_i, 1], [1, 0]] applied left to right. Its
// determinant is (-1)^k, so images of canonical fractions stay coprime.
inline UniModMatrix mobius_of(std::span<const Int> a) {
  UniModMatrix m;
  for (const Int& c : a) {
    m = UniModMatrix{c, 1, 1, 0} * m;
  }
  assert(abs(m.det()) == 1);
  return m;
}

inline UniModMatrix mobius_of(const std::vector<Int>& a) {
  return mobius_of(std::span<const Int>(a));
}

inline ExtRational apply_mobius(const UniModMatrix& m, const ExtRational& x) {
  assert(abs(m.det()) == 1);
  Int n = m.a11 * x.num() + m.a12 * x.den();
  Int d = m.a21 * x.num() + m.a22 * x.den();
  if (n == 0 && d == 0) throw IndeterminateForm{};
  return ExtRational::from_coprime(std::move(n), std::move(d));
}

}  // namespace lenscap
