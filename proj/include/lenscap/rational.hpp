#pragma once

// Exact arithmetic on the extended rationals Q ∪ {∞}.
//
// Every value is kept in canonical form: numerator and denominator coprime,
// denominator nonnegative, and the single point at infinity stored as 1/0
// (so -1/0 and 1/0 are the same value). The distance between two canonical
// fractions p/q and r/s is |ps - rq|; the vertices and edges of the slope
// graphs used elsewhere in the library are all phrased in terms of it.

#include <boost/multiprecision/cpp_int.hpp>

#include <cassert>
#include <compare>
#include <limits>
#include <string>
#include <string_view>
#include <utility>

#include "lenscap/errors.hpp"

namespace lenscap {

using Int = boost::multiprecision::cpp_int;

class ExtRational {
 public:
  ExtRational() = default;  // 0/1

  // Canonical form of n/d. Throws ZeroOverZero when n = d = 0.
  static ExtRational reduce(Int n, Int d) {
    if (n == 0 && d == 0) throw ZeroOverZero{};
    if (d == 0) return ExtRational(1, 0);
    if (d < 0) {
      n = -n;
      d = -d;
    }
    Int an = abs(n);
    Int g = gcd(an, d);
    return ExtRational(Int(n / g), Int(d / g));
  }

  // For values already known to be coprime (images under unimodular maps).
  // Performs only the sign and infinity normalization; coprimality is
  // asserted, not repaired.
  static ExtRational from_coprime(Int n, Int d) {
    if (n == 0 && d == 0) throw ZeroOverZero{};
    if (d == 0) {
      assert(abs(n) == 1);
      return ExtRational(1, 0);
    }
    if (d < 0) {
      n = -n;
      d = -d;
    }
    assert(gcd(abs(n), d) == 1);
    return ExtRational(std::move(n), std::move(d));
  }

  static ExtRational infinity() { return ExtRational(1, 0); }

  // Accepts "p/q" or a bare integer "p". "1/0" parses to infinity.
  static ExtRational from_string(std::string_view s);

  const Int& num() const { return num_; }
  const Int& den() const { return den_; }

  bool is_infinity() const { return den_ == 0; }
  bool is_zero() const { return num_ == 0 && den_ != 0; }
  bool is_negative() const { return num_ < 0; }
  bool is_integer() const { return den_ == 1; }

  ExtRational operator-() const { return reduce(-num_, den_); }

  friend bool operator==(const ExtRational& a, const ExtRational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  // Total order on Q ∪ {∞} with ∞ as the maximum.
  friend std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b) {
    if (a.is_infinity() || b.is_infinity()) {
      if (a.is_infinity() && b.is_infinity()) return std::strong_ordering::equal;
      return a.is_infinity() ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    Int lhs = a.num_ * b.den_;
    Int rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  // Always "num/den", including "2/1", "0/1" and "1/0".
  std::string str() const { return num_.str() + "/" + den_.str(); }

  double to_double() const {
    if (is_infinity()) return std::numeric_limits<double>::infinity();
    boost::multiprecision::cpp_rational r(num_, den_);
    return r.convert_to<double>();
  }

 private:
  ExtRational(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) {}

  Int num_{0};
  Int den_{1};
};

inline ExtRational ExtRational::from_string(std::string_view s) {
  try {
    auto slash = s.find('/');
    if (s.empty() || slash == 0 || slash == s.size() - 1) {
      throw DomainError("cannot parse \"" + std::string(s) + "\" as a fraction");
    }
    if (slash == std::string_view::npos) return reduce(Int(std::string(s)), 1);
    Int n{std::string(s.substr(0, slash))};
    Int d{std::string(s.substr(slash + 1))};
    return reduce(std::move(n), std::move(d));
  } catch (const DomainError&) {
    throw;
  } catch (const std::runtime_error&) {
    throw DomainError("cannot parse \"" + std::string(s) + "\" as a fraction");
  }
}

// |ps - rq| for canonical a = p/q, b = r/s. Distance 1 pairs are the edges
// of the Farey graph, distance 2 pairs the edges of the even-vertex tree.
inline Int distance(const ExtRational& a, const ExtRational& b) {
  Int d = a.num() * b.den() - b.num() * a.den();
  return abs(d);
}

// size(p/q) = p + q for nonnegative fractions; size(1/0) = 1.
inline Int size(const ExtRational& x) {
  if (x.is_negative()) throw NegativeInput("size is defined for nonnegative fractions only");
  return x.num() + x.den();
}

struct LensParams {
  Int p;
  Int q;             // as given by the caller
  Int q_normalized;  // folded into [1, p/2]
};

// Validates (p, q) as lens space parameters and folds q into [1, p/2]:
// q' = min(q mod p, p - (q mod p)). L(p,q) and L(p, q') are homeomorphic,
// so every formula downstream works with q' only.
inline LensParams normalize_lens(const Int& p, const Int& q) {
  if (p % 2 != 0) throw OddP{};
  if (p < 2) throw DomainError("p must be at least 2");
  Int r = q % p;
  if (r < 0) r += p;
  if (r == 0) throw QZeroModP{};
  Int aq = abs(q);
  if (gcd(p, aq) != 1) throw NotCoprime{};
  Int pr = p - r;
  Int folded = r < pr ? r : pr;
  return LensParams{p, q, folded};
}

}  // namespace lenscap
