#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "lenscap/rational.hpp"

using lenscap::ExtRational;
using lenscap::Int;
using lenscap::LensParams;

namespace {

// Independent extended gcd, used to manufacture distance-2 partners without
// going through any library code.
void egcd(const Int& a, const Int& b, Int& g, Int& u, Int& v) {
  if (b == 0) {
    g = a;
    u = 1;
    v = 0;
    return;
  }
  Int g1, u1, v1;
  egcd(b, Int(a % b), g1, u1, v1);
  g = g1;
  u = v1;
  v = u1 - Int(a / b) * v1;
}

ExtRational rand_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long long> num(-1000000, 1000000);
  std::uniform_int_distribution<long long> den(1, 1000000);
  return ExtRational::reduce(num(rng), den(rng));
}

}  // namespace

TEST_CASE("reduce produces canonical fractions") {
  CHECK(ExtRational::reduce(4, 6).str() == "2/3");
  CHECK(ExtRational::reduce(-2, -4).str() == "1/2");
  CHECK(ExtRational::reduce(3, -6).str() == "-1/2");
  CHECK(ExtRational::reduce(0, 5).str() == "0/1");
  CHECK(ExtRational::reduce(0, -5).str() == "0/1");
  CHECK(ExtRational::reduce(7, 1).str() == "7/1");

  SECTION("the two signed infinities are identified") {
    CHECK(ExtRational::reduce(-1, 0).str() == "1/0");
    CHECK(ExtRational::reduce(5, 0).str() == "1/0");
    CHECK(ExtRational::reduce(-1, 0) == ExtRational::infinity());
  }

  SECTION("0/0 is rejected") {
    CHECK_THROWS_AS(ExtRational::reduce(0, 0), lenscap::ZeroOverZero);
  }
}

TEST_CASE("from_coprime normalizes signs without reducing") {
  CHECK(ExtRational::from_coprime(3, -2).str() == "-3/2");
  CHECK(ExtRational::from_coprime(-1, 0).str() == "1/0");
  CHECK_THROWS_AS(ExtRational::from_coprime(0, 0), lenscap::ZeroOverZero);
}

TEST_CASE("string round trips") {
  for (const char* s : {"0/1", "1/0", "2/1", "-8/3", "17/5"}) {
    CHECK(ExtRational::from_string(s).str() == s);
  }
  CHECK(ExtRational::from_string("17").str() == "17/1");
  CHECK(ExtRational::from_string("4/6").str() == "2/3");
  CHECK_THROWS_AS(ExtRational::from_string("a/b"), lenscap::DomainError);
  CHECK_THROWS_AS(ExtRational::from_string(""), lenscap::DomainError);
  CHECK_THROWS_AS(ExtRational::from_string("0/0"), lenscap::ZeroOverZero);
}

TEST_CASE("ordering is the numeric order with infinity maximal") {
  ExtRational inf = ExtRational::infinity();
  ExtRational vals[] = {ExtRational::reduce(-3, 1), ExtRational::reduce(-1, 2), ExtRational{},
                        ExtRational::reduce(1, 3), ExtRational::reduce(1, 2),
                        ExtRational::reduce(2, 1), inf};
  for (std::size_t i = 0; i < std::size(vals); ++i) {
    for (std::size_t j = 0; j < std::size(vals); ++j) {
      CHECK((vals[i] < vals[j]) == (i < j));
      CHECK((vals[i] == vals[j]) == (i == j));
    }
  }
  CHECK(inf == inf);

  SECTION("agrees with an independent rational comparison") {
    std::mt19937_64 rng(7151);
    for (int it = 0; it < 500; ++it) {
      ExtRational a = rand_rational(rng);
      ExtRational b = rand_rational(rng);
      boost::multiprecision::cpp_rational ra(a.num(), a.den());
      boost::multiprecision::cpp_rational rb(b.num(), b.den());
      INFO(a.str() << " vs " << b.str());
      CHECK((a < b) == (ra < rb));
      CHECK((a == b) == (ra == rb));
    }
  }
}

TEST_CASE("distance is the absolute 2x2 determinant") {
  ExtRational a = ExtRational::reduce(8, 3);
  ExtRational b = ExtRational::reduce(2, 1);
  CHECK(lenscap::distance(a, b) == 2);
  CHECK(lenscap::distance(b, a) == 2);
  CHECK(lenscap::distance(ExtRational{}, ExtRational::infinity()) == 1);
  CHECK(lenscap::distance(a, a) == 0);

  SECTION("negating both arguments preserves distance") {
    std::mt19937_64 rng(40217);
    for (int it = 0; it < 500; ++it) {
      ExtRational x = rand_rational(rng);
      ExtRational y = rand_rational(rng);
      CHECK(lenscap::distance(-x, -y) == lenscap::distance(x, y));
    }
  }

  SECTION("a distance-2 partner of an even fraction has an even numerator") {
    std::mt19937_64 rng(90125);
    std::uniform_int_distribution<long long> shift(-50, 50);
    int built = 0;
    for (int it = 0; it < 2000 && built < 500; ++it) {
      ExtRational x = rand_rational(rng);
      if (x.num() % 2 != 0) continue;
      // egcd gives num*u + den*v = g with g = +-1, so num*(2ug) - (-2vg)*den = 2
      Int g, u, v;
      egcd(x.num(), x.den(), g, u, v);
      REQUIRE(abs(g) == 1);
      Int r = 2 * (-v) * g;
      Int s = 2 * u * g;
      Int m = shift(rng);
      r += m * x.num();
      s += m * x.den();
      Int ar = abs(r);
      Int as = abs(s);
      if (ar == 0 && as == 0) continue;
      if (gcd(ar, as) != 1) continue;  // would reduce, halving the distance
      ExtRational y = ExtRational::reduce(r, s);
      INFO(x.str() << " partner " << y.str());
      REQUIRE(lenscap::distance(x, y) == 2);
      CHECK(y.num() % 2 == 0);
      ++built;
    }
    CHECK(built >= 200);
  }
}

TEST_CASE("size adds numerator and denominator") {
  CHECK(lenscap::size(ExtRational::reduce(8, 3)) == 11);
  CHECK(lenscap::size(ExtRational{}) == 1);
  CHECK(lenscap::size(ExtRational::infinity()) == 1);
  CHECK_THROWS_AS(lenscap::size(ExtRational::reduce(-1, 2)), lenscap::NegativeInput);
}

TEST_CASE("to_double") {
  CHECK(ExtRational::reduce(1, 2).to_double() == 0.5);
  CHECK(ExtRational::reduce(-8, 3).to_double() == Catch::Approx(-8.0 / 3.0));
  CHECK(std::isinf(ExtRational::infinity().to_double()));
}

TEST_CASE("normalize_lens folds q into [1, p/2]") {
  CHECK(lenscap::normalize_lens(8, 11).q_normalized == 3);
  CHECK(lenscap::normalize_lens(8, 5).q_normalized == 3);
  CHECK(lenscap::normalize_lens(8, 3).q_normalized == 3);
  CHECK(lenscap::normalize_lens(8, -3).q_normalized == 3);
  CHECK(lenscap::normalize_lens(2, 1).q_normalized == 1);
  CHECK(lenscap::normalize_lens(10, 7).q_normalized == 3);

  CHECK_THROWS_AS(lenscap::normalize_lens(7, 2), lenscap::OddP);
  CHECK_THROWS_AS(lenscap::normalize_lens(8, 4), lenscap::NotCoprime);
  CHECK_THROWS_AS(lenscap::normalize_lens(8, 16), lenscap::QZeroModP);
  CHECK_THROWS_AS(lenscap::normalize_lens(8, 0), lenscap::QZeroModP);
  CHECK_THROWS_AS(lenscap::normalize_lens(0, 1), lenscap::DomainError);
  CHECK_THROWS_AS(lenscap::normalize_lens(-4, 1), lenscap::DomainError);

  SECTION("normalization is idempotent and invariant under the lens moves") {
    std::mt19937_64 rng(61803);
    std::uniform_int_distribution<long long> pd(1, 200);
    std::uniform_int_distribution<long long> qd(-500, 500);
    int used = 0;
    for (int it = 0; it < 2000 && used < 400; ++it) {
      Int p = 2 * pd(rng);
      Int q = qd(rng);
      Int aq = abs(q);
      if (q % p == 0 || gcd(p, aq) != 1) continue;
      ++used;
      LensParams lens = lenscap::normalize_lens(p, q);
      INFO("p=" << p << " q=" << q);
      CHECK(lens.q_normalized >= 1);
      CHECK(2 * lens.q_normalized <= p);
      CHECK(gcd(p, lens.q_normalized) == 1);
      CHECK(lenscap::normalize_lens(p, lens.q_normalized).q_normalized == lens.q_normalized);
      CHECK(lenscap::normalize_lens(p, Int(q + p)).q_normalized == lens.q_normalized);
      CHECK(lenscap::normalize_lens(p, Int(-q)).q_normalized == lens.q_normalized);
      CHECK(lenscap::normalize_lens(p, Int(p - q)).q_normalized == lens.q_normalized);
    }
    CHECK(used >= 400);
  }
}
