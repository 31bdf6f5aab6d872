#include <gtest/gtest.h>

#include <random>

#include "crlab/coeffring.hpp"

using namespace crlab;

namespace {

RegistryPtr reg() {
  static RegistryPtr r = make_registry({{"x", VarKind::Ordinary},
                                        {"y", VarKind::Ordinary},
                                        {"z", VarKind::Ordinary},
                                        {"s", VarKind::SqrtConstant},
                                        {"t", VarKind::Unit}});
  return r;
}

Polynomial P(std::string_view text) { return parse_polynomial(text, reg()); }

Polynomial random_poly(std::mt19937_64& rng) {
  Polynomial p(reg());
  std::uniform_int_distribution<int> var(0, 3), deg(0, 3), terms(0, 4);
  for (int k = terms(rng); k > 0; --k) {
    Polynomial m = Polynomial::one(reg());
    for (int d = deg(rng); d > 0; --d) m *= Polynomial::variable(reg(), var(rng));
    p += m;
  }
  return p;
}

}  // namespace

TEST(Polynomial, CharacteristicTwo) {
  EXPECT_TRUE((P("x") + P("x")).is_zero());
  EXPECT_EQ(P("(x + y)^2"), P("x^2 + y^2"));
  EXPECT_EQ(P("x - y"), P("x + y"));
  EXPECT_EQ(P("3*x"), P("x"));
  EXPECT_TRUE(P("2*x").is_zero());
}

TEST(Polynomial, UnitInverses) {
  EXPECT_EQ(P("t * t^-1"), Polynomial::one(reg()));
  EXPECT_EQ(P("t^-2 * t^3"), P("t"));
  EXPECT_THROW(P("x^-1"), DomainError);
}

TEST(Polynomial, RenderRoundTrip) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    Polynomial p = random_poly(rng);
    EXPECT_EQ(P(p.to_string()), p) << p.to_string();
  }
  EXPECT_EQ(P("x*y + y*x + s^2").to_string(), "s^2");
  EXPECT_EQ(Polynomial(reg()).to_string(), "0");
}

TEST(Polynomial, RingLaws) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    Polynomial a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b).pow(2), a.pow(2) + b.pow(2));
  }
}

TEST(Polynomial, Substitute) {
  auto r = reg();
  Polynomial p = P("x^2 + x*y + s^2");
  EXPECT_EQ(substitute(p, std::map<std::string, Polynomial>{{"x", P("y")}}), P("s^2"));
  EXPECT_EQ(substitute(p, std::map<std::string, Polynomial>{{"y", P("0")}}), P("x^2 + s^2"));
}

TEST(Polynomial, SquareObstruction) {
  EXPECT_EQ(classify_square_obstruction(P("y^2 + z^2 + s^2")), Solvability::UnsolvableOverK);
  EXPECT_EQ(classify_square_obstruction(P("x^2 + s^2")), Solvability::UnsolvableOverK);
  EXPECT_EQ(classify_square_obstruction(P("x*y + s^2")), Solvability::SolvableCandidate);
  EXPECT_EQ(classify_square_obstruction(P("x^2 + y^2")), Solvability::SolvableCandidate);
  EXPECT_EQ(classify_square_obstruction(P("x^2 + s")), Solvability::SolvableCandidate);
  EXPECT_EQ(to_string(Solvability::UnsolvableOverK), "UNSOLVABLE_OVER_K");
}

TEST(Polynomial, KRational) {
  EXPECT_TRUE(is_k_rational(P("x + s^2")));
  EXPECT_FALSE(is_k_rational(P("x*s")));
  EXPECT_TRUE(is_k_rational(P("1")));
}

TEST(Polynomial, ParseErrors) {
  EXPECT_THROW(P("x +"), ParseError);
  EXPECT_THROW(P("(x"), ParseError);
  EXPECT_THROW(P("w"), ParseError);
  EXPECT_THROW(P("x^"), ParseError);
  try {
    P("x + y )");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 6u);
  }
}
