#include <gtest/gtest.h>

#include "crlab/oracle.hpp"

using namespace crlab;

TEST(GF2m, FieldAxioms) {
  for (int m : {1, 2, 4}) {
    GF2m f(m);
    for (int a = 0; a < f.size(); ++a) {
      EXPECT_EQ(f.mul(a, 1), a);
      if (a) {
        EXPECT_EQ(f.mul(a, f.inv(a)), 1) << m << " " << a;
      }
      for (int b = 0; b < f.size(); ++b) {
        EXPECT_EQ(f.mul(a, b), f.mul(b, a));
        for (int c = 0; c < f.size(); ++c) EXPECT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
      }
    }
    for (int a = 1; a < f.size(); ++a) EXPECT_EQ(f.pow(a, f.size() - 1), 1);
  }
  EXPECT_THROW(GF2m(3), DomainError);
  EXPECT_THROW(GF2m::of_size(8), DomainError);
  EXPECT_THROW(GF2m(2).inv(0), DomainError);
}

TEST(Matrix, SigmaConvention) {
  GF2m f(4);
  for (int x = 0; x < 16; ++x) {
    auto X = static_cast<std::uint8_t>(x);
    EXPECT_EQ(conjugate(f, sigma_matrix(), root_matrix(1, 0, X)), root_matrix(0, 1, X));
    EXPECT_EQ(conjugate(f, sigma_matrix(), root_matrix(0, 1, X)), root_matrix(1, 0, X));
    EXPECT_EQ(conjugate(f, sigma_matrix(), root_matrix(1, 1, X)), root_matrix(1, 1, X));
  }
  EXPECT_EQ(multiply(f, sigma_matrix(), sigma_matrix()), MatrixElement{});
}

TEST(Matrix, InverseAndMultiply) {
  GF2m f(4);
  MatrixElement g = multiply(f, multiply(f, root_matrix(1, 0, 3), sigma_matrix()), torus_matrix(f, 1, 2, 7));
  EXPECT_EQ(multiply(f, g, inverse(f, g)), MatrixElement{});
  EXPECT_EQ(multiply(f, inverse(f, g), g), MatrixElement{});
  EXPECT_EQ(mat_det(f, torus_matrix(f, 1, 2, 7).a), 1);
}

TEST(Oracle, Identities) {
  auto sys = RootSystem::A(2);
  auto reg = make_registry({{"x", VarKind::Ordinary}, {"t", VarKind::Unit}});
  auto w = [&](std::string_view t) { return parse_word(sys, t, reg); };
  std::mt19937_64 rng(5);
  EXPECT_TRUE(matrix_oracle_check(sys, w("sigma*e1(x)*sigma^-1"), w("e2(x)"), reg, rng));
  EXPECT_TRUE(matrix_oracle_check(sys, w("1"), w("1"), reg, rng));
  EXPECT_TRUE(matrix_oracle_check(sys, w("e1(x)*e2(x)*sigma*e2(x)*e1(x)"), w("sigma*e3(x^2)"), reg, rng));
  EXPECT_TRUE(matrix_oracle_check(sys, w("n[a]"), w("e1(1)*e-1(1)*e1(1)"), reg, rng));
  EXPECT_TRUE(matrix_oracle_check(sys, w("t[a](t)*e1(x)*t[a](t)^-1"), w("e1(t^2*x)"), reg, rng));
  EXPECT_FALSE(matrix_oracle_check(sys, w("e1(x)"), w("e2(x)"), reg, rng));
  EXPECT_THROW(matrix_oracle_check(RootSystem::D4(), GroupWord{}, GroupWord{}, reg, rng), DomainError);
}

TEST(Oracle, LieFixedVector) {
  GF2m f(4);
  auto sys = RootSystem::A(2);
  Mat3 x = mat_add(lie_basis(sys, sys.from_label(1)), lie_basis(sys, sys.from_label(2)));
  EXPECT_EQ(adjoint(f, sigma_matrix(), x), x);
}

TEST(Oracle, MGroup) {
  EXPECT_EQ(m_group(GF2m(2)).size(), 120u);
  EXPECT_EQ(m_group(GF2m(1)).size(), 12u);
  auto f4 = enumerate_m_conjugacy(4, {0, 1, 2, 3});
  EXPECT_EQ(f4.group_order, 120u);
  EXPECT_EQ(f4.classes.size(), 4u);
  EXPECT_EQ(enumerate_m_conjugacy(2, {0, 1}).classes.size(), 2u);
  EXPECT_EQ(enumerate_m_conjugacy(4, {0}).classes.size(), 1u);
  EXPECT_THROW(enumerate_m_conjugacy(4, {4}), DomainError);
}
