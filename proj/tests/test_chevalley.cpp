#include <gtest/gtest.h>

#include "crlab/chevalley.hpp"

using namespace crlab;

namespace {

struct Fixture {
  RootSystem sys;
  RegistryPtr reg = make_registry({{"x", VarKind::Ordinary},
                                   {"y", VarKind::Ordinary},
                                   {"z", VarKind::Ordinary},
                                   {"s", VarKind::SqrtConstant},
                                   {"t", VarKind::Unit}});
  GroupWord w(std::string_view text) const { return parse_word(sys, text, reg); }
  Polynomial p(std::string_view text) const { return parse_polynomial(text, reg); }
  bool same(std::string_view a, std::string_view b) const { return words_equal(sys, w(a), w(b)); }
  std::string nf(std::string_view a) const { return render(sys, normalize(sys, w(a))); }
};

Fixture a2() { return {RootSystem::A(2)}; }
Fixture d4() { return {RootSystem::D4()}; }

}  // namespace

TEST(Chevalley, CommutatorA2) {
  auto f = a2();
  RadicalElement r = collect(f.sys, f.w("e1(x)*e2(y)"), {f.sys.from_label(2), f.sys.from_label(3), f.sys.from_label(1)});
  EXPECT_EQ(render(f.sys, r), "e2(y)*e3(x*y)*e1(x)");
  EXPECT_TRUE(f.same("e1(x)*e2(y)", "e2(y)*e1(x)*e3(x*y)"));
  EXPECT_TRUE(f.same("e1(x)*e1(y)", "e1(x + y)"));
  EXPECT_TRUE(f.same("e1(x)*e1(x)", "1"));
}

TEST(Chevalley, CommutatorD4) {
  auto f = d4();
  EXPECT_EQ(f.nf("e9(x)*e6(y)"), "e6(y)*e9(x)*e12(x*y)");
  EXPECT_TRUE(f.same("e6(x)*e7(y)", "e7(y)*e6(x)"));
}

TEST(Chevalley, WeylRepresentatives) {
  auto f = a2();
  EXPECT_TRUE(f.same("n[a]^2", "1"));
  EXPECT_TRUE(f.same("n[a]*e2(x)*n[a]^-1", "e3(x)"));
  EXPECT_TRUE(f.same("n[a]*e1(x)*n[a]^-1", "e-1(x)"));
  EXPECT_TRUE(f.same("n[a]*n[b]*n[a]", "n[b]*n[a]*n[b]"));
}

TEST(Chevalley, Torus) {
  auto f = a2();
  EXPECT_TRUE(f.same("t[a](t)*e1(x)*t[a](t)^-1", "e1(t^2*x)"));
  EXPECT_TRUE(f.same("t[a](t)*e2(x)*t[a](t)^-1", "e2(t^-1*x)"));
  EXPECT_TRUE(f.same("t[a](t)*t[a](t)^-1", "1"));
  EXPECT_TRUE(f.same("n[a]*t[b](t)*n[a]^-1", "t[a+b](t)"));
}

TEST(Chevalley, GraphAutomorphisms) {
  auto f = a2();
  EXPECT_TRUE(f.same("sigma^2", "1"));
  EXPECT_TRUE(f.same("sigma*e1(x)*sigma", "e2(x)"));
  EXPECT_TRUE(f.same("sigma*e3(x)*sigma", "e3(x)"));
  auto g = d4();
  EXPECT_TRUE(g.same("sigma^3", "1"));
  EXPECT_FALSE(g.same("sigma", "1"));
}

TEST(Chevalley, ParseRenderRoundTrip) {
  auto f = d4();
  for (std::string text : {"e12(s^2)", "n[a]*sigma", "t[a+c](t)", "e-2(s)*e-11(1)", "n[a]*n[c]*n[d]", "sigma*sigma"}) {
    EXPECT_EQ(render(f.sys, f.w(text)), text);
    EXPECT_EQ(render(f.sys, f.w(render(f.sys, f.w(text)))), text);
  }
  EXPECT_EQ(render(f.sys, f.w("e[a+2b+c+d](x)")), "e12(x)");
  EXPECT_THROW(f.w("e13(x)"), DomainError);
  EXPECT_THROW(f.w("e1(x"), ParseError);
  EXPECT_THROW(f.w("q"), ParseError);
}

TEST(Chevalley, Inverse) {
  auto f = d4();
  GroupWord g = f.w("n[a]*sigma*e12(s^2)*t[a+c](t)*e-3(x*y)");
  EXPECT_TRUE(is_identity(f.sys, g * inverse(g)));
  EXPECT_TRUE(is_identity(f.sys, inverse(g) * g));
  EXPECT_TRUE(words_equal(f.sys, power(g, -2), inverse(g * g)));
}

TEST(Chevalley, CollectRejectsBadOrders) {
  auto f = a2();
  EXPECT_THROW(collect(f.sys, f.w("e1(x)"), {f.sys.from_label(1), f.sys.from_label(-1)}), DomainError);
  EXPECT_THROW(collect(f.sys, f.w("e2(x)"), {f.sys.from_label(1)}), DomainError);
  EXPECT_FALSE(is_closed(f.sys, {f.sys.from_label(1), f.sys.from_label(2)}));
  EXPECT_EQ(closure(f.sys, {f.sys.from_label(1), f.sys.from_label(2)}).size(), 3u);
  EXPECT_FALSE(nilpotent_order(f.sys, {f.sys.from_label(1), f.sys.from_label(-1)}));
}

TEST(Chevalley, NormalWordOfMixedWord) {
  auto f = d4();
  NormalWord nw = normalize(f.sys, f.w("e12(x)*n[a]*sigma"));
  EXPECT_TRUE(nw.collected());
  EXPECT_EQ(render(f.sys, nw), "n[a]*sigma*e12(x)");
  NormalWord loose = normalize(f.sys, f.w("e1(x)*e-1(y)"));
  EXPECT_FALSE(loose.collected());
}

TEST(Chevalley, AdjointRootElement) {
  auto f = a2();
  Root a = f.sys.simple(0);
  LieVector v = adjoint(f.sys, f.w("e1(x)"), LieVector::basis_e(f.sys, f.sys.negate(a), f.reg));
  EXPECT_EQ(render(f.sys, v), "x^2*e1 + e-1 + x*ha");
  LieVector hb = adjoint(f.sys, f.w("e1(x)"), LieVector::basis_h(f.sys, 1, f.reg));
  EXPECT_EQ(render(f.sys, hb), "x*e1 + hb");
  LieVector ha = adjoint(f.sys, f.w("e1(x)"), LieVector::basis_h(f.sys, 0, f.reg));
  EXPECT_EQ(render(f.sys, ha), "ha");
}

// e1 + e2 is fixed by sigma and by the curve e1(x)e2(x), though the curve
// does not commute with sigma.
TEST(Chevalley, AdjointFixedVectorA2) {
  auto f = a2();
  LieVector v = LieVector::basis_e(f.sys, f.sys.from_label(1), f.reg) + LieVector::basis_e(f.sys, f.sys.from_label(2), f.reg);
  EXPECT_EQ(adjoint(f.sys, f.w("sigma"), v), v);
  EXPECT_EQ(adjoint(f.sys, f.w("e1(x)*e2(x)"), v), v);
  EXPECT_FALSE(f.same("sigma*e1(x)*e2(x)", "e1(x)*e2(x)*sigma"));
}

TEST(Chevalley, CentralizerOfSigmaInA2Unipotent) {
  auto f = a2();
  std::vector<Root> order{f.sys.from_label(1), f.sys.from_label(2), f.sys.from_label(3)};
  auto reg = make_registry({{"x1", VarKind::Ordinary}, {"x2", VarKind::Ordinary}, {"x3", VarKind::Ordinary}});
  auto sol = centralizer_system(f.sys, {parse_word(f.sys, "sigma", reg)}, order, reg);
  ASSERT_TRUE(sol.solved);
  EXPECT_EQ(describe_subgroup(f.sys, sol.free_classes), "U3");
}

TEST(Chevalley, GenericRadicalNames) {
  auto f = d4();
  EXPECT_EQ(coordinate_name(f.sys, f.sys.from_label(12)), "x12");
  EXPECT_EQ(coordinate_name(f.sys, f.sys.from_label(-4)), "xm4");
}
