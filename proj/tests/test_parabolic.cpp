#include <gtest/gtest.h>

#include "crlab/parabolic.hpp"

using namespace crlab;

namespace {

RegistryPtr reg() {
  static RegistryPtr r = make_registry({{"x", VarKind::Ordinary}, {"s", VarKind::SqrtConstant}, {"t", VarKind::Unit}});
  return r;
}

}  // namespace

TEST(Parabolic, RegularCocharacterGivesBorel) {
  auto sys = RootSystem::D4();
  auto d = rparabolic(sys, Cocharacter{{3, 5, 3, 3}});
  EXPECT_TRUE(d.l_roots.empty());
  EXPECT_EQ(static_cast<int>(d.u_roots.size()), sys.num_positive());
  EXPECT_EQ(d.p_roots.size(), d.u_roots.size());
}

TEST(Parabolic, ZeroCocharacterGivesG) {
  auto sys = RootSystem::A(2);
  auto d = rparabolic(sys, sys.zero_cocharacter());
  EXPECT_EQ(static_cast<int>(d.l_roots.size()), sys.num_roots());
  EXPECT_TRUE(d.u_roots.empty());
  EXPECT_EQ(d.sigma_components.size(), 2u);
}

TEST(Parabolic, Decomposition) {
  auto sys = RootSystem::D4();
  Cocharacter lambda{{1, 2, 1, 1}};
  auto d = rparabolic(sys, lambda);
  EXPECT_EQ(d.l_roots.size(), 6u);
  EXPECT_EQ(d.u_roots.size(), 9u);
  EXPECT_EQ(d.p_roots.size(), 15u);
  EXPECT_EQ(d.sigma_components.size(), 6u);
  EXPECT_TRUE(is_closed(sys, d.u_roots));
  EXPECT_TRUE(is_closed(sys, d.p_roots));
  EXPECT_EQ(levi_simple_roots(sys, d).size(), 3u);
  EXPECT_THROW(rparabolic(sys, Cocharacter{{1, 1}}), DomainError);
}

TEST(Parabolic, Limits) {
  auto sys = RootSystem::D4();
  Cocharacter lambda{{1, 2, 1, 1}};
  auto w = [&](std::string_view t) { return parse_word(sys, t, reg()); };
  auto lim = limit_along(sys, lambda, w("e1(x)*e12(x)"));
  ASSERT_TRUE(lim);
  EXPECT_EQ(render(sys, *lim), "e1(x)");
  EXPECT_FALSE(limit_along(sys, lambda, w("e-12(1)*e-2(s)")));
  EXPECT_FALSE(limit_along(sys, lambda, w("e-4(x)")));
  EXPECT_THROW(limit_along(sys, lambda, w("n[b]")), DomainError);
  EXPECT_TRUE(in_parabolic(sys, lambda, w("n[a]*sigma*e12(s^2)")));
  EXPECT_FALSE(in_parabolic(sys, lambda, w("n[b]")));
}

TEST(Parabolic, RefinementKeepsSigns) {
  auto sys = RootSystem::D4();
  Cocharacter lambda{{1, 2, 1, 1}}, mu{{1, 0, 0, 0}};
  Cocharacter zeta = refine(sys, lambda, mu);
  for (auto r : sys.all_roots()) {
    int p = sys.pairing(r, lambda);
    if (p > 0) {
      EXPECT_GT(sys.pairing(r, zeta), 0);
    }
    if (p < 0) {
      EXPECT_LT(sys.pairing(r, zeta), 0);
    }
  }
  auto dz = rparabolic(sys, zeta);
  EXPECT_LT(dz.p_roots.size(), rparabolic(sys, lambda).p_roots.size());
}

TEST(Parabolic, FixedCocharacters) {
  auto sys = RootSystem::D4();
  auto fixed = fixed_cocharacters(sys, {sys.sigma()});
  EXPECT_EQ(fixed.size(), 2u);
  for (const auto& c : fixed) EXPECT_EQ(sys.act(sys.sigma(), c), c);
  auto nsmap = sys.simple_reflection(0) * sys.sigma();
  auto line = fixed_cocharacters(sys, {nsmap});
  ASSERT_EQ(line.size(), 1u);
  EXPECT_EQ(sys.render(line[0]), "a+2b+c+d");
}

TEST(Parabolic, MinimalityDetectsSmallerParabolic) {
  auto sys = RootSystem::D4();
  auto d = rparabolic(sys, Cocharacter{{1, 2, 1, 1}});
  auto w = [&](std::string_view t) { return parse_word(sys, t, reg()); };
  EXPECT_TRUE(minimality_certificate(sys, d, {w("n[a]*sigma"), w("t[a+c](t)")}).minimal());
  auto rep = minimality_certificate(sys, d, {w("e1(x)"), w("t[a+c](t)")});
  ASSERT_FALSE(rep.minimal());
  EXPECT_LT(rep.smaller->p_roots.size(), d.p_roots.size());
  EXPECT_THROW(minimality_certificate(sys, d, {w("n[b]")}), DomainError);
}

TEST(Parabolic, StandardParabolicsA2) {
  auto sys = RootSystem::A(2);
  auto w = [&](std::string_view t) { return parse_word(sys, t, reg()); };
  EXPECT_EQ(standard_parabolics_containing(sys, {}).size(), 3u);
  auto ps = standard_parabolics_containing(sys, {w("sigma"), w("t[a+b](t)")});
  ASSERT_EQ(ps.size(), 1u);
  EXPECT_TRUE(ps[0].levi_simples.empty());
  EXPECT_TRUE(standard_parabolics_containing(sys, {w("sigma"), w("e-3(x)")}).empty());
}
