#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "crlab/rootsys.hpp"

using namespace crlab;

namespace {

// Positive roots of a simply-laced system straight from the Cartan matrix:
// nonnegative integer vectors of norm 2, coefficients bounded by 2, by height.
std::vector<std::vector<int>> brute_positive_roots(const RootSystem& sys) {
  const int n = sys.rank();
  std::vector<std::vector<int>> out;
  std::vector<int> c(n, 0);
  for (;;) {
    int i = 0;
    while (i < n && ++c[i] > 2) c[i++] = 0;
    if (i == n) break;
    int norm = 0;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) norm += c[a] * sys.cartan(a, b) * c[b];
    if (norm == 2) out.push_back(c);
  }
  return out;
}

}  // namespace

TEST(RootSystem, Sizes) {
  EXPECT_EQ(RootSystem::D4().num_roots(), 24);
  EXPECT_EQ(RootSystem::A(2).num_roots(), 6);
  EXPECT_EQ(RootSystem::A(3).num_roots(), 12);
  EXPECT_EQ(RootSystem::D4().weyl_group().size(), 192u);
  EXPECT_EQ(RootSystem::A(2).weyl_group().size(), 6u);
  EXPECT_EQ(RootSystem::A(3).weyl_group().size(), 24u);
  EXPECT_EQ(RootSystem::D4().diagram_automorphisms().size(), 6u);
  EXPECT_EQ(RootSystem::A(2).diagram_automorphisms().size(), 2u);
  EXPECT_EQ(RootSystem::D4().sigma_order(), 3);
}

TEST(RootSystem, PositiveRootsMatchCartanEnumeration) {
  for (const auto& sys : {RootSystem::A(2), RootSystem::A(3), RootSystem::D4()}) {
    auto brute = brute_positive_roots(sys);
    ASSERT_EQ(static_cast<int>(brute.size()), sys.num_positive()) << sys.name();
    std::set<std::vector<int>> engine;
    for (int i = 0; i < sys.num_positive(); ++i) {
      engine.insert(sys.coeffs(Root{i}));
      if (i > 0) {
        EXPECT_LE(sys.height(Root{i - 1}), sys.height(Root{i}));
      }
    }
    EXPECT_EQ(engine, std::set<std::vector<int>>(brute.begin(), brute.end())) << sys.name();
  }
}

TEST(RootSystem, D4LabelTable) {
  auto sys = RootSystem::D4();
  const std::vector<std::string> table{"a",       "c",       "d",         "b",         "a+b",         "b+c",
                                       "b+d",     "a+b+c",   "a+b+d",     "b+c+d",     "a+b+c+d",     "a+2b+c+d"};
  for (int l = 1; l <= 12; ++l) {
    EXPECT_EQ(sys.render(sys.from_label(l)), table[l - 1]) << l;
    EXPECT_EQ(sys.label(sys.parse_root(table[l - 1])), l);
    EXPECT_EQ(sys.label(sys.from_label(-l)), -l);
  }
}

// Every ordering of the seven non-simple positive roots compatible with
// height, with simple roots c, d before b. Only the descending-lex one is
// the table above.
TEST(RootSystem, LabelTableIsTheUniqueDescendingLexOrder) {
  auto sys = RootSystem::D4();
  std::vector<int> idx{4, 5, 6, 7, 8, 9, 10};
  int matches = 0, permutations = 0;
  do {
    ++permutations;
    bool heights = true, lex = true;
    for (std::size_t i = 0; i + 1 < idx.size(); ++i) {
      auto a = sys.coeffs(Root{idx[i]}), b = sys.coeffs(Root{idx[i + 1]});
      if (sys.height(Root{idx[i]}) > sys.height(Root{idx[i + 1]})) heights = false;
      if (sys.height(Root{idx[i]}) == sys.height(Root{idx[i + 1]}) && a < b) lex = false;
    }
    if (heights && lex) {
      ++matches;
      EXPECT_EQ(idx, (std::vector<int>{4, 5, 6, 7, 8, 9, 10}));
    }
  } while (std::next_permutation(idx.begin(), idx.end()));
  EXPECT_EQ(permutations, 5040);
  EXPECT_EQ(matches, 1);
}

TEST(RootSystem, PairingAndReflection) {
  auto sys = RootSystem::D4();
  Cocharacter lambda{{1, 2, 1, 1}};
  EXPECT_EQ(sys.pairing(sys.from_label(11), lambda), 1);
  EXPECT_EQ(sys.pairing(sys.from_label(12), lambda), 2);
  EXPECT_EQ(sys.pairing(sys.from_label(4), lambda), 1);
  EXPECT_EQ(sys.pairing(sys.from_label(2), lambda), 0);
  for (int i = 0; i < sys.num_roots(); ++i) {
    Root r{i};
    EXPECT_EQ(sys.pairing(r, sys.coroot(r)), 2);
    EXPECT_EQ(sys.reflect(r, r), sys.negate(r));
    for (int j = 0; j < sys.num_roots(); ++j) EXPECT_EQ(sys.reflect(r, sys.reflect(r, Root{j})), Root{j});
  }
}

TEST(RootSystem, SumsAndNegation) {
  auto sys = RootSystem::A(2);
  EXPECT_EQ(*sys.sum(sys.simple(0), sys.simple(1)), sys.from_label(3));
  EXPECT_FALSE(sys.sum(sys.simple(0), sys.simple(0)));
  EXPECT_FALSE(sys.sum(sys.simple(0), sys.negate(sys.simple(0))));
  EXPECT_EQ(sys.negate(sys.negate(sys.from_label(3))), sys.from_label(3));
}

TEST(RootSystem, ActionPreservesPairing) {
  auto sys = RootSystem::D4();
  Cocharacter chi{{1, -1, 2, 0}};
  for (const auto& w : sys.weyl_group())
    for (int i = 0; i < sys.num_roots(); i += 5) EXPECT_EQ(sys.pairing(w(Root{i}), sys.act(w, chi)), sys.pairing(Root{i}, chi));
  for (const auto& g : sys.diagram_automorphisms())
    for (int i = 0; i < sys.num_roots(); ++i) EXPECT_EQ(sys.pairing(g(Root{i}), sys.act(g, chi)), sys.pairing(Root{i}, chi));
}

TEST(RootSystem, LongestElement) {
  auto d4 = RootSystem::D4();
  EXPECT_EQ(longest_element(d4, {0, 1, 2, 3}), d4.minus_one());
  auto a2 = RootSystem::A(2);
  EXPECT_FALSE(longest_element(a2, {0, 1}) == a2.minus_one());
  EXPECT_EQ(longest_element(a2, {0, 1}) * a2.sigma(), a2.minus_one());
}

TEST(RootSystem, MinusOneRealization) {
  auto d4 = RootSystem::D4();
  auto real = minus_one_realization(d4, {0, 2, 3});
  EXPECT_FALSE(real.sigma);
  EXPECT_TRUE(real.negates_subsystem);
  EXPECT_TRUE(extends_to_ambient(d4, real.composite));

  auto a3 = RootSystem::A(3);
  auto twisted = minus_one_realization(a3, {0, 1});
  EXPECT_TRUE(twisted.sigma);
  EXPECT_TRUE(twisted.negates_subsystem);
  EXPECT_FALSE(extends_to_ambient(a3, twisted.composite));
}

TEST(RootSystem, W0Identities) {
  auto d4 = RootSystem::D4();
  auto rep = verify_w0_identities(d4, {0, 2, 3}, Cocharacter{{1, 2, 1, 1}});
  EXPECT_TRUE(rep.ok());
  auto a3 = RootSystem::A(3);
  EXPECT_FALSE(verify_w0_identities(a3, {0, 1}, Cocharacter{{1, 2, 3}}).hypothesis_holds);
  EXPECT_TRUE(verify_w0_identities(d4, {}, Cocharacter{{3, 5, 3, 3}}).ok());
  EXPECT_THROW(verify_w0_identities(d4, {0}, Cocharacter{{1, 2, 1, 1}}), DomainError);
}

TEST(RootSystem, Parsing) {
  auto sys = RootSystem::D4();
  EXPECT_EQ(sys.parse_root("a+2b+c+d"), sys.from_label(12));
  EXPECT_EQ(sys.parse_root("-b-c"), sys.from_label(-6));
  EXPECT_EQ(sys.render(sys.parse_cocharacter("a+2b+c+d")), "a+2b+c+d");
  EXPECT_THROW(sys.parse_root("2a"), DomainError);
  EXPECT_THROW(sys.parse_root("a+"), ParseError);
  EXPECT_THROW(RootSystem::by_name("e8"), DomainError);
}

TEST(RootSystem, LabelCycles) {
  auto sys = RootSystem::D4();
  RootMap m = sys.simple_reflection(0) * sys.sigma();
  EXPECT_EQ(label_cycles(sys, m, {4, 5, 6, 7, 8, 9, 10, 11, 12}), "(4 5 8 11 10 7)(6 9)(12)");
}
