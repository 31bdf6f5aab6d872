#pragma once

// Randomized law checks over the engine, reproducible from a seed.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "crlab/chevalley.hpp"
#include "crlab/oracle.hpp"

namespace crlab {

struct PropertyResult {
  std::string name;
  int trials = 0;
  int failures = 0;
  std::string first_failure;

  bool ok() const { return failures == 0; }
  void record(bool ok, const std::string& what) {
    ++trials;
    if (ok) return;
    if (failures++ == 0) first_failure = what;
  }
};

/// Ordinary x, y, z; sqrt constant s; unit t.
inline RegistryPtr property_registry() {
  return make_registry({{"x", VarKind::Ordinary},
                        {"y", VarKind::Ordinary},
                        {"z", VarKind::Ordinary},
                        {"s", VarKind::SqrtConstant},
                        {"t", VarKind::Unit}});
}

class WordSampler {
 public:
  WordSampler(const RootSystem& sys, RegistryPtr reg, std::uint64_t seed) : sys_(sys), reg_(std::move(reg)), rng_(seed) {}

  std::mt19937_64& rng() { return rng_; }
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  /// Nonzero sum of at most three monomials of degree <= 2 in x, y, z, s.
  Polynomial coefficient() {
    for (;;) {
      Polynomial p(reg_);
      for (int k = uniform(1, 3); k > 0; --k) {
        Polynomial m = Polynomial::one(reg_);
        for (int d = uniform(0, 2); d > 0; --d) m *= Polynomial::variable(reg_, uniform(0, 3));
        p += m;
      }
      if (!p.is_zero()) return p;
    }
  }

  Root root() { return Root{uniform(0, sys_.num_roots() - 1)}; }

  Cocharacter cocharacter() {
    std::vector<int> c(sys_.rank());
    for (auto& x : c) x = uniform(-2, 2);
    return Cocharacter{c};
  }

  GroupAtom atom() {
    switch (uniform(0, 5)) {
      case 0: return WeylRep{root()};
      case 1: return TorusValue{cocharacter(), Polynomial::variable(reg_, "t", uniform(-2, 2))};
      case 2: {
        const auto& auts = sys_.diagram_automorphisms();
        return GraphAut{auts[uniform(0, static_cast<int>(auts.size()) - 1)]};
      }
      default: return RootElement{root(), coefficient()};
    }
  }

  /// Torus values, diagram symmetries and positive root elements: a word in B x Gamma.
  GroupWord borel_word(int max_len) {
    GroupWord w;
    for (int n = uniform(0, max_len); n > 0; --n) {
      GroupAtom a = atom();
      if (std::holds_alternative<WeylRep>(a)) continue;
      if (auto* e = std::get_if<RootElement>(&a); e && !sys_.is_positive(e->root)) e->root = sys_.negate(e->root);
      w.atoms.push_back(std::move(a));
    }
    return w;
  }

  /// Weyl representatives, torus values and diagram symmetries only.
  GroupWord frame_word(int max_len) {
    GroupWord w;
    for (int n = uniform(0, max_len); n > 0; --n) {
      GroupAtom a = atom();
      if (!std::holds_alternative<RootElement>(a)) w.atoms.push_back(std::move(a));
    }
    return w;
  }

  GroupWord word(int max_len) {
    GroupWord w;
    for (int n = uniform(0, max_len); n > 0; --n) w.atoms.push_back(atom());
    return w;
  }

  GroupWord unipotent_word(const std::vector<Root>& roots, int min_len, int max_len) {
    GroupWord w;
    for (int n = uniform(min_len, max_len); n > 0; --n)
      w.atoms.emplace_back(RootElement{roots[uniform(0, static_cast<int>(roots.size()) - 1)], coefficient()});
    return w;
  }

  /// Closure of a random set of positive roots, moved by a random Weyl element.
  std::vector<Root> closed_nilpotent_set() {
    std::vector<Root> pos;
    for (auto r : sys_.positive_roots())
      if (uniform(0, 3) == 0) pos.push_back(r);
    if (pos.empty()) pos.push_back(sys_.simple(uniform(0, sys_.rank() - 1)));
    const auto& weyl = sys_.weyl_group();
    const RootMap& w = weyl[uniform(0, static_cast<int>(weyl.size()) - 1)];
    std::vector<Root> out;
    for (auto r : closure(sys_, pos)) out.push_back(w(r));
    return out;
  }

 private:
  const RootSystem& sys_;
  RegistryPtr reg_;
  std::mt19937_64 rng_;
};

/// Collecting is independent of the input presentation: random adjacent
/// swaps (with the commutator factor inserted) and a detour through a
/// second valid order give the same normal form.
inline PropertyResult collection_confluence(const RootSystem& sys, std::uint64_t seed, int trials = 500) {
  PropertyResult res{"collection confluence", 0, 0, {}};
  auto reg = property_registry();
  WordSampler gen(sys, reg, seed);
  for (int t = 0; t < trials; ++t) {
    auto roots = gen.closed_nilpotent_set();
    auto order = *nilpotent_order(sys, roots);
    GroupWord w = gen.unipotent_word(roots, 1, 10);
    std::vector<RootElement> elems;
    for (const auto& a : w.atoms) elems.push_back(std::get<RootElement>(a));
    RadicalElement base = collect(sys, elems, order);

    std::vector<RootElement> shuffled = elems;
    for (int k = gen.uniform(0, 12); k > 0 && shuffled.size() > 1; --k) {
      std::size_t i = static_cast<std::size_t>(gen.uniform(0, static_cast<int>(shuffled.size()) - 2));
      RootElement a = shuffled[i], b = shuffled[i + 1];
      shuffled[i] = b;
      shuffled[i + 1] = a;
      if (auto c = sys.sum(a.root, b.root))
        shuffled.insert(shuffled.begin() + static_cast<std::ptrdiff_t>(i) + 2, RootElement{*c, a.coeff * b.coeff});
    }
    RadicalElement swapped = collect(sys, shuffled, order);

    // reversed height order is another valid collection order
    std::vector<Root> order2(order.rbegin(), order.rend());
    RadicalElement detour = collect(sys, collect(sys, elems, order2).to_word(), order);

    bool ok = swapped == base && detour == base;
    res.record(ok, render(sys, w));
  }
  return res;
}

/// (g h) . x = g . (h . x) for unipotent x. Alternate trials take g, h in
/// B x Gamma with x in U, and g, h frame words with x over a random closed
/// nilpotent set, so that every conjugate stays collectible.
inline PropertyResult action_law(const RootSystem& sys, std::uint64_t seed, int trials = 200) {
  PropertyResult res{"action law", 0, 0, {}};
  auto reg = property_registry();
  WordSampler gen(sys, reg, seed);
  for (int t = 0; t < trials; ++t) {
    bool borel = t % 2 == 0;
    GroupWord g = borel ? gen.borel_word(5) : gen.frame_word(4);
    GroupWord h = borel ? gen.borel_word(5) : gen.frame_word(4);
    GroupWord x = gen.unipotent_word(borel ? sys.positive_roots() : gen.closed_nilpotent_set(), 1, 5);
    NormalWord lhs = conjugate(sys, g * h, x);
    NormalWord inner = conjugate(sys, h, x);
    NormalWord rhs = conjugate(sys, g, to_word(sys, inner));
    bool ok = lhs.frame.is_identity() && rhs.frame.is_identity() && lhs.collected() && rhs.collected() &&
              words_equal(sys, to_word(sys, lhs), to_word(sys, rhs));
    res.record(ok, render(sys, g) + " | " + render(sys, h) + " | " + render(sys, x));
  }
  return res;
}

/// Ad(g) Ad(h) v = Ad(normal form of g h) v on basis vectors.
inline PropertyResult ad_homomorphism(const RootSystem& sys, std::uint64_t seed, int trials = 200) {
  PropertyResult res{"Ad homomorphism", 0, 0, {}};
  auto reg = property_registry();
  WordSampler gen(sys, reg, seed);
  for (int t = 0; t < trials; ++t) {
    GroupWord g = gen.word(4), h = gen.word(4);
    int b = gen.uniform(0, sys.num_roots() + sys.rank() - 1);
    LieVector v = b < sys.num_roots() ? LieVector::basis_e(sys, Root{b}, reg) : LieVector::basis_h(sys, b - sys.num_roots(), reg);
    LieVector lhs = adjoint(sys, g, adjoint(sys, h, v));
    LieVector rhs = adjoint(sys, to_word(sys, normalize(sys, g * h)), v);
    res.record(lhs == rhs, render(sys, g) + " | " + render(sys, h) + " on " + render(sys, v));
  }
  return res;
}

/// Normal forms agree with the input words as 3x3 matrices over F16.
inline PropertyResult oracle_equivalence(std::uint64_t seed, int words = 200, int points = 8) {
  PropertyResult res{"A2 oracle equivalence", 0, 0, {}};
  auto sys = RootSystem::A(2);
  auto reg = property_registry();
  WordSampler gen(sys, reg, seed);
  for (int t = 0; t < words; ++t) {
    GroupWord w = gen.word(8);
    GroupWord nf = to_word(sys, normalize(sys, w));
    bool ok = matrix_oracle_check(sys, w, nf, reg, gen.rng(), points, GF2m(4));
    res.record(ok, render(sys, w) + " vs " + render(sys, nf));
  }
  return res;
}

}  // namespace crlab
