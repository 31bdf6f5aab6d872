#pragma once

// Root-level R-parabolic data: P_lambda, L_lambda and R_u(P_lambda) from a
// cocharacter, limits along cocharacters, refinement, and minimality checks
// over standard (torus-containing) parabolics.

#include <algorithm>
#include <bit>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "crlab/chevalley.hpp"
#include "crlab/rootsys.hpp"

namespace crlab {

struct RParabolicData {
  Cocharacter lambda;
  std::vector<Root> p_roots;
  std::vector<Root> l_roots;
  std::vector<Root> u_roots;                // in canonical collection order
  std::vector<RootMap> sigma_components;    // diagram symmetries fixing lambda, identity first

  bool contains_diagram(const RootMap& g) const {
    return std::find(sigma_components.begin(), sigma_components.end(), g) != sigma_components.end();
  }
};

inline RParabolicData rparabolic(const RootSystem& sys, const Cocharacter& lambda) {
  if (static_cast<int>(lambda.coeffs.size()) != sys.rank()) throw DomainError("cocharacter has the wrong rank");
  RParabolicData d{lambda, {}, {}, {}, {}};
  for (auto r : sys.all_roots()) {
    int p = sys.pairing(r, lambda);
    if (p >= 0) d.p_roots.push_back(r);
    if (p == 0) d.l_roots.push_back(r);
    if (p > 0) d.u_roots.push_back(r);
  }
  d.u_roots = *nilpotent_order(sys, d.u_roots);
  for (const auto& g : sys.diagram_automorphisms())
    if (sys.act(g, lambda) == lambda) d.sigma_components.push_back(g);
  return d;
}

/// Whether the element lies in P_lambda: its frame fixes lambda and its
/// root-element tail has nonnegative pairings.
inline bool in_parabolic(const RootSystem& sys, const Cocharacter& lambda, const NormalWord& x) {
  if (!(sys.act(x.frame.map, lambda) == lambda)) return false;
  return std::all_of(x.raw_tail.begin(), x.raw_tail.end(),
                     [&](const RootElement& e) { return sys.pairing(e.root, lambda) >= 0; });
}

inline bool in_parabolic(const RootSystem& sys, const Cocharacter& lambda, const GroupWord& g) {
  return in_parabolic(sys, lambda, normalize(sys, g));
}

/// lim_{a -> 0} lambda(a) x lambda(a)^-1, or nullopt when it does not exist.
inline std::optional<NormalWord> limit_along(const RootSystem& sys, const Cocharacter& lambda, const NormalWord& x) {
  if (!(sys.act(x.frame.map, lambda) == lambda)) throw DomainError("frame does not centralize the cocharacter");
  NormalWord out{x.frame, {}, std::nullopt};
  for (const auto& e : x.raw_tail) {
    int p = sys.pairing(e.root, lambda);
    if (p < 0) return std::nullopt;
    if (p == 0) out.raw_tail.push_back(e);
  }
  if (x.tail) {
    RadicalElement t;
    for (const auto& e : out.raw_tail) {
      t.order.push_back(e.root);
      t.coeffs.push_back(e.coeff);
    }
    out.tail = std::move(t);
  }
  return out;
}

inline std::optional<NormalWord> limit_along(const RootSystem& sys, const Cocharacter& lambda, const GroupWord& g) {
  return limit_along(sys, lambda, normalize(sys, g));
}

/// m*lambda + mu for the least m >= 1 that keeps the sign of every nonzero
/// pairing with lambda.
inline Cocharacter refine(const RootSystem& sys, const Cocharacter& lambda, const Cocharacter& mu) {
  for (int m = 1;; ++m) {
    Cocharacter zeta = m * lambda + mu;
    bool ok = true;
    for (auto r : sys.all_roots()) {
      int p = sys.pairing(r, lambda);
      if (p == 0) continue;
      int q = sys.pairing(r, zeta);
      if ((p > 0) != (q > 0) || q == 0) {
        ok = false;
        break;
      }
    }
    if (ok) return zeta;
  }
}

namespace detail {

inline Cocharacter integral(const RootSystem& sys, const std::vector<Rational>& v) {
  long long l = 1;
  for (const auto& x : v) l = std::lcm(l, x.den);
  std::vector<int> c(sys.rank());
  long long g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    c[i] = static_cast<int>(v[i].num * (l / v[i].den));
    g = std::gcd(g, static_cast<long long>(std::abs(c[i])));
  }
  if (g > 1)
    for (auto& x : c) x = static_cast<int>(x / g);
  return Cocharacter{c};
}

/// Basis of the rational null space of m (rows x cols).
inline std::vector<std::vector<Rational>> nullspace(std::vector<std::vector<Rational>> m, std::size_t cols) {
  std::vector<int> pivot_col;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t p = row;
    while (p < m.size() && m[p][c].num == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    Rational inv = Rational(1) / m[row][c];
    for (auto& x : m[row]) x = x * inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][c].num == 0) continue;
      Rational f = m[r][c];
      for (std::size_t k = 0; k < cols; ++k) m[r][k] = m[r][k] - f * m[row][k];
    }
    pivot_col.push_back(static_cast<int>(c));
    ++row;
  }
  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (std::find(pivot_col.begin(), pivot_col.end(), static_cast<int>(f)) != pivot_col.end()) continue;
    std::vector<Rational> v(cols);
    v[f] = 1;
    for (std::size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = Rational(0) - m[r][f];
    basis.push_back(v);
  }
  return basis;
}

}  // namespace detail

/// Basis of the cocharacters fixed by every map (rational kernel, each
/// vector scaled to a primitive integral one).
inline std::vector<Cocharacter> fixed_cocharacters(const RootSystem& sys, const std::vector<RootMap>& maps) {
  using detail::Rational;
  const int n = sys.rank();
  std::vector<std::vector<Rational>> rows;
  for (const auto& m : maps) {
    std::vector<std::vector<int>> cols;
    for (int j = 0; j < n; ++j) cols.push_back(sys.act(m, sys.coroot(sys.simple(j))).coeffs);
    for (int i = 0; i < n; ++i) {
      std::vector<Rational> r(n);
      for (int j = 0; j < n; ++j) r[j] = Rational(cols[j][i] - (i == j ? 1 : 0));
      rows.push_back(r);
    }
  }
  std::vector<Cocharacter> out;
  for (const auto& v : detail::nullspace(rows, n)) out.push_back(detail::integral(sys, v));
  return out;
}

/// The cocharacter in the span of the coroots of `basis` whose pairing with
/// basis[i] is targets[i], scaled to be integral.
inline Cocharacter cocharacter_with_pairings(const RootSystem& sys, const std::vector<Root>& basis,
                                             const std::vector<int>& targets) {
  using detail::Rational;
  const std::size_t k = basis.size();
  if (k == 0) return sys.zero_cocharacter();
  std::vector<std::vector<Rational>> m(k, std::vector<Rational>(k));
  std::vector<Rational> b(k);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t c = 0; c < k; ++c) m[a][c] = sys.pairing(basis[a], sys.coroot(basis[c]));
    b[a] = targets[a];
  }
  auto x = detail::solve(m, b);
  std::vector<Rational> v(sys.rank());
  for (std::size_t c = 0; c < k; ++c)
    for (int j = 0; j < sys.rank(); ++j) v[j] = v[j] + x[c] * Rational(sys.coeffs(basis[c])[j]);
  return detail::integral(sys, v);
}

/// Simple system of the Levi roots: positive Levi roots that are not sums of
/// two positive Levi roots.
inline std::vector<Root> levi_simple_roots(const RootSystem& sys, const RParabolicData& d) {
  std::vector<Root> pos;
  for (auto r : d.l_roots)
    if (sys.is_positive(r)) pos.push_back(r);
  std::vector<Root> out;
  for (auto r : pos) {
    bool decomposable = false;
    for (auto a : pos)
      for (auto b : pos)
        if (auto s = sys.sum(a, b); s && *s == r) decomposable = true;
    if (!decomposable) out.push_back(r);
  }
  return out;
}

struct RefinementPattern {
  std::vector<Root> kept;  // Levi simple roots that stay in the smaller Levi
  Cocharacter mu;
  Cocharacter zeta;
  bool contains = false;
};

struct MinimalityReport {
  std::vector<RefinementPattern> patterns;  // proper refinements, smallest Levi first
  std::optional<RParabolicData> smaller;    // first proper refinement containing the generators

  bool minimal() const { return !smaller.has_value(); }
};

/// Checks every standard refinement P_zeta of P_lambda, zeta = m lambda + mu
/// with mu ranging over one representative per proper subset of the Levi
/// simple roots, for containment of the generators.
inline MinimalityReport minimality_certificate(const RootSystem& sys, const RParabolicData& data,
                                               const std::vector<GroupWord>& generators) {
  std::vector<NormalWord> gens;
  for (const auto& g : generators) {
    gens.push_back(normalize(sys, g));
    if (!in_parabolic(sys, data.lambda, gens.back())) throw DomainError("generator " + render(sys, g) + " lies outside P");
  }
  auto simples = levi_simple_roots(sys, data);
  const std::size_t k = simples.size();
  std::vector<unsigned> subsets;
  for (unsigned mask = 0; mask + 1 < (1u << k); ++mask) subsets.push_back(mask);
  std::stable_sort(subsets.begin(), subsets.end(),
                   [](unsigned a, unsigned b) { return std::popcount(a) < std::popcount(b); });
  MinimalityReport rep;
  for (unsigned mask : subsets) {
    RefinementPattern pat;
    std::vector<int> targets(k);
    for (std::size_t i = 0; i < k; ++i) {
      if (mask & (1u << i)) pat.kept.push_back(simples[i]);
      targets[i] = (mask & (1u << i)) ? 0 : 1;
    }
    pat.mu = cocharacter_with_pairings(sys, simples, targets);
    pat.zeta = refine(sys, data.lambda, pat.mu);
    pat.contains = std::all_of(gens.begin(), gens.end(), [&](const NormalWord& g) { return in_parabolic(sys, pat.zeta, g); });
    if (pat.contains && !rep.smaller) rep.smaller = rparabolic(sys, pat.zeta);
    rep.patterns.push_back(std::move(pat));
  }
  return rep;
}

struct StandardParabolic {
  std::vector<int> levi_simples;  // indices of the simple roots in the Levi
  Cocharacter lambda;
};

/// Proper standard parabolics P_J (J a proper subset of the simple roots)
/// containing every generator.
inline std::vector<StandardParabolic> standard_parabolics_containing(const RootSystem& sys,
                                                                     const std::vector<GroupWord>& generators) {
  std::vector<NormalWord> gens;
  for (const auto& g : generators) gens.push_back(normalize(sys, g));
  std::vector<Root> all_simple;
  for (int i = 0; i < sys.rank(); ++i) all_simple.push_back(sys.simple(i));
  std::vector<StandardParabolic> out;
  for (unsigned mask = 0; mask + 1 < (1u << sys.rank()); ++mask) {
    std::vector<int> targets(sys.rank());
    StandardParabolic p;
    for (int i = 0; i < sys.rank(); ++i) {
      if (mask & (1u << i)) p.levi_simples.push_back(i);
      targets[i] = (mask & (1u << i)) ? 0 : 1;
    }
    p.lambda = cocharacter_with_pairings(sys, all_simple, targets);
    if (std::all_of(gens.begin(), gens.end(), [&](const NormalWord& g) { return in_parabolic(sys, p.lambda, g); }))
      out.push_back(std::move(p));
  }
  return out;
}

}  // namespace crlab
