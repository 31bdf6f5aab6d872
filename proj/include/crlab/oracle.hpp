#pragma once

// SL_3 x <sigma> over GF(2^m) as explicit 3x3 matrices. Evaluates A_2 words
// atom by atom, without the rewriting in chevalley.hpp:
//   e_a(x) = I + x E12, e_b(x) = I + x E23, e_{a+b}(x) = I + x E13 (negatives transposed)
//   a^v(t) = diag(t, 1/t, 1), b^v(t) = diag(1, t, 1/t)
//   sigma(g) = J (g^T)^-1 J with J antidiagonal.

#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "crlab/chevalley.hpp"

namespace crlab {

class GF2m {
 public:
  explicit GF2m(int m) : m_(m) {
    switch (m) {
      case 1: poly_ = 0b11; break;
      case 2: poly_ = 0b111; break;
      case 4: poly_ = 0b10011; break;
      default: throw DomainError("supported fields: F2, F4, F16");
    }
  }
  static GF2m of_size(int q) {
    if (q == 2) return GF2m(1);
    if (q == 4) return GF2m(2);
    if (q == 16) return GF2m(4);
    throw DomainError("field size must be 2, 4 or 16");
  }

  int degree() const { return m_; }
  int size() const { return 1 << m_; }
  std::uint8_t add(std::uint8_t a, std::uint8_t b) const { return a ^ b; }
  std::uint8_t mul(std::uint8_t a, std::uint8_t b) const {
    unsigned r = 0, x = a;
    for (; b; b >>= 1, x <<= 1)
      if (b & 1) r ^= x;
    for (int bit = 2 * m_ - 2; bit >= m_; --bit)
      if (r & (1u << bit)) r ^= poly_ << (bit - m_);
    return static_cast<std::uint8_t>(r);
  }
  std::uint8_t inv(std::uint8_t a) const {
    if (a == 0) throw DomainError("inverse of zero");
    return pow(a, size() - 2);
  }
  std::uint8_t pow(std::uint8_t a, long e) const {
    if (e < 0) return pow(inv(a), -e);
    std::uint8_t r = 1;
    for (; e > 0; e >>= 1, a = mul(a, a))
      if (e & 1) r = mul(r, a);
    return r;
  }

 private:
  int m_;
  unsigned poly_;
};

using Mat3 = std::array<std::array<std::uint8_t, 3>, 3>;

inline Mat3 mat_identity() {
  Mat3 m{};
  for (int i = 0; i < 3; ++i) m[i][i] = 1;
  return m;
}

inline Mat3 mat_mul(const GF2m& f, const Mat3& a, const Mat3& b) {
  Mat3 r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) r[i][j] ^= f.mul(a[i][k], b[k][j]);
  return r;
}

inline Mat3 mat_add(const Mat3& a, const Mat3& b) {
  Mat3 r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = a[i][j] ^ b[i][j];
  return r;
}

inline Mat3 mat_transpose(const Mat3& a) {
  Mat3 r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = a[j][i];
  return r;
}

inline std::uint8_t mat_det(const GF2m& f, const Mat3& a) {
  auto m = [&](std::uint8_t x, std::uint8_t y) { return f.mul(x, y); };
  return m(a[0][0], m(a[1][1], a[2][2]) ^ m(a[1][2], a[2][1])) ^ m(a[0][1], m(a[1][0], a[2][2]) ^ m(a[1][2], a[2][0])) ^
         m(a[0][2], m(a[1][0], a[2][1]) ^ m(a[1][1], a[2][0]));
}

inline Mat3 mat_inverse(const GF2m& f, const Mat3& a) {
  std::uint8_t d = mat_det(f, a);
  std::uint8_t di = f.inv(d);
  Mat3 r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      std::uint8_t cof = f.mul(a[r0][c0], a[r1][c1]) ^ f.mul(a[r0][c1], a[r1][c0]);
      r[i][j] = f.mul(cof, di);
    }
  return r;
}

/// X -> J X J, i.e. entry (i,j) moves to (2-i, 2-j).
inline Mat3 mat_flip(const Mat3& a) {
  Mat3 r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = a[2 - i][2 - j];
  return r;
}

inline Mat3 apply_sigma(const GF2m& f, const Mat3& g) { return mat_flip(mat_inverse(f, mat_transpose(g))); }

/// The induced map on sl_3: X -> J X^T J (the sign is invisible in characteristic 2).
inline Mat3 apply_sigma_lie(const Mat3& x) { return mat_flip(mat_transpose(x)); }

/// A * sigma^flag
struct MatrixElement {
  Mat3 a = mat_identity();
  bool flag = false;

  friend bool operator==(const MatrixElement&, const MatrixElement&) = default;
  friend auto operator<=>(const MatrixElement&, const MatrixElement&) = default;
};

inline MatrixElement multiply(const GF2m& f, const MatrixElement& x, const MatrixElement& y) {
  return {mat_mul(f, x.a, x.flag ? apply_sigma(f, y.a) : y.a), x.flag != y.flag};
}

inline MatrixElement inverse(const GF2m& f, const MatrixElement& x) {
  Mat3 ai = mat_inverse(f, x.a);
  return {x.flag ? apply_sigma(f, ai) : ai, x.flag};
}

/// x y x^-1
inline MatrixElement conjugate(const GF2m& f, const MatrixElement& x, const MatrixElement& y) {
  return multiply(f, multiply(f, x, y), inverse(f, x));
}

inline MatrixElement sigma_matrix() { return {mat_identity(), true}; }

/// The root element at the position given by the coefficient vector (c_a, c_b).
inline MatrixElement root_matrix(int ca, int cb, std::uint8_t x) {
  Mat3 m = mat_identity();
  int sign = ca + cb > 0 ? 1 : -1;
  int i = 0, j = 0;
  if (std::abs(ca) == 1 && cb == 0) i = 0, j = 1;
  else if (ca == 0 && std::abs(cb) == 1) i = 1, j = 2;
  else if (std::abs(ca) == 1 && std::abs(cb) == 1) i = 0, j = 2;
  else throw DomainError("not an A2 root");
  if (sign < 0) std::swap(i, j);
  m[i][j] = x;
  return {m, false};
}

inline MatrixElement torus_matrix(const GF2m& f, int ca, int cb, std::uint8_t t) {
  Mat3 m{};
  m[0][0] = f.pow(t, ca);
  m[1][1] = f.pow(t, cb - ca);
  m[2][2] = f.pow(t, -cb);
  return {m, false};
}

/// Values of the registry variables; unit variables must be nonzero.
using Point = std::vector<std::uint8_t>;

inline std::uint8_t evaluate(const GF2m& f, const Polynomial& p, const Point& pt) {
  std::uint8_t r = 0;
  for (const auto& m : p.terms()) {
    std::uint8_t t = 1;
    for (auto [v, e] : m.exponents()) t = f.mul(t, f.pow(pt.at(v), e));
    r ^= t;
  }
  return r;
}

inline void require_a2(const RootSystem& sys) {
  if (sys.name() != "A2") throw DomainError("the matrix oracle covers A2 only");
}

inline MatrixElement evaluate(const GF2m& f, const RootSystem& sys, const GroupAtom& atom, const Point& pt) {
  require_a2(sys);
  if (auto* e = std::get_if<RootElement>(&atom)) {
    const auto& c = sys.coeffs(e->root);
    return root_matrix(c[0], c[1], evaluate(f, e->coeff, pt));
  }
  if (auto* w = std::get_if<WeylRep>(&atom)) {
    const auto& c = sys.coeffs(w->root);
    MatrixElement p = root_matrix(c[0], c[1], 1), m = root_matrix(-c[0], -c[1], 1);
    return multiply(f, multiply(f, p, m), p);
  }
  if (auto* t = std::get_if<TorusValue>(&atom)) {
    std::uint8_t u = evaluate(f, t->unit, pt);
    return torus_matrix(f, t->cochar.coeffs[0], t->cochar.coeffs[1], u);
  }
  const auto& g = std::get<GraphAut>(atom).map;
  if (g.is_identity()) return {};
  if (g == sys.sigma()) return sigma_matrix();
  throw DomainError("unknown graph automorphism");
}

inline MatrixElement evaluate(const GF2m& f, const RootSystem& sys, const GroupWord& w, const Point& pt) {
  MatrixElement r;
  for (const auto& a : w.atoms) r = multiply(f, r, evaluate(f, sys, a, pt));
  return r;
}

/// Ad(g) X = A sigma^flag(X) A^-1 on sl_3.
inline Mat3 adjoint(const GF2m& f, const MatrixElement& g, const Mat3& x) {
  Mat3 y = g.flag ? apply_sigma_lie(x) : x;
  return mat_mul(f, mat_mul(f, g.a, y), mat_inverse(f, g.a));
}

/// Basis vector e_zeta of sl_3 as a matrix unit.
inline Mat3 lie_basis(const RootSystem& sys, Root r) {
  const auto& c = sys.coeffs(r);
  return mat_add(root_matrix(c[0], c[1], 1).a, mat_identity());
}

inline Point random_point(const GF2m& f, const RegistryPtr& reg, std::mt19937_64& rng) {
  Point pt(reg ? reg->size() : 0);
  std::uniform_int_distribution<int> any(0, f.size() - 1), nonzero(1, f.size() - 1);
  for (int v = 0; v < static_cast<int>(pt.size()); ++v)
    pt[v] = static_cast<std::uint8_t>(reg->is_unit(v) ? nonzero(rng) : any(rng));
  return pt;
}

/// Compares both sides at `points` random points of the field.
inline bool matrix_oracle_check(const RootSystem& sys, const GroupWord& lhs, const GroupWord& rhs, const RegistryPtr& reg,
                                std::mt19937_64& rng, int points = 8, const GF2m& field = GF2m(4)) {
  require_a2(sys);
  for (int i = 0; i < points; ++i) {
    Point pt = random_point(field, reg, rng);
    if (!(evaluate(field, sys, lhs, pt) == evaluate(field, sys, rhs, pt))) return false;
  }
  return true;
}

/// M(F_q) = <sigma, G_{a+b}(F_q)> by breadth-first closure.
inline std::vector<MatrixElement> m_group(const GF2m& f) {
  std::vector<MatrixElement> gens{sigma_matrix()};
  for (int c = 1; c < f.size(); ++c) {
    gens.push_back(root_matrix(1, 1, static_cast<std::uint8_t>(c)));
    gens.push_back(root_matrix(-1, -1, static_cast<std::uint8_t>(c)));
  }
  std::set<MatrixElement> seen{MatrixElement{}};
  std::vector<MatrixElement> out{MatrixElement{}};
  for (std::size_t i = 0; i < out.size(); ++i)
    for (const auto& g : gens) {
      MatrixElement h = multiply(f, out[i], g);
      if (seen.insert(h).second) out.push_back(h);
    }
  return out;
}

/// (m1, m2)_x = (sigma e_{a+b}(x^2), e_{a+b}(1))
inline std::pair<MatrixElement, MatrixElement> m_pair(const GF2m& f, std::uint8_t x) {
  return {multiply(f, sigma_matrix(), root_matrix(1, 1, f.mul(x, x))), root_matrix(1, 1, 1)};
}

struct ConjugacyPartition {
  std::size_t group_order = 0;
  std::vector<std::vector<int>> classes;
};

/// Partition of the pairs (m1, m2)_x, x in `values`, under simultaneous
/// conjugation by M(F_q).
inline ConjugacyPartition enumerate_m_conjugacy(int q, const std::vector<int>& values) {
  GF2m f = GF2m::of_size(q);
  for (int v : values)
    if (v < 0 || v >= q) throw DomainError("value outside the field");
  auto group = m_group(f);
  ConjugacyPartition part{group.size(), {}};
  std::vector<bool> done(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (done[i]) continue;
    std::set<std::pair<MatrixElement, MatrixElement>> orbit;
    auto p = m_pair(f, static_cast<std::uint8_t>(values[i]));
    for (const auto& g : group) orbit.insert({conjugate(f, g, p.first), conjugate(f, g, p.second)});
    std::vector<int> cls;
    for (std::size_t j = i; j < values.size(); ++j) {
      if (done[j]) continue;
      if (orbit.contains(m_pair(f, static_cast<std::uint8_t>(values[j])))) {
        done[j] = true;
        cls.push_back(values[j]);
      }
    }
    part.classes.push_back(cls);
  }
  return part;
}

}  // namespace crlab
