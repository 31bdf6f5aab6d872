#pragma once

// Root systems of simply-laced type (A_n, D_n), their Weyl groups and
// diagram automorphisms, realized on a dense root index.
//
// Indexing: positive roots occupy 0..N-1 ordered by (height, tie-break),
// negatives occupy N..2N-1 with index(-r) = index(r) + N. For D4 the
// positive order is the labelling of the D4 construction (label = index + 1).

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "crlab/error.hpp"

namespace crlab {

struct Root {
  int index = -1;
  friend auto operator<=>(const Root&, const Root&) = default;
};

/// Integer vector over the simple coroots.
struct Cocharacter {
  std::vector<int> coeffs;

  friend Cocharacter operator+(Cocharacter a, const Cocharacter& b) {
    if (a.coeffs.size() != b.coeffs.size()) throw DomainError("cocharacter rank mismatch");
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) a.coeffs[i] += b.coeffs[i];
    return a;
  }
  friend Cocharacter operator*(int k, Cocharacter a) {
    for (int& c : a.coeffs) c *= k;
    return a;
  }
  Cocharacter operator-() const { return -1 * *this; }
  bool is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](int c) { return c == 0; });
  }
  friend bool operator==(const Cocharacter&, const Cocharacter&) = default;
  friend auto operator<=>(const Cocharacter&, const Cocharacter&) = default;
};

/// A permutation-with-negation of the roots, stored as images of root indices.
class RootMap {
 public:
  RootMap() = default;
  explicit RootMap(std::vector<int> images) : images_(std::move(images)) {}

  static RootMap identity(int num_roots) {
    std::vector<int> im(num_roots);
    std::iota(im.begin(), im.end(), 0);
    return RootMap(std::move(im));
  }

  int size() const { return static_cast<int>(images_.size()); }
  Root operator()(Root r) const { return Root{images_.at(r.index)}; }
  int operator[](int i) const { return images_.at(i); }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const {
    for (int i = 0; i < size(); ++i)
      if (images_[i] != i) return false;
    return true;
  }

  RootMap inverse() const {
    std::vector<int> inv(images_.size());
    for (int i = 0; i < size(); ++i) inv[images_[i]] = i;
    return RootMap(std::move(inv));
  }

  /// (a * b)(r) = a(b(r)).
  friend RootMap operator*(const RootMap& a, const RootMap& b) {
    std::vector<int> im(b.images_.size());
    for (int i = 0; i < b.size(); ++i) im[i] = a.images_.at(b.images_[i]);
    return RootMap(std::move(im));
  }

  friend bool operator==(const RootMap&, const RootMap&) = default;
  friend auto operator<=>(const RootMap&, const RootMap&) = default;

 private:
  std::vector<int> images_;
};

/// A root map defined only on a subset of roots (e.g. the roots of a Levi
/// subsystem); undefined entries hold -1.
struct PartialRootMap {
  std::vector<int> images;

  bool defined(int i) const { return images.at(i) >= 0; }
  friend bool operator==(const PartialRootMap&, const PartialRootMap&) = default;
};

class RootSystem {
 public:
  static RootSystem A(int n) {
    if (n < 1) throw DomainError("A_n needs n >= 1");
    std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) {
      c[i][i] = 2;
      if (i + 1 < n) c[i][i + 1] = c[i + 1][i] = -1;
    }
    return RootSystem("A" + std::to_string(n), std::move(c), /*d4_labels=*/false);
  }

  static RootSystem D(int n) {
    if (n < 4) throw DomainError("D_n needs n >= 4");
    std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) c[i][i] = 2;
    for (int i = 0; i + 2 < n - 1; ++i) c[i][i + 1] = c[i + 1][i] = -1;
    c[n - 3][n - 2] = c[n - 2][n - 3] = -1;
    c[n - 3][n - 1] = c[n - 1][n - 3] = -1;
    return RootSystem("D" + std::to_string(n), std::move(c), n == 4);
  }

  static RootSystem D4() { return D(4); }

  /// "a2", "A3", "d4", ...
  static RootSystem by_name(std::string_view name) {
    if (name.size() >= 2) {
      char t = static_cast<char>(std::tolower(static_cast<unsigned char>(name[0])));
      int n = std::stoi(std::string(name.substr(1)));
      if (t == 'a' && n >= 1 && n <= 4) return A(n);
      if (t == 'd' && n == 4) return D(4);
    }
    throw DomainError("unsupported root system '" + std::string(name) + "' (supported: a1..a4, d4)");
  }

  const std::string& name() const { return name_; }
  int rank() const { return static_cast<int>(cartan_.size()); }
  int num_roots() const { return static_cast<int>(roots_.size()); }
  int num_positive() const { return num_roots() / 2; }
  int cartan(int i, int j) const { return cartan_.at(i).at(j); }
  const std::vector<std::vector<int>>& cartan_matrix() const { return cartan_; }

  const std::vector<int>& coeffs(Root r) const { return roots_.at(r.index); }
  Root simple(int i) const { return Root{simple_index_.at(i)}; }
  bool is_positive(Root r) const { return r.index < num_positive(); }
  Root negate(Root r) const {
    int n = num_positive();
    return Root{r.index < n ? r.index + n : r.index - n};
  }
  int height(Root r) const {
    const auto& c = coeffs(r);
    return std::accumulate(c.begin(), c.end(), 0);
  }
  std::optional<int> simple_of(Root r) const {
    for (int i = 0; i < rank(); ++i)
      if (simple_index_[i] == r.index) return i;
    return std::nullopt;
  }

  std::optional<Root> find(const std::vector<int>& c) const {
    auto it = index_.find(c);
    if (it == index_.end()) return std::nullopt;
    return Root{it->second};
  }
  Root root(const std::vector<int>& c) const {
    auto r = find(c);
    if (!r) throw DomainError("not a root of " + name_);
    return *r;
  }
  void check(Root r) const {
    if (r.index < 0 || r.index >= num_roots()) throw DomainError("root index outside " + name_);
  }

  /// zeta + xi when that is a root.
  std::optional<Root> sum(Root a, Root b) const {
    std::vector<int> c = coeffs(a);
    const auto& d = coeffs(b);
    for (int i = 0; i < rank(); ++i) c[i] += d[i];
    return find(c);
  }

  std::vector<Root> all_roots() const {
    std::vector<Root> out;
    for (int i = 0; i < num_roots(); ++i) out.push_back(Root{i});
    return out;
  }
  std::vector<Root> positive_roots() const {
    std::vector<Root> out;
    for (int i = 0; i < num_positive(); ++i) out.push_back(Root{i});
    return out;
  }

  // Labels: positive roots 1..N, negatives -1..-N.
  int label(Root r) const { return is_positive(r) ? r.index + 1 : -(r.index - num_positive() + 1); }
  Root from_label(int label) const {
    int n = num_positive();
    if (label == 0 || label > n || label < -n)
      throw DomainError("label " + std::to_string(label) + " outside " + name_);
    return label > 0 ? Root{label - 1} : Root{-label - 1 + n};
  }

  char simple_name(int i) const { return static_cast<char>('a' + i); }

  /// <zeta, chi> via the Cartan matrix.
  int pairing(Root zeta, const Cocharacter& chi) const {
    check(zeta);
    if (static_cast<int>(chi.coeffs.size()) != rank()) throw DomainError("cocharacter rank mismatch");
    const auto& z = coeffs(zeta);
    int p = 0;
    for (int i = 0; i < rank(); ++i)
      for (int j = 0; j < rank(); ++j) p += z[i] * chi.coeffs[j] * cartan_[i][j];
    return p;
  }

  /// Coroot of a root (simply-laced: same coefficient vector).
  Cocharacter coroot(Root r) const { return Cocharacter{coeffs(r)}; }
  Cocharacter zero_cocharacter() const { return Cocharacter{std::vector<int>(rank(), 0)}; }

  /// s_xi . zeta = zeta - <zeta, xi^vee> xi
  Root reflect(Root xi, Root zeta) const {
    check(xi);
    check(zeta);
    int n = pairing(zeta, coroot(xi));
    std::vector<int> c = coeffs(zeta);
    const auto& x = coeffs(xi);
    for (int i = 0; i < rank(); ++i) c[i] -= n * x[i];
    return root(c);
  }

  RootMap reflection(Root xi) const {
    std::vector<int> im(num_roots());
    for (int i = 0; i < num_roots(); ++i) im[i] = reflect(xi, Root{i}).index;
    return RootMap(std::move(im));
  }
  RootMap simple_reflection(int i) const { return reflection(simple(i)); }
  RootMap minus_one() const {
    std::vector<int> im(num_roots());
    for (int i = 0; i < num_roots(); ++i) im[i] = negate(Root{i}).index;
    return RootMap(std::move(im));
  }

  /// Linear extension of a map given on simple roots (images as root indices).
  RootMap linear_map(const std::vector<int>& simple_images) const {
    std::vector<int> im(num_roots());
    for (int r = 0; r < num_roots(); ++r) {
      std::vector<int> c(rank(), 0);
      const auto& z = roots_[r];
      for (int i = 0; i < rank(); ++i) {
        const auto& img = roots_.at(simple_images.at(i));
        for (int j = 0; j < rank(); ++j) c[j] += z[i] * img[j];
      }
      auto found = find(c);
      if (!found) throw DomainError("simple-root images do not define a root map");
      im[r] = found->index;
    }
    return RootMap(std::move(im));
  }

  /// All symmetries of the Dynkin diagram, identity first.
  const std::vector<RootMap>& diagram_automorphisms() const { return diagram_auts_; }

  /// The distinguished graph automorphism: triality a->c->d->a for D4, the
  /// flip for A_n (n >= 2); identity otherwise.
  const RootMap& sigma() const { return sigma_; }
  int sigma_order() const { return sigma_order_; }

  bool is_diagram_automorphism(const RootMap& m) const {
    return std::find(diagram_auts_.begin(), diagram_auts_.end(), m) != diagram_auts_.end();
  }

  /// Every element of W as a root map, identity first (breadth-first in length).
  const std::vector<RootMap>& weyl_group() const { return weyl_; }

  /// Action on cocharacters through the dual permutation of coroots.
  Cocharacter act(const RootMap& m, const Cocharacter& chi) const {
    std::vector<int> c(rank(), 0);
    for (int i = 0; i < rank(); ++i) {
      const auto& img = coeffs(m(simple(i)));
      for (int j = 0; j < rank(); ++j) c[j] += chi.coeffs.at(i) * img[j];
    }
    return Cocharacter{c};
  }

  std::string render(Root r) const { return render_vector(coeffs(r)); }
  std::string render(const Cocharacter& c) const { return render_vector(c.coeffs); }
  std::string render_label(Root r) const { return std::to_string(label(r)); }

  std::string render_vector(const std::vector<int>& v) const {
    std::string out;
    for (int i = 0; i < rank(); ++i) {
      int c = v.at(i);
      if (c == 0) continue;
      if (c > 0 && !out.empty()) out += "+";
      if (c < 0) out += "-";
      if (std::abs(c) != 1) out += std::to_string(std::abs(c));
      out += simple_name(i);
    }
    return out.empty() ? "0" : out;
  }

  /// "a+2b+c+d", "-b", "0"; a bare (signed) integer is a label when
  /// labels_allowed is set.
  std::vector<int> parse_vector(std::string_view text, bool labels_allowed) const {
    std::string s;
    for (char ch : text)
      if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw ParseError("empty root expression", 0);
    if (labels_allowed) {
      std::size_t k = (s[0] == '-' || s[0] == '+') ? 1 : 0;
      if (k < s.size() && std::all_of(s.begin() + k, s.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
        return coeffs(from_label(std::stoi(s)));
    }
    if (s == "0") return std::vector<int>(rank(), 0);
    std::vector<int> v(rank(), 0);
    std::size_t i = 0;
    while (i < s.size()) {
      int sign = 1;
      if (s[i] == '+' || s[i] == '-') {
        sign = s[i] == '-' ? -1 : 1;
        ++i;
      } else if (i != 0) {
        throw ParseError("expected '+' or '-'", i);
      }
      int mult = 1;
      std::size_t start = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      if (i > start) mult = std::stoi(s.substr(start, i - start));
      if (i >= s.size() || !std::isalpha(static_cast<unsigned char>(s[i])))
        throw ParseError("expected simple root letter", i);
      int idx = s[i] - 'a';
      if (idx < 0 || idx >= rank()) throw ParseError("no simple root '" + std::string(1, s[i]) + "' in " + name_, i);
      v[idx] += sign * mult;
      ++i;
    }
    return v;
  }

  Root parse_root(std::string_view text) const {
    auto v = parse_vector(text, true);
    auto r = find(v);
    if (!r) throw DomainError("'" + std::string(text) + "' is not a root of " + name_);
    return *r;
  }
  Cocharacter parse_cocharacter(std::string_view text) const { return Cocharacter{parse_vector(text, false)}; }

 private:
  RootSystem(std::string name, std::vector<std::vector<int>> cartan, bool d4_labels)
      : name_(std::move(name)), cartan_(std::move(cartan)) {
    generate_roots(d4_labels);
    generate_diagram_automorphisms();
    generate_weyl_group();
  }

  void generate_roots(bool d4_labels) {
    const int n = rank();
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> frontier;
    for (int i = 0; i < n; ++i) {
      std::vector<int> e(n, 0);
      e[i] = 1;
      seen.insert(e);
      frontier.push_back(e);
    }
    while (!frontier.empty()) {
      std::vector<std::vector<int>> next;
      for (const auto& r : frontier) {
        for (int i = 0; i < n; ++i) {
          int p = 0;
          for (int j = 0; j < n; ++j) p += r[j] * cartan_[j][i];
          std::vector<int> s = r;
          s[i] -= p;
          if (seen.insert(s).second) next.push_back(s);
        }
      }
      frontier = std::move(next);
    }
    std::vector<std::vector<int>> pos;
    for (const auto& r : seen)
      if (std::all_of(r.begin(), r.end(), [](int c) { return c >= 0; })) pos.push_back(r);
    std::sort(pos.begin(), pos.end(), [](const auto& a, const auto& b) {
      int ha = std::accumulate(a.begin(), a.end(), 0), hb = std::accumulate(b.begin(), b.end(), 0);
      if (ha != hb) return ha < hb;
      return a > b;
    });
    if (d4_labels) pos = d4_label_order();
    roots_ = pos;
    for (const auto& r : pos) {
      std::vector<int> m = r;
      for (int& c : m) c = -c;
      roots_.push_back(m);
    }
    for (int i = 0; i < num_roots(); ++i) index_[roots_[i]] = i;
    simple_index_.resize(n);
    for (int i = 0; i < n; ++i) {
      std::vector<int> e(n, 0);
      e[i] = 1;
      simple_index_[i] = index_.at(e);
    }
  }

  // Positive roots of D4 in label order 1..12, coefficients over (a, b, c, d)
  // with b the central node. Fixed by the brute-force search in the tests.
  static std::vector<std::vector<int>> d4_label_order() {
    return {
        {1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {0, 1, 0, 0},  // 1..4
        {1, 1, 0, 0}, {0, 1, 1, 0}, {0, 1, 0, 1},                // 5..7
        {1, 1, 1, 0}, {1, 1, 0, 1}, {0, 1, 1, 1},                // 8..10
        {1, 1, 1, 1}, {1, 2, 1, 1},                              // 11, 12
    };
  }

  void generate_diagram_automorphisms() {
    const int n = rank();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      bool ok = true;
      for (int i = 0; i < n && ok; ++i)
        for (int j = 0; j < n && ok; ++j) ok = cartan_[perm[i]][perm[j]] == cartan_[i][j];
      if (!ok) continue;
      std::vector<int> imgs(n);
      for (int i = 0; i < n; ++i) imgs[i] = simple_index_[perm[i]];
      diagram_auts_.push_back(linear_map(imgs));
    } while (std::next_permutation(perm.begin(), perm.end()));

    sigma_ = RootMap::identity(num_roots());
    sigma_order_ = 1;
    std::vector<int> imgs(n);
    if (name_ == "D4") {
      // a -> c -> d -> a, b fixed
      imgs = {simple_index_[2], simple_index_[1], simple_index_[3], simple_index_[0]};
      sigma_ = linear_map(imgs);
      sigma_order_ = 3;
    } else if (name_[0] == 'A' && n >= 2) {
      for (int i = 0; i < n; ++i) imgs[i] = simple_index_[n - 1 - i];
      sigma_ = linear_map(imgs);
      sigma_order_ = 2;
    }
  }

  void generate_weyl_group() {
    std::vector<RootMap> gens;
    for (int i = 0; i < rank(); ++i) gens.push_back(reflection(simple(i)));
    std::set<RootMap> seen{RootMap::identity(num_roots())};
    weyl_.push_back(RootMap::identity(num_roots()));
    for (std::size_t k = 0; k < weyl_.size(); ++k) {
      for (const auto& g : gens) {
        RootMap w = weyl_[k] * g;
        if (seen.insert(w).second) weyl_.push_back(w);
      }
    }
  }

  std::string name_;
  std::vector<std::vector<int>> cartan_;
  std::vector<std::vector<int>> roots_;
  std::map<std::vector<int>, int> index_;
  std::vector<int> simple_index_;
  std::vector<RootMap> diagram_auts_;
  RootMap sigma_;
  int sigma_order_ = 1;
  std::vector<RootMap> weyl_;
};

// ---------------------------------------------------------------------------
// Operations

inline int pairing(const RootSystem& sys, Root zeta, const Cocharacter& chi) { return sys.pairing(zeta, chi); }

inline Root reflect(const RootSystem& sys, Root xi, Root zeta) { return sys.reflect(xi, zeta); }

inline Root diagram_act(const RootSystem& sys, const RootMap& sigma, Root zeta) {
  if (!sys.is_diagram_automorphism(sigma)) throw DomainError("not a diagram automorphism of " + sys.name());
  return sigma(zeta);
}

/// A letter of a word in W extended by diagram symmetries.
struct WeylLetter {
  enum class Kind { SimpleReflection, Reflection, Diagram };
  Kind kind;
  int simple = -1;          // SimpleReflection
  Root root{};              // Reflection n_xi for an arbitrary root
  RootMap diagram{};        // Diagram

  static WeylLetter s(int i) { return {Kind::SimpleReflection, i, {}, {}}; }
  static WeylLetter n(Root r) { return {Kind::Reflection, -1, r, {}}; }
  static WeylLetter graph(RootMap m) { return {Kind::Diagram, -1, {}, std::move(m)}; }
};

/// Root map of the group product g1 g2 ... gk.
inline RootMap weyl_word_map(const RootSystem& sys, const std::vector<WeylLetter>& word) {
  RootMap m = RootMap::identity(sys.num_roots());
  for (const auto& l : word) {
    switch (l.kind) {
      case WeylLetter::Kind::SimpleReflection: m = m * sys.simple_reflection(l.simple); break;
      case WeylLetter::Kind::Reflection: m = m * sys.reflection(l.root); break;
      case WeylLetter::Kind::Diagram: m = m * l.diagram; break;
    }
  }
  return m;
}

inline Root weyl_act(const RootSystem& sys, const std::vector<WeylLetter>& word, Root zeta) {
  return weyl_word_map(sys, word)(zeta);
}

inline bool in_span(const RootSystem& sys, Root r, const std::vector<int>& simples) {
  const auto& c = sys.coeffs(r);
  for (int i = 0; i < sys.rank(); ++i)
    if (c[i] != 0 && std::find(simples.begin(), simples.end(), i) == simples.end()) return false;
  return true;
}

/// Roots of the subsystem generated by the given simple roots.
inline std::vector<Root> subsystem_roots(const RootSystem& sys, const std::vector<int>& simples) {
  std::vector<Root> out;
  for (auto r : sys.all_roots())
    if (in_span(sys, r, simples)) out.push_back(r);
  return out;
}

/// Longest element of the parabolic subgroup W_J, as a map on all roots.
inline RootMap longest_element(const RootSystem& sys, const std::vector<int>& simples) {
  RootMap w = RootMap::identity(sys.num_roots());
  for (bool grew = true; grew;) {
    grew = false;
    for (int j : simples) {
      if (j < 0 || j >= sys.rank()) throw DomainError("simple root index out of range");
      if (sys.is_positive(w(sys.simple(j)))) {
        w = w * sys.simple_reflection(j);
        grew = true;
      }
    }
  }
  return w;
}

struct MinusOneRealization {
  RootMap w0;                          // longest element of W_L
  std::optional<PartialRootMap> sigma; // diagram symmetry of L, absent when w0 = -1 on Psi(L)
  PartialRootMap composite;            // w0 o sigma restricted to Psi(L)
  bool negates_subsystem = false;
};

inline PartialRootMap restrict_map(const RootSystem& sys, const RootMap& m, const std::vector<Root>& domain) {
  PartialRootMap p{std::vector<int>(sys.num_roots(), -1)};
  for (auto r : domain) p.images[r.index] = m(r).index;
  return p;
}

inline MinusOneRealization minus_one_realization(const RootSystem& sys, const std::vector<int>& simples) {
  MinusOneRealization out;
  out.w0 = longest_element(sys, simples);
  const auto psi = subsystem_roots(sys, simples);
  // sigma_L = w0^{-1} o (-1) = -w0 on Psi(L)
  PartialRootMap sig{std::vector<int>(sys.num_roots(), -1)};
  bool trivial = true;
  for (auto r : psi) {
    Root img = sys.negate(out.w0(r));
    sig.images[r.index] = img.index;
    if (img != r) trivial = false;
  }
  if (!trivial) {
    for (int j : simples) {
      Root img{sig.images[sys.simple(j).index]};
      auto sj = sys.simple_of(img);
      if (!sj || std::find(simples.begin(), simples.end(), *sj) == simples.end())
        throw std::logic_error("-w0 does not permute the simple roots of the subsystem");
    }
    out.sigma = sig;
  }
  out.composite = PartialRootMap{std::vector<int>(sys.num_roots(), -1)};
  for (auto r : psi) {
    Root s = out.sigma ? Root{out.sigma->images[r.index]} : r;
    out.composite.images[r.index] = out.w0(s).index;
  }
  out.negates_subsystem = std::all_of(psi.begin(), psi.end(), [&](Root r) {
    return out.composite.images[r.index] == sys.negate(r).index;
  });
  return out;
}

namespace detail {

struct Rational {
  long long num = 0, den = 1;
  Rational() = default;
  Rational(long long n, long long d = 1) : num(n), den(d) { normalize(); }
  void normalize() {
    if (den < 0) num = -num, den = -den;
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) num /= g, den /= g;
  }
  friend Rational operator+(Rational a, Rational b) { return {a.num * b.den + b.num * a.den, a.den * b.den}; }
  friend Rational operator-(Rational a, Rational b) { return {a.num * b.den - b.num * a.den, a.den * b.den}; }
  friend Rational operator*(Rational a, Rational b) { return {a.num * b.num, a.den * b.den}; }
  friend Rational operator/(Rational a, Rational b) { return {a.num * b.den, a.den * b.num}; }
  friend bool operator==(Rational a, Rational b) { return a.num == b.num && a.den == b.den; }
};

/// Solves m x = b over Q for square nonsingular m.
inline std::vector<Rational> solve(std::vector<std::vector<Rational>> m, std::vector<Rational> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col].num == 0) ++piv;
    if (piv == n) throw std::logic_error("singular system");
    std::swap(m[piv], m[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col].num == 0) continue;
      Rational f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] = m[r][c] - f * m[col][c];
      b[r] = b[r] - f * b[col];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / m[i][i];
  return x;
}

}  // namespace detail

/// Searches W x Aut(Dynkin) for an automorphism of the ambient root system
/// that agrees with `partial` on Psi(L) and fixes the orthogonal complement of
/// span Psi(L) (the central torus of L). Psi(L) is read off the domain of
/// `partial`; its simple roots are the ambient simple roots it contains.
inline std::optional<RootMap> extends_to_ambient(const RootSystem& sys, const PartialRootMap& partial) {
  std::vector<int> lsimples;
  for (int i = 0; i < sys.rank(); ++i)
    if (partial.defined(sys.simple(i).index)) lsimples.push_back(i);
  for (auto r : sys.all_roots()) {
    if (partial.defined(r.index) != in_span(sys, r, lsimples))
      throw DomainError("partial map must be defined exactly on a standard Levi subsystem");
  }
  using detail::Rational;
  const int n = sys.rank();
  const int k = static_cast<int>(lsimples.size());

  // Target images of the ambient simple roots, as rational coefficient vectors.
  std::vector<std::vector<Rational>> target(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i) {
    std::vector<Rational> proj(k);
    if (k > 0) {
      std::vector<std::vector<Rational>> gram(k, std::vector<Rational>(k));
      std::vector<Rational> rhs(k);
      for (int a = 0; a < k; ++a) {
        for (int b = 0; b < k; ++b) gram[a][b] = sys.cartan(lsimples[a], lsimples[b]);
        rhs[a] = sys.cartan(i, lsimples[a]);
      }
      proj = detail::solve(gram, rhs);
    }
    for (int j = 0; j < n; ++j) target[i][j] = Rational(j == i ? 1 : 0);
    for (int a = 0; a < k; ++a) {
      const auto& img = sys.coeffs(Root{partial.images[sys.simple(lsimples[a]).index]});
      for (int j = 0; j < n; ++j) {
        target[i][j] = target[i][j] + proj[a] * Rational(img[j]);
        if (j == lsimples[a]) target[i][j] = target[i][j] - proj[a];
      }
    }
  }
  for (const auto& w : sys.weyl_group()) {
    for (const auto& g : sys.diagram_automorphisms()) {
      RootMap m = w * g;
      bool ok = true;
      for (int i = 0; i < n && ok; ++i) {
        const auto& img = sys.coeffs(m(sys.simple(i)));
        for (int j = 0; j < n && ok; ++j) ok = target[i][j] == Rational(img[j]);
      }
      if (ok) return m;
    }
  }
  return std::nullopt;
}

struct W0Report {
  bool hypothesis_holds = false;   // w0bar_L extends to the ambient system
  std::optional<RootMap> w;        // w0bar_L o w0bar_G
  bool fixes_levi_roots = false;
  bool swaps_radicals = false;
  std::vector<std::string> lines;
  bool ok() const { return hypothesis_holds && fixes_levi_roots && swaps_radicals; }
};

/// With w = w0bar_L o w0bar_G, checks that w fixes every root of Psi(L) and
/// carries the lambda-positive roots onto their negatives.
inline W0Report verify_w0_identities(const RootSystem& sys, const std::vector<int>& lsimples, const Cocharacter& lambda) {
  std::vector<int> zero_simples;
  for (int i = 0; i < sys.rank(); ++i)
    if (sys.pairing(sys.simple(i), lambda) == 0) zero_simples.push_back(i);
  std::vector<int> sorted = lsimples;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != zero_simples) throw DomainError("Levi simple roots must be exactly those orthogonal to lambda");

  W0Report rep;
  const auto all = sys.all_roots();
  auto g_bar = extends_to_ambient(sys, restrict_map(sys, sys.minus_one(), all));
  if (!g_bar) throw std::logic_error("-1 is not an automorphism of " + sys.name());
  rep.lines.push_back("w0bar_G = -1 on all " + std::to_string(sys.num_roots()) + " roots");

  const auto psi = subsystem_roots(sys, lsimples);
  auto real = minus_one_realization(sys, lsimples);
  auto l_bar = extends_to_ambient(sys, real.composite);
  if (!l_bar) {
    rep.lines.push_back("w0bar_L does not extend to an automorphism of " + sys.name() + ": hypothesis fails");
    return rep;
  }
  rep.hypothesis_holds = true;
  rep.w = *l_bar * *g_bar;
  rep.fixes_levi_roots = std::all_of(psi.begin(), psi.end(), [&](Root r) { return (*rep.w)(r) == r; });
  rep.lines.push_back(std::string("w fixes Psi(L) (") + std::to_string(psi.size()) + " roots): " +
                      (rep.fixes_levi_roots ? "yes" : "no"));
  std::set<int> pos, neg_images;
  for (auto r : all)
    if (sys.pairing(r, lambda) > 0) pos.insert(r.index);
  rep.swaps_radicals = true;
  for (int r : pos) {
    int img = (*rep.w)(Root{r}).index;
    if (!pos.contains(sys.negate(Root{img}).index)) rep.swaps_radicals = false;
  }
  rep.lines.push_back(std::string("w maps Psi(R_u(P_lambda)) onto its negative (") + std::to_string(pos.size()) +
                      " roots): " + (rep.swaps_radicals ? "yes" : "no"));
  return rep;
}

/// Cycle notation of a root map restricted to a set of labels, e.g.
/// "(4 5 8 11 10 7)(6 9)(12)". The set must be stable.
inline std::string label_cycles(const RootSystem& sys, const RootMap& m, std::vector<int> labels) {
  std::sort(labels.begin(), labels.end());
  std::set<int> todo(labels.begin(), labels.end());
  std::string out;
  while (!todo.empty()) {
    int start = *todo.begin();
    out += "(";
    int cur = start;
    bool first = true;
    do {
      if (!todo.erase(cur)) throw DomainError("label set is not stable under the map");
      if (!first) out += " ";
      out += std::to_string(cur);
      first = false;
      cur = sys.label(m(sys.from_label(cur)));
    } while (cur != start);
    out += ")";
  }
  return out;
}

}  // namespace crlab
