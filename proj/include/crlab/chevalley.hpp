#pragma once

// Words in Steinberg generators of a simply-laced Chevalley group in
// characteristic 2, extended by graph automorphisms.
//
// All structure constants are 1: the group is characteristic 2 and
// simply-laced, so every sign in the Chevalley relations vanishes:
//   e_z(x) e_w(y) = e_w(y) e_z(x) e_{z+w}(xy)   (z+w a root, else they commute)
//   n_w e_z(x) n_w^-1 = e_{s_w z}(x),  sigma e_z(x) sigma^-1 = e_{sigma z}(x)
//   chi(t) e_z(x) chi(t)^-1 = e_z(t^<z,chi> x),  e_z(x)^-1 = e_z(x),  n_w^2 = 1.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "crlab/coeffring.hpp"
#include "crlab/error.hpp"
#include "crlab/rootsys.hpp"

namespace crlab {

struct RootElement {
  Root root;
  Polynomial coeff;
};

/// n_xi = e_xi(1) e_-xi(1) e_xi(1)
struct WeylRep {
  Root root;
};

/// chi(m) for a unit monomial m.
struct TorusValue {
  Cocharacter cochar;
  Polynomial unit;
};

struct GraphAut {
  RootMap map;
};

using GroupAtom = std::variant<RootElement, WeylRep, TorusValue, GraphAut>;

struct GroupWord {
  std::vector<GroupAtom> atoms;

  GroupWord() = default;
  GroupWord(std::initializer_list<GroupAtom> a) : atoms(a) {}
  explicit GroupWord(std::vector<GroupAtom> a) : atoms(std::move(a)) {}

  bool empty() const { return atoms.empty(); }
  std::size_t size() const { return atoms.size(); }

  friend GroupWord operator*(GroupWord a, const GroupWord& b) {
    a.atoms.insert(a.atoms.end(), b.atoms.begin(), b.atoms.end());
    return a;
  }
  GroupWord& operator*=(const GroupWord& b) { return *this = *this * b; }
};

inline GroupAtom inverse(const GroupAtom& a) {
  return std::visit(
      [](const auto& x) -> GroupAtom {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, RootElement>) return x;
        else if constexpr (std::is_same_v<T, WeylRep>) return x;
        else if constexpr (std::is_same_v<T, TorusValue>) return TorusValue{-x.cochar, x.unit};
        else return GraphAut{x.map.inverse()};
      },
      a);
}

inline GroupWord inverse(const GroupWord& w) {
  GroupWord out;
  for (auto it = w.atoms.rbegin(); it != w.atoms.rend(); ++it) out.atoms.push_back(inverse(*it));
  return out;
}

inline GroupWord power(const GroupWord& w, int k) {
  GroupWord base = k < 0 ? inverse(w) : w;
  GroupWord out;
  for (int i = 0; i < std::abs(k); ++i) out *= base;
  return out;
}

// ---------------------------------------------------------------------------
// Frames: the torus and N(T)/graph part of a word.

/// Formal torus element prod_v chi_v(v) over unit variables v.
struct TorusElement {
  RegistryPtr reg;
  std::map<int, Cocharacter> parts;

  bool is_identity() const { return parts.empty(); }

  void add(int var, const Cocharacter& chi) {
    auto [it, inserted] = parts.emplace(var, chi);
    if (!inserted) it->second = it->second + chi;
    if (it->second.is_zero()) parts.erase(it);
  }

  static TorusElement from(const TorusValue& tv) {
    TorusElement t;
    if (tv.unit.is_zero()) throw DomainError("torus value at 0");
    if (tv.unit.is_one() || tv.cochar.is_zero()) return t;
    if (!tv.unit.is_unit_monomial()) throw DomainError("torus values need a unit monomial argument");
    t.reg = tv.unit.registry();
    for (auto [v, e] : tv.unit.terms().begin()->exponents()) t.add(v, e * tv.cochar);
    return t;
  }

  /// prod_v v^<zeta, chi_v>
  Polynomial character(const RootSystem& sys, Root zeta) const {
    Monomial m;
    for (const auto& [v, chi] : parts) m = m * Monomial::var(v, sys.pairing(zeta, chi));
    return Polynomial::monomial(reg, m);
  }

  friend bool operator==(const TorusElement& a, const TorusElement& b) { return a.parts == b.parts; }
};

/// The element t * n_w * gamma of T . (W x Gamma); the root map is w o gamma.
struct Frame {
  TorusElement torus;
  RootMap map;

  static Frame identity(const RootSystem& sys) { return Frame{{}, RootMap::identity(sys.num_roots())}; }

  bool is_identity() const { return torus.is_identity() && map.is_identity(); }

  friend bool operator==(const Frame& a, const Frame& b) { return a.torus == b.torus && a.map == b.map; }
};

inline Frame frame_of(const RootSystem& sys, const GroupAtom& a) {
  Frame f = Frame::identity(sys);
  if (auto* w = std::get_if<WeylRep>(&a)) {
    sys.check(w->root);
    f.map = sys.reflection(w->root);
  } else if (auto* t = std::get_if<TorusValue>(&a)) {
    f.torus = TorusElement::from(*t);
  } else if (auto* g = std::get_if<GraphAut>(&a)) {
    if (!sys.is_diagram_automorphism(g->map)) throw DomainError("graph automorphism is not a diagram symmetry");
    f.map = g->map;
  } else {
    throw DomainError("root elements are not frame atoms");
  }
  return f;
}

/// (t1 w1)(t2 w2) = (t1 . w1(t2)) (w1 w2)
inline Frame multiply(const RootSystem& sys, const Frame& a, const Frame& b) {
  Frame out{a.torus, a.map * b.map};
  if (!out.torus.reg) out.torus.reg = b.torus.reg;
  else if (b.torus.reg && b.torus.reg != out.torus.reg) throw DomainError("registry mismatch");
  for (const auto& [v, chi] : b.torus.parts) out.torus.add(v, sys.act(a.map, chi));
  return out;
}

inline Frame inverse(const RootSystem& sys, const Frame& f) {
  RootMap winv = f.map.inverse();
  Frame out{{f.torus.reg, {}}, winv};
  for (const auto& [v, chi] : f.torus.parts) out.torus.add(v, -sys.act(winv, chi));
  return out;
}

/// f e_z(x) f^-1
inline RootElement conjugate_root_element(const RootSystem& sys, const Frame& f, const RootElement& e) {
  Root img = f.map(e.root);
  if (f.torus.is_identity()) return {img, e.coeff};
  return {img, f.torus.character(sys, img) * e.coeff};
}

// ---------------------------------------------------------------------------
// Radical elements and collection

/// prod_{z in order} e_z(coeff(z)), in the listed order.
struct RadicalElement {
  std::vector<Root> order;
  std::vector<Polynomial> coeffs;

  static RadicalElement zero(std::vector<Root> order) {
    RadicalElement r{std::move(order), {}};
    r.coeffs.resize(r.order.size());
    return r;
  }

  int position(Root r) const {
    auto it = std::find(order.begin(), order.end(), r);
    return it == order.end() ? -1 : static_cast<int>(it - order.begin());
  }
  const Polynomial& coeff(Root r) const {
    int p = position(r);
    if (p < 0) throw DomainError("root not in radical order");
    return coeffs[p];
  }
  bool is_identity() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](const Polynomial& p) { return p.is_zero(); });
  }
  std::vector<Root> support() const {
    std::vector<Root> s;
    for (std::size_t i = 0; i < order.size(); ++i)
      if (!coeffs[i].is_zero()) s.push_back(order[i]);
    return s;
  }
  GroupWord to_word() const {
    GroupWord w;
    for (std::size_t i = 0; i < order.size(); ++i)
      if (!coeffs[i].is_zero()) w.atoms.emplace_back(RootElement{order[i], coeffs[i]});
    return w;
  }
  friend bool operator==(const RadicalElement& a, const RadicalElement& b) {
    if (a.order != b.order) return false;
    return a.coeffs == b.coeffs;
  }
};

inline std::vector<Root> closure(const RootSystem& sys, std::vector<Root> roots) {
  std::set<Root> s(roots.begin(), roots.end());
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<Root> cur(s.begin(), s.end());
    for (auto a : cur)
      for (auto b : cur)
        if (auto c = sys.sum(a, b); c && s.insert(*c).second) grew = true;
  }
  return {s.begin(), s.end()};
}

inline bool is_closed(const RootSystem& sys, const std::vector<Root>& roots) {
  std::set<Root> s(roots.begin(), roots.end());
  for (auto a : roots)
    for (auto b : roots)
      if (auto c = sys.sum(a, b); c && !s.contains(*c)) return false;
  return true;
}

/// Canonical collection order for a closed set without opposite pairs: sorted
/// by height after moving the set into the positive system by the first Weyl
/// element (in breadth-first order) that does so, ties broken by index.
inline std::optional<std::vector<Root>> nilpotent_order(const RootSystem& sys, const std::vector<Root>& roots) {
  std::set<Root> s(roots.begin(), roots.end());
  for (auto r : s)
    if (s.contains(sys.negate(r))) return std::nullopt;
  bool all_pos = std::all_of(s.begin(), s.end(), [&](Root r) { return sys.is_positive(r); });
  bool all_neg = std::all_of(s.begin(), s.end(), [&](Root r) { return !sys.is_positive(r); });
  const RootMap* chosen = nullptr;
  RootMap neg = sys.minus_one();
  if (all_pos) {
    chosen = &sys.weyl_group().front();
  } else if (all_neg) {
    chosen = &neg;
  } else {
    for (const auto& w : sys.weyl_group()) {
      if (std::all_of(s.begin(), s.end(), [&](Root r) { return sys.is_positive(w(r)); })) {
        chosen = &w;
        break;
      }
    }
    if (!chosen) return std::nullopt;
  }
  std::vector<Root> out(s.begin(), s.end());
  std::sort(out.begin(), out.end(), [&](Root a, Root b) {
    int ha = sys.height((*chosen)(a)), hb = sys.height((*chosen)(b));
    if (ha != hb) return ha < hb;
    return a.index < b.index;
  });
  return out;
}

inline void validate_order(const RootSystem& sys, const std::vector<Root>& order) {
  std::set<Root> s;
  for (auto r : order) {
    sys.check(r);
    if (!s.insert(r).second) throw DomainError("repeated root in collection order");
  }
  for (auto r : order)
    if (s.contains(sys.negate(r))) throw DomainError("collection order contains both a root and its negative");
  if (!is_closed(sys, order)) throw DomainError("collection order is not closed under root addition");
}

/// Rewrites a product of root elements into the given order using the
/// characteristic-2 commutator formula. The order must list a closed set of
/// roots without opposite pairs; any listing order is accepted.
inline RadicalElement collect(const RootSystem& sys, const std::vector<RootElement>& word, const std::vector<Root>& order) {
  validate_order(sys, order);
  std::vector<int> pos(sys.num_roots(), -1);
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i].index] = static_cast<int>(i);

  std::vector<RootElement> w;
  for (const auto& e : word) {
    sys.check(e.root);
    if (pos[e.root.index] < 0) throw DomainError("root " + sys.render(e.root) + " outside the collection set");
    if (!e.coeff.is_zero()) w.push_back(e);
  }
  constexpr std::size_t kStepLimit = 5'000'000;
  std::size_t steps = 0;
  for (std::size_t i = 0; i + 1 < w.size();) {
    if (++steps > kStepLimit) throw DomainError("collection did not terminate");
    int pa = pos[w[i].root.index], pb = pos[w[i + 1].root.index];
    if (pa < pb) {
      ++i;
      continue;
    }
    if (pa == pb) {
      w[i].coeff += w[i + 1].coeff;
      w.erase(w.begin() + static_cast<std::ptrdiff_t>(i) + 1);
      if (w[i].coeff.is_zero()) w.erase(w.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      std::swap(w[i], w[i + 1]);
      if (auto c = sys.sum(w[i].root, w[i + 1].root)) {
        Polynomial x = w[i].coeff * w[i + 1].coeff;
        if (!x.is_zero()) w.insert(w.begin() + static_cast<std::ptrdiff_t>(i) + 2, RootElement{*c, std::move(x)});
      }
    }
    i = i > 0 ? i - 1 : 0;
  }
  RadicalElement out = RadicalElement::zero(order);
  for (auto& e : w) out.coeffs[pos[e.root.index]] = std::move(e.coeff);
  return out;
}

inline RadicalElement collect(const RootSystem& sys, const GroupWord& word, const std::vector<Root>& order) {
  std::vector<RootElement> elems;
  for (const auto& a : word.atoms) {
    auto* e = std::get_if<RootElement>(&a);
    if (!e) throw DomainError("collect accepts only root elements");
    elems.push_back(*e);
  }
  return collect(sys, elems, order);
}

/// Generic element prod_{z in order} e_z(x_z) with coordinates named
/// <prefix><label> (negative labels use <prefix>m<|label|>).
inline std::string coordinate_name(const RootSystem& sys, Root r, std::string_view prefix = "x") {
  int l = sys.label(r);
  return std::string(prefix) + (l < 0 ? "m" + std::to_string(-l) : std::to_string(l));
}

inline RadicalElement generic_radical(const RootSystem& sys, const std::vector<Root>& order, const RegistryPtr& reg,
                                      std::string_view prefix = "x") {
  RadicalElement u = RadicalElement::zero(order);
  for (std::size_t i = 0; i < order.size(); ++i)
    u.coeffs[i] = Polynomial::variable(reg, coordinate_name(sys, order[i], prefix));
  return u;
}

// ---------------------------------------------------------------------------
// Normal forms

/// frame * tail, with the tail collected when its support closure admits a
/// nilpotent order.
struct NormalWord {
  Frame frame;
  std::vector<RootElement> raw_tail;
  std::optional<RadicalElement> tail;

  bool collected() const { return tail.has_value(); }
};

inline void merge_adjacent(std::vector<RootElement>& t) {
  std::vector<RootElement> out;
  for (auto& e : t) {
    if (e.coeff.is_zero()) continue;
    if (!out.empty() && out.back().root == e.root) {
      out.back().coeff += e.coeff;
      if (out.back().coeff.is_zero()) out.pop_back();
    } else {
      out.push_back(e);
    }
  }
  t = std::move(out);
}

/// Pushes every frame atom to the left: w = F * (root elements).
inline NormalWord normalize(const RootSystem& sys, const GroupWord& word) {
  NormalWord nw{Frame::identity(sys), {}, std::nullopt};
  for (const auto& a : word.atoms) {
    if (auto* e = std::get_if<RootElement>(&a)) {
      sys.check(e->root);
      if (!e->coeff.is_zero()) nw.raw_tail.push_back(*e);
      continue;
    }
    Frame f = frame_of(sys, a);
    Frame finv = inverse(sys, f);
    for (auto& e : nw.raw_tail) e = conjugate_root_element(sys, finv, e);
    nw.frame = multiply(sys, nw.frame, f);
  }
  merge_adjacent(nw.raw_tail);
  std::vector<Root> support;
  for (const auto& e : nw.raw_tail) support.push_back(e.root);
  if (auto order = nilpotent_order(sys, closure(sys, support))) {
    RadicalElement r = collect(sys, nw.raw_tail, *order);
    // keep only the roots that actually occur
    RadicalElement trimmed;
    for (std::size_t i = 0; i < r.order.size(); ++i) {
      if (r.coeffs[i].is_zero()) continue;
      trimmed.order.push_back(r.order[i]);
      trimmed.coeffs.push_back(r.coeffs[i]);
    }
    nw.raw_tail.clear();
    for (std::size_t i = 0; i < trimmed.order.size(); ++i) nw.raw_tail.push_back({trimmed.order[i], trimmed.coeffs[i]});
    nw.tail = std::move(trimmed);
  }
  return nw;
}

/// g h g^-1 in normal form.
inline NormalWord conjugate(const RootSystem& sys, const GroupWord& g, const GroupWord& h) {
  return normalize(sys, g * h * inverse(g));
}

inline bool is_identity(const RootSystem& sys, const GroupWord& w) {
  NormalWord nw = normalize(sys, w);
  return nw.frame.is_identity() && nw.raw_tail.empty();
}

/// Equality as group elements: a b^-1 normalizes to the identity. Words whose
/// quotient has a non-collectible tail compare equal only if that tail
/// cancels letter by letter.
inline bool words_equal(const RootSystem& sys, const GroupWord& a, const GroupWord& b) {
  return is_identity(sys, a * inverse(b));
}

inline bool stabilizes(const RootMap& m, const std::vector<Root>& order) {
  std::set<Root> s(order.begin(), order.end());
  return std::all_of(order.begin(), order.end(), [&](Root r) { return s.contains(m(r)); });
}

struct FramedRadical {
  Frame frame;
  RadicalElement tail;
};

/// u^-1 g u = frame * tail with the tail normal-ordered in u's order.
inline FramedRadical conjugate_generic(const RootSystem& sys, const RadicalElement& u, const GroupWord& g) {
  NormalWord nw = normalize(sys, inverse(u.to_word()) * g * u.to_word());
  if (!stabilizes(nw.frame.map, u.order)) throw DomainError("radical root set is not stable under the frame");
  return {nw.frame, collect(sys, nw.raw_tail, u.order)};
}

/// g u g^-1 as an element of the same radical.
inline RadicalElement act_on_radical(const RootSystem& sys, const GroupWord& g, const RadicalElement& u) {
  NormalWord ng = normalize(sys, g);
  if (!stabilizes(ng.frame.map, u.order)) throw DomainError("radical root set is not stable under the frame");
  NormalWord nw = normalize(sys, g * u.to_word() * inverse(g));
  if (!nw.frame.is_identity()) throw std::logic_error("conjugate of a unipotent element has a nontrivial frame");
  return collect(sys, nw.raw_tail, u.order);
}

inline RootElement act_weyl_rep(const RootSystem& sys, Root xi, const RootElement& e) {
  return {sys.reflect(xi, e.root), e.coeff};
}

inline RootElement act_torus(const RootSystem& sys, const Cocharacter& chi, const Polynomial& unit, const RootElement& e) {
  if (unit.is_one()) return e;
  return {e.root, unit.pow(sys.pairing(e.root, chi)) * e.coeff};
}

// ---------------------------------------------------------------------------
// Rendering and parsing of words

inline std::string render_diagram(const RootSystem& sys, const RootMap& g) {
  if (g.is_identity()) return "";
  RootMap p = RootMap::identity(sys.num_roots());
  for (int k = 1; k < sys.sigma_order(); ++k) {
    p = p * sys.sigma();
    if (p == g) return k == 1 ? "sigma" : "sigma^" + std::to_string(k);
  }
  std::string out = "aut[";
  for (int i = 0; i < sys.rank(); ++i) {
    if (i) out += ",";
    out += sys.render(g(sys.simple(i)));
  }
  return out + "]";
}

inline std::string render_atom(const RootSystem& sys, const GroupAtom& a) {
  if (auto* e = std::get_if<RootElement>(&a)) return "e" + sys.render_label(e->root) + "(" + e->coeff.to_string() + ")";
  if (auto* w = std::get_if<WeylRep>(&a)) return "n[" + sys.render(w->root) + "]";
  if (auto* t = std::get_if<TorusValue>(&a)) return "t[" + sys.render(t->cochar) + "](" + t->unit.to_string() + ")";
  const auto& g = std::get<GraphAut>(a);
  std::string s = render_diagram(sys, g.map);
  return s.empty() ? "1" : s;
}

inline std::string render(const RootSystem& sys, const GroupWord& w) {
  if (w.empty()) return "1";
  std::string out;
  for (const auto& a : w.atoms) {
    if (!out.empty()) out += "*";
    out += render_atom(sys, a);
  }
  return out;
}

/// Splits a root map into w o gamma with gamma a diagram symmetry and returns
/// a reduced word for w (simple indices, leftmost first) together with gamma.
inline std::pair<std::vector<int>, RootMap> decompose(const RootSystem& sys, const RootMap& m) {
  RootMap cur = m;
  for (bool found = true; found;) {
    found = false;
    for (int i = 0; i < sys.rank(); ++i) {
      if (!sys.is_positive(cur(sys.simple(i)))) {
        cur = cur * sys.simple_reflection(i);
        found = true;
        break;
      }
    }
  }
  RootMap gamma = cur;
  RootMap w = m * gamma.inverse();
  std::vector<int> word;
  while (!w.is_identity()) {
    RootMap winv = w.inverse();
    int i = 0;
    while (sys.is_positive(winv(sys.simple(i)))) ++i;
    word.push_back(i);
    w = sys.simple_reflection(i) * w;
  }
  return {word, gamma};
}

inline GroupWord frame_word(const RootSystem& sys, const Frame& f) {
  GroupWord out;
  for (const auto& [v, chi] : f.torus.parts)
    out.atoms.emplace_back(TorusValue{chi, Polynomial::variable(f.torus.reg, v)});
  auto [word, gamma] = decompose(sys, f.map);
  for (int i : word) out.atoms.emplace_back(WeylRep{sys.simple(i)});
  if (!gamma.is_identity()) out.atoms.emplace_back(GraphAut{gamma});
  return out;
}

inline GroupWord to_word(const RootSystem& sys, const NormalWord& nw) {
  GroupWord out = frame_word(sys, nw.frame);
  for (const auto& e : nw.raw_tail) out.atoms.emplace_back(e);
  return out;
}

inline std::string render(const RootSystem& sys, const Frame& f) { return render(sys, frame_word(sys, f)); }
inline std::string render(const RootSystem& sys, const NormalWord& nw) { return render(sys, to_word(sys, nw)); }
inline std::string render(const RootSystem& sys, const RadicalElement& r) { return render(sys, r.to_word()); }

namespace detail {

class WordParser {
 public:
  WordParser(const RootSystem& sys, std::string_view text, RegistryPtr reg) : sys_(sys), s_(text), reg_(std::move(reg)) {}

  GroupWord parse() {
    GroupWord w = word();
    skip();
    if (i_ != s_.size()) throw ParseError("unexpected '" + std::string(1, s_[i_]) + "'", i_);
    return w;
  }

 private:
  void skip() {
    for (;;) {
      if (i_ < s_.size() && (std::isspace(static_cast<unsigned char>(s_[i_])) || s_[i_] == '*')) {
        ++i_;
      } else if (i_ + 1 < s_.size() && static_cast<unsigned char>(s_[i_]) == 0xC2 &&
                 static_cast<unsigned char>(s_[i_ + 1]) == 0xB7) {
        i_ += 2;  // U+00B7 middle dot
      } else {
        return;
      }
    }
  }
  bool at_end() {
    skip();
    return i_ >= s_.size();
  }
  bool starts(std::string_view t) const { return s_.substr(i_, t.size()) == t; }
  void expect(char c) {
    if (i_ >= s_.size() || s_[i_] != c) throw ParseError(std::string("expected '") + c + "'", i_);
    ++i_;
  }

  std::string_view balanced(char open, char close) {
    expect(open);
    std::size_t start = i_;
    int depth = 1;
    while (i_ < s_.size()) {
      if (s_[i_] == open) ++depth;
      if (s_[i_] == close && --depth == 0) break;
      ++i_;
    }
    if (i_ >= s_.size()) throw ParseError(std::string("unbalanced '") + open + "'", start);
    std::string_view inner = s_.substr(start, i_ - start);
    ++i_;
    return inner;
  }

  GroupWord word() {
    GroupWord w;
    while (!at_end() && s_[i_] != ')') w *= item();
    return w;
  }

  GroupWord item() {
    GroupWord a = atom();
    if (i_ < s_.size() && s_[i_] == '^') {
      ++i_;
      bool neg = i_ < s_.size() && s_[i_] == '-';
      if (neg) ++i_;
      std::size_t start = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      if (start == i_) throw ParseError("expected exponent", i_);
      int k = std::stoi(std::string(s_.substr(start, i_ - start)));
      return power(a, neg ? -k : k);
    }
    return a;
  }

  Polynomial poly(std::string_view text) {
    try {
      return parse_polynomial(text, reg_);
    } catch (const ParseError& e) {
      throw ParseError(std::string("in coefficient: ") + e.what(), i_);
    }
  }

  GroupWord atom() {
    skip();
    std::size_t at = i_;
    if (s_[i_] == '(') {
      ++i_;
      GroupWord w = word();
      skip();
      expect(')');
      return w;
    }
    if (starts("sigma")) {
      i_ += 5;
      return GroupWord{GraphAut{sys_.sigma()}};
    }
    if (starts("aut[")) {
      i_ += 3;
      std::string_view inner = balanced('[', ']');
      std::vector<int> imgs;
      std::size_t p = 0;
      while (p <= inner.size()) {
        std::size_t q = inner.find(',', p);
        if (q == std::string_view::npos) q = inner.size();
        imgs.push_back(sys_.parse_root(inner.substr(p, q - p)).index);
        p = q + 1;
      }
      if (static_cast<int>(imgs.size()) != sys_.rank()) throw ParseError("aut[] needs one image per simple root", at);
      RootMap m = sys_.linear_map(imgs);
      if (!sys_.is_diagram_automorphism(m)) throw ParseError("aut[] is not a diagram symmetry", at);
      return GroupWord{GraphAut{m}};
    }
    if (s_[i_] == '1' && (i_ + 1 >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[i_ + 1])))) {
      ++i_;
      return GroupWord{};
    }
    if (s_[i_] == 'e') {
      ++i_;
      Root r;
      if (i_ < s_.size() && s_[i_] == '[') {
        r = sys_.parse_root(balanced('[', ']'));
      } else {
        std::size_t start = i_;
        if (i_ < s_.size() && s_[i_] == '-') ++i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (start == i_) throw ParseError("expected root label after 'e'", i_);
        r = sys_.from_label(std::stoi(std::string(s_.substr(start, i_ - start))));
      }
      std::string_view c = balanced('(', ')');
      return GroupWord{RootElement{r, poly(c)}};
    }
    if (s_[i_] == 'n' && i_ + 1 < s_.size() && s_[i_ + 1] == '[') {
      ++i_;
      return GroupWord{WeylRep{sys_.parse_root(balanced('[', ']'))}};
    }
    if (s_[i_] == 't' && i_ + 1 < s_.size() && s_[i_ + 1] == '[') {
      ++i_;
      Cocharacter chi = sys_.parse_cocharacter(balanced('[', ']'));
      Polynomial u = poly(balanced('(', ')'));
      if (!u.is_one() && !u.is_unit_monomial()) throw ParseError("torus argument must be a unit monomial", at);
      return GroupWord{TorusValue{chi, u}};
    }
    throw ParseError("unknown atom", at);
  }

  const RootSystem& sys_;
  std::string_view s_;
  RegistryPtr reg_;
  std::size_t i_ = 0;
};

}  // namespace detail

/// Grammar: atoms e<label>(poly), e[<root>](poly), n[<root>], t[<cochar>](<unit>),
/// sigma, aut[<images of simple roots>], 1, parenthesized groups; juxtaposition,
/// '*' or U+00B7 for products; '^k' and '^-1' on any atom.
inline GroupWord parse_word(const RootSystem& sys, std::string_view text, const RegistryPtr& reg) {
  return detail::WordParser(sys, text, reg).parse();
}

/// Registry for free-standing expressions: s is the square-root constant,
/// names starting with 't' are units, everything else is ordinary.
inline RegistryPtr registry_for_text(std::string_view text) {
  std::vector<VariableRegistry::Entry> entries;
  std::set<std::string> seen;
  std::size_t i = 0;
  int depth = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth > 0 && std::isalpha(static_cast<unsigned char>(c)) &&
        (i == 0 || !std::isalnum(static_cast<unsigned char>(text[i - 1])))) {
      std::size_t start = i;
      while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
      std::string name(text.substr(start, i - start));
      if (seen.insert(name).second) {
        VarKind k = name == "s" ? VarKind::SqrtConstant : (name[0] == 't' ? VarKind::Unit : VarKind::Ordinary);
        entries.push_back({name, k});
      }
      continue;
    }
    ++i;
  }
  return make_registry(std::move(entries));
}

// ---------------------------------------------------------------------------
// Adjoint action on the Chevalley basis {e_z} u {h_i}

struct LieVector {
  std::vector<Polynomial> e;  // indexed by root
  std::vector<Polynomial> h;  // indexed by simple root

  static LieVector zero(const RootSystem& sys) {
    return {std::vector<Polynomial>(sys.num_roots()), std::vector<Polynomial>(sys.rank())};
  }
  static LieVector basis_e(const RootSystem& sys, Root r, const RegistryPtr& reg = nullptr) {
    LieVector v = zero(sys);
    v.e.at(r.index) = Polynomial::one(reg);
    return v;
  }
  static LieVector basis_h(const RootSystem& sys, int i, const RegistryPtr& reg = nullptr) {
    LieVector v = zero(sys);
    v.h.at(i) = Polynomial::one(reg);
    return v;
  }

  LieVector& operator+=(const LieVector& o) {
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += o.e[i];
    for (std::size_t i = 0; i < h.size(); ++i) h[i] += o.h[i];
    return *this;
  }
  friend LieVector operator+(LieVector a, const LieVector& b) { return a += b; }
  friend bool operator==(const LieVector& a, const LieVector& b) { return a.e == b.e && a.h == b.h; }

  bool is_zero() const {
    auto z = [](const Polynomial& p) { return p.is_zero(); };
    return std::all_of(e.begin(), e.end(), z) && std::all_of(h.begin(), h.end(), z);
  }
};

inline std::string render(const RootSystem& sys, const LieVector& v) {
  std::string out;
  auto term = [&](const Polynomial& c, const std::string& basis) {
    if (c.is_zero()) return;
    if (!out.empty()) out += " + ";
    if (c.is_one()) out += basis;
    else if (c.size() == 1) out += c.to_string() + "*" + basis;
    else out += "(" + c.to_string() + ")*" + basis;
  };
  for (int i = 0; i < sys.num_roots(); ++i) term(v.e[i], "e" + sys.render_label(Root{i}));
  for (int i = 0; i < sys.rank(); ++i) term(v.h[i], std::string("h") + sys.simple_name(i));
  return out.empty() ? "0" : out;
}

inline LieVector adjoint_root_element(const RootSystem& sys, Root xi, const Polynomial& x, const LieVector& v) {
  LieVector out = v;
  const Root mxi = sys.negate(xi);
  const auto& xic = sys.coeffs(xi);
  for (int z = 0; z < sys.num_roots(); ++z) {
    const auto& c = v.e[z];
    if (c.is_zero()) continue;
    if (auto s = sys.sum(Root{z}, xi)) out.e[s->index] += x * c;
    if (Root{z} == mxi) {
      // e_-xi -> e_-xi + x h_xi + x^2 e_xi
      for (int i = 0; i < sys.rank(); ++i)
        if (xic[i] % 2 != 0) out.h[i] += x * c;
      out.e[xi.index] += x * x * c;
    }
  }
  for (int i = 0; i < sys.rank(); ++i) {
    const auto& c = v.h[i];
    if (c.is_zero()) continue;
    if (sys.pairing(xi, sys.coroot(sys.simple(i))) % 2 != 0) out.e[xi.index] += x * c;
  }
  return out;
}

inline LieVector adjoint(const RootSystem& sys, const GroupAtom& a, const LieVector& v) {
  if (auto* e = std::get_if<RootElement>(&a)) return adjoint_root_element(sys, e->root, e->coeff, v);
  if (auto* w = std::get_if<WeylRep>(&a)) {
    const Root xi = w->root, mxi = sys.negate(w->root);
    Polynomial one = Polynomial::one();
    LieVector r = adjoint_root_element(sys, xi, one, v);
    r = adjoint_root_element(sys, mxi, one, r);
    return adjoint_root_element(sys, xi, one, r);
  }
  if (auto* t = std::get_if<TorusValue>(&a)) {
    LieVector out = v;
    if (t->unit.is_one()) return out;
    for (int z = 0; z < sys.num_roots(); ++z)
      if (!v.e[z].is_zero()) out.e[z] = t->unit.pow(sys.pairing(Root{z}, t->cochar)) * v.e[z];
    return out;
  }
  const auto& g = std::get<GraphAut>(a).map;
  LieVector out = LieVector::zero(sys);
  for (int z = 0; z < sys.num_roots(); ++z) out.e[g[z]] = v.e[z];
  for (int i = 0; i < sys.rank(); ++i) out.h[*sys.simple_of(g(sys.simple(i)))] = v.h[i];
  return out;
}

inline LieVector adjoint(const RootSystem& sys, const GroupWord& w, const LieVector& v) {
  LieVector out = v;
  for (auto it = w.atoms.rbegin(); it != w.atoms.rend(); ++it) out = adjoint(sys, *it, out);
  return out;
}

// ---------------------------------------------------------------------------
// Centralizer constraint systems

struct ConstraintSystem {
  std::vector<Polynomial> equations;  // each means "= 0"
};

struct CentralizerSolution {
  ConstraintSystem system;
  std::vector<std::vector<Root>> equal_classes;  // coordinate equalities, classes of size >= 2
  std::vector<Root> forced_zero;
  std::vector<std::string> derivations;
  std::vector<Polynomial> residual;             // equations left after substitution
  bool solved = false;
  std::vector<std::vector<Root>> free_classes;  // surviving coordinates when solved
};

inline std::string describe_subgroup(const RootSystem& sys, const std::vector<std::vector<Root>>& free_classes) {
  if (free_classes.empty()) return "1";
  std::string out;
  for (const auto& cls : free_classes) {
    if (!out.empty()) out += "*";
    if (cls.size() == 1) {
      out += "U" + sys.render_label(cls[0]);
    } else {
      out += "D{";
      for (std::size_t i = 0; i < cls.size(); ++i) out += (i ? "," : "") + sys.render_label(cls[i]);
      out += "}";
    }
  }
  return out;
}

/// Solves coordinate equations over the given roots when they are triangular:
/// two-term linear equations become coordinate equalities and equations of the
/// form x^k * (nonzero expression in units and s) force x = 0.
inline CentralizerSolution solve_coordinates(const RootSystem& sys, ConstraintSystem system, const std::vector<Root>& order,
                                             const RegistryPtr& reg, std::string_view prefix = "x") {
  CentralizerSolution sol;
  sol.system = std::move(system);
  std::vector<int> var_of(order.size());
  std::map<int, Root> root_of_var;
  for (std::size_t i = 0; i < order.size(); ++i) {
    var_of[i] = reg->index(coordinate_name(sys, order[i], prefix));
    root_of_var.emplace(var_of[i], order[i]);
  }
  std::map<int, int> parent;
  std::set<int> zero;
  for (int v : var_of) parent[v] = v;
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  auto current = [&]() {
    std::map<int, Polynomial> b;
    for (int v : var_of) {
      int r = find(v);
      if (zero.contains(r)) b.emplace(v, Polynomial(reg));
      else if (r != v) b.emplace(v, Polynomial::variable(reg, r));
    }
    std::vector<Polynomial> eqs;
    for (const auto& e : sol.system.equations) {
      Polynomial p = substitute(e, b);
      if (!p.is_zero()) eqs.push_back(p);
    }
    return eqs;
  };
  auto is_coordinate = [&](int v) { return root_of_var.contains(v); };

  for (bool changed = true; changed;) {
    changed = false;
    auto eqs = current();
    for (const auto& p : eqs) {
      if (p.size() != 2) continue;
      auto it = p.terms().begin();
      const auto& m1 = *it++;
      const auto& m2 = *it;
      if (m1.exponents().size() != 1 || m2.exponents().size() != 1) continue;
      auto [v1, e1] = m1.exponents()[0];
      auto [v2, e2] = m2.exponents()[0];
      if (e1 != 1 || e2 != 1 || !is_coordinate(v1) || !is_coordinate(v2)) continue;
      int r1 = find(v1), r2 = find(v2);
      if (r1 == r2) continue;
      parent[std::max(r1, r2)] = std::min(r1, r2);
      changed = true;
    }
    if (changed) continue;
    for (const auto& p : eqs) {
      // p = x^k * q with q a nonzero expression in units and s only
      std::set<int> coords;
      for (int v : p.variables())
        if (is_coordinate(v)) coords.insert(v);
      if (coords.size() != 1) continue;
      int x = *coords.begin();
      int k = p.terms().begin()->exponent(x);
      bool uniform = std::all_of(p.terms().begin(), p.terms().end(), [&](const Monomial& m) { return m.exponent(x) == k; });
      if (!uniform || k <= 0) continue;
      zero.insert(find(x));
      sol.derivations.push_back(p.to_string() + " = 0  =>  " + reg->name(x) + " = 0");
      changed = true;
      break;
    }
  }

  std::map<int, std::vector<Root>> classes;
  for (std::size_t i = 0; i < order.size(); ++i) classes[find(var_of[i])].push_back(order[i]);
  for (const auto& [rep, roots] : classes) {
    if (roots.size() > 1) sol.equal_classes.push_back(roots);
    if (zero.contains(rep)) sol.forced_zero.insert(sol.forced_zero.end(), roots.begin(), roots.end());
  }
  sol.residual = current();
  sol.solved = sol.residual.empty();
  if (sol.solved)
    for (const auto& [rep, roots] : classes)
      if (!zero.contains(rep)) sol.free_classes.push_back(roots);
  return sol;
}

/// Equations for "the generic element of the radical commutes with every
/// generator", solved when the system is triangular.
inline CentralizerSolution centralizer_system(const RootSystem& sys, const std::vector<GroupWord>& generators,
                                              const std::vector<Root>& order, const RegistryPtr& reg,
                                              std::string_view prefix = "x") {
  validate_order(sys, order);
  ConstraintSystem system;
  const RadicalElement u = generic_radical(sys, order, reg, prefix);
  for (const auto& g : generators) {
    RadicalElement gu = act_on_radical(sys, g, u);
    for (std::size_t i = 0; i < order.size(); ++i) {
      Polynomial eq = gu.coeffs[i] + u.coeffs[i];
      if (!eq.is_zero()) system.equations.push_back(eq);
    }
  }
  return solve_coordinates(sys, std::move(system), order, reg, prefix);
}

}  // namespace crlab
