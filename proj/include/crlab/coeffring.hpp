#pragma once

// Exact polynomial arithmetic over F_2.
//
// Variables come in three flavours: ordinary coordinates, unit variables
// (torus parameters, which may carry negative exponents), and a single
// square-root constant s. The non-square constant a is never a variable of
// its own; it is always written s^2, so "lies in k" becomes a syntactic
// check on s-exponents.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "crlab/error.hpp"

namespace crlab {

enum class VarKind { Ordinary, Unit, SqrtConstant };

class VariableRegistry {
 public:
  struct Entry {
    std::string name;
    VarKind kind;
  };

  explicit VariableRegistry(std::vector<Entry> entries) : entries_(std::move(entries)) {
    for (int i = 0; i < static_cast<int>(entries_.size()); ++i) {
      const auto& e = entries_[i];
      if (e.name.empty() || !std::isalpha(static_cast<unsigned char>(e.name[0])))
        throw DomainError("invalid variable name '" + e.name + "'");
      if (!by_name_.emplace(e.name, i).second)
        throw DomainError("duplicate variable '" + e.name + "'");
      if (e.kind == VarKind::SqrtConstant) {
        if (sqrt_var_) throw DomainError("at most one square-root constant per registry");
        sqrt_var_ = i;
      }
    }
  }

  int size() const { return static_cast<int>(entries_.size()); }
  const Entry& at(int i) const { return entries_.at(i); }
  const std::string& name(int i) const { return entries_.at(i).name; }
  VarKind kind(int i) const { return entries_.at(i).kind; }
  bool is_unit(int i) const { return kind(i) == VarKind::Unit; }
  std::optional<int> sqrt_var() const { return sqrt_var_; }

  std::optional<int> find(std::string_view name) const {
    auto it = by_name_.find(std::string(name));
    if (it == by_name_.end()) return std::nullopt;
    return it->second;
  }
  int index(std::string_view name) const {
    auto i = find(name);
    if (!i) throw DomainError("unknown variable '" + std::string(name) + "'");
    return *i;
  }

 private:
  std::vector<Entry> entries_;
  std::map<std::string, int> by_name_;
  std::optional<int> sqrt_var_;
};

using RegistryPtr = std::shared_ptr<const VariableRegistry>;

inline RegistryPtr make_registry(std::vector<VariableRegistry::Entry> entries) {
  return std::make_shared<const VariableRegistry>(std::move(entries));
}

/// Sparse monomial: (variable index, exponent) pairs sorted by index, no zero exponents.
class Monomial {
 public:
  Monomial() = default;
  static Monomial var(int v, int e = 1) {
    Monomial m;
    if (e != 0) m.exps_.emplace_back(v, e);
    return m;
  }

  const std::vector<std::pair<int, int>>& exponents() const { return exps_; }
  bool is_one() const { return exps_.empty(); }

  int exponent(int v) const {
    for (auto [var, e] : exps_)
      if (var == v) return e;
    return 0;
  }
  int degree() const {
    int d = 0;
    for (auto [v, e] : exps_) d += e;
    return d;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    auto i = a.exps_.begin(), j = b.exps_.begin();
    while (i != a.exps_.end() || j != b.exps_.end()) {
      if (j == b.exps_.end() || (i != a.exps_.end() && i->first < j->first)) {
        r.exps_.push_back(*i++);
      } else if (i == a.exps_.end() || j->first < i->first) {
        r.exps_.push_back(*j++);
      } else {
        int e = i->second + j->second;
        if (e != 0) r.exps_.emplace_back(i->first, e);
        ++i, ++j;
      }
    }
    return r;
  }

  Monomial pow(int k) const {
    Monomial r;
    if (k == 0) return r;
    for (auto [v, e] : exps_) r.exps_.emplace_back(v, e * k);
    return r;
  }

  /// Monomial with variable v removed.
  Monomial without(int v) const {
    Monomial r;
    for (auto p : exps_)
      if (p.first != v) r.exps_.push_back(p);
    return r;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::pair<int, int>> exps_;
};

/// Graded lexicographic order, larger first: total degree, then exponent of
/// the earliest registry variable.
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    int da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    const auto& x = a.exponents();
    const auto& y = b.exponents();
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
      int va = i < x.size() ? x[i].first : INT32_MAX;
      int vb = j < y.size() ? y[j].first : INT32_MAX;
      int v = std::min(va, vb);
      int ea = va == v ? x[i].second : 0;
      int eb = vb == v ? y[j].second : 0;
      if (ea != eb) return ea > eb;
      if (va == v) ++i;
      if (vb == v) ++j;
    }
    return false;
  }
};

class Polynomial {
 public:
  using TermSet = std::set<Monomial, GrlexGreater>;

  Polynomial() = default;
  explicit Polynomial(RegistryPtr reg) : reg_(std::move(reg)) {}

  /// The constant n mod 2.
  static Polynomial constant(long n, RegistryPtr reg = nullptr) {
    Polynomial p(std::move(reg));
    if (n % 2 != 0) p.terms_.insert(Monomial{});
    return p;
  }
  static Polynomial one(RegistryPtr reg = nullptr) { return constant(1, std::move(reg)); }

  static Polynomial variable(const RegistryPtr& reg, int v, int e = 1) {
    if (!reg || v < 0 || v >= reg->size()) throw DomainError("variable index out of range");
    if (e < 0 && !reg->is_unit(v))
      throw DomainError("negative exponent on non-unit variable '" + reg->name(v) + "'");
    Polynomial p(reg);
    p.terms_.insert(Monomial::var(v, e));
    return p;
  }
  static Polynomial variable(const RegistryPtr& reg, std::string_view name, int e = 1) {
    if (!reg) throw DomainError("no registry");
    return variable(reg, reg->index(name), e);
  }
  static Polynomial monomial(const RegistryPtr& reg, const Monomial& m) {
    for (auto [v, e] : m.exponents())
      if (e < 0 && !(reg && reg->is_unit(v))) throw DomainError("negative exponent on non-unit variable");
    Polynomial p(reg);
    p.terms_.insert(m);
    return p;
  }

  const RegistryPtr& registry() const { return reg_; }
  const TermSet& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const { return terms_.size() == 1 && terms_.begin()->is_one(); }
  std::size_t size() const { return terms_.size(); }

  bool involves(int v) const {
    return std::any_of(terms_.begin(), terms_.end(), [v](const Monomial& m) { return m.exponent(v) != 0; });
  }
  std::set<int> variables() const {
    std::set<int> vs;
    for (const auto& m : terms_)
      for (auto [v, e] : m.exponents()) vs.insert(v);
    return vs;
  }
  int total_degree() const {
    int d = 0;
    for (const auto& m : terms_) d = std::max(d, m.degree());
    return d;
  }

  /// A single monomial in unit variables only (an invertible element).
  bool is_unit_monomial() const {
    if (terms_.size() != 1) return false;
    for (auto [v, e] : terms_.begin()->exponents())
      if (!reg_ || !reg_->is_unit(v)) return false;
    return true;
  }

  Polynomial unit_inverse() const {
    if (!is_unit_monomial()) throw DomainError("only unit monomials are invertible");
    return monomial(reg_, terms_.begin()->pow(-1));
  }

  Polynomial& operator+=(const Polynomial& o) {
    reg_ = join(reg_, o.reg_);
    for (const auto& m : o.terms_) toggle(m);
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a += b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r(join(a.reg_, b.reg_));
    for (const auto& x : a.terms_)
      for (const auto& y : b.terms_) r.toggle(x * y);
    return r;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial pow(int k) const {
    if (k < 0) return unit_inverse().pow(-k);
    Polynomial r = one(reg_), base = *this;
    while (k > 0) {
      if (k & 1) r *= base;
      base *= base;
      k >>= 1;
    }
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.reg_ && b.reg_ && a.reg_ != b.reg_) throw DomainError("registry mismatch");
    return a.terms_ == b.terms_;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& m : terms_) {
      if (!out.empty()) out += " + ";
      out += render_monomial(m);
    }
    return out;
  }

  std::string render_monomial(const Monomial& m) const {
    if (m.is_one()) return "1";
    std::string out;
    for (auto [v, e] : m.exponents()) {
      if (!out.empty()) out += "*";
      out += reg_ ? reg_->name(v) : "v" + std::to_string(v);
      if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
  }

  static RegistryPtr join(const RegistryPtr& a, const RegistryPtr& b) {
    if (a && b && a != b) throw DomainError("registry mismatch");
    return a ? a : b;
  }

 private:
  void toggle(const Monomial& m) {
    auto [it, inserted] = terms_.insert(m);
    if (!inserted) terms_.erase(it);
  }

  RegistryPtr reg_;
  TermSet terms_;
};

inline Polynomial substitute(const Polynomial& p, const std::map<int, Polynomial>& bindings) {
  Polynomial out(p.registry());
  for (const auto& m : p.terms()) {
    Polynomial term = Polynomial::one(p.registry());
    Monomial rest;
    for (auto [v, e] : m.exponents()) {
      auto it = bindings.find(v);
      if (it == bindings.end()) {
        rest = rest * Monomial::var(v, e);
        continue;
      }
      if (e < 0 && !it->second.is_unit_monomial())
        throw DomainError("cannot substitute a non-unit into a Laurent position of '" +
                          (p.registry() ? p.registry()->name(v) : std::string("?")) + "'");
      term *= it->second.pow(e);
    }
    out += term * Polynomial::monomial(p.registry(), rest);
  }
  return out;
}

inline Polynomial substitute(const Polynomial& p, const std::map<std::string, Polynomial>& bindings) {
  std::map<int, Polynomial> by_index;
  for (const auto& [name, value] : bindings) {
    if (!p.registry()) throw DomainError("no registry to resolve '" + name + "'");
    by_index.emplace(p.registry()->index(name), value);
  }
  return substitute(p, by_index);
}

/// Square root in characteristic 2: defined exactly when every exponent is even.
inline std::optional<Polynomial> char2_sqrt(const Polynomial& p) {
  Polynomial r(p.registry());
  for (const auto& m : p.terms()) {
    Monomial h;
    for (auto [v, e] : m.exponents()) {
      if (e % 2 != 0) return std::nullopt;
      h = h * Monomial::var(v, e / 2);
    }
    r += Polynomial::monomial(p.registry(), h);
  }
  return r;
}

enum class Solvability { SolvableCandidate, UnsolvableOverK };

inline std::string to_string(Solvability s) {
  return s == Solvability::UnsolvableOverK ? "UNSOLVABLE_OVER_K" : "SOLVABLE_CANDIDATE";
}

/// Detects p = q^2 + s^2 with q free of s. Then p = 0 would make q a k-rational
/// square root of a = s^2, which cannot exist.
inline Solvability classify_square_obstruction(const Polynomial& p) {
  const auto& reg = p.registry();
  if (!reg || !reg->sqrt_var()) return Solvability::SolvableCandidate;
  const int s = *reg->sqrt_var();
  const Polynomial s2 = Polynomial::variable(reg, s, 2);
  if (!p.terms().contains(*s2.terms().begin())) return Solvability::SolvableCandidate;
  Polynomial rest = p + s2;
  if (rest.involves(s)) return Solvability::SolvableCandidate;
  return char2_sqrt(rest) ? Solvability::UnsolvableOverK : Solvability::SolvableCandidate;
}

/// True when s occurs only through even powers, i.e. the polynomial is defined
/// over k as written.
inline bool is_k_rational(const Polynomial& p) {
  const auto& reg = p.registry();
  if (!reg || !reg->sqrt_var()) return true;
  const int s = *reg->sqrt_var();
  return std::all_of(p.terms().begin(), p.terms().end(),
                     [s](const Monomial& m) { return m.exponent(s) % 2 == 0; });
}

namespace detail {

class PolyParser {
 public:
  PolyParser(std::string_view text, RegistryPtr reg) : s_(text), reg_(std::move(reg)) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip();
    if (i_ != s_.size()) throw ParseError("unexpected '" + std::string(1, s_[i_]) + "'", i_);
    return p;
  }

 private:
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    Polynomial p = term();
    while (eat('+') || eat('-')) p += term();
    return p;
  }

  Polynomial term() {
    Polynomial p = factor();
    for (;;) {
      if (eat('*')) {
        p *= factor();
        continue;
      }
      skip();
      if (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '(')) {
        p *= factor();
        continue;
      }
      return p;
    }
  }

  Polynomial factor() {
    Polynomial base = atom();
    if (eat('^')) {
      skip();
      bool neg = eat('-');
      skip();
      std::size_t start = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      if (start == i_) throw ParseError("expected exponent", i_);
      int e = std::stoi(std::string(s_.substr(start, i_ - start)));
      return base.pow(neg ? -e : e);
    }
    return base;
  }

  Polynomial atom() {
    skip();
    if (i_ >= s_.size()) throw ParseError("unexpected end of polynomial", i_);
    char c = s_[i_];
    if (c == '(') {
      ++i_;
      Polynomial p = expr();
      if (!eat(')')) throw ParseError("expected ')'", i_);
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      return Polynomial::constant(s_[i_ - 1] - '0', reg_);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = i_;
      while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
      std::string name(s_.substr(start, i_ - start));
      if (!reg_ || !reg_->find(name)) throw ParseError("unknown variable '" + name + "'", start);
      return Polynomial::variable(reg_, name);
    }
    throw ParseError("unexpected '" + std::string(1, c) + "'", i_);
  }

  std::string_view s_;
  RegistryPtr reg_;
  std::size_t i_ = 0;
};

}  // namespace detail

inline Polynomial parse_polynomial(std::string_view text, const RegistryPtr& reg) {
  return detail::PolyParser(text, reg).parse();
}

}  // namespace crlab
