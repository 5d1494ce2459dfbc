#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "jacobipoly/errors.hpp"
#include "jacobipoly/rings.hpp"

namespace jacobipoly {

// Exponent vector, positionally indexed by the owning polynomial's variables.
// Ordering is graded lexicographic: total degree first, then exponents compared
// left to right, so x > y > z among same-degree monomials.
class Monomial {
 public:
  using Exponents = boost::container::small_vector<std::uint32_t, 4>;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  Monomial(std::initializer_list<std::uint32_t> exps) : exps_(exps) { recount(); }
  explicit Monomial(Exponents exps) : exps_(std::move(exps)) { recount(); }

  std::size_t size() const { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  std::uint64_t total_degree() const { return degree_; }
  const Exponents& exponents() const { return exps_; }

  void set(std::size_t i, std::uint32_t e) {
    degree_ = degree_ - exps_[i] + e;
    exps_[i] = e;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    r.exps_.resize(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r.exps_[i] = a.exps_[i] + b.exps_[i];
    r.degree_ = a.degree_ + b.degree_;
    return r;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.degree_ == b.degree_ && a.exps_ == b.exps_;
  }
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
    return std::lexicographical_compare_three_way(a.exps_.begin(), a.exps_.end(), b.exps_.begin(),
                                                  b.exps_.end());
  }

 private:
  void recount() {
    degree_ = 0;
    for (auto e : exps_) degree_ += e;
  }

  Exponents exps_;
  std::uint64_t degree_ = 0;
};

// Ordered list of distinct variable names, shared between polynomials.
class VarList {
 public:
  VarList(std::initializer_list<std::string> names) : VarList(std::vector<std::string>(names)) {}
  explicit VarList(std::vector<std::string> names) {
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (!is_identifier(names[i])) throw Error("invalid variable name '" + names[i] + "'");
      for (std::size_t j = 0; j < i; ++j)
        if (names[i] == names[j]) throw Error("duplicate variable name '" + names[i] + "'");
    }
    names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
  }

  std::size_t size() const { return names_->size(); }
  const std::string& operator[](std::size_t i) const { return (*names_)[i]; }
  const std::vector<std::string>& names() const { return *names_; }

  std::optional<std::size_t> index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_->size(); ++i)
      if ((*names_)[i] == name) return i;
    return std::nullopt;
  }
  std::size_t require(std::string_view name) const {
    if (auto i = index_of(name)) return *i;
    throw UnknownVariable(std::string(name));
  }

  std::string to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < size(); ++i) out += (i ? "," : "") + (*names_)[i];
    return out + ")";
  }

  friend bool operator==(const VarList& a, const VarList& b) {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

// Sparse polynomial over `Ring` in the variables `vars`. Terms are kept sorted
// in descending graded-lex order and never carry a zero coefficient; the zero
// polynomial has no terms.
template <CoefficientRing Ring>
class MultiPoly {
 public:
  using Coeff = typename Ring::value_type;
  struct Term {
    Monomial monomial;
    Coeff coeff;
  };

  MultiPoly(Ring ring, VarList vars) : ring_(std::move(ring)), vars_(std::move(vars)) {}

  static MultiPoly constant(Ring ring, VarList vars, Coeff c) {
    MultiPoly p(std::move(ring), std::move(vars));
    if (!p.ring_.is_zero(c)) p.terms_.push_back({Monomial(p.vars_.size()), std::move(c)});
    return p;
  }
  static MultiPoly variable(Ring ring, VarList vars, std::string_view name) {
    MultiPoly p(std::move(ring), std::move(vars));
    Monomial m(p.vars_.size());
    m.set(p.vars_.require(name), 1);
    p.terms_.push_back({std::move(m), p.ring_.one()});
    return p;
  }
  static MultiPoly term(Ring ring, VarList vars, Monomial m, Coeff c) {
    MultiPoly p(std::move(ring), std::move(vars));
    p.check_monomial(m);
    if (!p.ring_.is_zero(c)) p.terms_.push_back({std::move(m), std::move(c)});
    return p;
  }
  // Arbitrary term list; duplicates are combined and zeros dropped.
  static MultiPoly from_terms(Ring ring, VarList vars, std::vector<Term> terms) {
    MultiPoly p(std::move(ring), std::move(vars));
    for (const auto& t : terms) p.check_monomial(t.monomial);
    p.terms_ = std::move(terms);
    p.canonicalize();
    return p;
  }
  // Terms already strictly descending; only zero coefficients are filtered.
  static MultiPoly from_sorted_terms(Ring ring, VarList vars, std::vector<Term> terms) {
    MultiPoly p(std::move(ring), std::move(vars));
    p.terms_ = std::move(terms);
    std::erase_if(p.terms_, [&p](const Term& t) { return p.ring_.is_zero(t.coeff); });
    return p;
  }

  const Ring& ring() const { return ring_; }
  const VarList& vars() const { return vars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Coeff coeff(const Monomial& m) const {
    check_monomial(m);
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& key) { return t.monomial > key; });
    if (it != terms_.end() && it->monomial == m) return it->coeff;
    return ring_.zero();
  }

  MultiPoly operator-() const {
    MultiPoly r = *this;
    for (auto& t : r.terms_) t.coeff = ring_.neg(t.coeff);
    return r;
  }

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) { return merge(a, b, false); }
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return merge(a, b, true); }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_compatible(b);
    if (a.is_zero() || b.is_zero()) return MultiPoly(a.ring_, a.vars_);
    if (b.terms_.size() == 1) return a.scaled(b.terms_[0].monomial, b.terms_[0].coeff);
    if (a.terms_.size() == 1) return b.scaled(a.terms_[0].monomial, a.terms_[0].coeff);
    MultiPoly r(a.ring_, a.vars_);
    r.terms_.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& s : a.terms_)
      for (const auto& t : b.terms_)
        r.terms_.push_back({s.monomial * t.monomial, a.ring_.mul(s.coeff, t.coeff)});
    r.canonicalize();
    return r;
  }

  MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
  MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  // Multiply by c * m. Monomial multiplication preserves the term order.
  MultiPoly scaled(const Monomial& m, const Coeff& c) const {
    MultiPoly r(ring_, vars_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
      Coeff v = ring_.mul(t.coeff, c);
      if (!ring_.is_zero(v)) r.terms_.push_back({t.monomial * m, std::move(v)});
    }
    return r;
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    a.check_compatible(b);
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (!(a.terms_[i].monomial == b.terms_[i].monomial) || !(a.terms_[i].coeff == b.terms_[i].coeff))
        return false;
    return true;
  }

  void check_compatible(const MultiPoly& other) const {
    if (!(ring_ == other.ring_)) throw SpecMismatch(ring_.name(), other.ring_.name());
    if (!(vars_ == other.vars_))
      throw VarListMismatch("variable lists differ: " + vars_.to_string() + " vs " +
                            other.vars_.to_string());
  }

 private:
  void check_monomial(const Monomial& m) const {
    if (m.size() != vars_.size())
      throw VarListMismatch("monomial has " + std::to_string(m.size()) + " exponents, expected " +
                            std::to_string(vars_.size()));
  }

  void canonicalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& s, const Term& t) { return s.monomial > t.monomial; });
    std::size_t out = 0;
    for (std::size_t i = 0; i < terms_.size();) {
      Coeff sum = std::move(terms_[i].coeff);
      std::size_t j = i + 1;
      for (; j < terms_.size() && terms_[j].monomial == terms_[i].monomial; ++j)
        sum = ring_.add(sum, terms_[j].coeff);
      if (!ring_.is_zero(sum)) {
        if (out != i) terms_[out].monomial = std::move(terms_[i].monomial);
        terms_[out].coeff = std::move(sum);
        ++out;
      }
      i = j;
    }
    terms_.erase(terms_.begin() + static_cast<std::ptrdiff_t>(out), terms_.end());
  }

  static MultiPoly merge(const MultiPoly& a, const MultiPoly& b, bool subtract) {
    a.check_compatible(b);
    MultiPoly r(a.ring_, a.vars_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    const auto& ring = a.ring_;
    auto rhs = [&](const Coeff& c) { return subtract ? ring.neg(c) : c; };
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      if (j == b.terms_.size() || (i < a.terms_.size() && a.terms_[i].monomial > b.terms_[j].monomial)) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (i == a.terms_.size() || b.terms_[j].monomial > a.terms_[i].monomial) {
        r.terms_.push_back({b.terms_[j].monomial, rhs(b.terms_[j].coeff)});
        ++j;
      } else {
        Coeff v = subtract ? ring.sub(a.terms_[i].coeff, b.terms_[j].coeff)
                           : ring.add(a.terms_[i].coeff, b.terms_[j].coeff);
        if (!ring.is_zero(v)) r.terms_.push_back({a.terms_[i].monomial, std::move(v)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  Ring ring_;
  VarList vars_;
  std::vector<Term> terms_;
};

template <CoefficientRing Ring>
MultiPoly<Ring> one_like(const MultiPoly<Ring>& p) {
  return MultiPoly<Ring>::constant(p.ring(), p.vars(), p.ring().one());
}

template <CoefficientRing Ring>
MultiPoly<Ring> pow(MultiPoly<Ring> base, std::uint64_t n) {
  MultiPoly<Ring> result = one_like(base);
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

// Total degree; -1 for the zero polynomial.
template <CoefficientRing Ring>
long deg(const MultiPoly<Ring>& p) {
  return p.is_zero() ? -1 : static_cast<long>(p.terms().front().monomial.total_degree());
}

template <CoefficientRing Ring>
long deg_in_var(const MultiPoly<Ring>& p, std::string_view var) {
  std::size_t i = p.vars().require(var);
  long d = -1;
  for (const auto& t : p.terms()) d = std::max(d, static_cast<long>(t.monomial[i]));
  return d;
}

template <CoefficientRing Ring>
MultiPoly<Ring> homogeneous_component(const MultiPoly<Ring>& p, std::uint64_t k) {
  std::vector<typename MultiPoly<Ring>::Term> kept;
  for (const auto& t : p.terms())
    if (t.monomial.total_degree() == k) kept.push_back(t);
  return MultiPoly<Ring>::from_sorted_terms(p.ring(), p.vars(), std::move(kept));
}

template <CoefficientRing Ring>
typename Ring::value_type coeff(const MultiPoly<Ring>& p, const Monomial& m) {
  return p.coeff(m);
}

template <CoefficientRing Ring>
typename Ring::value_type evaluate(const MultiPoly<Ring>& p,
                                   std::span<const typename Ring::value_type> point) {
  if (point.size() != p.vars().size()) throw VarListMismatch("evaluation point has wrong arity");
  const Ring& ring = p.ring();
  auto sum = ring.zero();
  for (const auto& t : p.terms()) {
    auto v = t.coeff;
    for (std::size_t i = 0; i < point.size(); ++i)
      if (t.monomial[i] > 0) v = ring.mul(v, ring_pow(ring, point[i], t.monomial[i]));
    sum = ring.add(sum, v);
  }
  return sum;
}

// Simultaneous substitution: variable i of `p` is replaced by `replacements[i]`.
// All replacements must share one ring and one variable list, which becomes the
// variable list of the result.
template <CoefficientRing Ring>
MultiPoly<Ring> substitute_positional(const MultiPoly<Ring>& p,
                                      std::span<const MultiPoly<Ring>> replacements) {
  if (replacements.size() != p.vars().size())
    throw VarListMismatch("substitution needs one replacement per variable");
  if (replacements.empty()) return p;
  const auto& target = replacements.front();
  for (const auto& r : replacements) {
    if (!(r.ring() == p.ring())) throw SpecMismatch(p.ring().name(), r.ring().name());
    target.check_compatible(r);
  }
  const Ring& ring = p.ring();
  const std::size_t n = p.vars().size();

  std::vector<std::uint32_t> max_exp(n, 0);
  for (const auto& t : p.terms())
    for (std::size_t i = 0; i < n; ++i) max_exp[i] = std::max(max_exp[i], t.monomial[i]);

  // powers[i][k] = replacements[i]^k, built incrementally since every k up to
  // the maximum is needed anyway.
  std::vector<std::vector<MultiPoly<Ring>>> powers(n);
  for (std::size_t i = 0; i < n; ++i) {
    powers[i].reserve(max_exp[i] + 1);
    powers[i].push_back(one_like(target));
    for (std::uint32_t k = 1; k <= max_exp[i]; ++k) powers[i].push_back(powers[i].back() * replacements[i]);
  }

  std::vector<typename MultiPoly<Ring>::Term> acc;
  const Monomial unit(target.vars().size());
  for (const auto& t : p.terms()) {
    std::optional<MultiPoly<Ring>> prod;
    for (std::size_t i = 0; i < n; ++i) {
      if (t.monomial[i] == 0) continue;
      const auto& factor = powers[i][t.monomial[i]];
      prod = prod ? *prod * factor : factor;
    }
    if (!prod) {
      acc.push_back({unit, t.coeff});
      continue;
    }
    for (const auto& s : prod->terms()) acc.push_back({s.monomial, ring.mul(s.coeff, t.coeff)});
  }
  return MultiPoly<Ring>::from_terms(ring, target.vars(), std::move(acc));
}

// Named substitution into the variable list `target`. Variables of `p` without
// a binding map to the same-named variable of `target`.
template <CoefficientRing Ring>
MultiPoly<Ring> substitute(const MultiPoly<Ring>& p,
                           const std::map<std::string, MultiPoly<Ring>>& bindings,
                           const VarList& target) {
  for (const auto& [name, q] : bindings) {
    p.vars().require(name);
    if (!(q.ring() == p.ring())) throw SpecMismatch(p.ring().name(), q.ring().name());
    if (!(q.vars() == target))
      throw VarListMismatch("binding for '" + name + "' is over " + q.vars().to_string() +
                            ", expected " + target.to_string());
  }
  std::vector<MultiPoly<Ring>> repl;
  repl.reserve(p.vars().size());
  for (const auto& name : p.vars().names()) {
    if (auto it = bindings.find(name); it != bindings.end())
      repl.push_back(it->second);
    else
      repl.push_back(MultiPoly<Ring>::variable(p.ring(), target, name));
  }
  if (repl.empty()) return MultiPoly<Ring>::from_terms(p.ring(), target, {});
  return substitute_positional<Ring>(p, repl);
}

template <CoefficientRing Ring>
std::string monomial_to_string(const Monomial& m, const VarList& vars) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += vars[i];
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

// Canonical text: descending graded-lex, '*' between factors, '^' for powers.
template <CoefficientRing Ring>
std::string term_to_string(const Ring& ring, const VarList& vars,
                           const typename MultiPoly<Ring>::Term& t, bool leading) {
  bool negative = ring.is_negative(t.coeff);
  auto magnitude = negative ? ring.neg(t.coeff) : t.coeff;
  std::string out = negative ? "-" : (leading ? "" : "+");
  bool constant = t.monomial.total_degree() == 0;
  if (constant) return out + ring.to_string(magnitude);
  if (!ring.is_one(magnitude)) out += ring.to_string(magnitude) + "*";
  return out + monomial_to_string<Ring>(t.monomial, vars);
}

template <CoefficientRing Ring>
std::string to_string(const MultiPoly<Ring>& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool leading = true;
  for (const auto& t : p.terms()) {
    out += term_to_string(p.ring(), p.vars(), t, leading);
    leading = false;
  }
  return out;
}

}  // namespace jacobipoly
